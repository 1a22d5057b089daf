"""Curves v^2 = u^3 + a2*u^2 + a4*u over Q and their group law."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from rrtri.exact_arith import as_fraction, factorize, rational_sqrt


class SingularCurveError(ValueError):
    pass


class NotOnCurveError(ValueError):
    pass


class NoEggError(ValueError):
    """Raised when a question about the egg is asked of a curve without one."""


class Component(str, enum.Enum):
    EGG = "EGG"
    INFINITE = "INFINITE"


@dataclass(frozen=True)
class Point:
    """An affine point (u, v), or the point at infinity when both are None."""

    u: Fraction | None = None
    v: Fraction | None = None

    def __post_init__(self):
        if (self.u is None) != (self.v is None):
            raise ValueError("a point needs both coordinates or neither")
        if self.u is not None:
            object.__setattr__(self, "u", as_fraction(self.u))
            object.__setattr__(self, "v", as_fraction(self.v))

    @property
    def is_infinity(self) -> bool:
        return self.u is None

    def sort_key(self):
        if self.is_infinity:
            return (0, Fraction(0), Fraction(0))
        return (1, self.u, self.v)

    def __repr__(self):
        if self.is_infinity:
            return "Point(oo)"
        return f"Point({self.u}, {self.v})"


INFINITY = Point()


@dataclass(frozen=True)
class RealRoots:
    """Real roots of u^3 + a2 u^2 + a4 u.

    The quadratic factor's roots are ``center +- sqrt(radicand)``; ``exact``
    holds them as Fractions when the radicand is a rational square.
    """

    center: Fraction
    radicand: Fraction
    exact: tuple[Fraction, Fraction] | None

    @property
    def has_egg(self) -> bool:
        return self.radicand > 0

    @property
    def count(self) -> int:
        if self.radicand < 0:
            return 1
        if self.radicand == 0 or self.center**2 == self.radicand:
            return 2
        return 3

    def largest_is_zero(self) -> bool:
        # center + sqrt(radicand) <= 0
        return self.center <= 0 and self.center**2 >= self.radicand

    def describe(self) -> list[str]:
        out = ["0"]
        if self.radicand < 0:
            return out
        if self.exact is not None:
            lo, hi = self.exact
            out += [str(lo), str(hi)] if lo != hi else [str(lo)]
            return out
        k, r = _split_square(self.radicand)
        surd = f"sqrt({r})" if k == 1 else f"{k}*sqrt({r})"
        out.append(f"{self.center} - {surd}")
        out.append(f"{self.center} + {surd}")
        return out


def _split_square(q: Fraction) -> tuple[Fraction, Fraction]:
    """Write q = k^2 * r with r as square-free as cheap trial division allows."""
    if q.numerator > 10**24 or q.denominator > 10**24:
        return Fraction(1), q
    num = factorize(q.numerator * q.denominator) if q.numerator else {}
    k, r = 1, 1
    for p, e in num.items():
        k *= p ** (e // 2)
        r *= p ** (e % 2)
    return Fraction(k, q.denominator), Fraction(r)


@dataclass(frozen=True)
class Curve:
    """v^2 = u^3 + a2*u^2 + a4*u.

    ``kind`` is ``"E"`` (R/r = N, ``param`` = N), ``"F"`` (R/r = 2 + 1/M,
    ``param`` = M) or ``"raw"``.
    """

    a2: Fraction
    a4: Fraction
    kind: str = "raw"
    param: int | None = None
    _roots: RealRoots | None = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "a2", as_fraction(self.a2))
        object.__setattr__(self, "a4", as_fraction(self.a4))
        if self.discriminant() == 0:
            raise SingularCurveError(f"singular curve: a2={self.a2}, a4={self.a4}")

    @property
    def label(self) -> str:
        if self.kind == "raw":
            return f"[0,{self.a2},0,{self.a4},0]"
        return f"{self.kind}_{self.param}"

    def discriminant(self) -> Fraction:
        return 16 * self.a4**2 * (self.a2**2 - 4 * self.a4)

    def rhs(self, u: Fraction) -> Fraction:
        return ((u + self.a2) * u + self.a4) * u

    def is_on_curve(self, p: Point) -> bool:
        if p.is_infinity:
            return True
        return p.v * p.v == self.rhs(p.u)

    def _check(self, *points: Point) -> None:
        for p in points:
            if not self.is_on_curve(p):
                raise NotOnCurveError(f"{p} is not on {self.label}")

    def negate(self, p: Point) -> Point:
        self._check(p)
        return p if p.is_infinity else Point(p.u, -p.v)

    def add(self, p: Point, q: Point) -> Point:
        self._check(p, q)
        return self._add(p, q)

    def _add(self, p: Point, q: Point) -> Point:
        if p.is_infinity:
            return q
        if q.is_infinity:
            return p
        if p.u == q.u:
            if p.v != q.v or p.v == 0:
                # vertical chord, or tangent at a 2-torsion point
                return INFINITY
            slope = (3 * p.u * p.u + 2 * self.a2 * p.u + self.a4) / (2 * p.v)
        else:
            slope = (q.v - p.v) / (q.u - p.u)
        u3 = slope * slope - self.a2 - p.u - q.u
        v3 = -(p.v + slope * (u3 - p.u))
        return Point(u3, v3)

    def multiply(self, k: int, p: Point) -> Point:
        """k-fold group sum by double-and-add; k may be zero or negative."""
        self._check(p)
        if k < 0:
            k, p = -k, (p if p.is_infinity else Point(p.u, -p.v))
        acc = INFINITY
        base = p
        while k:
            if k & 1:
                acc = self._add(acc, base)
            k >>= 1
            if k:
                base = self._add(base, base)
        return acc

    def real_roots(self) -> RealRoots:
        if self._roots is None:
            center = -self.a2 / 2
            radicand = center * center - self.a4
            exact = None
            if radicand >= 0:
                r = rational_sqrt(radicand)
                if r is not None:
                    exact = (center - r, center + r)
            object.__setattr__(self, "_roots", RealRoots(center, radicand, exact))
        return self._roots

    def has_egg(self) -> bool:
        return self.real_roots().count == 3

    def component_of(self, p: Point) -> Component:
        """EGG iff u lies below the largest real root of the cubic.

        The point at infinity is counted with the unbounded branch.
        """
        roots = self.real_roots()
        if roots.count != 3:
            raise NoEggError(f"{self.label} has a single real component")
        self._check(p)
        if p.is_infinity:
            return Component.INFINITE
        if roots.largest_is_zero():
            return Component.EGG if p.u < 0 else Component.INFINITE
        # largest root is center + sqrt(radicand) > 0
        d = p.u - roots.center
        if d < 0 or d * d < roots.radicand:
            return Component.EGG
        return Component.INFINITE
