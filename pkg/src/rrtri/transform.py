"""From curve points to side ratios and back.

A point (u, v) on E_N (or F_M) determines g/s through a linear fractional
map; with s fixed, the remaining sides f and h are the roots of a quadratic
whose discriminant is a rational square exactly when g/s comes from a
rational point. The map is the projection from the order-3 point, so its
inverse is a line intersection.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from rrtri.curve import Curve, Point, SingularCurveError
from rrtri.exact_arith import as_fraction, rational_sqrt
from rrtri.triangle import (
    Triangle,
    is_valid_triangle,
    normalize_representation,
    ratio,
    to_primitive,
)


class DomainError(ValueError):
    pass


class PoleError(ValueError):
    """The point sits at the pole of the g/s map (an order-3 torsion point)."""


class DegeneratePointError(ValueError):
    """The point gives g/s in {0, 1}, which only yields a zero side."""


@dataclass(frozen=True)
class RatioTarget:
    """R/r = N (kind ``"N"``) or R/r = 2 + 1/M (kind ``"M"``)."""

    kind: str
    value: int

    def __post_init__(self):
        if self.kind == "N":
            if self.value == 2:
                raise SingularCurveError(
                    "N = 2 is the equilateral case; the curve E_2 is singular")
            if self.value < 3:
                raise DomainError(f"R/r >= 2 for every triangle, so N = {self.value} is impossible")
        elif self.kind == "M":
            if self.value < 1:
                raise DomainError(f"M must be a positive integer, got {self.value}")
        else:
            raise DomainError(f"unknown target kind {self.kind!r}")

    @classmethod
    def integer(cls, n: int) -> RatioTarget:
        return cls("N", n)

    @classmethod
    def near_equilateral(cls, m: int) -> RatioTarget:
        return cls("M", m)

    @property
    def rho(self) -> Fraction:
        if self.kind == "N":
            return Fraction(self.value)
        return Fraction(2 * self.value + 1, self.value)

    def __str__(self):
        return f"{self.kind}={self.value}"


def curve_for(target: RatioTarget) -> Curve:
    if target.kind == "N":
        n = target.value
        return Curve(2 * (2 * n * n - 2 * n - 1), 4 * n + 1, "E", n)
    m = target.value
    return Curve(6 * m * m + 12 * m + 4, 9 * m**4 + 4 * m**3, "F", m)


@dataclass(frozen=True)
class _Map:
    """g/s = (v - (k - l*u)) / ((u - pole) * scale)."""

    k: int
    l: int
    pole: int
    scale: int


def _map_for(target: RatioTarget) -> _Map:
    if target.kind == "N":
        n = target.value
        return _Map(4 * n + 1, 2 * n + 1, 1, 4 * n + 1)
    m = target.value
    return _Map(9 * m**3 + 4 * m * m, 5 * m + 2, m * m, 9 * m + 4)


def point_to_g_over_s(target: RatioTarget, p: Point) -> Fraction:
    if p.is_infinity:
        raise PoleError("the point at infinity has no g/s value")
    mp = _map_for(target)
    if p.u == mp.pole:
        raise PoleError(f"u = {mp.pole} is the pole of the g/s map")
    return (p.v - (mp.k - mp.l * p.u)) / ((p.u - mp.pole) * mp.scale)


def g_over_s_to_points(target: RatioTarget, c) -> list[Point]:
    """Affine points sent to ``c`` by :func:`point_to_g_over_s`.

    The line v = c*scale*(u - pole) + k - l*u meets the curve at the pole
    point; the other two intersections are the roots of the deflated
    quadratic.
    """
    c = as_fraction(c)
    curve = curve_for(target)
    mp = _map_for(target)
    slope = c * mp.scale - mp.l
    icpt = mp.k - c * mp.scale * mp.pole
    # u^3 + b2 u^2 + b1 u + b0 with b0 = -icpt^2, divided by (u - pole)
    b2 = curve.a2 - slope * slope
    b1 = curve.a4 - 2 * slope * icpt
    q1 = b2 + mp.pole
    q0 = b1 + mp.pole * q1
    assert q0 * mp.pole == icpt * icpt
    root = rational_sqrt(q1 * q1 - 4 * q0)
    if root is None:
        return []
    out = set()
    for u in ((-q1 - root) / 2, (-q1 + root) / 2):
        if u != mp.pole:
            out.add(Point(u, slope * u + icpt))
    return sorted(out, key=Point.sort_key)


@dataclass(frozen=True)
class QuadraticInF:
    """a f^2 + b f + c = 0; its roots are the two sides other than g."""

    a: Fraction
    b: Fraction
    c: Fraction
    g: Fraction
    s: Fraction

    @property
    def discriminant(self) -> Fraction:
        return self.b * self.b - 4 * self.a * self.c


def build_f_quadratic(rho, g, s) -> QuadraticInF:
    """Quadratic for f after eliminating h = 2s - f - g from 2fgh = rho * prod."""
    rho, g, s = as_fraction(rho), as_fraction(g), as_fraction(s)
    a = 2 * (4 * rho * s - g * (4 * rho + 1))
    b = -2 * (g * g * (4 * rho + 1) - 2 * g * s * (6 * rho + 1) + 8 * rho * s * s)
    c = 8 * rho * s * (g - s) ** 2
    return QuadraticInF(a, b, c, g, s)


def solve_f_quadratic(q: QuadraticInF) -> tuple[Fraction, Fraction] | None:
    """Both rational roots in ascending order, or None if they are irrational."""
    if q.a == 0:
        if q.b == 0:
            raise ValueError("quadratic has no f terms")
        f = -q.c / q.b
        return tuple(sorted((f, 2 * q.s - q.g - f)))
    root = rational_sqrt(q.discriminant)
    if root is None:
        return None
    lo, hi = (-q.b - root) / (2 * q.a), (-q.b + root) / (2 * q.a)
    return (lo, hi) if lo <= hi else (hi, lo)


def positivity_window(target: RatioTarget) -> tuple[Fraction, Fraction]:
    """Open interval of g/s values with all three sides positive."""
    rho = target.rho
    return Fraction(0), 4 * rho / (4 * rho + 1)


@dataclass(frozen=True)
class SolutionOutcome:
    kind: str  # "triangle", "representation" or "none"
    g_over_s: Fraction
    triangle: Triangle | None = None
    representation: tuple[int, int, int] | None = None
    reason: str = ""


def point_to_solution(target: RatioTarget, p: Point) -> SolutionOutcome:
    gs = point_to_g_over_s(target, p)
    if gs in (0, 1):
        raise DegeneratePointError(f"{p} gives g/s = {gs}, a degenerate triangle")
    g, s = Fraction(gs.numerator), Fraction(gs.denominator)
    roots = solve_f_quadratic(build_f_quadratic(target.rho, g, s))
    if roots is None:
        return SolutionOutcome("none", gs, reason="quadratic in f has irrational roots")
    f, h = roots
    if is_valid_triangle(f, g, h):
        tri = to_primitive(f, g, h).sorted()
        if ratio(*tri.sides) != target.rho:
            raise AssertionError(f"{tri} does not have R/r = {target.rho}")
        return SolutionOutcome("triangle", gs, triangle=tri)
    rep = normalize_representation(f, g, h)
    if ratio(*rep) != target.rho:
        raise AssertionError(f"{rep} does not have R/r = {target.rho}")
    return SolutionOutcome("representation", gs, representation=rep)
