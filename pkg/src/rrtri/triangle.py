"""Exact triangle geometry for the ratio R/r.

Everything here is exact except :func:`angles_degrees`, the single
floating-point path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from rrtri.exact_arith import as_fraction, gcd_many, lcm_many


class DegenerateTripleError(ValueError):
    """A side combination makes one of (f+g-h), (f+h-g), (g+h-f) vanish."""


class InvalidTriangleError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Triangle:
    """Primitive integer triangle; sides are positive with gcd 1."""

    f: int
    g: int
    h: int

    def __post_init__(self):
        if not is_valid_triangle(self.f, self.g, self.h):
            raise InvalidTriangleError(f"({self.f}, {self.g}, {self.h}) is not a triangle")
        if gcd_many(self.sides) != 1:
            raise InvalidTriangleError(f"({self.f}, {self.g}, {self.h}) is not primitive")

    @property
    def sides(self) -> tuple[int, int, int]:
        return (self.f, self.g, self.h)

    def sorted(self) -> Triangle:
        return Triangle(*sorted(self.sides))

    @property
    def semi_perimeter(self) -> Fraction:
        return Fraction(self.f + self.g + self.h, 2)

    def area_sq(self) -> Fraction:
        """Heron's Delta^2, which stays rational."""
        s = self.semi_perimeter
        return s * (s - self.f) * (s - self.g) * (s - self.h)


def ratio(f, g, h) -> Fraction:
    """R/r = 2fgh / ((f+g-h)(f+h-g)(g+h-f)) for any signed representation."""
    f, g, h = as_fraction(f), as_fraction(g), as_fraction(h)
    den = (f + g - h) * (f + h - g) * (g + h - f)
    if den == 0:
        raise DegenerateTripleError(f"degenerate representation ({f}, {g}, {h})")
    return 2 * f * g * h / den


def ratio_via_radii(t: Triangle) -> Fraction:
    """R/r = fghs / (4 Delta^2), from R = fgh/(4 Delta) and r = Delta/s."""
    return t.f * t.g * t.h * t.semi_perimeter / (4 * t.area_sq())


def circumradius_sq(t: Triangle) -> Fraction:
    return Fraction(t.f * t.g * t.h) ** 2 / (16 * t.area_sq())


def inradius_sq(t: Triangle) -> Fraction:
    return t.area_sq() / t.semi_perimeter**2


def euler_distance_sq(t: Triangle) -> Fraction:
    """Squared incentre-circumcentre distance d^2 = R^2 - 2Rr."""
    rr_product = Fraction(t.f * t.g * t.h) / (4 * t.semi_perimeter)
    return circumradius_sq(t) - 2 * rr_product


def is_valid_triangle(f, g, h) -> bool:
    return f > 0 and g > 0 and h > 0 and f + g > h and f + h > g and g + h > f


def _clear(f, g, h) -> tuple[int, int, int]:
    f, g, h = as_fraction(f), as_fraction(g), as_fraction(h)
    scale = lcm_many(x.denominator for x in (f, g, h))
    ints = [int(x * scale) for x in (f, g, h)]
    d = gcd_many(ints)
    if d == 0:
        raise DegenerateTripleError("all sides are zero")
    return tuple(x // d for x in ints)


def to_primitive(f, g, h) -> Triangle:
    """Scale positive rational sides to the primitive integer triangle."""
    if not is_valid_triangle(as_fraction(f), as_fraction(g), as_fraction(h)):
        raise InvalidTriangleError(f"({f}, {g}, {h}) is not a triangle")
    return Triangle(*_clear(f, g, h))


def normalize_representation(f, g, h) -> tuple[int, int, int]:
    """Primitive integer form of a signed solution, sign fixed so that at
    least two entries are positive. (f, g, h) and (-f, -g, -h) have the same
    ratio.
    """
    ints = _clear(f, g, h)
    if sum(1 for x in ints if x > 0) < 2:
        ints = tuple(-x for x in ints)
    return ints


def angles_degrees(t: Triangle) -> tuple[float, float, float]:
    """Angles opposite f, g and h by the law of cosines."""

    def angle(a, b, c):
        cos = Fraction(b * b + c * c - a * a, 2 * b * c)
        return math.degrees(math.acos(float(cos)))

    return (angle(t.f, t.g, t.h), angle(t.g, t.f, t.h), angle(t.h, t.f, t.g))


def ratio_kind(rho: Fraction) -> tuple[str, int] | None:
    """``("N", N)`` for an integer ratio, ``("M", M)`` for 2 + 1/M, else None."""
    if rho.denominator == 1:
        return ("N", rho.numerator)
    excess = rho - 2
    if excess > 0 and excess.numerator == 1:
        return ("M", excess.denominator)
    return None
