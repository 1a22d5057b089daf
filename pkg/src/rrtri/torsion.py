"""Torsion subgroups of v^2 = u^3 + a2 u^2 + a4 u by Nagell-Lutz search."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from rrtri.curve import INFINITY, Curve, Point
from rrtri.exact_arith import divisors, factorize, integer_roots_cubic, merge_factorizations

# Mazur: no rational torsion point has order above 12.
MAX_TORSION_ORDER = 12

_CYCLIC_ORDERS = set(range(1, 11)) | {12}
_PRODUCT_ORDERS = {2, 4, 6, 8}  # Z/2 x Z/2m, listed by 2m


@dataclass(frozen=True)
class TorsionReport:
    points: tuple[tuple[Point, int], ...]
    structure: str

    @property
    def size(self) -> int:
        return len(self.points)

    def orders(self) -> list[int]:
        return sorted(o for _, o in self.points)

    def point_set(self) -> set[Point]:
        return {p for p, _ in self.points}

    def is_mazur_admissible(self) -> bool:
        n = self.size
        twos = sum(1 for _, o in self.points if o == 2)
        if twos == 3:
            return n // 2 in _PRODUCT_ORDERS and n % 2 == 0
        return n in _CYCLIC_ORDERS


def order_of(c: Curve, p: Point) -> int | None:
    """Smallest k <= 12 with k*p = infinity, else None (infinite order)."""
    c._check(p)
    acc = p
    for k in range(1, MAX_TORSION_ORDER + 1):
        if acc.is_infinity:
            return k
        acc = c._add(acc, p)
    return None


def _discriminant_factors(c: Curve) -> dict[int, int]:
    if c.kind == "E":
        n = c.param
        # 256 N^3 (N-2) (4N+1)^2
        parts = [{2: 8}, {p: 3 * e for p, e in factorize(n).items()}, factorize(n - 2),
                 {p: 2 * e for p, e in factorize(4 * n + 1).items()}]
        return merge_factorizations(*parts)
    if c.kind == "F":
        m = c.param
        # 256 M^6 (9M+4)^2 (2M+1)^3
        parts = [{2: 8}, {p: 6 * e for p, e in factorize(m).items()},
                 {p: 2 * e for p, e in factorize(9 * m + 4).items()},
                 {p: 3 * e for p, e in factorize(2 * m + 1).items()}]
        return merge_factorizations(*parts)
    a2, a4 = int(c.a2), int(c.a4)
    return merge_factorizations({2: 4}, {p: 2 * e for p, e in factorize(a4).items()},
                                factorize(a2 * a2 - 4 * a4))


def _structure(points: list[tuple[Point, int]]) -> str:
    n = len(points)
    twos = sum(1 for _, o in points if o == 2)
    if twos == 3:
        return f"Z/2 x Z/{n // 2}"
    if twos <= 1:
        return f"Z/{n}"
    return "other"


def torsion_subgroup(c: Curve) -> TorsionReport:
    """All rational torsion points of ``c`` with their orders.

    Candidates are integral points with v = 0 or v^2 dividing the
    discriminant; each is kept if some multiple up to 12 vanishes.
    """
    if c.a2.denominator != 1 or c.a4.denominator != 1:
        raise ValueError("torsion search needs integral coefficients")
    a2, a4 = int(c.a2), int(c.a4)
    factors = _discriminant_factors(c)
    assert _prod(factors) == abs(int(c.discriminant()))

    candidates: set[Point] = set()
    half = {p: e // 2 for p, e in factors.items() if e >= 2}
    for v in [0] + divisors(half):
        for u in integer_roots_cubic(a2, a4, -v * v):
            candidates.add(Point(u, v))
            candidates.add(Point(u, -v))

    found = [(INFINITY, 1)]
    for p in candidates:
        k = order_of(c, p)
        if k is not None:
            found.append((p, k))
    found.sort(key=lambda t: (t[1], t[0].sort_key()))
    return TorsionReport(tuple(found), _structure(found))


def _prod(factors: dict[int, int]) -> int:
    out = 1
    for p, e in factors.items():
        out *= p**e
    return out


def closed_form_torsion(c: Curve) -> dict[Point, int] | None:
    """The generic six torsion points of E_N or F_M with their orders."""
    if c.kind == "E":
        n = c.param
        return {INFINITY: 1, Point(0, 0): 2,
                Point(1, 2 * n): 3, Point(1, -2 * n): 3,
                Point(4 * n + 1, 2 * n * (4 * n + 1)): 6,
                Point(4 * n + 1, -2 * n * (4 * n + 1)): 6}
    if c.kind == "F":
        m = c.param
        y3 = 2 * m * m * (2 * m + 1)
        u6 = 9 * m * m + 4 * m
        y6 = 2 * m * (2 * m + 1) * (9 * m + 4)
        return {INFINITY: 1, Point(0, 0): 2,
                Point(m * m, y3): 3, Point(m * m, -y3): 3,
                Point(u6, y6): 6, Point(u6, -y6): 6}
    return None


def torsion_deviations(c: Curve, report: TorsionReport) -> list[str]:
    """Human-readable differences between the computed group and the closed forms."""
    expected = closed_form_torsion(c)
    if expected is None:
        return []
    got = dict(report.points)
    out = []
    for p, k in expected.items():
        if got.get(p) != k:
            out.append(f"expected {p} of order {k}, got {got.get(p)}")
    for p, k in got.items():
        if p not in expected:
            out.append(f"extra torsion point {p} of order {k}")
    return out


def order_counts(report: TorsionReport) -> Counter:
    return Counter(o for _, o in report.points)

