from fractions import Fraction
from math import gcd, isqrt

import pytest

from conftest import E7_POINT, E26_EGG
from rrtri.curve import Component, NoEggError, Point
from rrtri.search import (
    SearchConfig,
    SolutionRecord,
    egg_sieve,
    find_triangles,
    quartic_coefficients,
    quartic_sieve,
    saturate,
    saturation_points,
    scan_range,
)
from rrtri import search
from rrtri.curve import Curve
from rrtri.transform import (
    DomainError,
    RatioTarget,
    build_f_quadratic,
    curve_for,
    point_to_solution,
    solve_f_quadratic,
)
from rrtri.triangle import Triangle, ratio, to_primitive


def brute_quartic(target, bound):
    """All x = p/q in (0, 4 rho) with q <= bound where the quartic is a rational square."""
    rho = target.rho
    hits = []
    for q in range(1, bound + 1):
        for p in range(1, int(4 * rho * q) + 1):
            x = Fraction(p, q)
            if gcd(p, q) != 1 or not 0 < x < 4 * rho:
                continue
            val = x**4 - 4 * (2 * rho + 1) * x**3 + 4 * (4 * rho**2 + 8 * rho + 1) * x**2 \
                - 16 * rho * (4 * rho + 1) * x
            if val < 0:
                continue
            a, b = isqrt(val.numerator), isqrt(val.denominator)
            if a * a == val.numerator and b * b == val.denominator:
                hits.append(x)
    return hits


def brute_egg(target, bound):
    """Egg points u = m/e^2 with e <= bound, by direct rational evaluation."""
    c = curve_for(target)
    roots = c.real_roots()
    out = []
    for e in range(1, bound + 1):
        lo = int((roots.center - isqrt(int(roots.radicand)) - 2) * e * e)
        hi = int((roots.center + isqrt(int(roots.radicand)) + 2) * e * e)
        for m in range(lo, hi + 1):
            if m >= 0 or gcd(m, e) != 1:
                continue
            u = Fraction(m, e * e)
            val = c.rhs(u)
            if val <= 0:
                continue
            a, b = isqrt(val.numerator), isqrt(val.denominator)
            if a * a == val.numerator and b * b == val.denominator:
                out.append(Point(u, Fraction(a, b)))
    return out


def brute_triangles(target, bound):
    out = set()
    for x in brute_quartic(target, bound):
        gs = x / (4 * target.rho + 1)
        g, s = gs.numerator, gs.denominator
        f, h = solve_f_quadratic(build_f_quadratic(target.rho, g, s))
        out.add(to_primitive(f, g, h).sorted().sides)
    return out


def triangles_of(records):
    return {r.triangle.sides for r in records if r.triangle is not None}


def test_quartic_coefficients():
    n = 7
    assert quartic_coefficients(Fraction(n)) == (
        1, -4 * (2 * n + 1), 4 * (4 * n * n + 8 * n + 1), -16 * n * (4 * n + 1), 0)


@pytest.mark.parametrize("n, bound", [(3, 50), (7, 25), (10, 20), (26, 12), (74, 8)])
def test_quartic_sieve_matches_brute_force(n, bound):
    target = RatioTarget.integer(n)
    got = triangles_of(quartic_sieve(target, SearchConfig(bound)))
    assert got == brute_triangles(target, bound)


def test_quartic_sieve_n3_empty():
    assert quartic_sieve(RatioTarget.integer(3), SearchConfig(50)) == []
    assert brute_quartic(RatioTarget.integer(3), 50) == []


def test_quartic_sieve_n26():
    recs = quartic_sieve(RatioTarget.integer(26), SearchConfig(33))
    assert (11, 39, 49) in triangles_of(recs)
    # the witness x = 105 * 26/33 = 910/11
    assert Fraction(910, 11) in brute_quartic(RatioTarget.integer(26), 11)


def test_quartic_sieve_n74():
    assert (259, 475, 729) in triangles_of(quartic_sieve(RatioTarget.integer(74), SearchConfig(7)))


@pytest.mark.parametrize("m, bound", [(5, 15), (7, 10)])
def test_quartic_sieve_near_equilateral_matches_brute_force(m, bound):
    target = RatioTarget.near_equilateral(m)
    got = quartic_sieve(target, SearchConfig(bound))
    assert triangles_of(got) == brute_triangles(target, bound)
    assert all(ratio(*r.triangle.sides) == target.rho for r in got)


@pytest.mark.parametrize("n, bound", [(7, 20), (26, 4), (10, 6)])
def test_egg_sieve_matches_brute_force(n, bound):
    target = RatioTarget.integer(n)
    expected = {point_to_solution(target, p).triangle.sides for p in brute_egg(target, bound)}
    assert triangles_of(egg_sieve(target, SearchConfig(bound))) == expected


def test_egg_sieve_n7_empty():
    assert egg_sieve(RatioTarget.integer(7), SearchConfig(20)) == []


def test_egg_sieve_n26_integral_point():
    recs = egg_sieve(RatioTarget.integer(26), SearchConfig(1))
    assert (11, 39, 49) in triangles_of(recs)
    assert all(r.point.u.denominator == 1 for r in recs)
    assert all(r.component is Component.EGG for r in recs)


def test_egg_sieve_requires_egg(monkeypatch):
    # every E_N (N >= 3) and F_M has an egg, so fake a curve without one
    monkeypatch.setattr(search, "curve_for", lambda target: Curve(-2, 5))
    with pytest.raises(NoEggError):
        egg_sieve(RatioTarget.integer(3), SearchConfig(2))


def test_saturate_egg_seed():
    target = RatioTarget.integer(26)
    c = curve_for(target)
    recs = saturate(target, [E26_EGG], SearchConfig(multiple_bound=2))
    by_point = {r.point: r for r in recs}
    assert by_point[E26_EGG].triangle == Triangle(11, 39, 49)
    for t in (Point(1, 52), Point(105, 5460)):
        assert by_point[c.add(t, E26_EGG)].component is Component.EGG
    two_p = c.multiply(2, E26_EGG)
    assert by_point[two_p].component is Component.INFINITE
    assert by_point[two_p].triangle is None


@pytest.mark.parametrize("k", [1, 3, 6])
def test_saturate_infinite_seed_gives_nothing(k):
    recs = saturate(RatioTarget.integer(7), [E7_POINT], SearchConfig(multiple_bound=k))
    assert recs and all(r.triangle is None for r in recs)


def test_saturate_empty():
    assert saturate(RatioTarget.integer(7), [], SearchConfig()) == []


def test_saturation_points_on_curve():
    target = RatioTarget.integer(26)
    c = curve_for(target)
    pts = saturation_points(target, [E26_EGG], 3)
    assert len(pts) == 6 * 7
    assert all(c.is_on_curve(p) for p in pts)


def test_sieves_agree():
    for n in (26, 74):
        t = RatioTarget.integer(n)
        assert triangles_of(quartic_sieve(t, SearchConfig(200))) == \
            triangles_of(egg_sieve(t, SearchConfig(20)))
    for n in (10, 18, 34):
        t = RatioTarget.integer(n)
        assert quartic_sieve(t, SearchConfig(60)) == []
        assert egg_sieve(t, SearchConfig(8)) == []


def test_monotone_in_bound():
    t = RatioTarget.integer(26)
    small = triangles_of(quartic_sieve(t, SearchConfig(5)))
    large = triangles_of(quartic_sieve(t, SearchConfig(40)))
    assert small <= large


def test_deterministic():
    t = RatioTarget.integer(74)
    assert quartic_sieve(t, SearchConfig(50)) == quartic_sieve(t, SearchConfig(50))


def test_time_budget_truncates():
    recs = quartic_sieve(RatioTarget.integer(90), SearchConfig(400, time_budget=0.0))
    assert recs.truncated and recs.completed_bound == 1


def test_record_invariants():
    t = RatioTarget.integer(26)
    with pytest.raises(ValueError):
        SolutionRecord(t, E26_EGG, Component.INFINITE, "egg-sieve", triangle=Triangle(11, 39, 49))
    with pytest.raises(ValueError):
        SolutionRecord(t, E26_EGG, Component.EGG, "egg-sieve", triangle=Triangle(3, 4, 5))
    rec = SolutionRecord(t, E26_EGG, Component.EGG, "egg-sieve", triangle=Triangle(11, 39, 49))
    assert rec.residue_mod_8 == 2


def test_find_triangles():
    recs = find_triangles(RatioTarget.integer(26), SearchConfig(40, 2), egg_bound=3)
    sides = triangles_of(recs)
    assert {(11, 39, 49), (7, 117, 121)} <= sides
    assert len(sides) == len(recs)


def test_scan_small_range():
    res = scan_range(20, 30, SearchConfig(40))
    assert res.triangle_ns == [26]
    assert res.residues == {2: 1}
    assert res.counterexamples == []
    with pytest.raises(DomainError):
        scan_range(30, 20, SearchConfig())
    with pytest.raises(DomainError):
        scan_range(2, 5, SearchConfig())
