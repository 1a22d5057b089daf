"""Height-bounded searches for triangles.

Two parameterizations are sieved:

* the quartic y^2 = Q(x) in x = (4 rho + 1) g/s, with x = p/q;
* the egg of the curve directly, with u = m/e^2.

Both inner loops are integer-only. Candidates are first filtered by
quadratic-residue tables modulo small prime powers (numpy), and the
survivors are checked exactly with :func:`math.isqrt`.
"""

from __future__ import annotations

import logging
import math
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from rrtri.curve import Component, Curve, NoEggError, Point
from rrtri.exact_arith import is_perfect_square
from rrtri.torsion import torsion_subgroup
from rrtri.transform import (
    DegeneratePointError,
    DomainError,
    PoleError,
    RatioTarget,
    curve_for,
    g_over_s_to_points,
    point_to_solution,
)
from rrtri.triangle import Triangle, ratio

log = logging.getLogger(__name__)

# 64 first: it rejects 52 of 64 residues on its own
SIEVE_MODULI = (64, 9, 25, 49, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53)
# moduli applied to the full stratum before compressing to candidates
_DENSE_MODULI = 4


@dataclass(frozen=True)
class SearchConfig:
    denominator_bound: int = 200
    multiple_bound: int = 3
    time_budget: float | None = None  # seconds, checked between strata

    def __post_init__(self):
        if self.denominator_bound < 1:
            raise ValueError("denominator_bound must be >= 1")
        if self.multiple_bound < 0:
            raise ValueError("multiple_bound must be >= 0")


@dataclass(frozen=True)
class SolutionRecord:
    target: RatioTarget
    point: Point
    component: Component
    provenance: str  # "quartic-sieve", "egg-sieve" or "saturation"
    triangle: Triangle | None = None
    representation: tuple[int, int, int] | None = None

    def __post_init__(self):
        if (self.triangle is not None) != (self.component is Component.EGG):
            raise ValueError("a record carries a triangle exactly when its point is on the egg")
        if self.triangle is not None and ratio(*self.triangle.sides) != self.target.rho:
            raise ValueError(f"{self.triangle} does not have R/r = {self.target.rho}")

    @property
    def residue_mod_8(self) -> int | None:
        return self.target.value % 8 if self.target.kind == "N" else None


class Records(list):
    """A list of records plus the last fully searched denominator."""

    completed_bound: int = 0
    bound: int = 0

    @property
    def truncated(self) -> bool:
        return self.completed_bound < self.bound


def make_record(target: RatioTarget, curve: Curve, p: Point, provenance: str) -> SolutionRecord:
    out = point_to_solution(target, p)
    return SolutionRecord(target, p, curve.component_of(p), provenance,
                          triangle=out.triangle, representation=out.representation)


# -- residue tables ---------------------------------------------------------

def _square_mask(m: int) -> np.ndarray:
    mask = np.zeros(m, dtype=bool)
    mask[(np.arange(m, dtype=np.int64) ** 2) % m] = True
    return mask


def _form_tables(coeffs: tuple[int, ...], m: int) -> np.ndarray:
    """table[t, r] is True iff sum_i coeffs[i] r^(d-i) t^i is a square mod m.

    ``coeffs`` lists a binary form of degree d from the r^d term down.
    """
    r = np.arange(m, dtype=np.int64)[None, :]
    t = np.arange(m, dtype=np.int64)[:, None]
    d = len(coeffs) - 1
    acc = np.zeros((m, m), dtype=np.int64)
    for i, c in enumerate(coeffs):
        term = np.full((m, m), c % m, dtype=np.int64)
        for _ in range(d - i):
            term = term * r % m
        for _ in range(i):
            term = term * t % m
        acc = (acc + term) % m
    return _square_mask(m)[acc]


class _Sieve:
    """Finds r in [lo, hi] with F(r, t) a perfect square for a fixed t."""

    def __init__(self, coeffs: tuple[int, ...]):
        self.coeffs = coeffs
        self.tables = [(m, _form_tables(coeffs, m)) for m in SIEVE_MODULI]

    def value(self, r: int, t: int) -> int:
        d = len(self.coeffs) - 1
        return sum(c * r ** (d - i) * t**i for i, c in enumerate(self.coeffs))

    def hits(self, t: int, lo: int, hi: int, coprime_to: int) -> list[tuple[int, int]]:
        n = hi - lo + 1
        if n <= 0:
            return []
        mask = np.ones(n, dtype=bool)
        for m, table in self.tables[:_DENSE_MODULI]:
            row = np.roll(table[t % m], -(lo % m))
            mask &= np.resize(row, n)
        cand = np.flatnonzero(mask).astype(np.int64) + lo
        for m, table in self.tables[_DENSE_MODULI:]:
            if cand.size == 0:
                break
            cand = cand[table[t % m][cand % m]]
        if coprime_to > 1 and cand.size:
            cand = cand[np.gcd(cand, coprime_to) == 1]
        out = []
        for r in cand.tolist():
            ok, root = is_perfect_square(self.value(r, t))
            if ok:
                out.append((r, root))
        return out


# -- quartic sieve ----------------------------------------------------------

def quartic_coefficients(rho: Fraction) -> tuple[int, int, int, int, int]:
    """Integer binary quartic b^2 Q(p/q) q^4 for rho = a/b, from the p^4 term down.

    Q(x) = x^4 - 4(2 rho + 1) x^3 + 4(4 rho^2 + 8 rho + 1) x^2 - 16 rho (4 rho + 1) x.
    """
    a, b = rho.numerator, rho.denominator
    return (b * b, -4 * b * (2 * a + b), 4 * (4 * a * a + 8 * a * b + b * b),
            -16 * a * (4 * a + b), 0)


def _quartic_p_range(rho: Fraction, q: int) -> tuple[int, int]:
    a, b = rho.numerator, rho.denominator
    hi = (4 * a * q - 1) // b  # p/q < 4 rho
    # Q < 0 on (0, r1) and (r2, 4 rho): r = 2(rho+1) -+ 2 sqrt(rho (rho - 2))
    rf = float(rho)
    w = 2.0 * math.sqrt(max(rf * (rf - 2.0), 0.0))
    lo = max(1, math.floor((2.0 * (rf + 1.0) - w) * q) - 2)
    hi = min(hi, math.ceil((2.0 * (rf + 1.0) + w) * q) + 2)
    return lo, hi


def quartic_sieve(target: RatioTarget, cfg: SearchConfig) -> Records:
    """Triangles from x = p/q inside the positivity window, q <= bound."""
    rho = target.rho
    curve = curve_for(target)
    sieve = _Sieve(quartic_coefficients(rho))
    start = time.monotonic()
    seen: set[tuple[int, int, int]] = set()
    out = Records()
    out.bound = cfg.denominator_bound
    for q in range(1, cfg.denominator_bound + 1):
        lo, hi = _quartic_p_range(rho, q)
        for p, _ in sieve.hits(q, lo, hi, q):
            gs = Fraction(p, q) / (4 * rho + 1)
            points = g_over_s_to_points(target, gs)
            if not points:
                raise AssertionError(f"x = {p}/{q} gives no curve point")
            rec = make_record(target, curve, points[0], "quartic-sieve")
            key = rec.triangle.sides if rec.triangle else rec.representation
            if key not in seen:
                seen.add(key)
                out.append(rec)
        out.completed_bound = q
        if _over_budget(cfg, start) and q < cfg.denominator_bound:
            log.warning("time budget hit after q = %d for %s", q, target)
            break
    return out


def _over_budget(cfg: SearchConfig, start: float) -> bool:
    return cfg.time_budget is not None and time.monotonic() - start > cfg.time_budget


# -- egg sieve --------------------------------------------------------------

def _egg_m_range(curve: Curve, e: int) -> tuple[int, int]:
    roots = curve.real_roots()
    e2 = e * e
    if roots.exact is not None:
        lo, hi = roots.exact
        return math.ceil(lo * e2), math.floor(hi * e2)
    # the egg is [center - sqrt(rad), center + sqrt(rad)] on E_N and F_M
    center = roots.center * e2
    rad = roots.radicand * e2 * e2
    w = math.isqrt(math.floor(rad))
    return math.floor(center) - w - 1, math.ceil(center) + w + 1


def egg_sieve(target: RatioTarget, cfg: SearchConfig) -> Records:
    """Egg points u = m/e^2, v = w/e^3 with e <= bound."""
    curve = curve_for(target)
    if not curve.has_egg():
        raise NoEggError(f"{curve.label} has no egg")
    a2, a4 = int(curve.a2), int(curve.a4)
    # e^6 v^2 = m^3 + a2 m^2 t + a4 m t^2 with t = e^2
    sieve = _Sieve((1, a2, a4, 0))
    start = time.monotonic()
    seen: set[tuple[int, int, int]] = set()
    out = Records()
    out.bound = cfg.denominator_bound
    for e in range(1, cfg.denominator_bound + 1):
        lo, hi = _egg_m_range(curve, e)
        for m, w in sieve.hits(e * e, lo, hi, e):
            if w == 0:
                continue
            p = Point(Fraction(m, e * e), Fraction(w, e**3))
            if curve.component_of(p) is not Component.EGG:
                continue
            rec = make_record(target, curve, p, "egg-sieve")
            if rec.triangle.sides not in seen:
                seen.add(rec.triangle.sides)
                out.append(rec)
        out.completed_bound = e
        if _over_budget(cfg, start) and e < cfg.denominator_bound:
            log.warning("time budget hit after e = %d for %s", e, target)
            break
    return out


# -- saturation -------------------------------------------------------------

def saturation_points(target: RatioTarget, seeds: list[Point], multiple_bound: int) -> list[Point]:
    """Distinct points T + nG for torsion T, seed G and |n| <= multiple_bound."""
    curve = curve_for(target)
    torsion = [p for p, _ in torsion_subgroup(curve).points]
    pts: set[Point] = set()
    for g in seeds:
        for n in range(-multiple_bound, multiple_bound + 1):
            ng = curve.multiply(n, g)
            for t in torsion:
                pts.add(curve.add(t, ng))
    return sorted(pts, key=Point.sort_key)


def saturate(target: RatioTarget, seeds: list[Point], cfg: SearchConfig) -> Records:
    """One record per distinct non-degenerate point T + nG.

    Records are kept per point rather than per triangle so that the
    component of every combination stays visible.
    """
    curve = curve_for(target)
    out = Records()
    out.bound = out.completed_bound = cfg.multiple_bound
    for p in saturation_points(target, seeds, cfg.multiple_bound):
        try:
            out.append(make_record(target, curve, p, "saturation"))
        except (PoleError, DegeneratePointError):
            continue
    return out


# -- scans ------------------------------------------------------------------

@dataclass
class ScanResult:
    n_from: int
    n_to: int
    records: list[SolutionRecord] = field(default_factory=list)
    truncated: list[int] = field(default_factory=list)

    @property
    def triangle_ns(self) -> list[int]:
        return sorted({r.target.value for r in self.records if r.triangle is not None})

    @property
    def residues(self) -> Counter:
        return Counter(n % 8 for n in self.triangle_ns)

    @property
    def counterexamples(self) -> list[int]:
        """Triangle-bearing N with N != 2 (mod 8)."""
        return [n for n in self.triangle_ns if n % 8 != 2]


def scan_range(n_from: int, n_to: int, cfg: SearchConfig) -> ScanResult:
    if not 3 <= n_from <= n_to:
        raise DomainError(f"need 3 <= from <= to, got {n_from}..{n_to}")
    result = ScanResult(n_from, n_to)
    for n in range(n_from, n_to + 1):
        recs = quartic_sieve(RatioTarget.integer(n), cfg)
        result.records.extend(recs)
        if recs.truncated:
            result.truncated.append(n)
    return result


def find_triangles(target: RatioTarget, cfg: SearchConfig, egg_bound: int | None = None) -> Records:
    """Quartic sieve, egg sieve, then saturation of everything found.

    Returns triangle-bearing records, one per primitive triangle, in order
    of discovery.
    """
    curve = curve_for(target)
    found = Records()
    found.bound = cfg.denominator_bound
    found.completed_bound = cfg.denominator_bound
    batches = [quartic_sieve(target, cfg)]
    if curve.has_egg():
        egg_cfg = SearchConfig(egg_bound or cfg.denominator_bound, cfg.multiple_bound, cfg.time_budget)
        batches.append(egg_sieve(target, egg_cfg))
    seeds = [r.point for b in batches for r in b if r.triangle is not None]
    if seeds and cfg.multiple_bound > 0:
        batches.append(saturate(target, seeds, cfg))
    seen = set()
    for batch in batches:
        if batch.truncated:
            found.completed_bound = min(found.completed_bound, batch.completed_bound)
        for rec in batch:
            if rec.triangle is not None and rec.triangle.sides not in seen:
                seen.add(rec.triangle.sides)
                found.append(rec)
    return found
