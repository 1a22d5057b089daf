"""Exact integer and rational helpers.

Rationals are plain :class:`fractions.Fraction` values, which are reduced
with a positive denominator at construction time.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, isqrt, lcm
from typing import Iterable


def as_fraction(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction (no floats)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational number")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def is_perfect_square(n: int) -> tuple[bool, int | None]:
    """Return ``(True, root)`` if ``n == root**2`` with ``root >= 0``."""
    if n < 0:
        return False, None
    # cheap rejection: squares are 0, 1, 4, 9 mod 16
    if (n & 15) not in (0, 1, 4, 9):
        return False, None
    r = isqrt(n)
    if r * r == n:
        return True, r
    return False, None


def int_sqrt_exact(n: int) -> int | None:
    ok, r = is_perfect_square(n)
    return r if ok else None


def rational_sqrt(q) -> Fraction | None:
    """Nonnegative exact square root of a rational, or None if irrational."""
    q = as_fraction(q)
    a = int_sqrt_exact(q.numerator)
    if a is None:
        return None
    b = int_sqrt_exact(q.denominator)
    if b is None:
        return None
    return Fraction(a, b)


def gcd_many(values: Iterable[int]) -> int:
    return reduce(gcd, values, 0)


def lcm_many(values: Iterable[int]) -> int:
    return reduce(lcm, values, 1)


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization of ``|n|`` (n != 0).

    Only meant for the modest discriminants that appear in torsion
    enumeration.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    p = 5
    step = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += step
        step = 6 - step
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def merge_factorizations(*parts: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for part in parts:
        for p, e in part.items():
            out[p] = out.get(p, 0) + e
    return out


def divisors(factors: dict[int, int]) -> list[int]:
    """All positive divisors from a factorization, sorted."""
    divs = [1]
    for p, e in factors.items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def _first_nonneg(g, lo: int, hi: int, sign: int) -> int | None:
    """Smallest u in [lo, hi] with sign*g(u) >= 0, for sign*g nondecreasing."""
    if lo > hi or sign * g(hi) < 0:
        return None
    while lo < hi:
        mid = (lo + hi) // 2
        if sign * g(mid) >= 0:
            hi = mid
        else:
            lo = mid + 1
    return lo


def integer_roots_cubic(b: int, c: int, d: int) -> list[int]:
    """Integer roots of u^3 + b u^2 + c u + d, sorted, by exact bisection.

    The cubic is cut into monotone pieces at (integer brackets of) its
    critical points; the few integers near each critical point are tested
    directly.
    """

    def g(u: int) -> int:
        return ((u + b) * u + c) * u + d

    bound = 1 + max(abs(b), abs(c), abs(d))
    found: set[int] = set()

    def scan(lo: int, hi: int, sign: int) -> None:
        u = _first_nonneg(g, max(lo, -bound), min(hi, bound), sign)
        if u is not None and g(u) == 0:
            found.add(u)

    disc = b * b - 3 * c
    if disc <= 0:
        scan(-bound, bound, 1)
    else:
        s = isqrt(disc)
        k1 = (-b - s - 1) // 3
        k2 = -((b - s - 1) // 3)  # ceil((-b + s + 1) / 3)
        scan(-bound, k1 - 1, 1)
        scan(k1 + 2, k2 - 2, -1)
        scan(k2 + 1, bound, 1)
        for u in list(range(k1 - 1, k1 + 3)) + list(range(k2 - 2, k2 + 2)):
            if g(u) == 0:
                found.add(u)
    return sorted(found)
