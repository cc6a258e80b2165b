"""Exact Dedekind sums.

Two independent evaluations are provided: the defining sum over k (linear
in p) and the reciprocity recursion (logarithmic in p).  Both return
:class:`fractions.Fraction` values; nothing here touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

__all__ = [
    "sawtooth",
    "dedekind_naive",
    "dedekind_fast",
    "bound_f2p",
    "check_f2p_bound",
    "check_p_over_24_bound",
]

ONE_QUARTER = Fraction(1, 4)


def sawtooth(x) -> Fraction:
    """((x)): 0 at integers, x - floor(x) - 1/2 elsewhere."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - (x.numerator // x.denominator) - Fraction(1, 2)


def _validate(q: int, p: int) -> None:
    if p <= 0:
        raise ValueError(f"modulus p must be positive, got p={p}")
    if gcd(q, p) != 1:
        raise ValueError(f"arguments must be coprime, got gcd({q}, {p}) = {gcd(q, p)}")


def dedekind_naive(q: int, p: int) -> Fraction:
    """s(q, p) = sum_{k=1}^{p-1} ((k/p)) ((kq/p)), summed term by term.

    Every sawtooth value here has denominator 2p, so the numerators are
    accumulated as integers and divided once at the end.  For p = 1 and
    p = 2 the sum is 0.
    """
    _validate(q, p)
    total = 0
    for k in range(1, p):
        r = (k * q) % p
        if r == 0:
            continue
        # ((k/p)) = (2k - p)/(2p),  ((kq/p)) = (2r - p)/(2p)
        total += (2 * k - p) * (2 * r - p)
    return Fraction(total, 4 * p * p)


def _fast(q: int, p: int) -> tuple[Fraction, int]:
    """Reciprocity recursion; returns (value, number of reciprocity steps)."""
    _validate(q, p)
    h, k = q % p, p
    total = Fraction(0)
    sign = 1
    steps = 0
    # s(h,k) = -1/4 + (h/k + k/h + 1/(hk))/12 - s(k mod h, h), for 0 < h < k
    while h > 0:
        term = Fraction(h * h + k * k + 1, 12 * h * k) - ONE_QUARTER
        total += sign * term
        sign = -sign
        h, k = k % h, h
        steps += 1
    # loop ends at s(0, 1) = 0
    return total, steps


def dedekind_fast(q: int, p: int) -> Fraction:
    """s(q, p) via reciprocity, periodicity and s(0, 1) = 0."""
    return _fast(q, p)[0]


def bound_f2p(p: int) -> Fraction:
    """f(2, p) = (p - 1)(p - 5) / (24 p), for even p >= 8."""
    if p % 2 or p < 8:
        raise ValueError(f"p must be even and at least 8, got p={p}")
    return Fraction((p - 1) * (p - 5), 24 * p)


def check_f2p_bound(p: int, q: int) -> bool:
    """Test |s(q, p)| < f(2, p) for odd q in [3, p-3] coprime to even p >= 8.

    The inequality is computed, not assumed.  Inputs outside the stated
    range are rejected with the failing condition named.
    """
    if p % 2 or p < 8:
        raise ValueError(f"p must be even and at least 8, got p={p}")
    if q % 2 == 0:
        raise ValueError(f"q must be odd, got q={q}")
    if not 3 <= q <= p - 3:
        raise ValueError(f"q must satisfy 3 <= q <= p-3, got q={q}, p={p}")
    if gcd(p, q) != 1:
        raise ValueError(f"gcd(p, q) must be 1, got gcd({p}, {q}) = {gcd(p, q)}")
    return abs(dedekind_fast(q, p)) < bound_f2p(p)


def check_p_over_24_bound(p: int, q_star: int) -> bool:
    """Test |s(q*, p)| < p/24 for even p >= 8 and q* not congruent to +-1 mod p."""
    if p % 2 or p < 8:
        raise ValueError(f"p must be even and at least 8, got p={p}")
    if gcd(p, q_star) != 1:
        raise ValueError(f"gcd(p, q*) must be 1, got gcd({p}, {q_star}) = {gcd(p, q_star)}")
    if q_star % p in (1, p - 1):
        raise ValueError(f"q* must not be congruent to +-1 mod {p}, got q*={q_star}")
    return abs(dedekind_fast(q_star, p)) < Fraction(p, 24)
