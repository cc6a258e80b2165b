"""Lescop invariant values for Seifert candidates and for 2/q surgery.

A Seifert candidate is the fibred space over S^2 with exceptional fibres of
multiplicities 2*alpha, 2*beta and 5, given by the framed link data
(alpha, beta, q1, q2, q3).  Its rational Euler number is
``q1/(2 alpha) + q2/(2 beta) + q3/5``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable

from .cyclotomic import LaurentPolynomial
from .dedekind import dedekind_fast

__all__ = [
    "SeifertCandidate",
    "SurgerySpec",
    "FIGURE_EIGHT_ALEXANDER",
    "euler_number",
    "h1_order",
    "lescop_base",
    "dedekind_total",
    "lescop_seifert",
    "lescop_surgery_2q",
    "doteq",
]

# t^2 - 3t + 1
FIGURE_EIGHT_ALEXANDER = LaurentPolynomial({0: 1, 1: -3, 2: 1})


@dataclass(frozen=True, order=True)
class SeifertCandidate:
    alpha: int
    beta: int
    q1: int
    q2: int
    q3: int

    def __post_init__(self):
        a, b = self.alpha, self.beta
        if not 1 <= a < b:
            raise ValueError(f"need 1 <= alpha < beta, got alpha={a}, beta={b}")
        if gcd(a, b) != 1:
            raise ValueError(f"need gcd(alpha, beta) = 1, got gcd({a}, {b}) = {gcd(a, b)}")
        if self.q1 % 2 == 0 or self.q2 % 2 == 0:
            raise ValueError(f"q1 and q2 must be odd, got q1={self.q1}, q2={self.q2}")
        if gcd(self.q1, 2 * a) != 1:
            raise ValueError(f"need gcd(q1, 2*alpha) = 1, got q1={self.q1}, alpha={a}")
        if gcd(self.q2, 2 * b) != 1:
            raise ValueError(f"need gcd(q2, 2*beta) = 1, got q2={self.q2}, beta={b}")
        if self.q3 % 5 == 0:
            raise ValueError(f"need gcd(q3, 5) = 1, got q3={self.q3}")

    def mirror(self) -> "SeifertCandidate":
        return SeifertCandidate(self.alpha, self.beta, -self.q1, -self.q2, -self.q3)

    def astuple(self) -> tuple[int, int, int, int, int]:
        return (self.alpha, self.beta, self.q1, self.q2, self.q3)


@dataclass(frozen=True)
class SurgerySpec:
    """2/q surgery on a knot with Alexander polynomial ``alexander`` in a homology sphere."""

    q: int
    alexander: LaurentPolynomial = field(default=FIGURE_EIGHT_ALEXANDER)
    lambda_sigma: Fraction = Fraction(0)

    def __post_init__(self):
        if self.q % 2 == 0:
            raise ValueError(f"surgery coefficient 2/q needs odd q, got q={self.q}")


def euler_number(c: SeifertCandidate) -> Fraction:
    return Fraction(c.q1, 2 * c.alpha) + Fraction(c.q2, 2 * c.beta) + Fraction(c.q3, 5)


def h1_order(c: SeifertCandidate) -> int | float:
    """|H_1| = |20 alpha beta e|; ``math.inf`` when e = 0."""
    e = euler_number(c)
    if e == 0:
        return math.inf
    order = abs(20 * c.alpha * c.beta * e)
    assert order.denominator == 1
    return int(order)


def lescop_base(alpha: int, beta: int) -> Fraction:
    """The part of lambda that depends only on the multiplicities."""
    ab = alpha * beta
    return (
        Fraction(-4, 5) * ab
        + Fraction(5 * beta, 24 * alpha)
        + Fraction(5 * alpha, 24 * beta)
        + Fraction(1, 120 * ab)
        - Fraction(1, 4)
    )


def dedekind_total(c: SeifertCandidate, dedekind: Callable[[int, int], Fraction] = dedekind_fast) -> Fraction:
    """T = s(q1, 2 alpha) + s(q2, 2 beta) + s(q3, 5)."""
    return dedekind(c.q1, 2 * c.alpha) + dedekind(c.q2, 2 * c.beta) + dedekind(c.q3, 5)


def lescop_seifert(c: SeifertCandidate, dedekind: Callable[[int, int], Fraction] = dedekind_fast) -> Fraction:
    """lambda(M) for the candidate: B - T when e > 0, -(B + T) when e < 0.

    ``dedekind`` selects the Dedekind sum routine, so the value can be
    recomputed with the term-by-term sum as a cross-check.
    """
    e = euler_number(c)
    if e == 0:
        raise ValueError(f"Euler number vanishes for {c}; H_1 is infinite")
    base = lescop_base(c.alpha, c.beta)
    total = dedekind_total(c, dedekind)
    if e > 0:
        return base - total
    return -(base + total)


def doteq(f: LaurentPolynomial, g: LaurentPolynomial) -> bool:
    """True iff f = +-t^k g for some integer k."""
    if f.is_zero() or g.is_zero():
        return f.is_zero() and g.is_zero()
    fn = f.shift(-f.min_degree())
    gn = g.shift(-g.min_degree())
    return fn == gn or fn == -gn


def lescop_surgery_2q(s: SurgerySpec) -> Fraction:
    """lambda(Sigma(K; 2/q)) = -q, for lambda(Sigma) = 0 and Delta_K = t^2 - 3t + 1.

    Only this instance of the surgery formula is implemented; anything else
    is rejected.
    """
    if s.lambda_sigma != 0:
        raise ValueError(f"only lambda(Sigma) = 0 is supported, got {s.lambda_sigma}")
    if not doteq(s.alexander, FIGURE_EIGHT_ALEXANDER):
        raise ValueError("Alexander polynomial must be t^2 - 3t + 1 up to units +-t^k")
    return Fraction(-s.q)
