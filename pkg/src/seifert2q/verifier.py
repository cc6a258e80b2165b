"""Exhaustive search for Seifert candidates consistent with 2/q surgery.

For a coprime pair 1 <= alpha < beta the candidates with |H_1| = 2 are the
triples (q1, q2, q3) with

    5*beta*q1 + 5*alpha*q2 + 2*alpha*beta*q3 = +-1.

Moving q1 by 2*alpha, q2 by 2*beta or q3 by 5 moves the left side by a
multiple of 10*alpha*beta and leaves every Dedekind sum unchanged, so both
admissibility and lambda depend only on the residue triple
(q1 mod 2 alpha, q2 mod 2 beta, q3 mod 5).  The search therefore runs over
residue triples, which makes it finite for each (alpha, beta).

A search up to ``beta_max`` is an instance check, not a proof: it says
nothing about pairs with beta > beta_max.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd

from .lescop import SeifertCandidate, dedekind_total, euler_number, h1_order, lescop_seifert

__all__ = [
    "CandidateRecord",
    "VerificationReport",
    "SCOPE_NOTE",
    "residue_triple",
    "enumerate_candidates",
    "coprime_pairs",
    "check_candidate",
    "verify_theorem",
    "sweep",
    "check_q2_residue",
    "lambda_lower_bound_gap",
]

SCOPE_NOTE = (
    "instance check: every candidate with beta <= beta_max was examined; "
    "pairs beyond the bound are not covered, so this is not a proof"
)


@dataclass(frozen=True)
class CandidateRecord:
    candidate: SeifertCandidate
    e_sign: int
    lam: Fraction
    h1: int
    ab_product: int
    survivor: bool = False
    eq2_holds: bool = False


@dataclass
class VerificationReport:
    q: int
    beta_max: int
    candidates_examined: int
    survivors: list[CandidateRecord] = field(default_factory=list)
    elapsed: float = 0.0
    pairs_examined: int = 0
    eq2_holding: int = 0
    require_norm_bound: bool = True

    @property
    def verified(self) -> bool:
        return not self.survivors


def residue_triple(c: SeifertCandidate) -> tuple[int, int, int]:
    return (c.q1 % (2 * c.alpha), c.q2 % (2 * c.beta), c.q3 % 5)


def _centered(r: int, m: int) -> int:
    r %= m
    return r - m if 2 * r > m else r


def _canonical_lift(alpha: int, beta: int, r1: int, r2: int, r3: int, e_sign: int) -> SeifertCandidate:
    """Smallest lift (by |q1|+|q2|+|q3|, then lexicographically) of a residue triple."""
    m = 10 * alpha * beta
    q1, q2, q3 = _centered(r1, 2 * alpha), _centered(r2, 2 * beta), _centered(r3, 5)
    total = 5 * beta * q1 + 5 * alpha * q2 + 2 * alpha * beta * q3
    shift, rem = divmod(e_sign - total, m)
    assert rem == 0
    # centred residues keep |total| <= 15*alpha*beta, so |shift| <= 2
    best = None
    for k1 in range(-4, 5):
        for k2 in range(-4, 5):
            k3 = shift - k1 - k2
            lift = (q1 + 2 * alpha * k1, q2 + 2 * beta * k2, q3 + 5 * k3)
            key = (sum(abs(v) for v in lift), lift)
            if best is None or key < best:
                best = key
    return SeifertCandidate(alpha, beta, *best[1])


def _residues_mod_2n(n: int, unit: int, target: int) -> list[int]:
    """Odd residues x mod 2n, coprime to 2n, with unit * x = target (mod n)."""
    try:
        r = target * pow(unit, -1, n) % n if n > 1 else 0
    except ValueError:
        return []
    return [x for x in (r, r + n) if x % 2 == 1 and gcd(x, 2 * n) == 1]


def enumerate_candidates(alpha: int, beta: int, e_sign: int) -> list[SeifertCandidate]:
    """Every residue class of (q1, q2, q3) with e = e_sign / (10 alpha beta), lifted.

    Reducing the defining equation mod alpha, mod beta and mod 5 pins q1,
    q2 and q3 down to at most two residues each; the surviving combinations
    are then checked against the full congruence mod 10 alpha beta.
    """
    if not 1 <= alpha < beta or gcd(alpha, beta) != 1:
        raise ValueError(f"need 1 <= alpha < beta with gcd 1, got ({alpha}, {beta})")
    if e_sign not in (1, -1):
        raise ValueError(f"e_sign must be +1 or -1, got {e_sign}")
    m = 10 * alpha * beta
    if (alpha * beta) % 5 == 0:
        return []
    q3 = e_sign * pow(2 * alpha * beta, -1, 5) % 5
    out = []
    for r1, r2 in product(
        _residues_mod_2n(alpha, 5 * beta, e_sign),
        _residues_mod_2n(beta, 5 * alpha, e_sign),
    ):
        if (5 * beta * r1 + 5 * alpha * r2 + 2 * alpha * beta * q3 - e_sign) % m == 0:
            out.append(_canonical_lift(alpha, beta, r1, r2, q3, e_sign))
    out.sort(key=residue_triple)
    return out


def coprime_pairs(beta_max: int, beta_min: int = 2):
    for beta in range(beta_min, beta_max + 1):
        for alpha in range(1, beta):
            if gcd(alpha, beta) == 1:
                yield alpha, beta


def _evaluate(c: SeifertCandidate, e_sign: int) -> CandidateRecord:
    h1 = h1_order(c)
    return CandidateRecord(c, e_sign, lescop_seifert(c), h1, c.alpha * c.beta)


def _judge(rec: CandidateRecord, q: int, require_norm_bound: bool) -> CandidateRecord:
    ab = rec.ab_product
    survivor = rec.lam == -q and (not require_norm_bound or ab > 2 * abs(q))
    eq2 = 2 * abs(rec.lam) < ab
    return CandidateRecord(rec.candidate, rec.e_sign, rec.lam, rec.h1, ab, survivor, eq2)


def check_candidate(c: SeifertCandidate, q: int, *, require_norm_bound: bool = True) -> CandidateRecord:
    """Decide whether candidate c is consistent with 2/q surgery.

    A survivor has lambda = -q (the surgery side) and alpha*beta > 2|q|,
    the integer form of (alpha beta)^2 > 4 q^2.  ``eq2_holds`` reports
    |lambda| < alpha*beta/2.  Passing ``require_norm_bound=False`` drops the
    alpha*beta test; it exists to exercise the counterexample path.
    """
    if q % 2 == 0:
        raise ValueError(f"q must be odd, got q={q}")
    h1 = h1_order(c)
    if h1 != 2:
        raise ValueError(f"candidate {c.astuple()} has |H_1| = {h1}, need 2")
    e_sign = 1 if euler_number(c) > 0 else -1
    return _judge(_evaluate(c, e_sign), q, require_norm_bound)


def _records_for_betas(betas: list[int]) -> list[CandidateRecord]:
    out = []
    for beta in betas:
        for alpha in range(1, beta):
            if gcd(alpha, beta) != 1:
                continue
            for e_sign in (1, -1):
                for c in enumerate_candidates(alpha, beta, e_sign):
                    out.append(_evaluate(c, e_sign))
    return out


def _sort_key(rec: CandidateRecord):
    c = rec.candidate
    return (c.alpha, c.beta, -rec.e_sign, residue_triple(c))


def _all_records(beta_max: int, workers: int) -> list[CandidateRecord]:
    betas = list(range(2, beta_max + 1))
    if workers <= 1:
        records = _records_for_betas(betas)
    else:
        # interleave so chunks carry similar work
        chunks = [betas[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = [r for part in pool.map(_records_for_betas, chunks) for r in part]
    records.sort(key=_sort_key)
    return records


def _validate_q(q: int) -> None:
    if q % 2 == 0:
        raise ValueError(f"surgery coefficient 2/q needs odd q, got q={q}")
    if abs(q) < 3:
        raise ValueError(f"hypothesis |q| >= 3 violated, got q={q}")


def _report(q, beta_max, records, started, require_norm_bound) -> VerificationReport:
    judged = [_judge(r, q, require_norm_bound) for r in records]
    return VerificationReport(
        q=q,
        beta_max=beta_max,
        candidates_examined=len(judged),
        survivors=[r for r in judged if r.survivor],
        elapsed=time.perf_counter() - started,
        pairs_examined=sum(1 for _ in coprime_pairs(beta_max)),
        eq2_holding=sum(r.eq2_holds for r in judged),
        require_norm_bound=require_norm_bound,
    )


def verify_theorem(q: int, beta_max: int, *, workers: int = 1, require_norm_bound: bool = True) -> VerificationReport:
    """Check every candidate with 1 <= alpha < beta <= beta_max against 2/q surgery.

    An empty survivor list means no Seifert candidate in range is
    consistent with both the surgery value lambda = -q and the norm bound.
    """
    _validate_q(q)
    if beta_max < 2:
        raise ValueError(f"beta_max must be at least 2, got {beta_max}")
    started = time.perf_counter()
    records = _all_records(beta_max, workers)
    return _report(q, beta_max, records, started, require_norm_bound)


def sweep(q_min: int, q_max: int, beta_max: int, *, workers: int = 1, require_norm_bound: bool = True) -> list[VerificationReport]:
    """verify_theorem for each odd q in [q_min, q_max] with |q| >= 3, sharing one enumeration."""
    qs = [q for q in range(q_min, q_max + 1) if q % 2 and abs(q) >= 3]
    if not qs:
        raise ValueError(f"no odd q with |q| >= 3 in [{q_min}, {q_max}]")
    if beta_max < 2:
        raise ValueError(f"beta_max must be at least 2, got {beta_max}")
    started = time.perf_counter()
    records = _all_records(beta_max, workers)
    return [_report(q, beta_max, records, started, require_norm_bound) for q in qs]


def check_q2_residue(beta: int, q1: int, q2: int, q3: int) -> bool:
    """For alpha = 1: test q2 != +-1 (mod 2 beta).

    Requires beta even and >= 8, q1 and q2 odd, and
    5*beta*q1 + 5*q2 + 2*beta*q3 = 1.
    """
    if beta % 2 or beta < 8:
        raise ValueError(f"beta must be even and at least 8, got beta={beta}")
    if q1 % 2 == 0 or q2 % 2 == 0:
        raise ValueError(f"q1 and q2 must be odd, got q1={q1}, q2={q2}")
    lhs = 5 * beta * q1 + 5 * q2 + 2 * beta * q3
    if lhs != 1:
        raise ValueError(f"need 5*beta*q1 + 5*q2 + 2*beta*q3 = 1, got {lhs}")
    return q2 % (2 * beta) not in (1, 2 * beta - 1)


def lambda_lower_bound_gap(c: SeifertCandidate) -> Fraction:
    """RHS - LHS of the inequality that lambda > -alpha*beta/2 forces when e > 0:

        (3/10) ab < -1/4 + 5 beta/(24 alpha) + (5/24)(alpha/beta) + 1/(120 ab) + |T|

    Positive exactly when the inequality holds.
    """
    e = euler_number(c)
    if e <= 0:
        raise ValueError(f"only defined for e > 0, got e={e}")
    h1 = h1_order(c)
    if h1 != 2:
        raise ValueError(f"candidate {c.astuple()} has |H_1| = {h1}, need 2")
    a, b = c.alpha, c.beta
    rhs = (
        Fraction(-1, 4)
        + Fraction(5 * b, 24 * a)
        + Fraction(5 * a, 24 * b)
        + Fraction(1, 120 * a * b)
        + abs(dedekind_total(c))
    )
    return rhs - Fraction(3 * a * b, 10)
