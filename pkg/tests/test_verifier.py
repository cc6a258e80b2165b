import random
from fractions import Fraction

import pytest

from oracles import residue_triples_brute
from seifert2q.lescop import SeifertCandidate, euler_number, h1_order, lescop_seifert
from seifert2q.verifier import (
    check_candidate,
    check_q2_residue,
    coprime_pairs,
    enumerate_candidates,
    lambda_lower_bound_gap,
    residue_triple,
    sweep,
    verify_theorem,
)

F = Fraction
C = SeifertCandidate


@pytest.mark.parametrize(
    "alpha, beta, sign, residues", [(1, 8, 1, (1, 5, 1)), (1, 2, 1, (1, 3, 4)), (1, 8, -1, (1, 11, 4))]
)
def test_enumerate_contains_class(alpha, beta, sign, residues):
    found = [residue_triple(c) for c in enumerate_candidates(alpha, beta, sign)]
    assert residues in found


def test_enumerate_2_3_contract():
    cands = enumerate_candidates(2, 3, 1)
    assert cands
    for c in cands:
        assert 15 * c.q1 + 10 * c.q2 + 12 * c.q3 == 1
        assert c.q1 % 2 and c.q2 % 2


def test_enumerate_matches_bruteforce():
    for a, b in coprime_pairs(16):
        for sign in (1, -1):
            got = sorted(residue_triple(c) for c in enumerate_candidates(a, b, sign))
            assert got == sorted(residue_triples_brute(a, b, sign)), (a, b, sign)


@pytest.mark.parametrize("a, b, sign", [(2, 4, 1), (3, 3, 1), (0, 3, 1), (1, 2, 0)])
def test_enumerate_rejects(a, b, sign):
    with pytest.raises(ValueError):
        enumerate_candidates(a, b, sign)


def test_enumeration_soundness():
    for a, b in coprime_pairs(80):
        for sign in (1, -1):
            for c in enumerate_candidates(a, b, sign):
                e = euler_number(c)
                assert h1_order(c) == 2
                assert abs(10 * a * b * e) == 1
                assert (e > 0) == (sign > 0)


def test_lift_is_small():
    # centred residues plus at most a couple of shifts
    for a, b in coprime_pairs(60):
        for sign in (1, -1):
            for c in enumerate_candidates(a, b, sign):
                assert abs(c.q1) <= 3 * a and abs(c.q2) <= 3 * b and abs(c.q3) <= 8


def test_alpha1_parity_and_q2_residue():
    seen = 0
    for beta in range(2, 201):
        for c in enumerate_candidates(1, beta, 1):
            assert beta % 2 == 0
            if beta >= 8:
                assert check_q2_residue(beta, c.q1, c.q2, c.q3)
                seen += 1
    assert seen > 0


def test_lift_independence():
    rng = random.Random(20)
    pairs = list(coprime_pairs(60))
    done = 0
    while done < 20:
        a, b = rng.choice(pairs)
        cands = enumerate_candidates(a, b, rng.choice((1, -1)))
        if not cands:
            continue
        c = cands[0]
        lam = lescop_seifert(c)
        k = rng.randint(-3, 3)
        moved1 = C(a, b, c.q1 + 2 * a * k, c.q2, c.q3 - 5 * k)
        moved2 = C(a, b, c.q1, c.q2 + 2 * b * k, c.q3 - 5 * k)
        moved3 = C(a, b, c.q1 + 2 * a * k, c.q2 - 2 * b * k, c.q3)
        for m in (moved1, moved2, moved3):
            assert euler_number(m) == euler_number(c)
            assert lescop_seifert(m) == lam
        done += 1


def test_check_candidate_examples():
    rec = check_candidate(C(1, 8, 1, -11, 1), 5)
    assert rec.lam == -5 and rec.ab_product == 8 and not rec.survivor
    assert not check_candidate(C(1, 2, 1, -1, -1), 3).survivor
    assert check_candidate(C(1, 2, 1, -1, -1), 3).lam == -1
    assert not check_candidate(C(1, 8, 1, -11, 1), 3).survivor
    assert check_candidate(C(1, 8, -1, 11, -1), 3).e_sign == -1


def test_check_candidate_weakened_finds_survivor():
    rec = check_candidate(C(1, 8, 1, -11, 1), 5, require_norm_bound=False)
    assert rec.survivor


def test_check_candidate_rejects():
    with pytest.raises(ValueError):
        check_candidate(C(1, 2, 1, 1, 1), 3)  # |H_1| = 38
    with pytest.raises(ValueError):
        check_candidate(C(1, 8, 1, -11, 1), 4)


@pytest.mark.parametrize("q, beta_max, count", [(3, 100, 2688), (-5, 100, 2688), (7, 50, 682)])
def test_verify_theorem_examples(q, beta_max, count):
    rep = verify_theorem(q, beta_max)
    assert rep.survivors == []
    assert rep.candidates_examined == count
    assert rep.verified


@pytest.mark.parametrize("q", [1, -1, 4, 0])
def test_verify_rejects_q(q):
    with pytest.raises(ValueError):
        verify_theorem(q, 10)


def test_verify_rejects_small_bound():
    with pytest.raises(ValueError):
        verify_theorem(3, 1)


def test_verify_deterministic_across_workers():
    serial = verify_theorem(5, 60, workers=1, require_norm_bound=False)
    parallel = verify_theorem(5, 60, workers=3, require_norm_bound=False)
    again = verify_theorem(5, 60, workers=1, require_norm_bound=False)
    assert serial.survivors  # weakened criterion gives something to compare
    for other in (parallel, again):
        assert other.candidates_examined == serial.candidates_examined
        assert other.survivors == serial.survivors


def test_sweep_matches_verify():
    reps = sweep(-7, 7, 30)
    assert [r.q for r in reps] == [-7, -5, -3, 3, 5, 7]
    for r in reps:
        single = verify_theorem(r.q, 30)
        assert r.candidates_examined == single.candidates_examined
        assert r.survivors == single.survivors == []
    with pytest.raises(ValueError):
        sweep(-1, 1, 30)


def test_check_q2_residue_examples():
    assert check_q2_residue(8, 1, -11, 1)
    with pytest.raises(ValueError):
        check_q2_residue(8, -1, 13, -2)
    with pytest.raises(ValueError):
        check_q2_residue(10, 1, -13, 2)
    with pytest.raises(ValueError):
        check_q2_residue(6, 1, -1, -2)  # beta < 8
    with pytest.raises(ValueError):
        check_q2_residue(9, 1, 1, 1)


def test_gap_examples():
    assert lambda_lower_bound_gap(C(1, 8, 1, -11, 1)) == F(-73, 80)
    # -1/4 + 10/24 + 5/48 + 1/240 + 13/40 - 3/5, over 240: -60 + 100 + 25 + 1 + 78 - 144
    assert lambda_lower_bound_gap(C(1, 2, 1, -1, -1)) == F(0)
    with pytest.raises(ValueError):
        lambda_lower_bound_gap(C(1, 8, -1, 11, -1))


def test_gap_negative_in_proof_range():
    for a, b in coprime_pairs(120):
        for c in enumerate_candidates(a, b, 1):
            if a >= 2 or b >= 8:
                assert lambda_lower_bound_gap(c) < 0, c

