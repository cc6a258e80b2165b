import random
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from oracles import float_norm, sylvester_det
from seifert2q.cyclotomic import (
    LaurentPolynomial,
    cyclotomic_poly,
    fig8_cover_norm,
    norm_d,
    norm_exceeds_4q2,
    poly_mul,
    resultant,
    trim,
)

L = LaurentPolynomial
ALEX = L({2: 1, 1: -3, 0: 1})


def totient(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@pytest.mark.parametrize(
    "d, expected",
    [(1, [-1, 1]), (2, [1, 1]), (5, [1, 1, 1, 1, 1]), (12, [1, 0, -1, 0, 1]), (6, [1, -1, 1])],
)
def test_cyclotomic_examples(d, expected):
    assert cyclotomic_poly(d) == expected


def test_cyclotomic_rejects_nonpositive():
    for d in (0, -3):
        with pytest.raises(ValueError):
            cyclotomic_poly(d)


def test_cyclotomic_product_identity():
    for n in range(1, 51):
        prod = [1]
        for e in range(1, n + 1):
            if n % e == 0:
                prod = poly_mul(prod, cyclotomic_poly(e))
        assert prod == [-1] + [0] * (n - 1) + [1]


def test_cyclotomic_degree_is_totient():
    for d in range(1, 201):
        phi = cyclotomic_poly(d)
        assert len(phi) - 1 == totient(d)
        assert phi[-1] == 1


@pytest.mark.parametrize(
    "f, g, expected",
    [([-1, 1], [1, 1], 2), ([1, 0, 1], [-1, 0, 1], 4), ([1, 1, 1, 1, 1], [1, -3, 1], 121)],
)
def test_resultant_examples(f, g, expected):
    assert sylvester_det(f, g) == expected
    assert resultant(f, g) == expected


def test_resultant_rejects_zero_f():
    with pytest.raises(ValueError):
        resultant([], [1, 1])
    assert resultant([1, 1], []) == 0


def test_resultant_against_sylvester():
    rng = random.Random(11)
    checked = 0
    while checked < 1500:
        f = trim(rng.randint(-7, 7) for _ in range(rng.randint(1, 8)))
        g = trim(rng.randint(-7, 7) for _ in range(rng.randint(1, 8)))
        if not f or not g:
            continue
        assert resultant(f, g) == sylvester_det(f, g), (f, g)
        checked += 1


def test_resultant_common_root_is_zero():
    f = poly_mul([1, 1], [2, -3, 1])
    g = poly_mul([1, 1], [5, 0, 0, 1])
    assert resultant(f, g) == 0


small_poly = st.lists(st.integers(-9, 9), min_size=1, max_size=7).map(trim).filter(bool)


@given(small_poly, small_poly)
def test_resultant_swap_sign(f, g):
    df, dg = len(f) - 1, len(g) - 1
    assert resultant(f, g) == (-1) ** (df * dg) * resultant(g, f)


@pytest.mark.parametrize(
    "f, d, expected",
    [
        (ALEX, 5, 121),
        (L({1: 1, 0: -1}), 5, 5),
        (ALEX, 1, 1),
        (ALEX.shift(-1), 5, 121),
        (L({1: -1, 0: 3, -1: -1}), 5, 121),
    ],
)
def test_norm_examples(f, d, expected):
    assert norm_d(f, d) == expected


def test_norm_alexander_float_oracle():
    assert float_norm(ALEX.coeffs, 5) == pytest.approx(121, rel=1e-6)


def test_norm_rejects():
    with pytest.raises(ValueError):
        norm_d(L(), 5)
    with pytest.raises(ValueError):
        norm_d(ALEX, 0)


def test_norm_d1_is_value_at_one():
    rng = random.Random(3)
    for _ in range(50):
        f = L((rng.randint(-4, 4), rng.randint(-9, 9)) for _ in range(5))
        if f.is_zero():
            continue
        assert norm_d(f, 1) == abs(f(1))


laurent = st.dictionaries(st.integers(-4, 6), st.integers(-6, 6), min_size=1, max_size=5).map(L).filter(
    lambda f: not f.is_zero()
)


@settings(max_examples=60)
@given(laurent, laurent, st.integers(1, 12))
def test_norm_multiplicative(f, g, d):
    assert norm_d(f * g, d) == norm_d(f, d) * norm_d(g, d)


@given(laurent, st.integers(1, 12), st.integers(-10, 10), st.sampled_from([1, -1]))
def test_norm_unit_invariance(f, d, k, sign):
    assert norm_d(f.shift(k) * sign, d) == norm_d(f, d)


def test_norm_float_cross_validation():
    rng = random.Random(5)
    for d in range(1, 31):
        for _ in range(4):
            f = L((rng.randint(-3, 3), rng.randint(-5, 5)) for _ in range(4))
            if f.is_zero():
                continue
            exact = norm_d(f, d)
            approx = float_norm(f.coeffs, d)
            assert approx == pytest.approx(exact, rel=1e-6, abs=1e-6)


@pytest.mark.parametrize("q, expected", [(1, 16), (3, 1936), (-3, 1936), (5, 15376)])
def test_fig8_cover_norm(q, expected):
    assert fig8_cover_norm(q) == expected


def test_fig8_rejects_even():
    with pytest.raises(ValueError):
        fig8_cover_norm(2)


@pytest.mark.parametrize("value, q, expected", [(1936, 3, True), (16, 1, False), (4096, 5, False), (0, 0, False)])
def test_norm_exceeds_4q2(value, q, expected):
    assert norm_exceeds_4q2(value, q) is expected


def test_norm_exceeds_4q2_rejects_negative():
    with pytest.raises(ValueError):
        norm_exceeds_4q2(-1, 3)


def test_laurent_canonical_form():
    f = L([(2, 1), (2, -1), (0, 3)])
    assert f.coeffs == {0: 3}
    assert L({1: 0}).is_zero()
    assert (ALEX - ALEX).is_zero()
