"""Unit tests for the pointwise evaluators and their cross-oracles."""

import math
import random
from fractions import Fraction

import pytest

from floorgap.enclosure import Enclosure, PrecisionExhausted, get_constant
from floorgap.evaluate import (
    NonPositiveAlpha,
    alt_form_eval,
    f_eval,
    f_eval_real,
    g_ceil_eval,
    h_mixed_eval,
    phi,
    sandwich_bounds,
)
from floorgap.exact import QuadExt

SQRT2 = QuadExt(0, 1, 2, 1)
PHI = QuadExt(1, 1, 5, 2)


def _f_naive_rational(alpha: Fraction, n: int) -> int:
    return math.floor(alpha * alpha * n) - math.floor(alpha * math.floor(alpha * n))


def test_f_eval_rational_known():
    assert f_eval(Fraction(7, 2), 1) == 2
    assert f_eval(Fraction(1, 2), 1) == 0
    assert f_eval(Fraction(2, 3), 7) == 1  # Bezout witness for 2/3
    assert f_eval(Fraction(5, 1), 3) == 0  # integer parameters are exact


def test_f_eval_zero_and_negative_n():
    assert f_eval(Fraction(7, 2), 0) == 0
    with pytest.raises(ValueError):
        f_eval(Fraction(7, 2), -1)
    with pytest.raises(NonPositiveAlpha):
        f_eval(Fraction(-1, 2), 3)


def test_f_eval_rational_matches_naive():
    rng = random.Random(4181)
    for _ in range(500):
        a = rng.randrange(1, 60)
        b = rng.randrange(2, 25)
        n = rng.randrange(0, 2000)
        alpha = Fraction(a, b)
        assert f_eval(alpha, n) == _f_naive_rational(alpha, n)


def test_f_eval_quadratic_known():
    # sqrt(2): all values lie in {1, 2}
    values = {f_eval(SQRT2, n) for n in range(1, 500)}
    assert values == {1, 2}
    # golden ratio: constant value 1
    assert {f_eval(PHI, n) for n in range(1, 500)} == {1}
    # 2 + sqrt(2) hits 0, so floor/ceil intervals both include it
    two_plus = QuadExt(2, 1, 2, 1)
    assert [f_eval(two_plus, n) for n in (1, 2, 3, 4)] == [1, 3, 0, 2]
    # 1 + 1/sqrt(2) = (2 + sqrt(2))/2
    one_plus = QuadExt(2, 1, 2, 2)
    assert f_eval(one_plus, 1) == 1
    assert f_eval(one_plus, 2) == 0
    assert f_eval(one_plus, 7) == 2


def test_f_eval_alt_form_oracle():
    rng = random.Random(2584)
    for _ in range(300):
        alpha = QuadExt(rng.randrange(0, 8), rng.randrange(1, 5),
                        rng.randrange(2, 40), rng.randrange(1, 6))
        if alpha.is_rational:  # d collapsed to a perfect square
            continue
        n = rng.randrange(1, 500)
        assert f_eval(alpha, n) == alt_form_eval(alpha, n)


def test_sandwich_bounds():
    rng = random.Random(6765)
    for _ in range(300):
        alpha = QuadExt(rng.randrange(0, 8), rng.randrange(1, 5),
                        rng.randrange(2, 40), rng.randrange(1, 6))
        if alpha.is_rational:
            continue
        n = rng.randrange(1, 500)
        lo, hi = sandwich_bounds(alpha, n)
        assert f_eval(alpha, n) in (lo, hi)
    with pytest.raises(NonPositiveAlpha):
        sandwich_bounds(Fraction(3, 1), 5)


def test_ceiling_and_mixed_variants_match_naive():
    rng = random.Random(1597)
    for _ in range(400):
        a = rng.randrange(1, 40)
        b = rng.randrange(2, 15)
        if math.gcd(a, b) != 1:
            continue
        alpha = Fraction(a, b)
        n = rng.randrange(1, 300)
        g_naive = math.ceil(alpha * alpha * n) - math.ceil(
            alpha * math.ceil(alpha * n))
        h_naive = math.floor(alpha * alpha * n) - math.floor(
            alpha * math.ceil(alpha * n))
        assert g_ceil_eval(alpha, n) == g_naive
        assert h_mixed_eval(alpha, n) == h_naive


def test_ceiling_variant_symmetry():
    # g at alpha equals -f-like reflection: spot-check known small values
    assert g_ceil_eval(Fraction(3, 2), 1) == 0
    assert h_mixed_eval(Fraction(3, 2), 1) == -1
    assert g_ceil_eval(SQRT2, 1) == math.ceil(2) - math.ceil(SQRT2 * 2)


def test_phi_map():
    assert [phi(2, 3, n) for n in range(7)] == [0, 2, 1, 0, 2, 1, 0]
    assert set(phi(3, 7, n) for n in range(1, 8)) == set(range(7))
    with pytest.raises(ValueError):
        phi(3, 6, 1)  # not coprime
    with pytest.raises(ValueError):
        phi(5, 3, 1)  # needs a < b


def test_f_eval_real_pi_and_e():
    pi = get_constant("pi")
    assert [f_eval_real(pi, n) for n in range(1, 8)] == [0, 1, 1, 2, 2, 3, 4]
    e = get_constant("e")
    expected = {7: 0, 10: 0, 2: 1, 3: 1, 5: 1, 6: 1, 9: 1,
                1: 2, 4: 2, 8: 2, 11: 3}
    for n, v in expected.items():
        assert f_eval_real(e, n) == v


def test_f_eval_real_precision_exhausted():
    # two stored digits cannot certify floor(1.41.. * 100)
    short = Enclosure("stub", "1.41")
    with pytest.raises(PrecisionExhausted):
        f_eval_real(short, 10**40)
