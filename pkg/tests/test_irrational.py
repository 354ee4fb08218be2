"""Unit tests for observed ranges of irrational parameters."""

import math
from fractions import Fraction

import pytest

from floorgap.evaluate import f_eval
from floorgap.exact import QuadExt
from floorgap.irrational import (
    PerfectSquare,
    RationalAlpha,
    RationalDegenerate,
    alpha_t,
    classify,
    conjecture43_check,
    conjecture47_scan,
    eps_kn,
    fractional_window_witness,
    full_range_witnesses,
    observed_range,
    scaled_bound_check,
    sqrt_neighborhood_check,
)

SQRT2 = QuadExt(0, 1, 2, 1)


def test_alpha_t():
    g1 = alpha_t(1)
    assert g1.alpha == QuadExt(1, 1, 5, 2)  # golden ratio
    assert g1.alpha * g1.alpha - g1.alpha == QuadExt(1)
    g3 = alpha_t(3)
    assert g3.alpha == QuadExt(1, 1, 13, 2)
    with pytest.raises(RationalDegenerate):
        alpha_t(2)  # 1 + 8 = 9 is a perfect square
    with pytest.raises(RationalDegenerate):
        alpha_t(6)  # 1 + 24 = 25
    with pytest.raises(ValueError):
        alpha_t(0)


def test_observed_range_sqrt2():
    report = observed_range(SQRT2, 2000)
    assert report.observed == (1, 2)
    assert report.classification == "C"  # {1, 2} = [[1, ceil(sqrt 2)]]
    for v, n in report.witnesses.items():
        assert f_eval(SQRT2, n) == v


def test_observed_range_golden():
    report = observed_range(alpha_t(1).alpha, 2000)
    assert report.observed == (1,)
    assert report.classification == "A"


def test_observed_range_classes_b_and_d():
    # 2 + sqrt(2): {0, 1, 2, 3} = [[0, floor]]
    rb = observed_range(QuadExt(2, 1, 2, 1), 2000)
    assert rb.classification == "B"
    assert rb.observed == (0, 1, 2, 3)
    # 1 + 1/sqrt(2): {0, 1, 2} = [[0, ceil]]
    rd = observed_range(QuadExt(2, 1, 2, 2), 2000)
    assert rd.classification == "D"
    assert rd.observed == (0, 1, 2)


def test_observed_range_constants():
    # pi attains 4 = ceil(pi) already at n = 7, e attains 3 at n = 11
    rp = observed_range("pi", 200)
    assert rp.observed == (0, 1, 2, 3, 4)
    assert rp.classification == "D"
    assert rp.note
    re_ = observed_range("e", 200)
    assert re_.observed == (0, 1, 2, 3)
    assert re_.classification == "D"
    with pytest.raises(ValueError):
        observed_range("tau", 100)


def test_classify_other():
    assert classify({0, 2}, SQRT2) == "other"


def test_fractional_window_witness():
    n = fractional_window_witness(SQRT2, Fraction(0), Fraction(1, 10), 1000)
    assert n is not None
    fr = (SQRT2 * n).frac()
    assert QuadExt(0) < fr < QuadExt(1, 0, 1, 10)
    with pytest.raises(RationalAlpha):
        fractional_window_witness(Fraction(3, 2), 0, Fraction(1, 2), 100)
    with pytest.raises(ValueError):
        fractional_window_witness(SQRT2, Fraction(1, 2), Fraction(1, 3), 100)


def test_full_range_witnesses():
    g = alpha_t(504)  # floor(alpha) = 22
    assert math.floor(g.alpha) == 22
    rep = full_range_witnesses(g, 20000)
    assert rep.complete
    assert set(rep.witnesses) == set(range(1, 23))
    for m, n in rep.witnesses.items():
        assert f_eval(g.alpha, n) == m


def test_scaled_bound_check():
    rep = scaled_bound_check(2, 1, 500)
    assert rep.ok
    assert rep.checked == 500
    rep = scaled_bound_check(3, 3, 300)
    assert rep.ok
    with pytest.raises(ValueError):
        scaled_bound_check(0, 1, 10)


def test_eps_kn_known_values():
    assert eps_kn(2, 3) == QuadExt(-2, 1, 6, 3)
    assert eps_kn(1, 2) == QuadExt(-1, 1, 2, 2)
    with pytest.raises(PerfectSquare):
        eps_kn(2, 8)  # k*n = 16
    with pytest.raises(ValueError):
        eps_kn(3, 3)


def test_eps_kn_is_min_distance():
    for k, n in ((1, 3), (2, 5), (3, 7), (5, 11), (7, 12)):
        kn = k * n
        s = math.isqrt(kn)
        root = QuadExt(0, 1, kn, 1)
        expect = min(QuadExt(s + 1) - root, root - QuadExt(s))
        assert eps_kn(k, n) == expect / n
        assert eps_kn(k, n).sign() == 1


def test_sqrt_neighborhood_check():
    rep = sqrt_neighborhood_check(2, 3, 7)
    assert rep.ok
    assert rep.checked == 8
    rep = sqrt_neighborhood_check(5, 11, 3)
    assert rep.ok


def test_conjecture43_check():
    rep = conjecture43_check(QuadExt(7, 1, 2, 2), 5000)  # (7+sqrt 2)/2 ~ 4.2
    assert rep.target == (1, 2, 3, 4)
    assert rep.complete
    with pytest.raises(RationalAlpha):
        conjecture43_check(Fraction(9, 2), 100)


def test_conjecture47_scan():
    golden = alpha_t(1).alpha
    family = [golden, SQRT2, QuadExt(1, 1, 2, 1)]
    survivors = conjecture47_scan(family, 3000)
    assert survivors == [golden]
