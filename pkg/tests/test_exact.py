"""Unit tests for the exact quadratic-extension arithmetic."""

import math
import random
from fractions import Fraction

import pytest

from floorgap.exact import (
    EmptyInterval,
    IncompatibleRadicands,
    QuadExt,
    as_alg,
    ceil_alg,
    cmp,
    floor_alg,
    floor_linear,
    frac_alg,
    parse_alg,
    rational_between,
    squarefree_decompose,
)

SQRT2 = QuadExt(0, 1, 2, 1)
PHI = QuadExt(1, 1, 5, 2)


def test_squarefree_decompose():
    assert squarefree_decompose(1) == (1, 1)
    assert squarefree_decompose(8) == (2, 2)
    assert squarefree_decompose(12) == (2, 3)
    assert squarefree_decompose(49) == (7, 1)
    assert squarefree_decompose(360) == (6, 10)
    for n in range(1, 200):
        s, d = squarefree_decompose(n)
        assert s * s * d == n
        for p in range(2, 20):
            assert d % (p * p) != 0


def test_normalization_canonical():
    # denominator sign, gcd reduction, square extraction, d=1 folding
    x = QuadExt(2, 4, 8, -6)
    assert (x.p, x.q, x.d, x.r) == (-1, -4, 2, 3)
    y = QuadExt(3, 5, 4, 1)  # sqrt(4) = 2 folds into the rational part
    assert (y.p, y.q, y.d, y.r) == (13, 0, 1, 1)
    z = QuadExt(0, 0, 7, 5)  # zero coefficient drops the radicand
    assert (z.p, z.q, z.d, z.r) == (0, 0, 1, 1)


def test_equality_is_canonical_representation():
    assert QuadExt(2, 4, 8, 6) == QuadExt(1, 4, 2, 3)
    assert QuadExt(1, 0, 1, 2) == as_alg(Fraction(1, 2))
    assert hash(QuadExt(2, 2, 2, 2)) == hash(QuadExt(1, 1, 2, 1))


def test_immutability():
    with pytest.raises(AttributeError):
        SQRT2.p = 5


def test_floor_linear():
    # floor((a + b*sqrt(d))/r) across a small exhaustive grid
    for a in range(-12, 13):
        for b in range(0, 6):
            for d in (2, 3, 5, 7):
                for r in (1, 2, 3, 5):
                    expect = math.floor((a + b * math.sqrt(d)) / r)
                    assert floor_linear(a, b, d, r) == expect


def test_floor_ceil_frac():
    assert math.floor(SQRT2) == 1
    assert math.ceil(SQRT2) == 2
    assert math.floor(PHI) == 1
    assert math.floor(QuadExt(3)) == 3
    assert math.ceil(QuadExt(3)) == 3
    assert SQRT2.frac() == SQRT2 - 1
    assert frac_alg(Fraction(7, 3)) == as_alg(Fraction(1, 3))
    assert floor_alg(Fraction(-1, 2)) == -1
    assert ceil_alg(Fraction(-1, 2)) == 0


def test_arithmetic_identities():
    assert SQRT2 * SQRT2 == QuadExt(2)
    assert PHI * PHI - PHI == QuadExt(1)  # golden ratio defining identity
    assert (SQRT2 + 1) * (SQRT2 - 1) == QuadExt(1)
    assert 1 / SQRT2 == SQRT2 / 2
    assert SQRT2 + Fraction(1, 2) == QuadExt(1, 2, 2, 2)
    assert 3 - SQRT2 == QuadExt(3, -1, 2, 1)


def test_mixed_radicand_arithmetic_rejected():
    with pytest.raises(IncompatibleRadicands):
        SQRT2 + QuadExt(0, 1, 3, 1)
    with pytest.raises(IncompatibleRadicands):
        SQRT2 * QuadExt(0, 1, 5, 1)


def test_same_radicand_comparison():
    assert SQRT2 < QuadExt(3, 0, 1, 2)
    assert QuadExt(3, 0, 1, 2) > SQRT2
    assert cmp(SQRT2, Fraction(3, 2)) == -1
    assert cmp(PHI, PHI) == 0
    # near-tie requiring exact sign logic: 140/99 < sqrt(2) < 99/70
    assert as_alg(Fraction(140, 99)) < SQRT2 < as_alg(Fraction(99, 70))


def test_mixed_radicand_comparison():
    sqrt3 = QuadExt(0, 1, 3, 1)
    assert SQRT2 < sqrt3
    assert sqrt3 < SQRT2 + 1
    # tight mixed comparison: 3*sqrt(2) = 4.2426.. vs sqrt(18 - tiny)
    assert QuadExt(0, 3, 2, 1) > QuadExt(0, 1, 17, 1)
    assert QuadExt(0, 1, 17, 1) < QuadExt(0, 3, 2, 1)
    # equality across representations never happens for distinct radicands
    assert not (SQRT2 == sqrt3)


def test_serialization_roundtrip():
    cases = [
        QuadExt(3, 0, 1, 7),
        SQRT2,
        PHI,
        QuadExt(-2, 1, 6, 3),
        QuadExt(5),
        QuadExt(-1, -2, 7, 4),
    ]
    for x in cases:
        assert parse_alg(str(x)) == x


def test_parse_rational_form():
    assert parse_alg("3/7") == as_alg(Fraction(3, 7))
    assert parse_alg("5") == QuadExt(5)
    assert parse_alg("-2/3") == as_alg(Fraction(-2, 3))
    with pytest.raises(ValueError):
        parse_alg("sqrt(2)/oops")


def test_rational_between_known_values():
    assert rational_between(Fraction(1, 2), SQRT2 / 2) == Fraction(2, 3)
    assert rational_between(SQRT2, Fraction(3, 2)) == Fraction(10, 7)
    assert rational_between(0, 1) == Fraction(1, 2)
    with pytest.raises(EmptyInterval):
        rational_between(Fraction(1, 2), Fraction(1, 2))


def test_rational_between_random():
    rng = random.Random(7321)
    for _ in range(300):
        a = Fraction(rng.randrange(-50, 50), rng.randrange(1, 40))
        b = a + Fraction(1, rng.randrange(1, 1000))
        mid = rational_between(a, b)
        assert a < mid < b
        # simplest denominator: nothing strictly inside has a smaller one
        for den in range(1, mid.denominator):
            lo_num = math.floor(a * den)
            assert not any(
                a < Fraction(num, den) < b
                for num in range(lo_num, lo_num + 3)
            )


def test_approx_interval_brackets_value():
    for x in (SQRT2, PHI, QuadExt(-3, 2, 7, 5)):
        lo, hi = x.approx_interval(15)
        assert float(hi - lo) < 1e-14
        assert as_alg(lo) <= x <= as_alg(hi)


def test_random_arithmetic_against_floats():
    rng = random.Random(90125)
    for _ in range(400):
        x = QuadExt(rng.randrange(-9, 10), rng.randrange(-9, 10),
                    rng.randrange(2, 30), rng.randrange(1, 9))
        y = QuadExt(rng.randrange(-9, 10), rng.randrange(-9, 10),
                    x.d if x.q else rng.randrange(2, 30), rng.randrange(1, 9))
        if x.q and y.q and x.d != y.d:
            continue
        for op in ("+", "-", "*"):
            z = eval(f"x {op} y")
            approx = eval(f"float(x) {op} float(y)")
            assert abs(float(z) - approx) < 1e-6 * (1 + abs(approx))
        if y.sign() != 0:
            z = x / y
            assert abs(float(z) - float(x) / float(y)) < 1e-6
        # floor agrees with the float unless the value sits within float
        # error of an integer (where the exact answer is the authority)
        if abs(float(x) - round(float(x))) > 1e-9:
            assert math.floor(x) == math.floor(float(x))
