import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linetop.surds import (
    QuadValue,
    rational_quad,
    sign_linear_surd,
    simplest_rational_between,
    squarefree_split,
    sqrt_bounds,
)


def test_squarefree_split_examples():
    assert squarefree_split(12) == (2, 3)   # 12 = 2^2 * 3
    assert squarefree_split(49) == (7, 1)
    assert squarefree_split(2) == (1, 2)
    assert squarefree_split(1) == (1, 1)


def test_canonical_form_folds_square_factors():
    # 1 + 2*sqrt(8) == 1 + 4*sqrt(2)
    assert QuadValue(Fraction(1), Fraction(2), 8) == QuadValue(Fraction(1), Fraction(4), 2)
    # b = 0 collapses to the rational field
    assert QuadValue(Fraction(3), Fraction(0), 7) == rational_quad(3)
    # sqrt of a perfect square is rational
    assert QuadValue(Fraction(0), Fraction(1), 9) == rational_quad(3)


def test_sign_analysis():
    assert sign_linear_surd(Fraction(-1), Fraction(1), 2) == 1   # sqrt2 - 1 > 0
    assert sign_linear_surd(Fraction(3, 2), Fraction(-1), 2) == 1  # 3/2 > sqrt2
    assert sign_linear_surd(Fraction(7, 5), Fraction(-1), 2) == -1  # 7/5 < sqrt2
    assert sign_linear_surd(Fraction(0), Fraction(0), 2) == 0


def test_cross_field_comparison():
    sqrt2 = QuadValue(Fraction(0), Fraction(1), 2)
    sqrt3 = QuadValue(Fraction(0), Fraction(1), 3)
    assert sqrt2.cmp(sqrt3) < 0
    assert sqrt3.cmp(sqrt2) > 0
    # close call across fields: 5*sqrt2 vs 4*sqrt3 (50 vs 48)
    assert QuadValue(Fraction(0), Fraction(5), 2).cmp(QuadValue(Fraction(0), Fraction(4), 3)) == 1


def test_reciprocal_and_floor():
    x = QuadValue(Fraction(1), Fraction(1), 2)  # 1 + sqrt2
    # 1/(1 + sqrt2) = sqrt2 - 1, by the conjugate
    assert x.reciprocal() == QuadValue(Fraction(-1), Fraction(1), 2)
    assert x.floor() == 2
    assert QuadValue(Fraction(0), Fraction(-1), 2).floor() == -2


def test_sqrt_bounds_tighten():
    lo1, hi1 = sqrt_bounds(2, 8)
    lo2, hi2 = sqrt_bounds(2, 32)
    assert lo1 <= lo2 < hi2 <= hi1
    assert float(lo2) == pytest.approx(math.sqrt(2), abs=1e-6)


def test_simplest_rational_between_small_denominators():
    sqrt2 = QuadValue(Fraction(0), Fraction(1), 2)
    sqrt3 = QuadValue(Fraction(0), Fraction(1), 3)
    assert simplest_rational_between(sqrt2, sqrt3) == Fraction(3, 2)
    assert simplest_rational_between(rational_quad(0), rational_quad(1)) == Fraction(1, 2)
    assert simplest_rational_between(rational_quad(Fraction(1, 3)), None) == 1


@given(st.fractions(min_value=-20, max_value=20, max_denominator=32),
       st.fractions(min_value=-20, max_value=20, max_denominator=32),
       st.sampled_from([2, 3, 5, 6, 7, 10]))
@settings(max_examples=80)
def test_quad_arithmetic_matches_floats(a, b, r):
    x = QuadValue(a, b, r)
    approx = float(a) + float(b) * math.sqrt(r)
    lo, hi = x.bounds(60)
    assert float(lo) <= approx + 1e-9 and approx - 1e-9 <= float(hi)
    assert (x - x).sign() == 0
    if approx != 0:
        assert x.sign() == (1 if approx > 0 else -1)


@given(st.fractions(min_value=-10, max_value=10, max_denominator=16),
       st.fractions(min_value=-10, max_value=10, max_denominator=16),
       st.sampled_from([2, 3, 5]),
       st.sampled_from([2, 3, 5]))
@settings(max_examples=80)
def test_cmp_antisymmetric_across_fields(a, b, r1, r2):
    x = QuadValue(a, b, r1)
    y = QuadValue(b, a, r2)
    assert x.cmp(y) == -y.cmp(x)


@given(st.fractions(min_value=-30, max_value=30, max_denominator=64),
       st.fractions(min_value=1, max_value=8, max_denominator=8))
@settings(max_examples=60)
def test_simplest_rational_lands_inside(lo_a, width):
    lo = QuadValue(lo_a, Fraction(1, 7), 2)
    hi = lo + rational_quad(width)
    m = simplest_rational_between(lo, hi)
    assert lo.cmp_rational(m) < 0 < hi.cmp_rational(m)
