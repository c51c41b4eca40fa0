from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linetop.completion import (
    DECREASING,
    INCREASING,
    LEX_ZZ,
    SequenceFamily,
    SurdGap,
    TopOfCopy,
    cmp_cut,
    complete,
    cut_leq,
    cut_lt,
    extend_automorphism,
    gap_cut,
    inf_finite,
    point_cut,
    sup_finite,
    surd_cut,
    verify_sequence_family,
    witness_m1,
    witness_m2,
)
from linetop.errors import (
    EmptyFamily,
    EmptyTrace,
    UnsupportedOrder,
)
from linetop.orders import (
    Cmp,
    Identity,
    Lex,
    LexMap,
    PiecewiseLinear,
    Q,
    Shift,
    Translate,
    Z,
)


def test_completion_catalogue():
    assert complete(Z).is_complete
    assert complete(Q).gap_family == ("surd",)
    assert complete(LEX_ZZ).gap_family == ("topOfCopy",)
    with pytest.raises(UnsupportedOrder):
        complete(Lex(Q, Q))


def test_surd_gap_canonicalization():
    # (0 + 2 sqrt 8) / 2 = 2 sqrt 2 / 1... reduced to lowest terms
    a = SurdGap(0, 2, 8, 2)
    b = SurdGap(0, 2, 2, 1)
    assert a == b
    with pytest.raises(ValueError):
        SurdGap(0, 0, 2, 1)  # rational "gap" is not a gap
    with pytest.raises(ValueError):
        SurdGap(0, 1, 4, 1)  # sqrt 4 is rational


def test_cut_comparison_q():
    sqrt2 = surd_cut(0, 1, 2)
    assert cut_lt(point_cut(Q, Fraction(7, 5)), sqrt2)
    assert cut_lt(sqrt2, point_cut(Q, Fraction(3, 2)))
    assert cmp_cut(sqrt2, surd_cut(0, 2, 2, 2)) == Cmp.EQUAL


def test_cut_comparison_lex():
    g = gap_cut(LEX_ZZ, TopOfCopy(3))
    assert cut_lt(point_cut(LEX_ZZ, (10 ** 6, 3)), g)
    assert cut_lt(g, point_cut(LEX_ZZ, (-(10 ** 6), 4)))
    assert cmp_cut(g, gap_cut(LEX_ZZ, TopOfCopy(3))) == Cmp.EQUAL


def test_minimality_witnesses():
    sqrt2 = surd_cut(0, 1, 2)
    lo, hi = witness_m1(sqrt2)
    assert cut_lt(point_cut(Q, lo), sqrt2) and cut_lt(sqrt2, point_cut(Q, hi))
    sep = witness_m2(sqrt2, point_cut(Q, Fraction(2)))
    assert cut_leq(sqrt2, point_cut(Q, sep))
    assert cut_lt(point_cut(Q, sep), point_cut(Q, Fraction(2)))
    g = gap_cut(LEX_ZZ, TopOfCopy(1))
    sep2 = witness_m2(g, gap_cut(LEX_ZZ, TopOfCopy(2)))
    assert sep2.value[1] == 2  # lands in the next copy
    with pytest.raises(EmptyTrace):
        witness_m2(point_cut(Q, Fraction(1)), point_cut(Q, Fraction(0)))


def test_sup_inf_finite():
    cuts = [point_cut(Q, Fraction(1)), surd_cut(0, 1, 2), point_cut(Q, Fraction(0))]
    assert cmp_cut(sup_finite(cuts), surd_cut(0, 1, 2)) == Cmp.EQUAL
    assert cmp_cut(inf_finite(cuts), point_cut(Q, Fraction(0))) == Cmp.EQUAL
    with pytest.raises(EmptyFamily):
        sup_finite([])


def test_extension_carries_gaps():
    ext = extend_automorphism(Translate(Fraction(1)))
    image = ext.apply_cut(surd_cut(0, 1, 2))
    assert cmp_cut(image, surd_cut(1, 1, 2)) == Cmp.EQUAL
    assert cmp_cut(ext.inverse().apply_cut(image), surd_cut(0, 1, 2)) == Cmp.EQUAL
    lex_ext = extend_automorphism(LexMap(LEX_ZZ, Shift(1), (), Identity(Z)))
    moved = lex_ext.apply_cut(gap_cut(LEX_ZZ, TopOfCopy(0)))
    assert cmp_cut(moved, gap_cut(LEX_ZZ, TopOfCopy(1))) == Cmp.EQUAL


def test_extension_piecewise_linear_on_surd():
    # doubling below 0, identity above: sqrt2 is above the break
    phi = PiecewiseLinear((Fraction(0),),
                          ((Fraction(2), Fraction(0)), (Fraction(1), Fraction(0))))
    ext = extend_automorphism(phi)
    assert cmp_cut(ext.apply_cut(surd_cut(0, 1, 2)), surd_cut(0, 1, 2)) == Cmp.EQUAL
    assert cmp_cut(ext.apply_cut(surd_cut(0, -1, 2)), surd_cut(0, -2, 2)) == Cmp.EQUAL


def test_sequence_family_certification():
    fam = SequenceFamily(Q, lambda n: point_cut(Q, Fraction(n, n + 1)),
                         INCREASING, point_cut(Q, Fraction(1)))
    assert verify_sequence_family(fam, probes=40, seed=5).passed
    liar = SequenceFamily(Q, lambda n: point_cut(Q, Fraction(n, n + 1)),
                          INCREASING, point_cut(Q, Fraction(2)))
    report = verify_sequence_family(liar, probes=40, seed=5)
    assert not report.passed and any("approach" in f for f in report.failures)


def test_sequence_family_to_surd_limit():
    sqrt2 = surd_cut(0, 1, 2)
    fam = SequenceFamily(
        Q, lambda n: point_cut(Q, Fraction(3, 2) + Fraction(1, n + 1)),
        DECREASING, point_cut(Q, Fraction(3, 2)))
    assert verify_sequence_family(fam, probes=30, seed=9).passed
    below = SequenceFamily(
        Q, lambda n: point_cut(Q, simplest(n)), INCREASING, sqrt2)
    assert verify_sequence_family(below, probes=30, seed=9).passed


def simplest(n):
    # continued-fraction convergents from below would do; a crude
    # increasing rational approach to sqrt2 suffices here
    from math import isqrt
    scale = 10 ** 4
    base = Fraction(isqrt(2 * scale * scale) - 1, scale)
    return base - Fraction(1, n + 1)


@given(st.integers(-40, 40), st.integers(1, 9), st.sampled_from([2, 3, 5, 7]),
       st.integers(1, 5), st.fractions(min_value=-20, max_value=20, max_denominator=12))
@settings(max_examples=60)
def test_cut_order_respected_by_translation(p, q, r, s, t):
    c = surd_cut(p, q, r, s)
    x = point_cut(Q, t)
    ext = extend_automorphism(Translate(Fraction(5, 3)))
    assert cut_lt(x, c) == cut_lt(ext.apply_cut(x), ext.apply_cut(c))
