from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linetop.completion import (
    LEX_ZZ,
    TopOfCopy,
    cmp_cut,
    extend_automorphism,
    gap_cut,
    point_cut,
    surd_cut,
)
from linetop.errors import UnsupportedOrder
from linetop.homeo import (
    FinitePerm,
    HomeoMap,
    PermutedTopology,
    chains_equal,
    compose_perm,
    count_distinct_chains,
    homeo_between_gaps,
    homeo_from_automorphism,
    identity_perm,
    image_of_open,
    incomparable_witness,
    open_in,
    perm_image_open,
    perm_image_perturbed,
    same_chain_class,
    swap_perm,
    verify_homeo,
)
from linetop.orders import Cmp, Elem, Identity, Q, Translate, Z
from linetop.topology import at, bottom, left_ray, punctured_ray, ray_topology

F = Fraction


def test_image_formulas():
    h = homeo_from_automorphism(Translate(F(3)), Elem(Q, F(1)))
    ray = image_of_open(h, left_ray(point_cut(Q, F(0))))
    assert cmp_cut(ray.cut, point_cut(Q, F(3))) == Cmp.EQUAL
    punct = image_of_open(h, punctured_ray(surd_cut(0, 1, 2)))
    assert cmp_cut(punct.cut, surd_cut(3, 1, 2)) == Cmp.EQUAL
    assert h.apply_point(bottom(Q)).is_bottom


def test_verify_accepts_real_homeo_rejects_tampered():
    h = homeo_from_automorphism(Translate(F(3)), Elem(Q, F(1)))
    assert verify_homeo(h, budget=200, seed=0).passed
    tampered = HomeoMap(Identity(Q), surd_cut(0, 1, 2), point_cut(Q, F(0)),
                        extend_automorphism(Identity(Q)),
                        bottom_image=at(Q, F(0)))
    report = verify_homeo(tampered, budget=200, seed=0)
    failed = {c.name for c in report.checks if not c.passed}
    assert "bottom_fixed" in failed and "target_matches_extension" in failed


def test_finite_perm_basics():
    p = swap_perm(Q, F(1), F(2))
    assert p.apply_value(F(1)) == F(2) and p.apply_value(F(7)) == F(7)
    assert p.inverse() == p or p.inverse().mapping == p.mapping
    assert compose_perm(p, p).is_identity
    with pytest.raises(ValueError):
        FinitePerm(Q, ((F(1), F(2)),))  # 2 has no preimage


def test_perm_image_dense_case():
    p = swap_perm(Q, F(1), F(2))
    po = perm_image_open(p, left_ray(point_cut(Q, F(2))))
    assert po.removed == (F(1),) and po.added == (F(2),)
    assert not po.is_pure
    assert po.contains_value(F(2)) and not po.contains_value(F(1))
    assert po.contains(bottom(Q))
    # applying the swap again undoes the perturbation
    assert perm_image_perturbed(p, po).is_pure


def test_perm_image_disjoint_support_is_pure():
    po = perm_image_open(swap_perm(Q, F(5), F(6)), left_ray(point_cut(Q, F(2))))
    assert po.is_pure
    assert perm_image_open(identity_perm(Q), left_ray(point_cut(Q, F(2)))).is_pure


def test_perturbed_normalization_absorbs_on_discrete_orders():
    # over Z the adjusted set {...,0, 2} \ {1} + boundary moves stay ray-shaped
    p = swap_perm(Z, 2, 3)
    po = perm_image_open(p, left_ray(point_cut(Z, 3)))
    # [z,3) loses 2 and gains 3: extensionally [z,4) minus {2}
    assert not po.is_pure
    assert po.contains_value(3) and not po.contains_value(2)
    full_swap = perm_image_open(swap_perm(Z, 0, 1), left_ray(point_cut(Z, 2)))
    assert full_swap.is_pure  # both points inside: the set is unchanged


def test_open_in_permuted_topology():
    p = swap_perm(Q, F(1), F(2))
    top = PermutedTopology(p, ray_topology(point_cut(Q, F(5))))
    image = perm_image_open(p, left_ray(point_cut(Q, F(2))))
    assert open_in(image, top)
    assert not open_in(left_ray(point_cut(Q, F(2))), top)
    assert open_in(left_ray(point_cut(Q, F(2))), ray_topology(point_cut(Q, F(5))))


def test_chains_equal_criterion():
    p = swap_perm(Q, F(1), F(2))
    assert chains_equal(p, swap_perm(Q, F(1), F(2)))
    assert not chains_equal(p, identity_perm(Q))
    assert not chains_equal(p, swap_perm(Q, F(3), F(4)))


def test_incomparable_witness_spec_pairs():
    x = Elem(Q, F(5))
    p = swap_perm(Q, F(1), F(2))
    o1, o2 = incomparable_witness(p, x, identity_perm(Q), x)
    assert not o1.is_pure  # the perturbed image cannot be a plain ray
    assert o2.is_pure
    # roles swap symmetrically
    s1, s2 = incomparable_witness(identity_perm(Q), x, p, x)
    assert s1.is_pure and not s2.is_pure
    w1, w2 = incomparable_witness(p, x, swap_perm(Q, F(3), F(4)), x)
    assert w1.base.cut.element.value == F(2)
    assert w2.base.cut.element.value == F(4)
    with pytest.raises(ValueError):
        incomparable_witness(p, x, p, x)


@given(st.integers(1, 8))
def test_chain_count_is_exponential(k):
    assert count_distinct_chains(k) == 2 ** k


def test_same_chain_class_three_ways():
    yes = same_chain_class(point_cut(Q, F(0)), point_cut(Q, F(9)))
    assert yes.verdict == "yes" and verify_homeo(yes.homeo, budget=100).passed
    no = same_chain_class(surd_cut(0, 1, 2), point_cut(Q, F(0)))
    assert no.verdict == "no" and no.obstruction.validate(samples=300)
    unknown = same_chain_class(surd_cut(0, 1, 2), surd_cut(0, 1, 3))
    assert unknown.verdict == "unknown"


def test_homeo_between_gaps_lex_and_q():
    h = homeo_between_gaps(gap_cut(LEX_ZZ, TopOfCopy(-1)), gap_cut(LEX_ZZ, TopOfCopy(6)))
    assert verify_homeo(h, budget=150, seed=3).passed
    h2 = homeo_between_gaps(surd_cut(0, 1, 2), surd_cut(5, 1, 2))
    assert verify_homeo(h2, budget=150, seed=3).passed
    with pytest.raises(UnsupportedOrder):
        homeo_between_gaps(surd_cut(0, 1, 2), surd_cut(0, 1, 7))


@given(st.lists(st.integers(-20, 20), min_size=2, max_size=6, unique=True),
       st.fractions(min_value=-25, max_value=25, max_denominator=8))
@settings(max_examples=60)
def test_perm_image_membership_pointwise(support, b):
    # p[O] contains v iff O contains p^-1(v), checked against the formula
    vals = [F(v) for v in support]
    rotated = vals[1:] + vals[:1]
    p = FinitePerm(Q, tuple(zip(vals, rotated)))
    open_set = left_ray(point_cut(Q, b))
    po = perm_image_open(p, open_set)
    p_inv = p.inverse()
    probes = vals + [F(b), F(b) + 1, F(b) - 1]
    from linetop.topology import Point, mem
    for v in probes:
        want = mem(Point(Q, Elem(Q, p_inv.apply_value(v))), open_set)
        assert po.contains_value(v) == want
