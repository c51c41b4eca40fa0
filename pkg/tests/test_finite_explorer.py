import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linetop.errors import SizeTooLarge
from linetop.finite_explorer import (
    FiniteTop,
    condensation_preorder,
    enumerate_topologies,
    explorer_report,
    homeo_classes,
    is_reversible,
    maximal_chains_in_class,
    reversibility_census,
)


def closure_oracle(n):
    """Independent count: test every subset family for the topology axioms.

    No preorder theory involved — just ∅/X membership and closure under
    pairwise union and intersection, checked on all 2^(2^n - 2) families.
    """
    full = (1 << n) - 1
    middles = [s for s in range(1, full)]
    count = 0
    found = []
    for picks in itertools.chain.from_iterable(
            itertools.combinations(middles, k) for k in range(len(middles) + 1)):
        opens = {0, full, *picks}
        ok = all((a | b) in opens and (a & b) in opens
                 for a in opens for b in opens)
        if ok:
            count += 1
            found.append(frozenset(opens))
    return count, found


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 4), (3, 29), (4, 355)])
def test_counts_match_closure_oracle(n, expected):
    oracle_count, oracle_families = closure_oracle(n)
    tops = enumerate_topologies(n)
    assert oracle_count == expected
    assert len(tops) == expected
    assert {t.opens for t in tops} == set(oracle_families)


def test_count_n4():
    assert len(enumerate_topologies(4)) == 355


def test_count_n5():
    assert len(enumerate_topologies(5)) == 6942


def test_size_guard():
    with pytest.raises(SizeTooLarge):
        enumerate_topologies(6)
    with pytest.raises(SizeTooLarge):
        enumerate_topologies(0)
    with pytest.raises(SizeTooLarge):
        condensation_preorder(5)


def test_finite_top_invariants():
    with pytest.raises(ValueError):
        FiniteTop(2, frozenset({0}))  # missing full set
    with pytest.raises(ValueError):
        FiniteTop(2, frozenset({0, 1, 2}))  # missing full set again
    with pytest.raises(ValueError):
        FiniteTop(3, frozenset({0, 1, 2, 7}))  # 1 | 2 = 3 missing


@pytest.mark.parametrize("n,classes", [(1, 1), (2, 3), (3, 9), (4, 33), (5, 139)])
def test_homeo_class_counts(n, classes):
    assert len(homeo_classes(n)) == classes


def test_homeo_classes_partition():
    tops = enumerate_topologies(3)
    classes = homeo_classes(3, tops)
    seen = sorted(i for cls in classes for i in cls)
    assert seen == list(range(len(tops)))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_condensation_matches_homeo_classes(n):
    rel = condensation_preorder(n)
    assert rel.classes_match
    # the matrix is a preorder
    count = len(rel.tops)
    for i in range(count):
        assert rel.leq[i][i]
    for i in range(count):
        for j in range(count):
            if not rel.leq[i][j]:
                continue
            for k in range(count):
                if rel.leq[j][k]:
                    assert rel.leq[i][k]


def test_discrete_and_antidiscrete_are_extremes():
    n = 3
    rel = condensation_preorder(n)
    full = (1 << n) - 1
    discrete = next(i for i, t in enumerate(rel.tops) if len(t.opens) == 1 << n)
    anti = next(i for i, t in enumerate(rel.tops) if t.opens == frozenset({0, full}))
    for i in range(len(rel.tops)):
        assert rel.leq[i][discrete]  # identity condenses discrete onto anything
        assert rel.leq[anti][i]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_reversibility_census(n):
    tops = enumerate_topologies(n)
    census = reversibility_census(n, tops)
    # only the discrete and antidiscrete survive every permutation
    assert len(census["stronglyReversible"]) == 2
    kinds = {len(tops[i].opens) for i in census["stronglyReversible"]}
    assert kinds == {2, 1 << n}
    # and finite spaces are always reversible
    assert census["reversible"] == list(range(len(tops)))
    assert all(is_reversible(t) for t in tops[:10])


def test_maximal_chains_in_small_classes():
    tops = enumerate_topologies(2)
    for idx, top in enumerate(tops):
        lengths = maximal_chains_in_class(2, idx, tops)
        if len(top.opens) in (2, 4):  # antidiscrete / discrete: singleton class
            assert lengths == [1]
        else:  # the two one-open-point copies are incomparable
            assert lengths == [1, 1]


def test_lattice_laws_on_sampled_pairs():
    tops = enumerate_topologies(3)
    fams = [t.opens for t in tops]
    pool = fams[:: max(1, len(fams) // 12)]
    for a in pool:
        for b in pool:
            meet = a & b
            assert meet in set(fams)  # intersections are topologies
            # the join is the least family above both
            above = [f for f in fams if a <= f and b <= f]
            join = min(above, key=len)
            assert all(a <= f and b <= f and join <= f for f in above)


def test_report_rows():
    rows = explorer_report(4)
    got = [(r.n, r.topologyCount, r.homeoClassCount, r.stronglyReversibleCount)
           for r in rows]
    assert got == [(1, 1, 1, 1), (2, 4, 3, 2), (3, 29, 9, 2), (4, 355, 33, 2)]
    assert all(r.condensationClassesEqualHomeoClasses for r in rows)


@given(st.integers(1, 3), st.integers(0, 10 ** 9))
@settings(max_examples=15, deadline=None)
def test_enumeration_stable_under_shuffle(n, seed):
    import random

    tops = enumerate_topologies(n)
    families = [t.opens for t in tops]
    random.Random(seed).shuffle(families)
    assert sorted(map(sorted, families)) == sorted(map(sorted, (t.opens for t in tops)))
