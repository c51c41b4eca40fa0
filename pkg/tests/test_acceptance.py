"""Acceptance gate: one criterion per test, one pass/fail line each.

Every criterion runs at its stated scale and budget; the printed line is
the contract.  Timing limits are asserted, not merely observed.
"""

import time
from fractions import Fraction

from linetop.completion import LEX_ZZ, TopOfCopy, gap_cut, point_cut, surd_cut
from linetop.finite_explorer import (
    condensation_preorder,
    enumerate_topologies,
    homeo_classes,
    reversibility_census,
)
from linetop.homeo import same_chain_class
from linetop.orders import Q
from linetop.suites import (
    SuiteConfig,
    run_chains,
    run_gapclass,
    run_homeo,
    run_inclusion,
    run_joinmeet,
    run_sandwich,
    run_suite,
)
from linetop.textio import parse_order

ORDERS = ("Q", "lex(Z,Z)")


def report(name, ok, elapsed, limit):
    status = "pass" if ok and elapsed < limit else "fail"
    print(f"ACCEPTANCE {status}: {name} ({elapsed:.1f}s, limit {limit:.0f}s)")
    assert ok, name
    assert elapsed < limit, f"{name} exceeded {limit}s budget ({elapsed:.1f}s)"


def test_criterion_1_inclusion_suite():
    start = time.monotonic()
    ok, bad = True, []
    for text in ORDERS:
        passed, witnesses = run_inclusion(parse_order(text), seed=2024, pairs=1000)
        ok &= passed
        bad += witnesses
    report("1 inclusion criterion, 10^3 cut pairs per order, validated witnesses",
           ok and not bad, time.monotonic() - start, 10)


def test_criterion_2_homeo_suite():
    start = time.monotonic()
    ok = True
    for text in ORDERS:
        passed, _ = run_homeo(parse_order(text), seed=2024, pairs=100, budget=1000)
        ok &= passed
    report("2 automorphism homeomorphisms, 100 pairs per order at budget 10^3",
           ok, time.monotonic() - start, 30)


def test_criterion_3_gap_non_homeomorphism():
    start = time.monotonic()
    ok = True
    cases = ((surd_cut(0, 1, 2), Q, Fraction(0)),
             (gap_cut(LEX_ZZ, TopOfCopy(0)), LEX_ZZ, (0, 0)))
    for gap, order, elem_value in cases:
        answer = same_chain_class(gap, point_cut(order, elem_value))
        ok &= answer.verdict == "no"
        ok &= answer.obstruction.validate(samples=1000, seed=7)
    report("3 gap cuts are non-homeomorphic to element cuts, obstruction on 10^3 samples",
           ok, time.monotonic() - start, 5)


def test_criterion_4_join_meet():
    start = time.monotonic()
    ok = True
    for text in ORDERS:
        passed, _ = run_joinmeet(parse_order(text), seed=2024, samples=1000,
                                 sequence_families=20)
        ok &= passed
    report("4 join/meet formulas, finite plus 20 certified sequence families per order",
           ok, time.monotonic() - start, 30)


def test_criterion_5_sandwich():
    start = time.monotonic()
    ok = True
    for text in ORDERS:
        passed, _ = run_sandwich(parse_order(text), seed=2024, sets=100)
        ok &= passed
    report("5 sandwich saturation, 100 generator sets per order",
           ok, time.monotonic() - start, 10)


def test_criterion_6_chain_multiplication():
    start = time.monotonic()
    ok, _ = run_chains(k_max=10, exhaustive_k=6)
    report("6 chain counts 2^k for k<=10 plus exhaustive witnesses at k=6",
           ok, time.monotonic() - start, 60)


def test_criterion_7_gap_class_homeomorphisms():
    start = time.monotonic()
    ok = True
    for text in ORDERS:
        passed, _ = run_gapclass(parse_order(text), seed=2024, pairs=20, budget=500)
        ok &= passed
    report("7 gap-class homeomorphisms, 20 verified gap pairs per order",
           ok, time.monotonic() - start, 10)


def test_criterion_8_finite_oracle():
    start = time.monotonic()
    ok = True
    counts = [len(enumerate_topologies(n)) for n in range(1, 6)]
    ok &= counts == [1, 4, 29, 355, 6942]
    ok &= [len(homeo_classes(n)) for n in (1, 2, 3)] == [1, 3, 9]
    for n in range(1, 5):
        rel = condensation_preorder(n)
        ok &= rel.classes_match
        census = reversibility_census(n, rel.tops)
        ok &= census["reversible"] == list(range(len(rel.tops)))
        if n >= 2:
            ok &= len(census["stronglyReversible"]) == 2
    report("8 finite oracle: counts 1,4,29,355,6942; classes 1,3,9; "
           "reversibility exhaustive for n<=4", ok, time.monotonic() - start, 300)


def test_criterion_9_determinism():
    start = time.monotonic()
    config = SuiteConfig(order_text="Q", seed=31337, samples=150)
    first = run_suite(config).canonical_records()
    second = run_suite(config).canonical_records()
    ok = first == second and first.encode() == second.encode()
    report("9 identical seeds give byte-identical record sets",
           ok, time.monotonic() - start, 60)
