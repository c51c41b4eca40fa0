"""Seeded verification suites over the symbolic layer.

Each claim suite draws its samples from one seeded generator, checks an
exact statement about the chain of topologies, and returns a record with
any counterexample witnesses.  Reports serialize to a fixed JSON shape
(config / records / summary) so reruns with the same seed are
comparable byte for byte once the timing field is dropped.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from . import sampling
from .completion import (
    INCREASING,
    DECREASING,
    LEX_ZZ,
    CutPoint,
    SequenceFamily,
    TopOfCopy,
    cmp_cut,
    cut_leq,
    cut_lt,
    gap_cut,
    point_cut,
    sup_finite,
    surd_cut,
    verify_sequence_family,
)
from .errors import EmptyInterval, LinetopError, OutOfSandwich, UnsupportedOrder
from .homeo import (
    FinitePerm,
    chains_equal,
    count_distinct_chains,
    homeo_between_gaps,
    homeo_from_automorphism,
    incomparable_witness,
    same_chain_class,
    verify_homeo,
)
from .orders import (
    Cmp,
    Elem,
    OrderExpr,
    Q,
    RationalOrder,
    Z,
    automorphism_moving,
    element_below,
    is_homogeneous_pathway,
    order_text,
)
from .textio import cut_text, elem_text
from .topology import (
    LeftRayTopology,
    WholeOrder,
    in_topology,
    join,
    left_ray,
    meet,
    punctured_ray,
    saturate_sandwich,
    top_leq,
    validate_strict_witness,
)

CLAIM_IDS = ("inclusion", "homeo", "neighborhood", "gap", "joinmeet",
             "sandwich", "chains", "gapclass")

ANCHORS: Dict[str, str] = {
    "inclusion": "c1 < c2 iff the ray topology at c1 is strictly contained "
                 "in the ray topology at c2, with a punctured-ray witness",
    "homeo": "every order automorphism extends to a homeomorphism of chain "
             "topologies that fixes the bottom point",
    "neighborhood": "the bottom point is the unique point all of whose "
                    "basic neighborhoods intersect to a singleton",
    "gap": "the topology at a gap cut is homeomorphic to no topology at an "
           "element cut (the punctured trace identity obstructs it)",
    "joinmeet": "joins of ray topologies live at the supremum cut, meets at "
                "the infimum; the whole chain meets to the left-ray topology",
    "sandwich": "generators between two chain members saturate to the ray "
                "topology at their supremum",
    "chains": "the 2^k pair-swap permutations produce 2^k pairwise distinct "
              "chains, incomparable with explicit witness opens",
    "gapclass": "gap cuts related by an order automorphism carry "
                "homeomorphic topologies",
}


@dataclass(frozen=True)
class SuiteConfig:
    order_text: str = "Q"
    seed: int = 0
    samples: int = 1000
    claims: Tuple[str, ...] = CLAIM_IDS

    def __post_init__(self):
        unknown = [c for c in self.claims if c not in CLAIM_IDS]
        if unknown:
            raise ValueError(f"unknown claim ids: {unknown}")


@dataclass
class ClaimRecord:
    claimId: str
    anchor: str
    order: str
    samples: int
    passed: bool
    witnesses: List[str] = field(default_factory=list)
    elapsedMs: int = 0

    def as_dict(self, volatile: bool = True) -> Dict:
        d = {
            "claimId": self.claimId,
            "anchor": self.anchor,
            "order": self.order,
            "samples": self.samples,
            "passed": self.passed,
            "witnesses": list(self.witnesses),
        }
        if volatile:
            d["elapsedMs"] = self.elapsedMs
        return d


@dataclass
class SuiteReport:
    config: SuiteConfig
    records: List[ClaimRecord]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def as_dict(self) -> Dict:
        return {
            "config": {
                "order": self.config.order_text,
                "seed": self.config.seed,
                "samples": self.config.samples,
                "claims": list(self.config.claims),
            },
            "records": [r.as_dict() for r in self.records],
            "summary": {
                "total": len(self.records),
                "passed": sum(r.passed for r in self.records),
                "failed": sum(not r.passed for r in self.records),
                "allPassed": self.passed,
            },
        }

    def canonical_records(self) -> str:
        """Deterministic serialization: the records minus timing."""
        return json.dumps([r.as_dict(volatile=False) for r in self.records],
                          sort_keys=True)


# ---------------------------------------------------------------------------
# Individual claim suites
# ---------------------------------------------------------------------------


def run_inclusion(order: OrderExpr, seed: int, pairs: int = 1000) -> Tuple[bool, List[str]]:
    """Cut order vs topology inclusion, witnesses validated on every strict."""
    rng = sampling.make_rng(seed)
    bad: List[str] = []
    for _ in range(pairs):
        c1, c2 = sampling.sample_cut_pair(order, rng)
        res = top_leq(c1, c2)
        rel = cmp_cut(c1, c2)
        want = {Cmp.LESS: "strictly_less", Cmp.EQUAL: "equal",
                Cmp.GREATER: "not_leq"}[rel]
        if res.relation != want:
            bad.append(f"{cut_text(c1)} vs {cut_text(c2)}: got {res.relation}, "
                       f"cut comparison says {want}")
            continue
        if res.relation == "strictly_less":
            if not validate_strict_witness(c1, c2, res.witness, res.separator):
                bad.append(f"invalid witness for {cut_text(c1)} < {cut_text(c2)}")
    return not bad, bad


def run_homeo(order: OrderExpr, seed: int, pairs: int = 100,
              budget: int = 1000) -> Tuple[bool, List[str]]:
    rng = sampling.make_rng(seed)
    bad: List[str] = []
    for i in range(pairs):
        x1 = sampling.sample_elem(order, rng)
        x2 = sampling.sample_elem(order, rng)
        phi = automorphism_moving(order, x1, x2)
        h = homeo_from_automorphism(phi, x1)
        report = verify_homeo(h, budget=budget, seed=rng.getrandbits(32))
        if not report.passed:
            names = [c.name for c in report.checks if not c.passed]
            bad.append(f"{elem_text(x1)} -> {elem_text(x2)}: failed {names}")
    return not bad, bad


def run_neighborhood(order: OrderExpr, seed: int, samples: int = 1000) -> Tuple[bool, List[str]]:
    """Only the bottom point's neighborhoods intersect to a singleton.

    For each sampled element x, an explicit y below x lies in every
    sampled basic neighborhood of x; for the bottom point, every sampled
    candidate y is excluded by an explicit left ray that still contains
    the bottom point.
    """
    from .topology import Point, bottom, mem

    rng = sampling.make_rng(seed)
    bad: List[str] = []
    z = bottom(order)
    for _ in range(samples):
        limit = sampling.sample_cut(order, rng)
        xc = sampling.sample_cut_below(order, limit, rng)
        while xc.element is None:
            xc = sampling.sample_cut_below(order, limit, rng)
        x = Point(order, xc.element)
        y = Point(order, element_below(order, xc.element))
        yc = point_cut(order, y.value)
        # y sits in every sampled basic neighborhood of x
        nbhds = [left_ray(sampling.sample_cut_above(order, xc, rng)),
                 left_ray(sampling.sample_cut_above(order, xc, rng))]
        if cut_lt(xc, limit):
            nbhds.append(punctured_ray(limit))
            try:
                nbhds.append(punctured_ray(sampling.sample_cut_between(
                    order, xc, limit, rng)))
            except EmptyInterval:
                pass  # adjacent cuts over a discrete order
        for o in nbhds:
            if not mem(x, o):
                bad.append(f"sampled neighborhood misses {elem_text(x.value)}")
            elif not mem(y, o):
                bad.append(f"{elem_text(y.value)} escapes a neighborhood of "
                           f"{elem_text(x.value)}")
        # while every companion of the bottom point is shed by a left ray
        separator = left_ray(yc)
        if not mem(z, separator) or mem(y, separator):
            bad.append(f"no left ray separates bottom from {elem_text(y.value)}")
    return not bad, bad


def _gap_examples(order: OrderExpr) -> List[CutPoint]:
    if isinstance(order, RationalOrder):
        return [surd_cut(0, 1, 2), surd_cut(1, 1, 3), surd_cut(0, 1, 5, 2)]
    if order == LEX_ZZ:
        return [gap_cut(order, TopOfCopy(0)), gap_cut(order, TopOfCopy(-2)),
                gap_cut(order, TopOfCopy(7))]
    raise UnsupportedOrder(f"no catalogued gaps for {order_text(order)}")


def run_gap(order: OrderExpr, seed: int, samples: int = 1000) -> Tuple[bool, List[str]]:
    rng = sampling.make_rng(seed)
    bad: List[str] = []
    gaps = _gap_examples(order)[:1] if samples < 100 else _gap_examples(order)
    for g in gaps:
        for _ in range(max(1, samples // 100)):
            x = sampling.sample_elem(order, rng)
            ans = same_chain_class(g, point_cut(order, x))
            if ans.verdict != "no":
                bad.append(f"{cut_text(g)} vs {elem_text(x)}: verdict {ans.verdict}")
                continue
            if not ans.obstruction.validate(samples=samples, seed=rng.getrandbits(32)):
                bad.append(f"obstruction data at {cut_text(g)} failed validation")
    return not bad, bad


def _sequence_families(order: OrderExpr, rng) -> List[SequenceFamily]:
    families: List[SequenceFamily] = []
    if isinstance(order, RationalOrder):
        for _ in range(10):
            c = Fraction(rng.randint(-50, 50), rng.randint(1, 12))
            limit = point_cut(order, c)
            families.append(SequenceFamily(
                order, lambda n, c=c: point_cut(order, c - Fraction(1, n + 1)),
                INCREASING, limit))
            families.append(SequenceFamily(
                order, lambda n, c=c: point_cut(order, c + Fraction(1, n + 1)),
                DECREASING, limit))
    elif order == LEX_ZZ:
        for _ in range(10):
            j = rng.randint(-20, 20)
            families.append(SequenceFamily(
                order, lambda n, j=j: point_cut(order, (n, j)),
                INCREASING, gap_cut(order, TopOfCopy(j))))
            families.append(SequenceFamily(
                order, lambda n, j=j: point_cut(order, (-n, j)),
                DECREASING, gap_cut(order, TopOfCopy(j - 1))))
    else:
        raise UnsupportedOrder(f"no sequence catalogue for {order_text(order)}")
    return families


def run_joinmeet(order: OrderExpr, seed: int, samples: int = 1000,
                 sequence_families: int = 20) -> Tuple[bool, List[str]]:
    rng = sampling.make_rng(seed)
    bad: List[str] = []
    probe_count = max(1, samples // 50)

    def check_extensional(family: List[CutPoint], topology, want: str) -> None:
        # membership in the join/meet vs direct quantification over the
        # family: a punctured ray is in the join iff some member admits
        # it, in the meet iff every member does (finite families: the
        # supremum is attained, so the two sides are independent routes)
        for _ in range(probe_count):
            b = sampling.sample_cut(order, rng)
            got = in_topology(punctured_ray(b), topology)
            if want == "sup":
                independent = any(cut_leq(b, c) for c in family)
            else:
                independent = all(cut_leq(b, c) for c in family)
            if got != independent:
                bad.append(f"extensional mismatch at {cut_text(b)} for {want}")
                return

    for _ in range(max(1, samples // 100)):
        fam = [sampling.sample_cut(order, rng) for _ in range(rng.randint(1, 6))]
        j = join(fam)
        m = meet(fam)
        if cmp_cut(j.limit, sup_finite(fam)) != Cmp.EQUAL:
            bad.append("join limit is not the supremum")
        check_extensional(fam, j, "sup")
        check_extensional(fam, m, "inf")

    for fam in _sequence_families(order, rng)[:sequence_families]:
        cert = verify_sequence_family(fam, probes=20, seed=rng.getrandbits(32))
        if not cert.passed:
            bad.append(f"sequence family failed certification: {cert.failures[:1]}")
            continue
        top = join(fam) if fam.direction == INCREASING else meet(fam)
        if cmp_cut(top.limit, fam.declared_limit) != Cmp.EQUAL:
            bad.append("sequence join/meet misses the declared limit")
            continue
        for k in rng.sample(range(fam.bound), 5):
            term = fam.term(k)
            inside = in_topology(punctured_ray(term), top)
            if fam.direction == INCREASING and not inside:
                bad.append(f"term {k} escapes its own join")
            if fam.direction == DECREASING and inside and not cut_leq(term, top.limit):
                bad.append(f"term {k} wrongly inside the meet")

    whole_meet = meet(WholeOrder(order))
    if not isinstance(whole_meet, LeftRayTopology):
        bad.append("whole-chain meet is not the left-ray topology")
    return not bad, bad


def run_sandwich(order: OrderExpr, seed: int, sets: int = 100) -> Tuple[bool, List[str]]:
    rng = sampling.make_rng(seed)
    bad: List[str] = []
    for _ in range(sets):
        x1 = sampling.sample_elem(order, rng)
        c1 = point_cut(order, x1)
        x2c = sampling.sample_cut_above(order, c1, rng)
        while x2c.element is None:
            x2c = sampling.sample_cut_above(order, c1, rng)
        x2 = x2c.element
        k = rng.randint(0, 5)
        gens: List[CutPoint] = []
        for _ in range(k):
            if rng.random() < 0.2:
                gens.append(point_cut(order, x2))
                continue
            try:
                gens.append(sampling.sample_cut_between(
                    order, c1, point_cut(order, x2), rng))
            except EmptyInterval:
                gens.append(point_cut(order, x2))
        top = saturate_sandwich(x1, gens, x2)
        want = sup_finite(gens) if gens else c1
        if cmp_cut(top.limit, want) != Cmp.EQUAL:
            bad.append(f"saturation limit mismatch over {len(gens)} generators")
        # generators outside the window must be rejected
        outside = sampling.sample_cut_above(order, point_cut(order, x2), rng)
        try:
            saturate_sandwich(x1, gens + [outside], x2)
            bad.append(f"generator {cut_text(outside)} above the window accepted")
        except OutOfSandwich:
            pass
    return not bad, bad


def run_chains(order: OrderExpr = Q, k_max: int = 10,
               exhaustive_k: int = 6) -> Tuple[bool, List[str]]:
    if isinstance(order, RationalOrder):
        point = Fraction
    elif order == Z:
        point = int
    else:
        raise UnsupportedOrder(
            f"pair-swap catalogue covers Q and Z, not {order_text(order)}"
        )
    bad: List[str] = []
    for k in range(1, k_max + 1):
        got = count_distinct_chains(k, order)
        if got != 2 ** k:
            bad.append(f"k={k}: counted {got} chains, expected {2 ** k}")
    # exhaustive incomparability witnesses over one pair block
    pairs = [(point(2 * i), point(2 * i + 1)) for i in range(exhaustive_k)]
    perms = []
    for mask in range(1 << exhaustive_k):
        mapping = []
        for i, (a, b) in enumerate(pairs):
            if mask >> i & 1:
                mapping.extend([(a, b), (b, a)])
        perms.append(FinitePerm(order, tuple(mapping)))
    x = Elem(order, point(2 * exhaustive_k + 5))
    for i in range(len(perms)):
        for j in range(i + 1, len(perms)):
            if chains_equal(perms[i], perms[j]):
                bad.append(f"pair-swap perms {i},{j} wrongly share a chain")
                continue
            try:
                o1, o2 = incomparable_witness(perms[i], x, perms[j], x)
            except LinetopError as exc:
                bad.append(f"witness search failed for perms {i},{j}: {exc}")
    return not bad, bad


def run_gapclass(order: OrderExpr, seed: int, pairs: int = 20,
                 budget: int = 200) -> Tuple[bool, List[str]]:
    rng = sampling.make_rng(seed)
    bad: List[str] = []
    for _ in range(pairs):
        if order == LEX_ZZ:
            g0 = gap_cut(order, TopOfCopy(rng.randint(-30, 30)))
            g1 = gap_cut(order, TopOfCopy(rng.randint(-30, 30)))
        elif isinstance(order, RationalOrder):
            p, q, r = rng.randint(-20, 20), rng.randint(1, 10), rng.choice((2, 3, 5, 7))
            s = rng.randint(1, 6)
            t = Fraction(rng.randint(-30, 30), rng.randint(1, 8))
            g0 = surd_cut(p, q, r, s)
            # shift the cut by the rational t: (p + q sqrt r)/s + t
            g1 = surd_cut(p * t.denominator + t.numerator * s, q * t.denominator,
                          r, s * t.denominator)
        else:
            raise UnsupportedOrder(f"no gap catalogue for {order_text(order)}")
        h = homeo_between_gaps(g0, g1)
        report = verify_homeo(h, budget=budget, seed=rng.getrandbits(32))
        if not report.passed:
            names = [c.name for c in report.checks if not c.passed]
            bad.append(f"{cut_text(g0)} ~ {cut_text(g1)}: failed {names}")
    return not bad, bad


# ---------------------------------------------------------------------------
# Orchestration
# ---------------------------------------------------------------------------


def _scaled(config: SuiteConfig, claim: str, order: OrderExpr):
    s = config.samples
    seed = config.seed
    if claim == "inclusion":
        return run_inclusion(order, seed, pairs=s)
    if claim == "homeo":
        return run_homeo(order, seed, pairs=max(1, s // 10), budget=min(s, 1000))
    if claim == "neighborhood":
        return run_neighborhood(order, seed, samples=s)
    if claim == "gap":
        return run_gap(order, seed, samples=s)
    if claim == "joinmeet":
        return run_joinmeet(order, seed, samples=s)
    if claim == "sandwich":
        return run_sandwich(order, seed, sets=max(1, s // 10))
    if claim == "chains":
        return run_chains(order, k_max=min(10, max(1, s.bit_length())),
                          exhaustive_k=4 if s < 1000 else 6)
    if claim == "gapclass":
        return run_gapclass(order, seed, pairs=max(1, s // 50))
    raise ValueError(f"unknown claim {claim!r}")


def run_suite(config: SuiteConfig) -> SuiteReport:
    from .textio import parse_order

    order = parse_order(config.order_text)
    if not is_homogeneous_pathway(order):
        raise UnsupportedOrder(
            f"suites need the homogeneous pathway; {config.order_text!r} is outside it"
        )
    records: List[ClaimRecord] = []
    for claim in config.claims:
        started = time.monotonic()
        try:
            passed, witnesses = _scaled(config, claim, order)
        except UnsupportedOrder as exc:
            passed, witnesses = True, [f"skipped: {exc}"]
        elapsed = int((time.monotonic() - started) * 1000)
        records.append(ClaimRecord(claim, ANCHORS[claim], config.order_text,
                                   config.samples, passed,
                                   witnesses[:20], elapsed))
    return SuiteReport(config, records)


def render_text(report: SuiteReport) -> str:
    lines = [f"order={report.config.order_text} seed={report.config.seed} "
             f"samples={report.config.samples}"]
    for r in report.records:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"[{status}] {r.claimId}: {r.anchor} ({r.elapsedMs} ms)")
        for w in r.witnesses:
            lines.append(f"    witness: {w}")
    s = report.as_dict()["summary"]
    lines.append(f"{s['passed']}/{s['total']} claims passed")
    return "\n".join(lines) + "\n"
