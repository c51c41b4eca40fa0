"""Dedekind completions of the supported orders.

A cut point is either an order element or an explicit gap descriptor
drawn from a closed, order-specific family:

* ``Z``        -- already complete, no gaps;
* ``Q``        -- ``SurdGap``: the cut of (p + q*sqrt(r))/s with r non-square,
                  a genuine gap because the value is irrational;
* ``lex(Z,Z)`` -- ``TopOfCopy(j)``: the gap sitting above copy ``j``, so the
                  completion is every copy of Z with a top point added;
* ``sum(A,B)`` -- ``Seam``: the gap between the parts when A has no maximum
                  and B has no minimum (unused by the topology layer).

Keeping the gap families closed keeps cut comparison total and decidable;
arbitrary cut oracles would make even equality semi-decidable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

from .errors import EmptyFamily, EmptyTrace, OrderMismatch, UnsupportedOrder
from .orders import (
    Automorphism,
    Cmp,
    Composite,
    Elem,
    Identity,
    IntegerOrder,
    Lex,
    LexMap,
    OrderExpr,
    PiecewiseLinear,
    Q,
    RationalOrder,
    Sum,
    Translate,
    Z,
    _as_cmp,
    _cmp_value,
    order_text,
)
from .surds import QuadValue, is_square, rational_quad


# ---------------------------------------------------------------------------
# Gap descriptors and cut points
# ---------------------------------------------------------------------------


class GapDescriptor:
    pass


@dataclass(frozen=True)
class SurdGap(GapDescriptor):
    """The cut of Q at the irrational value (p + q*sqrt(r))/s.

    Canonical form: s > 0, r squarefree and non-square, gcd(p, q, s) = 1,
    q != 0.  Structural equality then coincides with value equality.
    """

    p: int
    q: int
    r: int
    s: int

    def __post_init__(self):
        p, q, r, s = self.p, self.q, self.r, self.s
        if s == 0:
            raise ValueError("denominator must be nonzero")
        if q == 0:
            raise ValueError("a surd cut needs a nonzero radical coefficient")
        if r <= 0 or is_square(r):
            raise ValueError("radicand must be positive and non-square")
        qv = QuadValue(Fraction(p, s), Fraction(q, s), r)
        a, b = qv.a, qv.b
        s_new = math.lcm(a.denominator, b.denominator)
        p_new, q_new, r_new = a.numerator * (s_new // a.denominator), b.numerator * (s_new // b.denominator), qv.r
        g = math.gcd(math.gcd(abs(p_new), abs(q_new)), s_new)
        object.__setattr__(self, "p", p_new // g)
        object.__setattr__(self, "q", q_new // g)
        object.__setattr__(self, "r", r_new)
        object.__setattr__(self, "s", s_new // g)

    def quad(self) -> QuadValue:
        return QuadValue(Fraction(self.p, self.s), Fraction(self.q, self.s), self.r)


@dataclass(frozen=True)
class TopOfCopy(GapDescriptor):
    """The gap above copy ``index`` of the major order in a Lex(Z, Z)."""

    index: int


@dataclass(frozen=True)
class Seam(GapDescriptor):
    """The gap between the two parts of a Sum order."""


@dataclass(frozen=True)
class CutPoint:
    """An element of the Dedekind completion: an order element or a gap."""

    order: OrderExpr
    element: Optional[Elem] = None
    gap: Optional[GapDescriptor] = None

    def __post_init__(self):
        if (self.element is None) == (self.gap is None):
            raise ValueError("a cut point is exactly one of: element, gap")
        if self.element is not None and self.element.order != self.order:
            raise OrderMismatch("cut element belongs to a different order")


def point_cut(order: OrderExpr, value) -> CutPoint:
    x = value if isinstance(value, Elem) else Elem(order, value)
    return CutPoint(order, element=x)


def gap_cut(order: OrderExpr, gap: GapDescriptor) -> CutPoint:
    if isinstance(gap, SurdGap) and not isinstance(order, RationalOrder):
        raise UnsupportedOrder("surd gaps live in the completion of Q")
    if isinstance(gap, TopOfCopy) and order != Lex(Z, Z):
        raise UnsupportedOrder("top-of-copy gaps live in the completion of lex(Z,Z)")
    if isinstance(gap, Seam) and not isinstance(order, Sum):
        raise UnsupportedOrder("seam gaps live in the completion of a sum")
    return CutPoint(order, gap=gap)


def surd_cut(p: int, q: int, r: int, s: int = 1) -> CutPoint:
    return gap_cut(Q, SurdGap(p, q, r, s))


def is_gap(c: CutPoint) -> bool:
    return c.gap is not None


# ---------------------------------------------------------------------------
# Completion specs
# ---------------------------------------------------------------------------

LEX_ZZ = Lex(Z, Z)


@dataclass(frozen=True)
class CompletionSpec:
    order: OrderExpr
    gap_family: Tuple[str, ...]
    is_complete: bool

    def __post_init__(self):
        assert self.is_complete == (not self.gap_family)


def complete(order: OrderExpr) -> CompletionSpec:
    """The completion of a supported order, described by its gap family."""
    if isinstance(order, IntegerOrder):
        return CompletionSpec(order, (), True)
    if isinstance(order, RationalOrder):
        return CompletionSpec(order, ("surd",), False)
    if order == LEX_ZZ:
        return CompletionSpec(order, ("topOfCopy",), False)
    raise UnsupportedOrder(f"no completion constructor for {order_text(order)}")


# ---------------------------------------------------------------------------
# Cut comparison
# ---------------------------------------------------------------------------


def cut_quad(c: CutPoint) -> QuadValue:
    """The cut as an exact quadratic value (Q completions only)."""
    if not isinstance(c.order, RationalOrder):
        raise UnsupportedOrder("only cuts over Q have quadratic values")
    if c.element is not None:
        return rational_quad(c.element.value)
    if isinstance(c.gap, SurdGap):
        return c.gap.quad()
    raise UnsupportedOrder(f"unexpected gap {c.gap!r} over Q")


def _cmp_cut_sign(c1: CutPoint, c2: CutPoint) -> int:
    order = c1.order
    if c1.element is not None and c2.element is not None:
        return _cmp_value(order, c1.element.value, c2.element.value)
    if isinstance(order, RationalOrder):
        return cut_quad(c1).cmp(cut_quad(c2))
    if order == LEX_ZZ:
        if isinstance(c1.gap, TopOfCopy) and isinstance(c2.gap, TopOfCopy):
            return (c1.gap.index > c2.gap.index) - (c1.gap.index < c2.gap.index)
        if isinstance(c1.gap, TopOfCopy):
            # gap above copy j is below every element of later copies
            j, (_, j2) = c1.gap.index, c2.element.value
            return -1 if j < j2 else 1
        if isinstance(c2.gap, TopOfCopy):
            return -_cmp_cut_sign(c2, c1)
    if isinstance(order, Sum):
        if isinstance(c1.gap, Seam) and isinstance(c2.gap, Seam):
            return 0
        if isinstance(c1.gap, Seam):
            side = c2.element.value[0]
            return -1 if side == "right" else 1
        if isinstance(c2.gap, Seam):
            return -_cmp_cut_sign(c2, c1)
    raise UnsupportedOrder(f"cannot compare cuts {c1!r} and {c2!r}")


def cmp_cut(c1: CutPoint, c2: CutPoint) -> Cmp:
    """Exact total-order comparison on the completion."""
    if c1.order != c2.order:
        raise OrderMismatch("cut points over different orders")
    return _as_cmp(_cmp_cut_sign(c1, c2))


def cut_leq(c1: CutPoint, c2: CutPoint) -> bool:
    return _cmp_cut_sign(c1, c2) <= 0


def cut_lt(c1: CutPoint, c2: CutPoint) -> bool:
    return _cmp_cut_sign(c1, c2) < 0


# ---------------------------------------------------------------------------
# Minimality witnesses
# ---------------------------------------------------------------------------


def witness_m1(c: CutPoint) -> Tuple[Elem, Elem]:
    """Order elements bracketing the cut: below <= c <= above."""
    if c.element is not None:
        return c.element, c.element
    if isinstance(c.gap, SurdGap):
        n = c.gap.quad().floor()
        return Elem(Q, Fraction(n)), Elem(Q, Fraction(n + 1))
    if isinstance(c.gap, TopOfCopy):
        j = c.gap.index
        return Elem(LEX_ZZ, (0, j)), Elem(LEX_ZZ, (0, j + 1))
    if isinstance(c.gap, Seam):
        raise UnsupportedOrder("seam gaps have no canonical integer bracket")
    raise UnsupportedOrder(f"unexpected cut {c!r}")


def witness_m2(c: CutPoint, c2: CutPoint) -> Elem:
    """An order element x with c <= x < c2 (needs c < c2)."""
    if c.order != c2.order:
        raise OrderMismatch("cut points over different orders")
    if not cut_lt(c, c2):
        raise EmptyTrace("witness_m2 needs c < c2")
    if c.element is not None:
        return c.element
    if isinstance(c.gap, SurdGap):
        from .surds import simplest_rational_between

        return Elem(Q, simplest_rational_between(cut_quad(c), cut_quad(c2)))
    if isinstance(c.gap, TopOfCopy):
        j = c.gap.index
        if c2.element is not None:
            a2, j2 = c2.element.value
            if j2 == j + 1:
                return Elem(LEX_ZZ, (a2 - 1, j + 1))
            return Elem(LEX_ZZ, (0, j + 1))
        return Elem(LEX_ZZ, (0, j + 1))
    raise UnsupportedOrder(f"no separating-element search for {c!r}")


# ---------------------------------------------------------------------------
# Finite sups and infs
# ---------------------------------------------------------------------------


def sup_finite(cuts: List[CutPoint]) -> CutPoint:
    if not cuts:
        raise EmptyFamily("sup of an empty family")
    best = cuts[0]
    for c in cuts[1:]:
        if cut_lt(best, c):
            best = c
    return best


def inf_finite(cuts: List[CutPoint]) -> CutPoint:
    if not cuts:
        raise EmptyFamily("inf of an empty family")
    best = cuts[0]
    for c in cuts[1:]:
        if cut_lt(c, best):
            best = c
    return best


# ---------------------------------------------------------------------------
# Extension of automorphisms to the completion
# ---------------------------------------------------------------------------


def _apply_q_aut_quad(aut: Automorphism, qv: QuadValue) -> QuadValue:
    if isinstance(aut, Identity):
        return qv
    if isinstance(aut, Translate):
        return qv + aut.t
    if isinstance(aut, PiecewiseLinear):
        piece = aut.pieces[-1]
        for i, b in enumerate(aut.breakpoints):
            if qv.cmp_rational(b) < 0:
                piece = aut.pieces[i]
                break
        slope, icept = piece
        return qv.scale(slope) + icept
    if isinstance(aut, Composite):
        for part in reversed(aut.parts):
            qv = _apply_q_aut_quad(part, qv)
        return qv
    raise UnsupportedOrder(f"cannot extend {aut!r} over the surd gaps of Q")


def _apply_lex_aut_gap(aut: Automorphism, gap: TopOfCopy) -> TopOfCopy:
    if isinstance(aut, Identity):
        return gap
    if isinstance(aut, LexMap):
        return TopOfCopy(aut.minor_aut.apply_value(gap.index))
    if isinstance(aut, Composite):
        for part in reversed(aut.parts):
            gap = _apply_lex_aut_gap(part, gap)
        return gap
    raise UnsupportedOrder(f"cannot extend {aut!r} over the gaps of lex(Z,Z)")


def _quad_to_surd(qv: QuadValue) -> SurdGap:
    s = math.lcm(qv.a.denominator, qv.b.denominator)
    return SurdGap(qv.a.numerator * (s // qv.a.denominator), qv.b.numerator * (s // qv.b.denominator), qv.r, s)


@dataclass(frozen=True)
class ExtendedAutomorphism:
    """The unique extension of an order automorphism to the completion.

    On order elements it agrees with the underlying automorphism; gaps go
    to gaps symbolically (translations and affine pieces move surd cuts,
    minor shifts move top-of-copy indices).
    """

    base: Automorphism

    def apply_cut(self, c: CutPoint) -> CutPoint:
        if c.order != self.base.order:
            raise OrderMismatch("cut over a different order than the automorphism")
        if c.element is not None:
            return point_cut(c.order, self.base.apply(c.element))
        if isinstance(c.gap, SurdGap):
            image = _apply_q_aut_quad(self.base, c.gap.quad())
            return gap_cut(Q, _quad_to_surd(image))
        if isinstance(c.gap, TopOfCopy):
            return gap_cut(c.order, _apply_lex_aut_gap(self.base, c.gap))
        raise UnsupportedOrder(f"no gap image rule for {c.gap!r}")

    def inverse(self) -> "ExtendedAutomorphism":
        return ExtendedAutomorphism(self.base.inverse())


def extend_automorphism(f: Automorphism) -> ExtendedAutomorphism:
    complete(f.order)  # raises UnsupportedOrder outside the supported fragment
    return ExtendedAutomorphism(f)


# ---------------------------------------------------------------------------
# Certified sequence families
# ---------------------------------------------------------------------------

INCREASING = "increasing"
DECREASING = "decreasing"


@dataclass(frozen=True)
class SequenceFamily:
    """A strictly monotone cut sequence with a declared limit.

    The limit claim is certified only up to ``bound`` terms and sampled
    probe cuts (true limit verification is undecidable); reports carry
    the certified-to-bound caveat explicitly.
    """

    order: OrderExpr
    rule: Callable[[int], CutPoint]
    direction: str
    declared_limit: CutPoint
    bound: int = 1000

    def __post_init__(self):
        if self.direction not in (INCREASING, DECREASING):
            raise ValueError("direction must be 'increasing' or 'decreasing'")
        if self.bound < 1:
            raise ValueError("verification bound must be positive")
        if self.declared_limit.order != self.order:
            raise OrderMismatch("declared limit over a different order")

    def term(self, n: int) -> CutPoint:
        c = self.rule(n)
        if c.order != self.order:
            raise OrderMismatch("sequence rule produced a cut over a different order")
        return c


@dataclass
class FamilyReport:
    passed: bool
    failures: List[str] = field(default_factory=list)
    terms_checked: int = 0
    probes_checked: int = 0
    note: str = "certified-to-bound"


def verify_sequence_family(fam: SequenceFamily, probes: int = 100, seed: int = 0,
                           monotone_terms: Optional[int] = None) -> FamilyReport:
    """Check monotonicity, side, and bounded approach of a sequence family.

    Approach check: for sampled cuts strictly between term 0 and the
    declared limit, some term within the bound must pass the probe.
    Failures are reported with the violated check and index, not raised.
    """
    from . import sampling  # deferred: sampling needs cut comparison

    report = FamilyReport(passed=True)
    up = fam.direction == INCREASING
    n_terms = min(fam.bound, monotone_terms if monotone_terms is not None else fam.bound)
    prev = fam.term(0)
    terms = [prev]
    for n in range(1, n_terms):
        cur = fam.term(n)
        ok = cut_lt(prev, cur) if up else cut_lt(cur, prev)
        if not ok:
            report.passed = False
            report.failures.append(f"monotonicity violated at index {n}")
            break
        prev = cur
        terms.append(cur)
    report.terms_checked = len(terms)
    for n, cur in enumerate(terms):
        on_side = cut_lt(cur, fam.declared_limit) if up else cut_lt(fam.declared_limit, cur)
        if not on_side:
            report.passed = False
            report.failures.append(f"term {n} on the wrong side of the declared limit")
            return report
    if not report.passed:
        return report

    rng = sampling.make_rng(seed)
    first = terms[0]
    lo, hi = (first, fam.declared_limit) if up else (fam.declared_limit, first)
    for k in range(probes):
        probe = sampling.sample_cut_between(fam.order, lo, hi, rng)
        report.probes_checked += 1
        passed_probe = False
        for n in range(fam.bound):
            t = terms[n] if n < len(terms) else fam.term(n)
            beyond = cut_lt(probe, t) if up else cut_lt(t, probe)
            if beyond:
                passed_probe = True
                break
        if not passed_probe:
            report.passed = False
            report.failures.append(
                f"approach check: sampled cut {sampling.describe_cut(probe)} never passed within bound {fam.bound}"
            )
            return report
    return report
