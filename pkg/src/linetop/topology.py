"""The chain of ray topologies on the order with a bottom point added.

The carrier is the order ``L`` with a fresh minimum ``z``.  For a cut
``c`` of the completion, the topology consists of every left ray
``[z, a)`` (all of them, for every cut ``a``), the punctured rays
``(z, b)`` for cuts ``b <= c``, and the empty and full sets.  Every open
set is one of these basic opens, so nothing here ever materializes an
infinite set: all reasoning is exact cut comparison on ray descriptors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Union

from .completion import (
    CutPoint,
    SequenceFamily,
    cmp_cut,
    cut_leq,
    cut_lt,
    inf_finite,
    point_cut,
    sup_finite,
    verify_sequence_family,
    witness_m2,
    INCREASING,
    DECREASING,
)
from .errors import (
    EmptyFamily,
    OrderMismatch,
    OutOfSandwich,
    UncertifiedLimit,
    UnsupportedOrder,
)
from .orders import Cmp, Elem, OrderExpr, is_homogeneous_pathway

# ---------------------------------------------------------------------------
# Points of the space
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Point:
    """A point of the space: the bottom point, or an order element."""

    order: OrderExpr
    value: Optional[Elem] = None  # None encodes the bottom point

    @property
    def is_bottom(self) -> bool:
        return self.value is None


def bottom(order: OrderExpr) -> Point:
    return Point(order)


def at(order: OrderExpr, value) -> Point:
    x = value if isinstance(value, Elem) else Elem(order, value)
    return Point(order, x)


# ---------------------------------------------------------------------------
# Basic open sets
# ---------------------------------------------------------------------------

EMPTY = "empty"
FULL = "full"
LEFT_RAY = "left_ray"  # [z, a): contains the bottom point
PUNCTURED = "punctured"  # (z, b): bottom point excluded


@dataclass(frozen=True)
class BasicOpen:
    order: OrderExpr
    kind: str
    cut: Optional[CutPoint] = None

    def __post_init__(self):
        if self.kind in (EMPTY, FULL):
            if self.cut is not None:
                raise ValueError("empty/full opens carry no cut")
        elif self.kind in (LEFT_RAY, PUNCTURED):
            if self.cut is None:
                raise ValueError("ray opens need a cut")
            if self.cut.order != self.order:
                raise OrderMismatch("ray cut over a different order")
        else:
            raise ValueError(f"unknown open kind {self.kind!r}")


def empty_set(order: OrderExpr) -> BasicOpen:
    return BasicOpen(order, EMPTY)


def full_set(order: OrderExpr) -> BasicOpen:
    return BasicOpen(order, FULL)


def left_ray(cut: CutPoint) -> BasicOpen:
    return BasicOpen(cut.order, LEFT_RAY, cut)


def punctured_ray(cut: CutPoint) -> BasicOpen:
    return BasicOpen(cut.order, PUNCTURED, cut)


def mem(p: Point, open_set: BasicOpen) -> bool:
    """Exact membership of a point in a basic open."""
    if p.order != open_set.order:
        raise OrderMismatch("point and open set over different orders")
    if open_set.kind == EMPTY:
        return False
    if open_set.kind == FULL:
        return True
    if p.is_bottom:
        return open_set.kind == LEFT_RAY
    return cut_lt(point_cut(p.order, p.value), open_set.cut)


def basic_subset(o1: BasicOpen, o2: BasicOpen) -> bool:
    """Extensional inclusion of basic opens, decided by cut comparison.

    Sound because distinct cuts always have distinct element traces
    (there is a separating element between any two cuts), so trace
    inclusion between rays mirrors the cut order exactly.
    """
    if o1.order != o2.order:
        raise OrderMismatch("open sets over different orders")
    if o1.kind == EMPTY or o2.kind == FULL:
        return True
    if o2.kind == EMPTY:
        return o1.kind == EMPTY
    if o1.kind == FULL:
        return False  # rays never exhaust the space: no top cut exists
    if o1.kind == LEFT_RAY and o2.kind == PUNCTURED:
        return False  # the bottom point obstructs
    return cut_leq(o1.cut, o2.cut)


# ---------------------------------------------------------------------------
# Topology descriptors
# ---------------------------------------------------------------------------


class TopDescriptor:
    order: OrderExpr


@dataclass(frozen=True)
class RayTopology(TopDescriptor):
    """Left rays plus punctured rays bounded by ``limit`` (plus empty/full)."""

    limit: CutPoint

    @property
    def order(self) -> OrderExpr:
        return self.limit.order


@dataclass(frozen=True)
class LeftRayTopology(TopDescriptor):
    """Left rays only (plus empty/full): the meet of the whole chain."""

    order: OrderExpr


@dataclass(frozen=True)
class FullPunctureTopology(TopDescriptor):
    """Left rays plus every punctured ray: the union of the whole chain."""

    order: OrderExpr


def _check_pathway(order: OrderExpr) -> None:
    if not is_homogeneous_pathway(order):
        raise UnsupportedOrder(
            "the topology layer accepts only the endpoint-free homogeneous "
            "fragment (Z, Q, and lex towers over them)"
        )


def ray_topology(c: CutPoint) -> RayTopology:
    _check_pathway(c.order)
    return RayTopology(c)


def in_topology(open_set: BasicOpen, top: TopDescriptor) -> bool:
    """Is the basic open a member of the named topology's defining family?"""
    if open_set.order != top.order:
        raise OrderMismatch("open set and topology over different orders")
    if open_set.kind in (EMPTY, FULL, LEFT_RAY):
        return True
    if isinstance(top, RayTopology):
        return cut_leq(open_set.cut, top.limit)
    if isinstance(top, LeftRayTopology):
        return False
    if isinstance(top, FullPunctureTopology):
        return True
    raise UnsupportedOrder(f"membership rule missing for {top!r}")


# ---------------------------------------------------------------------------
# The inclusion criterion with witnesses
# ---------------------------------------------------------------------------

STRICTLY_LESS = "strictly_less"
EQUAL = "equal"
NOT_LEQ = "not_leq"


@dataclass(frozen=True)
class InclusionResult:
    relation: str
    witness: Optional[BasicOpen] = None  # open in the larger topology only
    separator: Optional[Elem] = None  # element certifying non-membership


def top_leq(c1: CutPoint, c2: CutPoint) -> InclusionResult:
    """Compare the topologies at two cuts; strict results carry witnesses.

    For c1 < c2 the punctured ray at c2 lies in the larger topology, and
    the separating element x with c1 <= x < c2 certifies extensionally
    that no punctured ray admitted at c1 has the same trace.
    """
    if c1.order != c2.order:
        raise OrderMismatch("cut points over different orders")
    rel = cmp_cut(c1, c2)
    if rel == Cmp.EQUAL:
        return InclusionResult(EQUAL)
    if rel == Cmp.LESS:
        return InclusionResult(STRICTLY_LESS, punctured_ray(c2), witness_m2(c1, c2))
    return InclusionResult(NOT_LEQ, punctured_ray(c1), witness_m2(c2, c1))


def validate_strict_witness(c_small: CutPoint, c_big: CutPoint,
                            witness: BasicOpen, separator: Elem) -> bool:
    """Re-check a strict-inclusion witness from first principles."""
    if witness.kind != PUNCTURED or cmp_cut(witness.cut, c_big) != Cmp.EQUAL:
        return False
    sep_cut = point_cut(c_small.order, separator)
    # separator lies inside the witness ray but at/above the smaller cut,
    # so the witness trace differs from every ray admitted at c_small
    return cut_lt(sep_cut, c_big) and cut_leq(c_small, sep_cut)


# ---------------------------------------------------------------------------
# Joins and meets along the chain
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WholeOrder:
    """Symbolic token: the family of all element cuts of the order."""

    order: OrderExpr


Family = Union[List[CutPoint], SequenceFamily, WholeOrder]


def _family_limit(family: Family, want: str) -> CutPoint:
    if isinstance(family, SequenceFamily):
        expected = INCREASING if want == "sup" else DECREASING
        if family.direction != expected:
            raise UncertifiedLimit(
                f"{want} of a {family.direction} family is its first term; "
                f"pass a finite family instead"
            )
        report = verify_sequence_family(family)
        if not report.passed:
            raise UncertifiedLimit("; ".join(report.failures))
        return family.declared_limit
    if not family:
        raise EmptyFamily(f"{want} of an empty family")
    return sup_finite(family) if want == "sup" else inf_finite(family)


def join(family: Family) -> TopDescriptor:
    """The least topology containing every member of the family."""
    if isinstance(family, WholeOrder):
        _check_pathway(family.order)
        return FullPunctureTopology(family.order)
    limit = _family_limit(family, "sup")
    return ray_topology(limit)


def meet(family: Family) -> TopDescriptor:
    """The intersection of the family of topologies."""
    if isinstance(family, WholeOrder):
        _check_pathway(family.order)
        return LeftRayTopology(family.order)
    limit = _family_limit(family, "inf")
    return ray_topology(limit)


# ---------------------------------------------------------------------------
# Sandwich saturation (convexity at generator level)
# ---------------------------------------------------------------------------


def saturate_sandwich(x1: Elem, generators: Union[List[CutPoint], SequenceFamily],
                      x2: Elem) -> TopDescriptor:
    """The topology generated by the rays at ``x1`` plus extra punctured rays.

    Every generator cut must lie in (x1, x2].  With no generators the
    result is the topology at x1; otherwise adding the punctured rays at
    the generators saturates to the topology at their supremum, which is
    how any topology sandwiched between two chain members collapses back
    onto the chain.
    """
    order = x1.order
    base = point_cut(order, x1)
    top_bound = point_cut(order, x2)
    if isinstance(generators, SequenceFamily):
        report = verify_sequence_family(generators)
        if not report.passed:
            raise UncertifiedLimit("; ".join(report.failures))
        probe = [generators.term(0), generators.declared_limit]
        for b in probe:
            if not (cut_lt(base, b) and cut_leq(b, top_bound)):
                raise OutOfSandwich(f"generator {b!r} outside the sandwich interval")
        sup = generators.declared_limit if generators.direction == INCREASING else generators.term(0)
        return ray_topology(sup)
    for b in generators:
        if not (cut_lt(base, b) and cut_leq(b, top_bound)):
            raise OutOfSandwich(f"generator {b!r} outside the sandwich interval")
    if not generators:
        return ray_topology(base)
    return ray_topology(sup_finite(list(generators)))
