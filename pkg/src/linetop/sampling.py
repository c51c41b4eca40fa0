"""Seeded deterministic sampling of elements, cuts, and intervals.

Every stochastic check in the package draws from a ``random.Random``
seeded explicitly, so a run is reproducible bit-for-bit from its seed.
Sampled rationals keep small denominators (Stern-Brocot descent plus a
short jitter walk) so that bounded approach checks can actually pass
within their verification bounds.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .completion import (
    LEX_ZZ,
    CutPoint,
    SurdGap,
    TopOfCopy,
    complete,
    cut_lt,
    cut_quad,
    gap_cut,
    point_cut,
)
from .errors import EmptyInterval, UnsupportedOrder
from .orders import (
    Elem,
    IntegerOrder,
    Lex,
    OrderExpr,
    Q,
    RationalOrder,
    Reverse,
    Sum,
    Z,
    LEFT,
    RIGHT,
)
from .surds import rational_quad, simplest_rational_between
from .textio import cut_text

DEFAULT_SPAN = 400
_NONSQUARE = (2, 3, 5, 6, 7, 10, 11, 13)


def make_rng(seed: int) -> random.Random:
    return random.Random(seed)


def sample_value(order: OrderExpr, rng: random.Random, span: int = DEFAULT_SPAN):
    if isinstance(order, IntegerOrder):
        return rng.randint(-span, span)
    if isinstance(order, RationalOrder):
        return Fraction(rng.randint(-span, span), rng.randint(1, 64))
    if isinstance(order, Lex):
        return (sample_value(order.major, rng, span), sample_value(order.minor, rng, span // 8 or 1))
    if isinstance(order, Sum):
        side = LEFT if rng.random() < 0.5 else RIGHT
        inner = order.left if side == LEFT else order.right
        return (side, sample_value(inner, rng, span))
    if isinstance(order, Reverse):
        return sample_value(order.inner, rng, span)
    raise UnsupportedOrder(f"cannot sample from {order!r}")


def sample_elem(order: OrderExpr, rng: random.Random, span: int = DEFAULT_SPAN) -> Elem:
    return Elem(order, sample_value(order, rng, span))


def sample_gap(order: OrderExpr, rng: random.Random, span: int = DEFAULT_SPAN) -> CutPoint:
    spec = complete(order)
    if spec.is_complete:
        raise UnsupportedOrder(f"{order!r} has no gaps")
    if isinstance(order, RationalOrder):
        r = rng.choice(_NONSQUARE)
        q = rng.choice((-3, -2, -1, 1, 2, 3))
        p = rng.randint(-span, span)
        s = rng.randint(1, 16)
        return gap_cut(Q, SurdGap(p, q, r, s))
    return gap_cut(order, TopOfCopy(rng.randint(-span // 8 or -1, span // 8 or 1)))


def sample_cut(order: OrderExpr, rng: random.Random, span: int = DEFAULT_SPAN,
               gap_ratio: float = 0.3) -> CutPoint:
    spec = complete(order)
    if not spec.is_complete and rng.random() < gap_ratio:
        return sample_gap(order, rng, span)
    return point_cut(order, sample_elem(order, rng, span))


# ---------------------------------------------------------------------------
# Sampling strictly inside an interval of the completion
# ---------------------------------------------------------------------------


def _sample_rational_between(lo: CutPoint, hi: CutPoint, rng: random.Random) -> Fraction:
    lo_q, hi_q = cut_quad(lo), cut_quad(hi)
    r = simplest_rational_between(lo_q, hi_q)
    for _ in range(rng.randrange(4)):
        if rng.random() < 0.5:
            r = simplest_rational_between(rational_quad(r), hi_q)
        else:
            r = simplest_rational_between(lo_q, rational_quad(r))
    return r


def _lex_copy_range(lo: CutPoint, hi: CutPoint):
    if lo.element is not None:
        j_min = lo.element.value[1]
    else:
        j_min = lo.gap.index + 1
    if hi.element is not None:
        j_max = hi.element.value[1]
    else:
        j_max = hi.gap.index
    return j_min, j_max


def sample_cut_between(order: OrderExpr, lo: CutPoint, hi: CutPoint,
                       rng: random.Random, span: int = DEFAULT_SPAN) -> CutPoint:
    """An element cut strictly between lo and hi (lo < hi required)."""
    if not cut_lt(lo, hi):
        raise ValueError("need lo < hi")
    if isinstance(order, RationalOrder):
        return point_cut(Q, _sample_rational_between(lo, hi, rng))
    if isinstance(order, IntegerOrder):
        a, b = lo.element.value, hi.element.value
        if a + 1 >= b:
            raise EmptyInterval("no integer strictly between consecutive cuts")
        return point_cut(Z, rng.randint(a + 1, b - 1))
    if order == LEX_ZZ:
        j_min, j_max = _lex_copy_range(lo, hi)
        copies = list(range(j_min, j_max + 1))
        rng.shuffle(copies)
        for j in copies:
            a_lo: Optional[int] = None
            a_hi: Optional[int] = None
            if lo.element is not None and lo.element.value[1] == j:
                a_lo = lo.element.value[0] + 1
            if hi.element is not None and hi.element.value[1] == j:
                a_hi = hi.element.value[0] - 1
            if a_lo is not None and a_hi is not None:
                if a_lo > a_hi:
                    continue
                return point_cut(order, (rng.randint(a_lo, a_hi), j))
            if a_lo is not None:
                return point_cut(order, (a_lo + rng.randint(0, span), j))
            if a_hi is not None:
                return point_cut(order, (a_hi - rng.randint(0, span), j))
            return point_cut(order, (rng.randint(-span, span), j))
        raise EmptyInterval("no element strictly between the given cuts")
    raise UnsupportedOrder(f"cannot sample inside intervals of {order!r}")


def sample_cut_below(order: OrderExpr, hi: CutPoint, rng: random.Random,
                     span: int = DEFAULT_SPAN) -> CutPoint:
    """An element cut strictly below ``hi``."""
    if isinstance(order, RationalOrder):
        n = cut_quad(hi).floor()
        lo = point_cut(Q, Fraction(n - 1 - rng.randint(0, span // 8)))
        return sample_cut_between(order, lo, hi, rng, span)
    if isinstance(order, IntegerOrder):
        return point_cut(Z, hi.element.value - rng.randint(1, span))
    if order == LEX_ZZ:
        if hi.element is not None:
            a, j = hi.element.value
            anchor = point_cut(order, (a - span - 2, j))
        else:
            anchor = point_cut(order, (-span - 2, hi.gap.index))
        return sample_cut_between(order, anchor, hi, rng, span)
    raise UnsupportedOrder(f"cannot sample below cuts of {order!r}")


def sample_cut_above(order: OrderExpr, lo: CutPoint, rng: random.Random,
                     span: int = DEFAULT_SPAN) -> CutPoint:
    """An element cut strictly above ``lo``."""
    if isinstance(order, RationalOrder):
        n = cut_quad(lo).floor()
        hi = point_cut(Q, Fraction(n + 2 + rng.randint(0, span // 8)))
        return sample_cut_between(order, lo, hi, rng, span)
    if isinstance(order, IntegerOrder):
        return point_cut(Z, lo.element.value + rng.randint(1, span))
    if order == LEX_ZZ:
        if lo.element is not None:
            a, j = lo.element.value
            anchor = point_cut(order, (a + span + 2, j))
        else:
            anchor = point_cut(order, (span + 2, lo.gap.index + 1))
        return sample_cut_between(order, lo, anchor, rng, span)
    raise UnsupportedOrder(f"cannot sample above cuts of {order!r}")


def sample_cut_at_most(order: OrderExpr, bound: CutPoint, rng: random.Random,
                       span: int = DEFAULT_SPAN, at_ratio: float = 0.15) -> CutPoint:
    """A cut <= bound: sometimes the bound itself, else strictly below."""
    if rng.random() < at_ratio:
        return bound
    return sample_cut_below(order, bound, rng, span)


def sample_cut_pair(order: OrderExpr, rng: random.Random, span: int = DEFAULT_SPAN):
    c1 = sample_cut(order, rng, span)
    c2 = sample_cut(order, rng, span)
    return c1, c2


def describe_cut(c: CutPoint) -> str:
    return cut_text(c)
