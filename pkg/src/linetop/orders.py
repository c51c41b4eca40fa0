"""Symbolic linear orders, their elements, and order automorphisms.

Supported order expressions are built from the integers and the rationals
by lexicographic products, sums and reversal.  ``Lex(A, B)`` denotes
"B-many copies of A": comparison is by the *minor* (B) coordinate first,
then by the major (A) coordinate.  Both conventions exist in the
literature; this one matches the ordinal-style product in which ZZ is
Z-many copies of Z glued end to end.

All element arithmetic is exact: integers are arbitrary precision and
rationals are ``fractions.Fraction`` (always in lowest terms with a
positive denominator).  No floating point enters any comparison.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import EmptyInterval, OrderMismatch, UnsupportedOrder


class Cmp(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _as_cmp(sign: int) -> Cmp:
    if sign < 0:
        return Cmp.LESS
    if sign > 0:
        return Cmp.GREATER
    return Cmp.EQUAL


# ---------------------------------------------------------------------------
# Order expressions
# ---------------------------------------------------------------------------


class OrderExpr:
    """Base class for symbolic order expressions."""

    def __str__(self) -> str:  # pragma: no cover - trivial dispatch
        return order_text(self)


@dataclass(frozen=True)
class IntegerOrder(OrderExpr):
    pass


@dataclass(frozen=True)
class RationalOrder(OrderExpr):
    pass


@dataclass(frozen=True)
class Lex(OrderExpr):
    major: OrderExpr
    minor: OrderExpr


@dataclass(frozen=True)
class Sum(OrderExpr):
    left: OrderExpr
    right: OrderExpr


@dataclass(frozen=True)
class Reverse(OrderExpr):
    inner: OrderExpr


Z = IntegerOrder()
Q = RationalOrder()


def order_text(order: OrderExpr) -> str:
    if isinstance(order, IntegerOrder):
        return "Z"
    if isinstance(order, RationalOrder):
        return "Q"
    if isinstance(order, Lex):
        return f"lex({order_text(order.major)},{order_text(order.minor)})"
    if isinstance(order, Sum):
        return f"sum({order_text(order.left)},{order_text(order.right)})"
    if isinstance(order, Reverse):
        return f"rev({order_text(order.inner)})"
    raise UnsupportedOrder(f"unknown order expression {order!r}")


def is_homogeneous_pathway(order: OrderExpr) -> bool:
    """True for the fragment admitted by the topology layer.

    Z, Q, and finite lexicographic towers over them are 1-homogeneous and
    have no endpoints.  Sum expressions are rejected conservatively even
    when order-isomorphic to a homogeneous order (e.g. Z+Z): isomorphism
    detection is out of scope, callers must supply the canonical form.
    """
    if isinstance(order, (IntegerOrder, RationalOrder)):
        return True
    if isinstance(order, Lex):
        return is_homogeneous_pathway(order.major) and is_homogeneous_pathway(order.minor)
    if isinstance(order, Reverse):
        return is_homogeneous_pathway(order.inner)
    return False


# ---------------------------------------------------------------------------
# Elements
# ---------------------------------------------------------------------------

LEFT = "left"
RIGHT = "right"


def _canon_value(order: OrderExpr, value):
    if isinstance(order, IntegerOrder):
        if isinstance(value, bool) or not isinstance(value, int):
            raise OrderMismatch(f"integer order needs an int, got {value!r}")
        return value
    if isinstance(order, RationalOrder):
        if isinstance(value, bool):
            raise OrderMismatch(f"rational order needs a rational, got {value!r}")
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, Fraction):
            return value
        raise OrderMismatch(f"rational order needs a rational, got {value!r}")
    if isinstance(order, Lex):
        if not (isinstance(value, tuple) and len(value) == 2):
            raise OrderMismatch(f"lex order needs a (major, minor) pair, got {value!r}")
        return (_canon_value(order.major, value[0]), _canon_value(order.minor, value[1]))
    if isinstance(order, Sum):
        if not (isinstance(value, tuple) and len(value) == 2 and value[0] in (LEFT, RIGHT)):
            raise OrderMismatch(f"sum order needs a (side, value) pair, got {value!r}")
        side = value[0]
        inner = order.left if side == LEFT else order.right
        return (side, _canon_value(inner, value[1]))
    if isinstance(order, Reverse):
        return _canon_value(order.inner, value)
    raise UnsupportedOrder(f"unknown order expression {order!r}")


@dataclass(frozen=True)
class Elem:
    """An element of a symbolic order; carries its order expression."""

    order: OrderExpr
    value: object

    def __post_init__(self):
        object.__setattr__(self, "value", _canon_value(self.order, self.value))


def elem(order: OrderExpr, value) -> Elem:
    return Elem(order, value)


def _require_same_order(order: OrderExpr, *items) -> None:
    for it in items:
        if it.order != order:
            raise OrderMismatch(f"expected {order_text(order)}, got {order_text(it.order)}")


def _cmp_value(order: OrderExpr, a, b) -> int:
    if isinstance(order, (IntegerOrder, RationalOrder)):
        return (a > b) - (a < b)
    if isinstance(order, Lex):
        s = _cmp_value(order.minor, a[1], b[1])
        if s != 0:
            return s
        return _cmp_value(order.major, a[0], b[0])
    if isinstance(order, Sum):
        if a[0] != b[0]:
            return -1 if a[0] == LEFT else 1
        inner = order.left if a[0] == LEFT else order.right
        return _cmp_value(inner, a[1], b[1])
    if isinstance(order, Reverse):
        return -_cmp_value(order.inner, a, b)
    raise UnsupportedOrder(f"unknown order expression {order!r}")


def cmp(order: OrderExpr, x: Elem, y: Elem) -> Cmp:
    """Exact total-order comparison of two elements of ``order``."""
    _require_same_order(order, x, y)
    return _as_cmp(_cmp_value(order, x.value, y.value))


def _value_above(order: OrderExpr, v):
    """Some element strictly above ``v``; always exists (no endpoints)."""
    if isinstance(order, IntegerOrder):
        return v + 1
    if isinstance(order, RationalOrder):
        return v + 1
    if isinstance(order, Lex):
        return (_value_above(order.major, v[0]), v[1])
    if isinstance(order, Sum):
        side, inner_v = v
        inner = order.left if side == LEFT else order.right
        return (side, _value_above(inner, inner_v))
    if isinstance(order, Reverse):
        return _value_below(order.inner, v)
    raise UnsupportedOrder(f"unknown order expression {order!r}")


def _value_below(order: OrderExpr, v):
    if isinstance(order, IntegerOrder):
        return v - 1
    if isinstance(order, RationalOrder):
        return v - 1
    if isinstance(order, Lex):
        return (_value_below(order.major, v[0]), v[1])
    if isinstance(order, Sum):
        side, inner_v = v
        inner = order.left if side == LEFT else order.right
        return (side, _value_below(inner, inner_v))
    if isinstance(order, Reverse):
        return _value_above(order.inner, v)
    raise UnsupportedOrder(f"unknown order expression {order!r}")


def element_above(order: OrderExpr, x: Elem) -> Elem:
    _require_same_order(order, x)
    return Elem(order, _value_above(order, x.value))


def element_below(order: OrderExpr, x: Elem) -> Elem:
    _require_same_order(order, x)
    return Elem(order, _value_below(order, x.value))


def _value_between(order: OrderExpr, lo, hi):
    """Some value strictly between lo and hi, or None when the pair is a jump."""
    if isinstance(order, IntegerOrder):
        return lo + 1 if lo + 1 < hi else None
    if isinstance(order, RationalOrder):
        return (lo + hi) / 2
    if isinstance(order, Lex):
        if lo[1] == hi[1]:
            mid = _value_between(order.major, lo[0], hi[0])
            return None if mid is None else (mid, lo[1])
        mid_minor = _value_between(order.minor, lo[1], hi[1])
        if mid_minor is not None:
            return (lo[0], mid_minor)
        # adjacent copies: anything above lo within lo's copy works
        return (_value_above(order.major, lo[0]), lo[1])
    if isinstance(order, Sum):
        if lo[0] == hi[0]:
            inner = order.left if lo[0] == LEFT else order.right
            mid = _value_between(inner, lo[1], hi[1])
            return None if mid is None else (lo[0], mid)
        # lo on the left part, hi on the right: go up inside the left part
        return (LEFT, _value_above(order.left, lo[1]))
    if isinstance(order, Reverse):
        mid = _value_between(order.inner, hi, lo)
        return mid
    raise UnsupportedOrder(f"unknown order expression {order!r}")


def element_between(order: OrderExpr, lo: Elem, hi: Elem) -> Optional[Elem]:
    """Some element strictly between ``lo`` and ``hi``; None when none exists."""
    _require_same_order(order, lo, hi)
    if _cmp_value(order, lo.value, hi.value) >= 0:
        raise EmptyInterval(f"need lo < hi, got {lo.value!r} >= {hi.value!r}")
    mid = _value_between(order, lo.value, hi.value)
    return None if mid is None else Elem(order, mid)


def _value_successor(order: OrderExpr, v):
    """The immediate successor of ``v`` when one exists, else None."""
    if isinstance(order, IntegerOrder):
        return v + 1
    if isinstance(order, RationalOrder):
        return None
    if isinstance(order, Lex):
        nxt = _value_successor(order.major, v[0])
        return None if nxt is None else (nxt, v[1])
    if isinstance(order, Sum):
        side, inner_v = v
        inner = order.left if side == LEFT else order.right
        nxt = _value_successor(inner, inner_v)
        return None if nxt is None else (side, nxt)
    if isinstance(order, Reverse):
        prv = _value_predecessor(order.inner, v)
        return prv
    raise UnsupportedOrder(f"unknown order expression {order!r}")


def _value_predecessor(order: OrderExpr, v):
    if isinstance(order, IntegerOrder):
        return v - 1
    if isinstance(order, RationalOrder):
        return None
    if isinstance(order, Lex):
        prv = _value_predecessor(order.major, v[0])
        return None if prv is None else (prv, v[1])
    if isinstance(order, Sum):
        side, inner_v = v
        inner = order.left if side == LEFT else order.right
        prv = _value_predecessor(inner, inner_v)
        return None if prv is None else (side, prv)
    if isinstance(order, Reverse):
        return _value_successor(order.inner, v)
    raise UnsupportedOrder(f"unknown order expression {order!r}")


def successor(order: OrderExpr, x: Elem) -> Optional[Elem]:
    _require_same_order(order, x)
    nxt = _value_successor(order, x.value)
    return None if nxt is None else Elem(order, nxt)


def predecessor(order: OrderExpr, x: Elem) -> Optional[Elem]:
    _require_same_order(order, x)
    prv = _value_predecessor(order, x.value)
    return None if prv is None else Elem(order, prv)


# ---------------------------------------------------------------------------
# Automorphisms
# ---------------------------------------------------------------------------


class Automorphism:
    """A strictly increasing bijection of an order onto itself."""

    order: OrderExpr

    def apply_value(self, v):
        raise NotImplementedError

    def inverse(self) -> "Automorphism":
        raise NotImplementedError

    def apply(self, x: Elem) -> Elem:
        if x.order != self.order:
            raise OrderMismatch(
                f"automorphism over {order_text(self.order)} applied to "
                f"element of {order_text(x.order)}"
            )
        return Elem(self.order, self.apply_value(x.value))


@dataclass(frozen=True)
class Identity(Automorphism):
    order: OrderExpr

    def apply_value(self, v):
        return v

    def inverse(self) -> "Identity":
        return self


@dataclass(frozen=True)
class Shift(Automorphism):
    """Integer translation x -> x + k on Z."""

    k: int
    order: OrderExpr = Z

    def __post_init__(self):
        if not isinstance(self.order, IntegerOrder):
            raise UnsupportedOrder("Shift is an automorphism of Z only")

    def apply_value(self, v):
        return v + self.k

    def inverse(self) -> "Shift":
        return Shift(-self.k)


@dataclass(frozen=True)
class Translate(Automorphism):
    """Rational translation x -> x + t on Q."""

    t: Fraction
    order: OrderExpr = Q

    def __post_init__(self):
        object.__setattr__(self, "t", Fraction(self.t))
        if not isinstance(self.order, RationalOrder):
            raise UnsupportedOrder("Translate is an automorphism of Q only")

    def apply_value(self, v):
        return v + self.t

    def inverse(self) -> "Translate":
        return Translate(-self.t)

    def apply_affine(self):
        return [(Fraction(1), self.t)]


@dataclass(frozen=True)
class PiecewiseLinear(Automorphism):
    """Increasing piecewise-affine map of Q with rational data.

    ``pieces[i]`` is the (slope, intercept) pair on the interval below
    ``breakpoints[i]``; the final piece covers everything above the last
    breakpoint.  Pieces must be continuous at the breakpoints and all
    slopes strictly positive, which makes the map a bijection of Q.
    """

    breakpoints: tuple
    pieces: tuple
    order: OrderExpr = Q

    def __post_init__(self):
        bps = tuple(Fraction(b) for b in self.breakpoints)
        pcs = tuple((Fraction(s), Fraction(c)) for s, c in self.pieces)
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "pieces", pcs)
        if len(pcs) != len(bps) + 1:
            raise ValueError("need exactly one more piece than breakpoints")
        if any(bps[i] >= bps[i + 1] for i in range(len(bps) - 1)):
            raise ValueError("breakpoints must be strictly ascending")
        if any(s <= 0 for s, _ in pcs):
            raise ValueError("all slopes must be positive")
        for i, b in enumerate(bps):
            s0, c0 = pcs[i]
            s1, c1 = pcs[i + 1]
            if s0 * b + c0 != s1 * b + c1:
                raise ValueError(f"discontinuity at breakpoint {b}")

    def piece_at(self, v: Fraction):
        for i, b in enumerate(self.breakpoints):
            if v < b:
                return self.pieces[i]
        return self.pieces[-1]

    def apply_value(self, v):
        s, c = self.piece_at(v)
        return s * v + c

    def inverse(self) -> "PiecewiseLinear":
        inv_pieces = tuple((1 / s, -c / s) for s, c in self.pieces)
        inv_bps = tuple(self.pieces[i][0] * b + self.pieces[i][1] for i, b in enumerate(self.breakpoints))
        return PiecewiseLinear(inv_bps, inv_pieces)


@dataclass(frozen=True, eq=False)
class LexMap(Automorphism):
    """Automorphism of ``Lex(A, B)`` from a minor automorphism plus per-copy
    major automorphisms (a finite override map, identity-by-default).

    ``apply((a, m)) = (major_map_for_copy_m(a), minor_aut(m))``.
    """

    order: Lex
    minor_aut: Automorphism
    overrides: tuple  # sorted tuple of (minor value, Automorphism of major)
    default_major: Automorphism

    def __post_init__(self):
        if not isinstance(self.order, Lex):
            raise UnsupportedOrder("LexMap needs a Lex order")
        if self.minor_aut.order != self.order.minor:
            raise OrderMismatch("minor automorphism over the wrong order")
        if self.default_major.order != self.order.major:
            raise OrderMismatch("default major automorphism over the wrong order")
        fixed = tuple(sorted(((_canon_value(self.order.minor, k), g) for k, g in dict(self.overrides).items()),
                             key=lambda kv: _SortKey(self.order.minor, kv[0])))
        for _, g in fixed:
            if g.order != self.order.major:
                raise OrderMismatch("override automorphism over the wrong order")
        object.__setattr__(self, "overrides", fixed)

    def major_for(self, minor_value) -> Automorphism:
        for k, g in self.overrides:
            if k == minor_value:
                return g
        return self.default_major

    def apply_value(self, v):
        a, m = v
        return (self.major_for(m).apply_value(a), self.minor_aut.apply_value(m))

    def inverse(self) -> "LexMap":
        inv_overrides = tuple((self.minor_aut.apply_value(k), g.inverse()) for k, g in self.overrides)
        return LexMap(self.order, self.minor_aut.inverse(), inv_overrides, self.default_major.inverse())


class _SortKey:
    """Total-order sort key for canonicalizing override tuples."""

    def __init__(self, order: OrderExpr, value):
        self.order = order
        self.value = value

    def __lt__(self, other: "_SortKey") -> bool:
        return _cmp_value(self.order, self.value, other.value) < 0


@dataclass(frozen=True)
class ReversedMap(Automorphism):
    """An automorphism of ``Reverse(A)`` induced by one of ``A``."""

    inner_map: Automorphism
    order: OrderExpr = None

    def __post_init__(self):
        object.__setattr__(self, "order", Reverse(self.inner_map.order))

    def apply_value(self, v):
        return self.inner_map.apply_value(v)

    def inverse(self) -> "ReversedMap":
        return ReversedMap(self.inner_map.inverse())


@dataclass(frozen=True, eq=False)
class Composite(Automorphism):
    """Composition ``parts[0] o parts[1] o ...`` (rightmost applied first)."""

    parts: tuple
    order: OrderExpr = None

    def __post_init__(self):
        if not self.parts:
            raise ValueError("Composite needs at least one part")
        first = self.parts[0].order
        for p in self.parts:
            if p.order != first:
                raise OrderMismatch("composite parts over different orders")
        object.__setattr__(self, "order", first)

    def apply_value(self, v):
        for p in reversed(self.parts):
            v = p.apply_value(v)
        return v

    def inverse(self) -> "Composite":
        return Composite(tuple(p.inverse() for p in reversed(self.parts)))


def compose(f: Automorphism, g: Automorphism) -> Automorphism:
    """The automorphism x -> f(g(x))."""
    if f.order != g.order:
        raise OrderMismatch("cannot compose automorphisms over different orders")
    if isinstance(f, Identity):
        return g
    if isinstance(g, Identity):
        return f
    if isinstance(f, Shift) and isinstance(g, Shift):
        return Shift(f.k + g.k) if f.k + g.k != 0 else Identity(f.order)
    if isinstance(f, Translate) and isinstance(g, Translate):
        t = f.t + g.t
        return Translate(t) if t != 0 else Identity(f.order)
    parts = []
    for h in (f, g):
        parts.extend(h.parts if isinstance(h, Composite) else (h,))
    return Composite(tuple(parts))


def automorphism_moving(order: OrderExpr, x: Elem, y: Elem) -> Automorphism:
    """A 1-homogeneity witness: an automorphism of ``order`` sending x to y."""
    _require_same_order(order, x, y)
    if x.value == y.value:
        return Identity(order)
    if isinstance(order, IntegerOrder):
        return Shift(y.value - x.value)
    if isinstance(order, RationalOrder):
        return Translate(y.value - x.value)
    if isinstance(order, Lex):
        (a1, m1), (a2, m2) = x.value, y.value
        minor_aut = automorphism_moving(order.minor, Elem(order.minor, m1), Elem(order.minor, m2))
        major_aut = automorphism_moving(order.major, Elem(order.major, a1), Elem(order.major, a2))
        overrides = ((m1, major_aut),) if not isinstance(major_aut, Identity) else ()
        return LexMap(order, minor_aut, overrides, Identity(order.major))
    if isinstance(order, Reverse):
        inner = automorphism_moving(order.inner, Elem(order.inner, x.value), Elem(order.inner, y.value))
        return ReversedMap(inner)
    raise UnsupportedOrder(f"no homogeneity witness constructor for {order_text(order)}")
