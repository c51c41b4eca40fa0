"""Text grammar for orders, elements, and cut points.

Orders:    ``Z``, ``Q``, ``lex(<expr>,<expr>)``, ``sum(<expr>,<expr>)``,
           ``rev(<expr>)``.
Elements:  integers, ``p/q`` rationals, tuples ``(a,b)`` (major,minor for
           lex; ``left:v`` / ``right:v`` for sums).
Cuts:      ``inL(<elem>)``, ``surd(p,q,r,s)``, ``topOfCopy(<elem>)``.
"""

from __future__ import annotations

from fractions import Fraction

from .completion import CutPoint, Seam, SurdGap, TopOfCopy, gap_cut, point_cut
from .errors import ParseError
from .orders import (
    LEFT,
    RIGHT,
    Elem,
    IntegerOrder,
    Lex,
    OrderExpr,
    Q,
    RationalOrder,
    Reverse,
    Sum,
    Z,
    order_text,
)

# ---------------------------------------------------------------------------
# Formatting
# ---------------------------------------------------------------------------


def value_text(order: OrderExpr, value) -> str:
    if isinstance(order, (IntegerOrder, RationalOrder)):
        if isinstance(value, Fraction) and value.denominator != 1:
            return f"{value.numerator}/{value.denominator}"
        return str(int(value))
    if isinstance(order, Lex):
        return f"({value_text(order.major, value[0])},{value_text(order.minor, value[1])})"
    if isinstance(order, Sum):
        side, inner = value
        part = order.left if side == LEFT else order.right
        return f"({side}:{value_text(part, inner)})"
    if isinstance(order, Reverse):
        return value_text(order.inner, value)
    return repr(value)


def elem_text(x: Elem) -> str:
    return value_text(x.order, x.value)


def cut_text(c: CutPoint) -> str:
    if c.element is not None:
        return f"inL({elem_text(c.element)})"
    if isinstance(c.gap, SurdGap):
        g = c.gap
        return f"surd({g.p},{g.q},{g.r},{g.s})"
    if isinstance(c.gap, TopOfCopy):
        return f"topOfCopy({c.gap.index})"
    if isinstance(c.gap, Seam):
        return "seam"
    return repr(c)


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def word(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected a name", start)
        return self.text[start:self.pos]

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        chunk = self.text[start:self.pos]
        try:
            return int(chunk)
        except ValueError:
            raise ParseError("expected an integer", start) from None

    def done(self) -> None:
        self.skip_ws()
        if self.pos != len(self.text):
            raise ParseError("unexpected trailing input", self.pos)


def _parse_order(sc: _Scanner) -> OrderExpr:
    sc.skip_ws()
    start = sc.pos
    w = sc.word()
    if w == "Z":
        return Z
    if w == "Q":
        return Q
    if w == "lex":
        sc.expect("(")
        major = _parse_order(sc)
        sc.expect(",")
        minor = _parse_order(sc)
        sc.expect(")")
        return Lex(major, minor)
    if w == "sum":
        sc.expect("(")
        left = _parse_order(sc)
        sc.expect(",")
        right = _parse_order(sc)
        sc.expect(")")
        return Sum(left, right)
    if w == "rev":
        sc.expect("(")
        inner = _parse_order(sc)
        sc.expect(")")
        return Reverse(inner)
    raise ParseError(f"unknown order {w!r}", start)


def parse_order(text: str) -> OrderExpr:
    sc = _Scanner(text)
    order = _parse_order(sc)
    sc.done()
    return order


def _parse_value(sc: _Scanner, order: OrderExpr):
    if isinstance(order, (IntegerOrder, RationalOrder)):
        num = sc.integer()
        if isinstance(order, RationalOrder) and sc.peek() == "/":
            sc.expect("/")
            den = sc.integer()
            return Fraction(num, den)
        return num if isinstance(order, IntegerOrder) else Fraction(num)
    if isinstance(order, Lex):
        sc.expect("(")
        major = _parse_value(sc, order.major)
        sc.expect(",")
        minor = _parse_value(sc, order.minor)
        sc.expect(")")
        return (major, minor)
    if isinstance(order, Sum):
        sc.expect("(")
        start = sc.pos
        side = sc.word()
        if side not in (LEFT, RIGHT):
            raise ParseError("expected 'left' or 'right'", start)
        sc.expect(":")
        inner = _parse_value(sc, order.left if side == LEFT else order.right)
        sc.expect(")")
        return (side, inner)
    if isinstance(order, Reverse):
        return _parse_value(sc, order.inner)
    raise ParseError(f"cannot parse elements of {order_text(order)}", sc.pos)


def parse_elem(order: OrderExpr, text: str) -> Elem:
    sc = _Scanner(text)
    value = _parse_value(sc, order)
    sc.done()
    return Elem(order, value)


def parse_cut(order: OrderExpr, text: str) -> CutPoint:
    sc = _Scanner(text)
    start = sc.pos
    w = sc.word()
    if w == "inL":
        sc.expect("(")
        value = _parse_value(sc, order)
        sc.expect(")")
        sc.done()
        return point_cut(order, value)
    if w == "surd":
        sc.expect("(")
        p = sc.integer()
        sc.expect(",")
        q = sc.integer()
        sc.expect(",")
        r = sc.integer()
        sc.expect(",")
        s = sc.integer()
        sc.expect(")")
        sc.done()
        return gap_cut(order, SurdGap(p, q, r, s))
    if w == "topOfCopy":
        sc.expect("(")
        idx = sc.integer()
        sc.expect(")")
        sc.done()
        return gap_cut(order, TopOfCopy(idx))
    raise ParseError(f"unknown cut form {w!r}", start)
