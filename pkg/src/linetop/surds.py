"""Exact arithmetic for quadratic surds a + b*sqrt(r).

Everything here is integer/Fraction arithmetic: signs of a + b*sqrt(r)
against rationals come from isolating the radical and comparing squares
with sign cases, and comparisons across different radicands fall back to
interval refinement with ``math.isqrt`` bounds.  No floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional


def squarefree_split(r: int):
    """Write r = k^2 * core with core squarefree; returns (k, core)."""
    if r <= 0:
        raise ValueError("radicand must be positive")
    k, core, d = 1, 1, 2
    n = r
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        k *= d ** (e // 2)
        if e % 2:
            core *= d
        d += 1
    core *= n
    return k, core


def is_square(r: int) -> bool:
    if r < 0:
        return False
    s = math.isqrt(r)
    return s * s == r


def sqrt_bounds(r: int, bits: int):
    """Rational lo <= sqrt(r) <= hi with hi - lo = 2**-bits."""
    scale = 1 << bits
    lo_num = math.isqrt(r * scale * scale)
    lo = Fraction(lo_num, scale)
    return lo, lo + Fraction(1, scale)


def sign_linear_surd(a: Fraction, b: Fraction, r: int) -> int:
    """Exact sign of a + b*sqrt(r) for non-square r > 0."""
    if b == 0:
        return (a > 0) - (a < 0)
    if b > 0:
        if a >= 0:
            return 1
        # a < 0: compare b^2 r with a^2
        return 1 if b * b * r > a * a else -1
    return -sign_linear_surd(-a, -b, r)


@dataclass(frozen=True)
class QuadValue:
    """An element a + b*sqrt(r) of a real quadratic field.

    Canonical form: r is squarefree and > 1 when b != 0, and r = 1 with
    b = 0 for plain rationals.  Two canonical values are equal iff their
    fields agree, which makes the cross-field comparison below sound.
    """

    a: Fraction
    b: Fraction
    r: int

    def __post_init__(self):
        a, b, r = Fraction(self.a), Fraction(self.b), self.r
        if b != 0:
            k, core = squarefree_split(r)
            b, r = b * k, core
            if r == 1:
                a, b = a + b, Fraction(0)
        if b == 0:
            r = 1
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "r", r)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def sign(self) -> int:
        return sign_linear_surd(self.a, self.b, self.r)

    def __add__(self, other):
        if isinstance(other, QuadValue):
            if self.is_rational:
                return QuadValue(self.a + other.a, other.b, other.r)
            if other.is_rational:
                return QuadValue(self.a + other.a, self.b, self.r)
            if self.r != other.r:
                raise ValueError("cannot add surds over different radicands exactly")
            return QuadValue(self.a + other.a, self.b + other.b, self.r)
        return QuadValue(self.a + Fraction(other), self.b, self.r)

    __radd__ = __add__

    def __neg__(self):
        return QuadValue(-self.a, -self.b, self.r)

    def __sub__(self, other):
        if isinstance(other, QuadValue):
            return self + (-other)
        return self + (-Fraction(other))

    def __rsub__(self, other):
        return (-self) + Fraction(other)

    def scale(self, c) -> "QuadValue":
        c = Fraction(c)
        return QuadValue(self.a * c, self.b * c, self.r)

    def reciprocal(self) -> "QuadValue":
        if self.is_rational:
            return QuadValue(1 / self.a, Fraction(0), 1)
        d = self.a * self.a - self.b * self.b * self.r  # nonzero: r non-square
        return QuadValue(self.a / d, -self.b / d, self.r)

    def bounds(self, bits: int):
        """Rational (lo, hi) enclosing the value, width |b| * 2**-bits."""
        if self.is_rational:
            return self.a, self.a
        lo, hi = sqrt_bounds(self.r, bits)
        if self.b > 0:
            return self.a + self.b * lo, self.a + self.b * hi
        return self.a + self.b * hi, self.a + self.b * lo

    def cmp_rational(self, q) -> int:
        return sign_linear_surd(self.a - Fraction(q), self.b, self.r)

    def cmp(self, other: "QuadValue") -> int:
        if other.is_rational:
            return self.cmp_rational(other.a)
        if self.is_rational:
            return -other.cmp_rational(self.a)
        if self.r == other.r:
            return sign_linear_surd(self.a - other.a, self.b - other.b, self.r)
        if self == other:  # canonical equality (distinct fields otherwise)
            return 0
        # distinct squarefree radicands: values are unequal, refine intervals
        bits = 8
        while True:
            lo1, hi1 = self.bounds(bits)
            lo2, hi2 = other.bounds(bits)
            if hi1 < lo2:
                return -1
            if hi2 < lo1:
                return 1
            bits *= 2

    def floor(self) -> int:
        if self.is_rational:
            return math.floor(self.a)
        lo, hi = self.bounds(32)
        n = math.floor(lo)
        while self.cmp_rational(n + 1) >= 0:
            n += 1
        while self.cmp_rational(n) < 0:
            n -= 1
        return n


def rational_quad(x) -> QuadValue:
    return QuadValue(Fraction(x), Fraction(0), 1)


def simplest_rational_between(x: QuadValue, y: Optional[QuadValue]) -> Fraction:
    """The simplest rational in the open interval (x, y).

    ``y=None`` means +infinity.  Uses the Stern-Brocot / continued
    fraction descent; terminates for any x < y since the interval has
    positive width.  Endpoints may live in different quadratic fields.
    """
    if y is not None and x.cmp(y) >= 0:
        raise ValueError("need x < y")
    n = x.floor()
    candidate = Fraction(n + 1)
    if y is None or y.cmp_rational(candidate) > 0:
        return candidate  # x < n+1 holds by definition of floor
    # Both endpoints in [n, n+1]: n + 1/m with m in (1/(y-n), 1/(x-n)).
    x_off = x - n
    y_off = y - n
    inv_lo = y_off.reciprocal()
    if x_off.sign() == 0:
        m = simplest_rational_between(inv_lo, None)
    else:
        m = simplest_rational_between(inv_lo, x_off.reciprocal())
    return n + 1 / m
