"""Exact arithmetic in Q and real quadratic fields Q(sqrt d).

A :class:`Scalar` is ``rat + irr * sqrt(d)`` with rational ``rat`` and
``irr`` and a square-free ``d >= 0``.  ``d == 0`` encodes a pure rational,
in which case ``irr`` is zero.  Order comparisons use the real embedding
with ``sqrt(d) > 0`` and never touch floating point.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import NamedTuple, Union

from .errors import DivisionByZero, IncompatibleFields, NegativeDiscriminant

Number = Union[int, Fraction, "Scalar"]


@lru_cache(maxsize=4096)
def square_free_decomposition(m: int) -> tuple[int, int]:
    """Return ``(s, f)`` with ``m == s*s*f`` and ``f`` square-free (``m > 0``)."""
    if m <= 0:
        raise ValueError("square_free_decomposition needs a positive integer")
    from sympy import factorint

    s, f = 1, 1
    for p, e in factorint(m).items():
        s *= p ** (e // 2)
        if e % 2:
            f *= p
    return s, f


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@total_ordering
class Scalar:
    __slots__ = ("rat", "irr", "d", "_hash")

    def __init__(self, rat=0, irr=0, d: int = 0):
        rat = Fraction(rat)
        irr = Fraction(irr)
        if d < 0:
            raise ValueError("only real quadratic fields are supported")
        if irr == 0 or d == 0:
            irr, d = Fraction(0), 0
        elif d == 1:
            rat, irr, d = rat + irr, Fraction(0), 0
        else:
            s, f = square_free_decomposition(d)
            if f == 1:
                rat, irr, d = rat + irr * s, Fraction(0), 0
            else:
                irr, d = irr * s, f
        self.rat = rat
        self.irr = irr
        self.d = d
        self._hash = None

    # -- constructors ----------------------------------------------------
    @classmethod
    def _raw(cls, rat: Fraction, irr: Fraction, d: int) -> Scalar:
        # d already square-free
        self = object.__new__(cls)
        if not irr:
            irr, d = Fraction(0), 0
        self.rat, self.irr, self.d, self._hash = rat, irr, d, None
        return self

    @classmethod
    def sqrt(cls, d: int) -> Scalar:
        return cls(0, 1, d)

    @classmethod
    def coerce(cls, x: Number) -> Scalar:
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        raise TypeError(f"cannot convert {type(x).__name__} to Scalar")

    # -- inspection ------------------------------------------------------
    @property
    def is_rational(self) -> bool:
        return self.d == 0

    def is_integer(self) -> bool:
        return self.d == 0 and self.rat.denominator == 1

    def conjugate(self) -> Scalar:
        """Image under the nontrivial automorphism sqrt(d) -> -sqrt(d)."""
        return Scalar._raw(self.rat, -self.irr, self.d)

    def norm(self) -> Fraction:
        return self.rat * self.rat - self.irr * self.irr * self.d

    def sign(self) -> int:
        p, q = _sign(self.rat), _sign(self.irr)
        if q == 0:
            return p
        if p == 0 or p == q:
            return q
        # opposite signs: the larger of |rat| and |irr| sqrt(d) wins
        return p if self.rat * self.rat > self.irr * self.irr * self.d else q

    def __bool__(self) -> bool:
        return self.rat != 0 or self.irr != 0

    def __float__(self) -> float:
        return float(self.rat) + float(self.irr) * math.sqrt(self.d)

    # -- arithmetic ------------------------------------------------------
    def _field(self, other: Scalar) -> int:
        if self.d == other.d or other.d == 0:
            return self.d
        if self.d == 0:
            return other.d
        raise IncompatibleFields(f"sqrt({self.d}) and sqrt({other.d}) live in different fields")

    def __add__(self, other):
        if not isinstance(other, Scalar):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            return Scalar._raw(self.rat + other, self.irr, self.d)
        d = self._field(other)
        return Scalar._raw(self.rat + other.rat, self.irr + other.irr, d)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(-self.rat, -self.irr, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            return Scalar._raw(self.rat * other, self.irr * other, self.d)
        d = self._field(other)
        rat = self.rat * other.rat + self.irr * other.irr * d
        irr = self.rat * other.irr + self.irr * other.rat
        return Scalar._raw(rat, irr, d)

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if not self:
            raise DivisionByZero("division by the zero Scalar")
        nrm = self.norm()
        return Scalar._raw(self.rat / nrm, -self.irr / nrm, self.d)

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            if other == 0:
                raise DivisionByZero("division by zero")
            return Scalar._raw(self.rat / other, self.irr / other, self.d)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out, base = Scalar(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.rat == other.rat and self.irr == other.irr and self.d == other.d
        if isinstance(other, (int, Fraction)):
            return self.d == 0 and self.rat == other
        return NotImplemented

    def __lt__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rat) if self.d == 0 else hash((self.rat, self.irr, self.d))
        return self._hash

    def __repr__(self):
        return f"Scalar({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


LT, EQ, GT = -1, 0, 1


def compare(x: Number, y: Number) -> int:
    """Return ``LT``, ``EQ`` or ``GT`` (-1, 0, 1) under the real embedding."""
    return (Scalar.coerce(x) - Scalar.coerce(y)).sign()


def field_arith(x: Number, y: Number, op: str) -> Scalar:
    x, y = Scalar.coerce(x), Scalar.coerce(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def common_field(values) -> int:
    """The ``d`` shared by all ``values``; raises if two differ."""
    d = 0
    for v in values:
        if isinstance(v, Scalar) and v.d:
            if d and v.d != d:
                raise IncompatibleFields(f"entries mix sqrt({d}) and sqrt({v.d})")
            d = v.d
    return d


class QuadraticRoots(NamedTuple):
    low: Scalar
    high: Scalar
    irrational: bool


def rational_sqrt(x: Fraction) -> Scalar:
    """sqrt of a non-negative rational as a Scalar."""
    x = Fraction(x)
    if x < 0:
        raise NegativeDiscriminant(f"sqrt of negative rational {x}")
    if x == 0:
        return Scalar(0)
    # sqrt(u/v) = sqrt(u*v)/v
    return Scalar(0, Fraction(1, x.denominator), x.numerator * x.denominator)


def solve_quadratic(p, q, r) -> QuadraticRoots:
    """Both real roots of ``p x^2 + q x + r`` with rational coefficients, ascending."""
    p, q, r = Fraction(p), Fraction(q), Fraction(r)
    if p == 0:
        raise ValueError("leading coefficient must be nonzero")
    disc = q * q - 4 * p * r
    if disc < 0:
        raise NegativeDiscriminant(f"discriminant {disc} < 0")
    s = rational_sqrt(disc)
    r1 = (s * (-1) - q) / (2 * p)
    r2 = (s - q) / (2 * p)
    if r2 < r1:
        r1, r2 = r2, r1
    return QuadraticRoots(r1, r2, not s.is_rational)


# -- text encoding ---------------------------------------------------------

def _format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_scalar(x: Number) -> str:
    """Canonical text: ``p/q`` (``p`` when integral) or ``(p/q)+(r/s)*sqrt(d)``."""
    x = Scalar.coerce(x)
    if x.d == 0:
        return _format_rational(x.rat)
    return f"({_format_rational(x.rat)})+({_format_rational(x.irr)})*sqrt({x.d})"


_RAT = r"[+-]?\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^\s*(?:(?P<plain>{_RAT})"
    rf"|\((?P<rat>{_RAT})\)\s*(?P<op>[+-])\s*\((?P<irr>{_RAT})\)\s*\*\s*sqrt\(\s*(?P<d>\d+)\s*\))\s*$"
)


def parse_scalar(text: str) -> Scalar:
    m = _SCALAR_RE.match(text)
    if m is None:
        raise ValueError(f"not a Scalar literal: {text!r}")
    if m.group("plain") is not None:
        return Scalar(_parse_rational(m.group("plain")))
    irr = _parse_rational(m.group("irr"))
    if m.group("op") == "-":
        irr = -irr
    return Scalar(_parse_rational(m.group("rat")), irr, int(m.group("d")))


def _parse_rational(tok: str) -> Fraction:
    num, _, den = tok.partition("/")
    if den and int(den) == 0:
        raise DivisionByZero(f"zero denominator in {tok!r}")
    return Fraction(int(num), int(den) if den else 1)
