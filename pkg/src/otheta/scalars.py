"""Exact complex-rational scalars.

Coefficients of exact elements are Gaussian rationals ``re + im*i`` with
``re``, ``im`` stored as :class:`fractions.Fraction`.  Float elements use the
builtin :class:`complex`.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = ["QI", "as_exact", "is_exact_scalar", "to_complex", "format_rational"]

_ZERO = Fraction(0)


class QI:
    """A Gaussian rational number."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> "QI":
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if type(other) is not QI:
            if isinstance(other, Rational):
                return QI._raw(self.re + other, self.im)
            return NotImplemented
        return QI._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return QI._raw(-self.re, -self.im)

    def __sub__(self, other):
        if type(other) is not QI:
            if isinstance(other, Rational):
                return QI._raw(self.re - other, self.im)
            return NotImplemented
        return QI._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if type(other) is not QI:
            if isinstance(other, Rational):
                return QI._raw(self.re * other, self.im * other)
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return QI._raw(a * c, _ZERO)
        return QI._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if type(other) is not QI:
            if isinstance(other, Rational):
                return QI._raw(self.re / other, self.im / other)
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = QI._raw(Fraction(1), _ZERO)
        for _ in range(abs(k)):
            result = result * base
        return result

    def inverse(self) -> "QI":
        n = self.norm2()
        if not n:
            raise ZeroDivisionError("inverse of zero")
        return QI._raw(self.re / n, -self.im / n)

    def conjugate(self) -> "QI":
        return QI._raw(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    # comparison ------------------------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if type(other) is QI:
            return self.re == other.re and self.im == other.im
        if isinstance(other, Rational):
            return not self.im and self.re == other
        if isinstance(other, (float, complex)):
            return complex(self) == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def is_real(self) -> bool:
        return not self.im

    def __repr__(self):
        return f"QI({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return format_rational(self.re)
        im = "i" if self.im == 1 else "-i" if self.im == -1 else format_rational(self.im) + "*i"
        if not self.re:
            return im
        sign = "-" if self.im < 0 else "+"
        mag = "i" if abs(self.im) == 1 else format_rational(abs(self.im)) + "*i"
        return f"({format_rational(self.re)} {sign} {mag})"


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


ONE = QI(1)
ZERO = QI(0)
I_UNIT = QI(0, 1)


def is_exact_scalar(c) -> bool:
    return type(c) is QI or isinstance(c, Rational)


def as_exact(c) -> QI:
    if type(c) is QI:
        return c
    if isinstance(c, Rational):
        return QI._raw(Fraction(c), _ZERO)
    raise TypeError(f"not an exact scalar: {c!r}")


def to_complex(c) -> complex:
    return complex(c)
