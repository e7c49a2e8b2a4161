"""Exact scalars: Gaussian rationals, and characters valued in Q/Z."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def frac(x) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot read {x!r} as a rational")


def fmt_frac(x: Fraction) -> str:
    # always "p/q" so the wire format is uniform
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


class Scalar:
    """a + b*i with a, b rational."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = frac(re)
        self.im = frac(im)

    @classmethod
    def of(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, complex):
            raise TypeError("floating point complex numbers are not exact scalars")
        return cls(x)

    def conj(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            other = Scalar.of(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, other):
        other = Scalar.of(other)
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-Scalar.of(other))

    def __rsub__(self, other):
        return Scalar.of(other) - self

    def __mul__(self, other):
        other = Scalar.of(other)
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Scalar.of(other)
        d = other.re * other.re + other.im * other.im
        if d == 0:
            raise ZeroDivisionError("division by the zero scalar")
        num = self * other.conj()
        return Scalar(num.re / d, num.im / d)

    def __repr__(self):
        if not self.im:
            return f"Scalar({self.re})"
        return f"Scalar({self.re}, {self.im})"

    def to_json(self) -> dict:
        return {"re": fmt_frac(self.re), "im": fmt_frac(self.im)}

    @classmethod
    def from_json(cls, obj) -> "Scalar":
        if isinstance(obj, dict):
            return cls(obj.get("re", 0), obj.get("im", 0))
        return cls(obj)


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


class QmodZ:
    """An element q of Q/Z, standing for the root of unity exp(2*pi*i*q)."""

    __slots__ = ("value",)

    def __init__(self, q=0):
        q = frac(q)
        self.value = q - (q.numerator // q.denominator)

    def __add__(self, other):
        return QmodZ(self.value + QmodZ.of(other).value)

    __radd__ = __add__

    def __neg__(self):
        return QmodZ(-self.value)

    def __sub__(self, other):
        return self + (-QmodZ.of(other))

    @classmethod
    def of(cls, x) -> "QmodZ":
        return x if isinstance(x, QmodZ) else cls(x)

    def is_trivial(self) -> bool:
        return self.value == 0

    def __eq__(self, other):
        try:
            return self.value == QmodZ.of(other).value
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return f"QmodZ({self.value})"

    def to_json(self) -> str:
        return fmt_frac(self.value)
