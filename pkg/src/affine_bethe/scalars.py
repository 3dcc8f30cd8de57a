"""Scalar arithmetic shared by the exact and floating-point code paths.

Exact mode works over the complex rationals ``CQ`` (pairs of
``fractions.Fraction``); float mode over Python/NumPy complex numbers.
Values never mix modes inside one object; :func:`to_complex` is the
explicit bridge.
"""

from __future__ import annotations

from fractions import Fraction as Q
from typing import Union

Rational = Union[int, Q]


def _as_fraction(x) -> Q:
    if isinstance(x, Q):
        return x
    if isinstance(x, int):
        return Q(x)
    raise TypeError(f"not an exact rational: {x!r}")


class CQ:
    """Complex number with rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Rational = 0, im: Rational = 0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("CQ is immutable")

    @staticmethod
    def coerce(x) -> "CQ":
        if isinstance(x, CQ):
            return x
        if isinstance(x, (int, Q)):
            return CQ(x)
        raise TypeError(f"cannot coerce {x!r} to CQ")

    def __add__(self, other):
        try:
            o = CQ.coerce(other)
        except TypeError:
            return NotImplemented
        return CQ(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = CQ.coerce(other)
        except TypeError:
            return NotImplemented
        return CQ(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        try:
            o = CQ.coerce(other)
        except TypeError:
            return NotImplemented
        return CQ(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        try:
            o = CQ.coerce(other)
        except TypeError:
            return NotImplemented
        return CQ(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = CQ.coerce(other)
        except TypeError:
            return NotImplemented
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("division by zero CQ")
        return CQ((self.re * o.re + self.im * o.im) / den,
                  (self.im * o.re - self.re * o.im) / den)

    def __rtruediv__(self, other):
        try:
            o = CQ.coerce(other)
        except TypeError:
            return NotImplemented
        return o / self

    def __neg__(self):
        return CQ(-self.re, -self.im)

    def __eq__(self, other):
        try:
            o = CQ.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __abs__(self) -> float:
        return abs(complex(float(self.re), float(self.im)))

    def conjugate(self) -> "CQ":
        return CQ(self.re, -self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if self.im == 0:
            return f"CQ({self.re})"
        return f"CQ({self.re}, {self.im})"


def to_complex(x) -> complex:
    """Bridge any supported scalar to a Python complex."""
    if isinstance(x, CQ):
        return complex(x)
    if isinstance(x, Q):
        return complex(float(x), 0.0)
    return complex(x)


def is_exact(x) -> bool:
    return isinstance(x, (int, Q, CQ))


def conj_scalar(x):
    if isinstance(x, (int, Q)):
        return x
    return x.conjugate()


def scalar_is_zero(x, tol: float = 0.0) -> bool:
    if is_exact(x):
        return not x if isinstance(x, CQ) else x == 0
    return abs(x) <= tol


def rational_str(x: Q) -> str:
    """Render a Fraction as ``p/q`` (or ``p`` when integral)."""
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s) -> Q:
    """Parse ``p/q`` strings or integers into a Fraction."""
    if isinstance(s, (int, Q)):
        return Q(s)
    if isinstance(s, str):
        return Q(s)
    raise TypeError(f"not a rational literal: {s!r}")
