"""Exact scalars of Q(i).

Rationals are :class:`fractions.Fraction` (always stored in lowest terms
with a positive denominator).  :class:`GaussianRational` pairs two of them.
"""

import re
from fractions import Fraction
from numbers import Rational

from .errors import ParseError

__all__ = ["GaussianRational", "gr", "parse_scalar", "I", "ZERO", "ONE"]


class GaussianRational:
    """The number ``re + im*i`` with rational ``re`` and ``im``."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, value):
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Rational)):
            return cls(value)
        if isinstance(value, str):
            return parse_scalar(value)
        if isinstance(value, complex):
            raise TypeError("floating complex numbers are not exact; use a string")
        raise TypeError(f"cannot convert {type(value).__name__} to GaussianRational")

    # arithmetic

    def __add__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self):
        norm = self.norm()
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(self.re / norm, -self.im / norm)

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    conj = conjugate

    def norm(self):
        """``|z|^2`` as a Fraction."""
        return self.re * self.re + self.im * self.im

    # predicates

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def is_real(self):
        return self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def to_rational(self):
        if self.im != 0:
            raise ValueError(f"{self} is not real")
        return self.re

    # text form "a/b+c/d*i"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.im == 1:
            imag = "i"
        elif self.im == -1:
            imag = "-i"
        else:
            imag = f"{self.im}*i"
        if self.re == 0:
            return imag
        if imag.startswith("-"):
            return f"{self.re}{imag}"
        return f"{self.re}+{imag}"

    def __repr__(self):
        return f"GaussianRational('{self}')"


_NUM = r"\d+(?:/\d+)?"
_TERM = re.compile(
    rf"\s*([+-]?)\s*(?:({_NUM})\s*(\*?\s*i)?|(i))\s*"
)


def parse_scalar(text):
    """Parse ``"a/b+c/d*i"`` and its usual abbreviations (``"3"``, ``"-i"``,
    ``"1/2-i"``, ``"2*i"``, ``"2i"``) into a :class:`GaussianRational`."""
    if not isinstance(text, str):
        raise ParseError(f"expected a scalar string, got {text!r}")
    s = text.strip()
    if not s:
        raise ParseError("empty scalar")
    re_part = Fraction(0)
    im_part = Fraction(0)
    pos = 0
    seen_real = seen_imag = False
    while pos < len(s):
        match = _TERM.match(s, pos)
        if not match or match.end() == pos:
            raise ParseError(f"cannot parse scalar {text!r}")
        sign, num, imag_suffix, bare_i = match.groups()
        if pos > 0 and not sign:
            raise ParseError(f"missing sign between terms in {text!r}")
        factor = -1 if sign == "-" else 1
        if bare_i:
            value, imaginary = Fraction(1), True
        else:
            try:
                value = Fraction(num)
            except ZeroDivisionError:
                raise ParseError(f"zero denominator in {text!r}") from None
            imaginary = bool(imag_suffix)
        if imaginary:
            if seen_imag:
                raise ParseError(f"repeated imaginary term in {text!r}")
            seen_imag = True
            im_part = factor * value
        else:
            if seen_real:
                raise ParseError(f"repeated real term in {text!r}")
            seen_real = True
            re_part = factor * value
        pos = match.end()
    return GaussianRational(re_part, im_part)


def gr(value=0, im=0):
    """Shorthand constructor: ``gr(1, 2)``, ``gr("1/2-i")`` or ``gr(Fraction(1, 3))``."""
    if isinstance(value, str):
        if im:
            raise TypeError("cannot combine a scalar string with an imaginary part")
        return parse_scalar(value)
    if isinstance(value, GaussianRational):
        return value + GaussianRational(0, im)
    return GaussianRational(value, im)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
