"""Exact arithmetic: extended nonnegative rationals and Gaussian rationals.

``ExtendedRational`` covers [0, inf] with infinity stored canonically as 1/0.
``GaussianRational`` is x + yi with signed rational components, backed by
:class:`fractions.Fraction`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from numbers import Rational

from .errors import ParseError

__all__ = [
    "ExtendedRational",
    "GaussianRational",
    "INF",
    "ZERO",
    "ONE",
    "compare",
    "gaussian_div",
    "format_fraction",
    "parse_fraction",
]


def _check_int(name, value):
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if value < 0:
        raise ValueError(f"{name} must be nonnegative, got {value}")


class ExtendedRational:
    """A nonnegative rational num/den in lowest terms, or infinity (1/0).

    Instances are immutable and hashable. Comparisons with ``int`` and
    ``Fraction`` are supported; infinity is greater than every finite value.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int = 1):
        _check_int("num", num)
        _check_int("den", den)
        if num == 0 and den == 0:
            raise ValueError("0/0 is not a valid extended rational")
        if den == 0:
            num = 1
        elif num == 0:
            den = 1
        else:
            g = gcd(num, den)
            num, den = num // g, den // g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("ExtendedRational is immutable")

    @classmethod
    def from_value(cls, value) -> ExtendedRational:
        """Coerce an int, Fraction or ExtendedRational."""
        if isinstance(value, ExtendedRational):
            return value
        if isinstance(value, Rational) and not isinstance(value, bool):
            if value < 0:
                raise ValueError(f"negative value {value} has no extended rational form")
            return cls(int(value.numerator), int(value.denominator))
        raise TypeError(f"cannot convert {type(value).__name__} to ExtendedRational")

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    @property
    def is_finite(self) -> bool:
        return self.den != 0

    def to_fraction(self) -> Fraction:
        if self.den == 0:
            raise OverflowError("infinity has no Fraction value")
        return Fraction(self.num, self.den)

    # ordering -----------------------------------------------------------

    def _cmp(self, other) -> int:
        try:
            other = ExtendedRational.from_value(other)
        except (TypeError, ValueError):
            if isinstance(other, Rational) and other < 0:
                return 1
            return NotImplemented
        return compare(self, other)

    def __eq__(self, other):
        if isinstance(other, ExtendedRational):
            return self.num == other.num and self.den == other.den
        r = self._cmp(other)
        return r is not NotImplemented and r == 0

    def __hash__(self):
        if self.den == 0:
            return hash(("ExtendedRational", "inf"))
        return hash(Fraction(self.num, self.den))

    def __lt__(self, other):
        r = self._cmp(other)
        return r if r is NotImplemented else r < 0

    def __le__(self, other):
        r = self._cmp(other)
        return r if r is NotImplemented else r <= 0

    def __gt__(self, other):
        r = self._cmp(other)
        return r if r is NotImplemented else r > 0

    def __ge__(self, other):
        r = self._cmp(other)
        return r if r is NotImplemented else r >= 0

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = ExtendedRational.from_value(other)
        if self.is_infinite or other.is_infinite:
            return INF
        return ExtendedRational(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        """Difference of two values; the result must stay nonnegative."""
        other = ExtendedRational.from_value(other)
        if other.is_infinite:
            raise ValueError("cannot subtract infinity")
        if self.is_infinite:
            return INF
        num = self.num * other.den - other.num * self.den
        if num < 0:
            raise ValueError(f"{self} - {other} is negative")
        return ExtendedRational(num, self.den * other.den)

    def __mul__(self, other):
        other = ExtendedRational.from_value(other)
        if self.is_infinite or other.is_infinite:
            if self.num == 0 or other.num == 0:
                raise ValueError("0 * inf is undefined")
            return INF
        return ExtendedRational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = ExtendedRational.from_value(other)
        if other.num == 0:
            if self.num == 0:
                raise ZeroDivisionError("0/0")
            return INF
        if other.is_infinite:
            if self.is_infinite:
                raise ValueError("inf/inf is undefined")
            return ZERO
        return ExtendedRational(self.num * other.den, self.den * other.num)

    # text ---------------------------------------------------------------

    def __str__(self):
        return "inf" if self.den == 0 else f"{self.num}/{self.den}"

    def __repr__(self):
        return f"ExtendedRational({self.num}, {self.den})"

    @classmethod
    def parse(cls, text: str) -> ExtendedRational:
        """Parse ``"p/q"``, a bare integer ``"p"``, or ``"inf"``."""
        s = text.strip()
        if s.lower() in ("inf", "∞"):
            return INF
        m = re.fullmatch(r"(\d+)(?:/(\d+))?", s)
        if not m:
            raise ParseError(f"not an extended rational: {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            if num == 0:
                raise ParseError("0/0 is not a valid extended rational")
            return INF
        return cls(num, den)


INF = ExtendedRational(1, 0)
ZERO = ExtendedRational(0, 1)
ONE = ExtendedRational(1, 1)


def compare(p: ExtendedRational, q: ExtendedRational) -> int:
    """Three-way compare: -1, 0 or 1.

    Finite values are compared by cross-multiplication; infinity is above
    every finite value and equal to itself.
    """
    if p.den == 0 or q.den == 0:
        if p.den == q.den:
            return 0
        return 1 if p.den == 0 else -1
    lhs = p.num * q.den
    rhs = q.num * p.den
    return (lhs > rhs) - (lhs < rhs)


def format_fraction(x: Fraction) -> str:
    """Signed rational as ``"p/q"`` (always with a denominator)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


_SIGNED = r"[+-]?\d+(?:/\d+)?"


def parse_fraction(text: str) -> Fraction:
    s = text.strip()
    if not re.fullmatch(_SIGNED, s):
        raise ParseError(f"not a rational: {text!r}")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {text!r}") from None


class GaussianRational:
    """Exact complex number re + im*i with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def _coerce(cls, value) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, ExtendedRational):
            return cls(value.to_fraction())
        if isinstance(value, Rational):
            return cls(value)
        return NotImplemented

    @property
    def in_quadrant(self) -> bool:
        """True iff re > 0 and im > 0 (the open first quadrant)."""
        return self.re > 0 and self.im > 0

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __eq__(self, other):
        other = GaussianRational._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other):
        other = GaussianRational._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussianRational._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = GaussianRational._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = GaussianRational._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return gaussian_div(self, other)

    def __rtruediv__(self, other):
        other = GaussianRational._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return gaussian_div(other, self)

    def __str__(self):
        im = format_fraction(self.im)
        sign = "" if im.startswith("-") else "+"
        return f"{format_fraction(self.re)}{sign}{im}i"

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    @classmethod
    def parse(cls, text: str) -> GaussianRational:
        """Parse the ``"p/q+r/si"`` grammar, e.g. ``"3/2+1/1i"``.

        Integer parts without a denominator are accepted as well.
        """
        s = "".join(text.split())
        m = re.fullmatch(rf"({_SIGNED})([+-]\d+(?:/\d+)?)i", s)
        if not m:
            raise ParseError(f"not a Gaussian rational: {text!r}")
        return cls(parse_fraction(m.group(1)), parse_fraction(m.group(2)))


def gaussian_div(z: GaussianRational, w: GaussianRational) -> GaussianRational:
    """Exact quotient z / w, computed through the conjugate of w."""
    n = w.norm()
    if n == 0:
        raise ZeroDivisionError("division by the Gaussian rational zero")
    p = z * w.conjugate()
    return GaussianRational(p.re / n, p.im / n)
