"""Exact Gaussian rational scalars a + b·i with a, b rational."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..errors import ParseError


_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")

ScalarLike = Union["Scalar", int, Fraction]


def _rational(text: str, original: str) -> Fraction:
    if not _RATIONAL.match(text):
        raise ParseError(f"not an exact rational: {original!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {original!r}") from None


@dataclass(frozen=True, slots=True)
class Scalar:
    """A Gaussian rational. The real field is the sub-field with ``im == 0``.

    Both parts are ``fractions.Fraction`` values, which keeps them in lowest
    terms with a positive denominator and represents zero uniquely as 0/1.
    """

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        if not isinstance(self.re, Fraction):
            object.__setattr__(self, "re", Fraction(self.re))
        if not isinstance(self.im, Fraction):
            object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def of(cls, value: ScalarLike) -> Scalar:
        """Coerce an int, Fraction or Scalar into a Scalar."""
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(Fraction(value))
        raise TypeError(f"cannot convert {type(value).__name__} to Scalar")

    @classmethod
    def parse(cls, text: str) -> Scalar:
        """Parse the text form ``a/b`` or ``a/b+c/d*i``.

        Denominators of 1 may be omitted and each part may carry a sign.
        A bare imaginary part (``i``, ``-2*i``, ``1/3i``) is accepted too.
        """
        compact = "".join(str(text).split())
        if not compact:
            raise ParseError("empty scalar")
        if not compact.endswith("i"):
            return cls(_rational(compact, text))

        body = compact[:-1].rstrip("*")
        split_at = max(body.rfind("+"), body.rfind("-"))
        if split_at > 0:
            real_text, imag_text = body[:split_at], body[split_at:]
            real = _rational(real_text, text)
        else:
            real, imag_text = Fraction(0), body
        if imag_text in ("", "+", "-"):
            imag_text += "1"
        return cls(real, _rational(imag_text, text))

    # Arithmetic

    def __add__(self, other: ScalarLike) -> Scalar:
        if not isinstance(other, _SCALAR_TYPES):
            return NotImplemented
        other = Scalar.of(other)
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> Scalar:
        if not isinstance(other, _SCALAR_TYPES):
            return NotImplemented
        other = Scalar.of(other)
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: ScalarLike) -> Scalar:
        return Scalar.of(other) - self

    def __mul__(self, other: ScalarLike) -> Scalar:
        if not isinstance(other, _SCALAR_TYPES):
            return NotImplemented
        other = Scalar.of(other)
        if not self.im and not other.im:
            return Scalar(self.re * other.re)
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> Scalar:
        if not isinstance(other, _SCALAR_TYPES):
            return NotImplemented
        other = Scalar.of(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero scalar")
        if not other.im:
            return Scalar(self.re / other.re, self.im / other.re)
        modulus = other.re * other.re + other.im * other.im
        numerator = self * other.conj()
        return Scalar(numerator.re / modulus, numerator.im / modulus)

    def __rtruediv__(self, other: ScalarLike) -> Scalar:
        return Scalar.of(other) / self

    def __neg__(self) -> Scalar:
        return Scalar(-self.re, -self.im)

    def conj(self) -> Scalar:
        """Complex conjugate: negates the imaginary part."""
        return Scalar(self.re, -self.im)

    @property
    def is_zero(self) -> bool:
        return not self.re and not self.im

    @property
    def is_real(self) -> bool:
        return not self.im

    @property
    def abs_squared(self) -> Fraction:
        """|a + b·i|² = a² + b², always a nonnegative rational."""
        return self.re * self.re + self.im * self.im

    # Numerator and denominator of each part

    @property
    def re_num(self) -> int:
        return self.re.numerator

    @property
    def re_den(self) -> int:
        return self.re.denominator

    @property
    def im_num(self) -> int:
        return self.im.numerator

    @property
    def im_den(self) -> int:
        return self.im.denominator

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}*i"

    def __repr__(self) -> str:
        return f"Scalar({str(self)!r})"


_SCALAR_TYPES = (Scalar, int, Fraction)

ZERO = Scalar(Fraction(0))
ONE = Scalar(Fraction(1))
I = Scalar(Fraction(0), Fraction(1))


def scalar_ops(a: ScalarLike, b: ScalarLike) -> dict[str, Scalar | bool]:
    """Evaluate every binary and unary operation on a pair of scalars.

    ``div`` is omitted when ``b`` is zero.
    """
    a, b = Scalar.of(a), Scalar.of(b)
    results: dict[str, Scalar | bool] = {
        "add": a + b,
        "sub": a - b,
        "mul": a * b,
        "conj": a.conj(),
        "is_zero": a.is_zero,
    }
    if not b.is_zero:
        results["div"] = a / b
    return results
