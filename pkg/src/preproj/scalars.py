"""Exact scalars in Q(i).

Real values are plain :class:`fractions.Fraction` objects.  A value with a
nonzero imaginary part is a :class:`Gaussian`; every operation normalizes its
result back to a ``Fraction`` when the imaginary part cancels, so the common
real case never pays for complex arithmetic.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, "Gaussian"]


class Gaussian:
    """A Gaussian rational ``re + im*i`` with ``im != 0``.

    Use :func:`gauss` to build values; it returns a ``Fraction`` when the
    imaginary part is zero.
    """

    __slots__ = ("re", "im")

    def __init__(self, re_part, im_part):
        re_part = Fraction(re_part)
        im_part = Fraction(im_part)
        if im_part == 0:
            raise ValueError("Gaussian requires a nonzero imaginary part; use gauss()")
        object.__setattr__(self, "re", re_part)
        object.__setattr__(self, "im", im_part)

    def __setattr__(self, name, value):
        raise AttributeError("Gaussian is immutable")

    def __reduce__(self):
        return (Gaussian, (self.re, self.im))

    def __repr__(self):
        return f"Gaussian({self.re!s}, {self.im!s})"

    def __str__(self):
        return format_scalar(self)

    def __hash__(self):
        return hash((self.re, self.im))

    def __eq__(self, other):
        if isinstance(other, Gaussian):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __bool__(self):
        return True

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        o_re, o_im = _parts(other)
        if o_re is None:
            return NotImplemented
        return gauss(self.re + o_re, self.im + o_im)

    __radd__ = __add__

    def __sub__(self, other):
        o_re, o_im = _parts(other)
        if o_re is None:
            return NotImplemented
        return gauss(self.re - o_re, self.im - o_im)

    def __rsub__(self, other):
        o_re, o_im = _parts(other)
        if o_re is None:
            return NotImplemented
        return gauss(o_re - self.re, o_im - self.im)

    def __mul__(self, other):
        o_re, o_im = _parts(other)
        if o_re is None:
            return NotImplemented
        return gauss(self.re * o_re - self.im * o_im, self.re * o_im + self.im * o_re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o_re, o_im = _parts(other)
        if o_re is None:
            return NotImplemented
        return self * _inverse(o_re, o_im)

    def __rtruediv__(self, other):
        o_re, o_im = _parts(other)
        if o_re is None:
            return NotImplemented
        return gauss(o_re, o_im) * _inverse(self.re, self.im)

    def conjugate(self):
        return Gaussian(self.re, -self.im)


def _parts(x):
    if isinstance(x, Gaussian):
        return x.re, x.im
    if isinstance(x, (int, Fraction)):
        return Fraction(x), Fraction(0)
    return None, None


def _inverse(re_part, im_part):
    norm = re_part * re_part + im_part * im_part
    if norm == 0:
        raise ZeroDivisionError("division by zero scalar")
    return gauss(re_part / norm, -im_part / norm)


def gauss(re_part, im_part=0) -> Scalar:
    """Return ``re_part + im_part*i`` as a Fraction or Gaussian."""
    if im_part == 0:
        return Fraction(re_part)
    return Gaussian(re_part, im_part)


def real_part(x) -> Fraction:
    return x.re if isinstance(x, Gaussian) else Fraction(x)


def imag_part(x) -> Fraction:
    return x.im if isinstance(x, Gaussian) else Fraction(0)


def compare(x, y) -> int:
    """Total order on Q(i): lexicographic in (real part, imaginary part).

    Returns -1, 0 or 1.  Translation invariant and agrees with the usual
    order on integers.
    """
    d = to_scalar(x) - to_scalar(y)
    r = real_part(d)
    if r != 0:
        return -1 if r < 0 else 1
    i = imag_part(d)
    if i != 0:
        return -1 if i < 0 else 1
    return 0


def precedes(x, y) -> bool:
    """``x`` strictly precedes ``y`` in the total order."""
    return compare(x, y) < 0


def sort_key(x):
    return (real_part(x), imag_part(x))


def _parse_rational(text: str, whole: str) -> Fraction:
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
        raise ValueError(f"cannot parse scalar {whole!r}")
    return Fraction(text)


def parse_scalar(text: str) -> Scalar:
    """Parse ``"3"``, ``"-1/2"``, ``"i"``, ``"1/2-3i"``, ``"2/3*i"``."""
    whole = text
    text = text.strip().replace(" ", "").replace("*", "")
    if not text:
        raise ValueError("empty scalar")
    if not text.endswith("i"):
        return _parse_rational(text, whole)
    body = text[:-1]
    cut = max(body.rfind("+"), body.rfind("-"))
    if cut > 0:
        re_txt, im_txt = body[:cut], body[cut:]
    else:
        re_txt, im_txt = "", body
    if im_txt in ("", "+", "-"):
        im_txt += "1"
    re_part = _parse_rational(re_txt, whole) if re_txt else Fraction(0)
    return gauss(re_part, _parse_rational(im_txt, whole))


def to_scalar(x) -> Scalar:
    """Coerce ints, Fractions, strings, 4-tuples and exact complex literals."""
    if isinstance(x, (Fraction, Gaussian)):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, (list, tuple)):
        if len(x) == 4:
            rn, rd, in_, id_ = (int(v) for v in x)
            return gauss(Fraction(rn, rd), Fraction(in_, id_))
        if len(x) == 2:
            return gauss(Fraction(x[0]), Fraction(x[1]))
        raise ValueError(f"scalar tuple must have 2 or 4 entries, got {x!r}")
    if isinstance(x, complex):
        return gauss(Fraction(x.real), Fraction(x.imag))
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a Fraction or a string")
    raise TypeError(f"cannot convert {type(x).__name__} to a scalar")


def scalar_to_json(x) -> list[int]:
    """Serialize as ``[re_num, re_den, im_num, im_den]``."""
    r, i = real_part(x), imag_part(x)
    return [r.numerator, r.denominator, i.numerator, i.denominator]


def scalar_from_json(data) -> Scalar:
    if isinstance(data, list) and len(data) == 4 and all(
        isinstance(v, int) and not isinstance(v, bool) for v in data
    ):
        if data[1] == 0 or data[3] == 0:
            raise ValueError("zero denominator in scalar")
        return to_scalar(data)
    raise ValueError(f"scalar must be a list of 4 integers, got {data!r}")


def format_scalar(x) -> str:
    r, i = real_part(x), imag_part(x)
    if i == 0:
        return str(r)
    im_abs = abs(i)
    im_txt = "i" if im_abs == 1 else f"{im_abs}i"
    if r == 0:
        return ("-" if i < 0 else "") + im_txt
    return f"{r}{'-' if i < 0 else '+'}{im_txt}"
