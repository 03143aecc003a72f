"""Exact arithmetic in the tower Q ⊂ Q(√2) ⊂ Q(√2, i).

Rationals are :class:`fractions.Fraction`.  A :class:`RealScalar` is
``a + b√2`` with rational ``a, b``; a :class:`ComplexScalar` is a pair of
real scalars.  All values are immutable.

Text forms (used by the JSON file formats)::

    RealScalar     "3/4"   "-1/2+3/4*sqrt2"   "1/2*sqrt2"
    ComplexScalar  "<real>"   "<real>+(<real>)*i"   "(<real>)*i"
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering
from numbers import Rational as _RationalABC

__all__ = [
    "Rational",
    "RealScalar",
    "ComplexScalar",
    "ExactnessError",
    "SQRT2",
    "I",
    "as_real",
    "as_complex",
    "sign",
    "conjugate",
    "rational_sqrt",
]

Rational = Fraction


class ExactnessError(ValueError):
    """A requested value does not exist in the exact field."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


@total_ordering
class RealScalar:
    """The real number ``a + b*sqrt(2)`` with ``a, b`` rational."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", _frac(a))
        object.__setattr__(self, "b", _frac(b))

    def __setattr__(self, name, value):
        raise AttributeError("RealScalar is immutable")

    def __reduce__(self):
        return (RealScalar, (self.a, self.b))

    # -- construction helpers ------------------------------------------------

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction) -> RealScalar:
        obj = object.__new__(cls)
        object.__setattr__(obj, "a", a)
        object.__setattr__(obj, "b", b)
        return obj

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = _coerce_real(other)
        if other is NotImplemented:
            return NotImplemented
        return RealScalar._raw(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_real(other)
        if other is NotImplemented:
            return NotImplemented
        return RealScalar._raw(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = _coerce_real(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce_real(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        if not b and not d:
            return RealScalar._raw(a * c, b)
        return RealScalar._raw(a * c + 2 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def __neg__(self):
        return RealScalar._raw(-self.a, -self.b)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def norm(self) -> Fraction:
        """Field norm ``a² - 2b²`` down to Q."""
        return self.a * self.a - 2 * self.b * self.b

    def galois(self) -> RealScalar:
        """The Galois conjugate ``a - b√2``."""
        return RealScalar._raw(self.a, -self.b)

    def inverse(self) -> RealScalar:
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(sqrt2)")
        n = self.norm()
        return RealScalar._raw(self.a / n, -self.b / n)

    def __truediv__(self, other):
        other = _coerce_real(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.b:
            if not other.a:
                raise ZeroDivisionError("division by zero in Q(sqrt2)")
            return RealScalar._raw(self.a / other.a, self.b / other.a)
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce_real(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
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

    # -- comparison ----------------------------------------------------------

    def sign(self) -> int:
        """Exact sign of ``a + b√2``."""
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: |a| vs |b|√2
        a2, b2 = self.a * self.a, 2 * self.b * self.b
        return sa if a2 > b2 else sb

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        other = _coerce_real(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __lt__(self, other):
        other = _coerce_real(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self):
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b))

    def is_rational(self) -> bool:
        return not self.b

    def __float__(self):
        return float(self.a) + float(self.b) * 2.0**0.5

    # -- text ----------------------------------------------------------------

    def __str__(self):
        if not self.b:
            return str(self.a)
        tail = f"{abs(self.b)}*sqrt2"
        if not self.a:
            return tail if self.b > 0 else "-" + tail
        return f"{self.a}{'+' if self.b > 0 else '-'}{tail}"

    def __repr__(self):
        return f"RealScalar({self})"

    @classmethod
    def parse(cls, text: str) -> RealScalar:
        m = _REAL_RE.fullmatch(text.strip())
        if m is None:
            raise ValueError(f"not a Q(sqrt2) literal: {text!r}")
        rat, rsign, rcoef, lone = m.group("rat", "rsign", "rcoef", "lone")
        if lone is not None:
            return cls(0, Fraction(lone))
        a = Fraction(rat)
        if rcoef is None:
            return cls(a, 0)
        b = Fraction(rcoef)
        return cls(a, -b if rsign == "-" else b)


_NUM = r"[0-9]+(?:/[0-9]+)?"
_REAL_RE = re.compile(
    rf"(?P<lone>[+-]?{_NUM})\*sqrt2"
    rf"|(?P<rat>[+-]?{_NUM})(?:(?P<rsign>[+-])(?P<rcoef>{_NUM})\*sqrt2)?"
)

ZERO = RealScalar._raw(Fraction(0), Fraction(0))
ONE = RealScalar._raw(Fraction(1), Fraction(0))
SQRT2 = RealScalar._raw(Fraction(0), Fraction(1))


def _coerce_real(x):
    if isinstance(x, RealScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return RealScalar._raw(Fraction(x), Fraction(0))
    return NotImplemented


def as_real(x) -> RealScalar:
    """Coerce an int, Fraction, literal string or RealScalar."""
    if isinstance(x, str):
        return RealScalar.parse(x)
    r = _coerce_real(x)
    if r is NotImplemented:
        raise TypeError(f"cannot convert {type(x).__name__} to RealScalar")
    return r


def sign(x) -> int:
    return as_real(x).sign()


class ComplexScalar:
    """``re + i*im`` with ``re, im`` in Q(√2)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", as_real(re))
        object.__setattr__(self, "im", as_real(im))

    def __setattr__(self, name, value):
        raise AttributeError("ComplexScalar is immutable")

    def __reduce__(self):
        return (ComplexScalar, (self.re, self.im))

    @classmethod
    def _raw(cls, re: RealScalar, im: RealScalar) -> ComplexScalar:
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    def __add__(self, other):
        other = _coerce_complex(other)
        if other is NotImplemented:
            return NotImplemented
        return ComplexScalar._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_complex(other)
        if other is NotImplemented:
            return NotImplemented
        return ComplexScalar._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce_complex(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce_complex(other)
        if other is NotImplemented:
            return NotImplemented
        x, y, u, v = self.re, self.im, other.re, other.im
        if not y and not v:
            return ComplexScalar._raw(x * u, ZERO)
        return ComplexScalar._raw(x * u - y * v, x * v + y * u)

    __rmul__ = __mul__

    def __neg__(self):
        return ComplexScalar._raw(-self.re, -self.im)

    def conjugate(self) -> ComplexScalar:
        return ComplexScalar._raw(self.re, -self.im)

    def abs2(self) -> RealScalar:
        """``z * conj(z)`` as a real scalar."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> ComplexScalar:
        n = self.abs2()
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(sqrt2, i)")
        ninv = n.inverse()
        return ComplexScalar._raw(self.re * ninv, -self.im * ninv)

    def __truediv__(self, other):
        other = _coerce_complex(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.im:
            if not other.re:
                raise ZeroDivisionError("division by zero in Q(sqrt2, i)")
            return ComplexScalar._raw(self.re / other.re, self.im / other.re)
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce_complex(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = _coerce_complex(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def is_real(self) -> bool:
        return not self.im

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"({self.im})*i"
        return f"{self.re}+({self.im})*i"

    def __repr__(self):
        return f"ComplexScalar({self})"

    @classmethod
    def parse(cls, text: str) -> ComplexScalar:
        text = text.strip()
        if text.endswith("*i"):
            body = text[:-2]
            if body.endswith(")"):
                depth_start = body.rfind("(")
                if depth_start < 0:
                    raise ValueError(f"unbalanced parenthesis in {text!r}")
                im = RealScalar.parse(body[depth_start + 1 : -1])
                head = body[:depth_start]
                if head == "":
                    return cls(ZERO, im)
                if not head.endswith("+"):
                    raise ValueError(f"not a Q(sqrt2, i) literal: {text!r}")
                return cls(RealScalar.parse(head[:-1]), im)
            # bare "x*i" or "re+x*i" with rational parts only
            m = re.fullmatch(rf"(?:(?P<re>[+-]?{_NUM})(?=[+-]))?(?P<im>[+-]?{_NUM})", body)
            if m is None:
                raise ValueError(f"not a Q(sqrt2, i) literal: {text!r}")
            re_part = RealScalar.parse(m.group("re")) if m.group("re") else ZERO
            return cls(re_part, RealScalar.parse(m.group("im")))
        return cls(RealScalar.parse(text), ZERO)


def _coerce_complex(x):
    if isinstance(x, ComplexScalar):
        return x
    if isinstance(x, RealScalar):
        return ComplexScalar._raw(x, ZERO)
    if isinstance(x, (int, Fraction)):
        return ComplexScalar._raw(RealScalar._raw(Fraction(x), Fraction(0)), ZERO)
    return NotImplemented


def as_complex(x) -> ComplexScalar:
    if isinstance(x, str):
        return ComplexScalar.parse(x)
    z = _coerce_complex(x)
    if z is NotImplemented:
        raise TypeError(f"cannot convert {type(x).__name__} to ComplexScalar")
    return z


def conjugate(z) -> ComplexScalar:
    return as_complex(z).conjugate()


def rational_sqrt(x: Fraction) -> Fraction:
    """Non-negative square root of ``x`` if it is rational, else ExactnessError."""
    from math import isqrt

    x = Fraction(x)
    if x < 0:
        raise ExactnessError(f"negative radicand {x}")
    p, q = x.numerator, x.denominator
    rp, rq = isqrt(p), isqrt(q)
    if rp * rp != p or rq * rq != q:
        raise ExactnessError(f"sqrt({x}) is irrational")
    return Fraction(rp, rq)


I = ComplexScalar._raw(ZERO, ONE)
