"""Scalar backends: exact Gaussian rationals and double-precision complexes.

Every number in this package is either a :class:`GaussianRational` (exact
backend) or a built-in ``complex`` (float backend).  Both support
``+ - * / **`` with each other and with ``int``, so formula code is
backend-agnostic.  The backend singletons :data:`EXACT` and :data:`FLOAT`
supply what does differ: constants, text formatting/parsing, and equality
tests.

Exact values keep reduced fractions with positive denominators
(``fractions.Fraction`` guarantees both), so equal values hash equally;
exact cycle detection relies on this.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError("expected int or Fraction, got %r" % type(x).__name__)


class GaussianRational:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def inverse(self):
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("inverse of exact zero")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def magnitude_squared(self):
        return self.re * self.re + self.im * self.im

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return format_exact(self)


_EXACT_RE = re.compile(
    r"(?P<re>-?\d+(?:/\d+)?)(?:(?P<sign>[+-])(?P<im>\d+(?:/\d+)?)\*i)?\Z"
)


def format_exact(v):
    """Canonical text form: ``p/q`` or ``p/q(+|-)r/s*i``, reduced, no spaces."""
    if v.im == 0:
        return str(v.re)
    sign = "+" if v.im > 0 else "-"
    return "%s%s%s*i" % (v.re, sign, abs(v.im))


def parse_exact(s):
    m = _EXACT_RE.match(s)
    if m is None:
        raise ParseError("not an exact scalar: %r" % s)
    re_part = Fraction(m.group("re"))
    if m.group("im") is None:
        return GaussianRational(re_part)
    im_part = Fraction(m.group("im"))
    if m.group("sign") == "-":
        im_part = -im_part
    return GaussianRational(re_part, im_part)


def format_float(v):
    """Shortest round-trip decimal; pure-real values drop the imaginary part."""
    v = complex(v)
    if v.imag == 0.0:
        return repr(v.real)
    return repr(v)


def parse_float(s):
    try:
        return complex(float(s))
    except ValueError:
        pass
    try:
        return complex(s)
    except ValueError:
        raise ParseError("not a float scalar: %r" % s) from None


class ExactBackend:
    """Exact Gaussian-rational field."""

    name = "exact"
    zero = GaussianRational(0)
    one = GaussianRational(1)

    @staticmethod
    def scalar(re, im=0):
        return GaussianRational(re, im)

    @staticmethod
    def from_int(n):
        return GaussianRational(n)

    format = staticmethod(format_exact)
    parse = staticmethod(parse_exact)

    @staticmethod
    def is_zero(v, tol=None):
        return v.re == 0 and v.im == 0

    @staticmethod
    def eq(a, b, tol=None):
        return a == b

    @staticmethod
    def magnitude(v):
        return float(v.magnitude_squared()) ** 0.5


class FloatBackend:
    """Double-precision complex numbers; comparisons take a tolerance."""

    name = "float"
    zero = complex(0.0)
    one = complex(1.0)
    default_tol = 1e-9

    @staticmethod
    def scalar(re, im=0):
        return complex(float(re), float(im))

    @staticmethod
    def from_int(n):
        return complex(float(n))

    format = staticmethod(format_float)
    parse = staticmethod(parse_float)

    @classmethod
    def is_zero(cls, v, tol=None):
        return abs(v) <= (cls.default_tol if tol is None else tol)

    @classmethod
    def eq(cls, a, b, tol=None):
        return cls.is_zero(a - b, tol)

    @staticmethod
    def magnitude(v):
        return abs(v)


EXACT = ExactBackend()
FLOAT = FloatBackend()
BACKENDS = {"exact": EXACT, "float": FLOAT}


def backend(name):
    try:
        return BACKENDS[name]
    except KeyError:
        raise ParseError("unknown backend %r (expected 'exact' or 'float')" % name) from None


def backend_of_value(v):
    """Infer the backend singleton from a scalar value."""
    if isinstance(v, GaussianRational):
        return EXACT
    if isinstance(v, complex):
        return FLOAT
    raise TypeError("not a backend scalar: %r" % type(v).__name__)


def to_float(v):
    """Map an exact scalar (or a float one, unchanged) into the float backend."""
    if isinstance(v, complex):
        return v
    return complex(v)
