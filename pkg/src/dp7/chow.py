"""Exact arithmetic in the Chow ring of the degree 7 del Pezzo threefold.

The ring is ``Z[xi, f] / (f^3, xi^2 - xi*f)``.  Every class is stored in the
fixed basis

    1;  xi, f;  xi^2, f^2;  pt

where ``xi*f`` is always rewritten as ``xi^2`` and ``xi^3 = xi^2 f = xi f^2``
is the class of a point.  Coefficients are exact rationals so that Chern
characters and Todd classes can be handled without rounding; integral
coefficients are held as ``int`` and the rest as :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

Scalar = Union[int, Fraction]

# basis slot -> exponents (i, j) of xi^i f^j
_MONOMIALS = {
    "c0": (0, 0),
    "xi": (1, 0),
    "f": (0, 1),
    "xi2": (2, 0),
    "f2": (0, 2),
    "pt": (3, 0),
}
_SLOTS = tuple(_MONOMIALS)
_DEGREE = {name: sum(exp) for name, exp in _MONOMIALS.items()}


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, (int, Rational, str)):
        return Fraction(value)
    raise TypeError(f"cannot use {value!r} as an exact coefficient")


def _norm(v):
    # integral values are kept as int: much faster than Fraction arithmetic
    if type(v) is int:
        return v
    if v.denominator == 1:
        return int(v.numerator)
    return v


def format_fraction(value) -> str:
    """Canonical text form: ``p/q`` in lowest terms with q > 0, plain ints."""
    value = as_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class ChowClass:
    """An element of A(F) with exact rational coefficients."""

    c0: Scalar = 0
    xi: Scalar = 0
    f: Scalar = 0
    xi2: Scalar = 0
    f2: Scalar = 0
    pt: Scalar = 0

    def __post_init__(self):
        for name in _SLOTS:
            object.__setattr__(self, name, _norm(as_fraction(getattr(self, name))))

    # -- ring structure -------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return _make(self.c0 + other.c0, self.xi + other.xi, self.f + other.f,
                     self.xi2 + other.xi2, self.f2 + other.f2, self.pt + other.pt)

    __radd__ = __add__

    def __neg__(self):
        return _make(-self.c0, -self.xi, -self.f, -self.xi2, -self.f2, -self.pt)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, ChowClass):
            return chow_mul(self, other)
        if type(other) is not int:
            try:
                other = _norm(as_fraction(other))
            except TypeError:
                return NotImplemented
        return _make(*((c * other if c else 0) for c in self._coeffs()))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are defined")
        result = ONE
        for _ in range(n):
            result = chow_mul(result, self)
        return result

    def _coeffs(self):
        return (self.c0, self.xi, self.f, self.xi2, self.f2, self.pt)

    # -- inspection -----------------------------------------------------
    def part(self, degree: int) -> "ChowClass":
        """The homogeneous component of the given degree."""
        return _make(*(getattr(self, s) if _DEGREE[s] == degree else 0 for s in _SLOTS))

    def is_homogeneous(self, degree: int) -> bool:
        return all(getattr(self, s) == 0 for s in _SLOTS if _DEGREE[s] != degree)

    def is_integral(self) -> bool:
        return all(getattr(self, s).denominator == 1 for s in _SLOTS)

    def __bool__(self):
        return any(getattr(self, s) for s in _SLOTS)

    def __str__(self):
        names = {"c0": "", "xi": "xi", "f": "f", "xi2": "xi^2", "f2": "f^2", "pt": "pt"}
        terms = []
        for s in _SLOTS:
            c = getattr(self, s)
            if not c:
                continue
            if names[s] and abs(c) == 1:
                body = names[s]
            elif names[s]:
                body = f"{format_fraction(abs(c))}{names[s]}"
            else:
                body = format_fraction(abs(c))
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f"{sign}{body}"
        return out

    # -- serialization --------------------------------------------------
    def to_record(self) -> dict:
        return {s: format_fraction(getattr(self, s)) for s in _SLOTS}

    @classmethod
    def from_record(cls, record: dict) -> "ChowClass":
        unknown = set(record) - set(_SLOTS)
        if unknown:
            raise ValueError(f"unknown Chow record keys: {sorted(unknown)}")
        return cls(**{s: Fraction(str(record.get(s, "0"))) for s in _SLOTS})


def _make(c0, xi, f, xi2, f2, pt) -> ChowClass:
    """Build a class from values that are already Fractions (or ints), skipping validation."""
    obj = object.__new__(ChowClass)
    d = obj.__dict__
    d["c0"], d["xi"], d["f"], d["xi2"], d["f2"], d["pt"] = map(_norm, (c0, xi, f, xi2, f2, pt))
    return obj


def _coerce(value):
    if isinstance(value, ChowClass):
        return value
    try:
        return ChowClass(c0=as_fraction(value))
    except TypeError:
        return NotImplemented


def product_coefficients(a, b):
    """Basis coefficients of a product, given the six coefficients of each factor.

    Works for any coefficient type with ``+`` and ``*``, so it is shared by
    :func:`chow_mul` and the vectorised arrays in :mod:`dp7.batch`.
    """
    a0, a1, a2, a3, a4, a5 = a
    b0, b1, b2, b3, b4, b5 = b
    # xi*f = xi^2;  xi*xi^2 = xi*f^2 = f*xi^2 = pt;  f*f^2 = 0
    return (
        a0 * b0,
        a0 * b1 + a1 * b0,
        a0 * b2 + a2 * b0,
        a0 * b3 + a3 * b0 + a1 * (b1 + b2) + a2 * b1,
        a0 * b4 + a4 * b0 + a2 * b2,
        a0 * b5 + a5 * b0 + a1 * (b3 + b4) + a2 * b3 + a3 * (b1 + b2) + a4 * b1,
    )


def chow_mul(a: ChowClass, b: ChowClass) -> ChowClass:
    """Graded product, reduced to the basis; degree > 3 terms vanish."""
    return _make(*product_coefficients(a._coeffs(), b._coeffs()))


def degree(a: ChowClass) -> Scalar:
    """Coefficient of the point class."""
    return a.pt


def divisor(l1: int, l2: int) -> ChowClass:
    """The divisor class l1*xi + l2*f."""
    return ChowClass(xi=l1, f=l2)


def curve(e1: Scalar, e2: Scalar) -> ChowClass:
    """The curve class e1*xi^2 + e2*f^2."""
    return ChowClass(xi2=e1, f2=e2)


def intersect(*classes: ChowClass) -> Scalar:
    """Degree of the product of the given classes."""
    result = ONE
    for c in classes:
        result = chow_mul(result, c)
    return degree(result)


ONE = ChowClass(c0=1)
XI = ChowClass(xi=1)
F = ChowClass(f=1)
H = XI + F
XI2 = ChowClass(xi2=1)
F2 = ChowClass(f2=1)
PT = ChowClass(pt=1)
ZERO = ChowClass()

CHOW_SLOTS = _SLOTS
