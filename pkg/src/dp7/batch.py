"""Vectorised exact Chern calculus over many parameter values at once.

A :class:`ChowArray` holds N classes as an integer array of shape (6, N)
over one shared positive denominator.  Ring operations use the same product
rule as :func:`dp7.chow.chow_mul`, so the arithmetic stays exact.  Each array
carries an upper bound on the size of its entries, propagated through every
operation; an operation whose bound could leave int64 raises OverflowError
instead of wrapping.

The entry point is :func:`zero_locus_class_array`, which runs the
Chern-character twist of :mod:`dp7.bundle` on whole parameter grids.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .chow import CHOW_SLOTS, ChowClass, as_fraction, product_coefficients

_LIMIT = 2**62
_REDUCE_AT = 2**12
_RESCAN_AT = 2**40
_PRODUCT_TERMS = 8  # no slot of a product has more terms than this
_DEGREE = (0, 1, 1, 2, 2, 3)


@dataclass(frozen=True, eq=False)
class ChowArray:
    num: np.ndarray
    den: int = 1
    bound: int = -1  # upper bound on abs(num); computed when negative

    def __post_init__(self):
        if self.num.ndim != 2 or self.num.shape[0] != 6:
            raise ValueError(f"expected shape (6, N), got {self.num.shape}")
        if self.den <= 0:
            raise ValueError("denominator must be positive")
        if self.bound < 0:
            size = int(max(self.num.max(), -self.num.min())) if self.num.size else 0
            object.__setattr__(self, "bound", size)
        if self.bound >= _LIMIT:
            raise OverflowError("ChowArray entries may exceed the exact int64 range")

    @classmethod
    def from_slots(cls, size: int, **slots) -> "ChowArray":
        """Build from per-slot integer arrays (or scalars); missing slots are 0."""
        unknown = set(slots) - set(CHOW_SLOTS)
        if unknown:
            raise ValueError(f"unknown slots {sorted(unknown)}")
        num = np.zeros((6, size), dtype=np.int64)
        for i, name in enumerate(CHOW_SLOTS):
            if name in slots:
                num[i] = np.asarray(slots[name], dtype=np.int64)
        return cls(num)

    def __len__(self):
        return self.num.shape[1]

    # -- arithmetic ---------------------------------------------------------
    def _reduced(self) -> "ChowArray":
        # gcd reduction and rescanning are costly on large grids; only do them
        # once the denominator or the magnitude bound starts to grow
        if self.den < _REDUCE_AT and self.bound < _RESCAN_AT:
            return self
        return self.reduced()

    def reduced(self) -> "ChowArray":
        """Divide numerators and denominator by their common gcd."""
        g = gcd(self.den, int(np.gcd.reduce(np.abs(self.num), axis=None)))
        if g > 1:
            return ChowArray(self.num // g, self.den // g)
        return ChowArray(self.num, self.den)  # rescans the bound

    def __add__(self, other: "ChowArray") -> "ChowArray":
        if self.den == other.den:
            return ChowArray(self.num + other.num, self.den, self.bound + other.bound)
        bound = self.bound * other.den + other.bound * self.den
        _guard(bound)
        num = self.num * other.den + other.num * self.den
        return ChowArray(num, self.den * other.den, bound)._reduced()

    def __neg__(self):
        return ChowArray(-self.num, self.den, self.bound)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ChowArray):
            bound = _PRODUCT_TERMS * self.bound * other.bound
            if bound >= _LIMIT:
                self, other = self.reduced(), other.reduced()
                bound = _PRODUCT_TERMS * self.bound * other.bound
            _guard(bound)
            num = np.stack(product_coefficients(tuple(self.num), tuple(other.num)))
            return ChowArray(num, self.den * other.den, bound)._reduced()
        q = as_fraction(other)  # q.denominator is always positive
        bound = self.bound * abs(q.numerator)
        _guard(bound)
        return ChowArray(self.num * q.numerator, self.den * q.denominator, bound)._reduced()

    __rmul__ = __mul__

    # -- access -------------------------------------------------------------
    def part(self, degree: int) -> "ChowArray":
        mask = np.array([d == degree for d in _DEGREE])[:, None]
        return ChowArray(np.where(mask, self.num, 0), self.den, self.bound)

    def is_integral(self) -> bool:
        return not np.any(self.num % self.den)

    def slot(self, name: str) -> np.ndarray:
        """Exact integer values of one slot; raises if any entry is fractional."""
        row = self.num[CHOW_SLOTS.index(name)]
        if np.any(row % self.den):
            raise ValueError(f"slot {name} is not integral")
        return row // self.den

    def at(self, k: int) -> ChowClass:
        """The k-th class as a scalar :class:`ChowClass`."""
        return ChowClass(*(Fraction(int(v), self.den) for v in self.num[:, k]))


def _guard(bound: int):
    if bound >= _LIMIT:
        raise OverflowError("ChowArray entries may exceed the exact int64 range")


# -- Chern character ---------------------------------------------------------

def chern_character_array(rank: int, c1: ChowArray, c2: ChowArray, c3: ChowArray) -> ChowArray:
    n = len(c1)
    c1c1 = c1 * c1
    return (
        ChowArray.from_slots(n, c0=rank)
        + c1
        + Fraction(1, 2) * (c1c1 - 2 * c2)
        + Fraction(1, 6) * (c1c1 * c1 - 3 * (c1 * c2) + 3 * c3)
    )


def from_chern_character_array(ch: ChowArray, top: int = 3) -> tuple:
    """Newton's identities, as in :func:`dp7.bundle.from_chern_character`.

    Returns ``(c1, ..., c_top)``; pass ``top < 3`` to skip unneeded work.
    """
    p1 = ch.part(1)
    p2 = 2 * ch.part(2)
    c1 = p1
    c2 = Fraction(1, 2) * (c1 * p1 - p2)
    if top < 3:
        return (c1, c2)[:top]
    c3 = Fraction(1, 3) * (c2 * p1 - c1 * p2 + 6 * ch.part(3))
    return c1, c2, c3


def zero_locus_class_array(a1, a2, b1, b2, d1, d2) -> ChowArray:
    """c2(E(-D)) for rank 2 data with integral c1, c2 and c3 = 0, elementwise.

    Arguments are integer arrays of equal length (or scalars broadcast to it).
    """
    args = np.broadcast_arrays(*(np.asarray(x, dtype=np.int64) for x in (a1, a2, b1, b2, d1, d2)))
    a1, a2, b1, b2, d1, d2 = (x.ravel() for x in args)
    n = a1.size
    ch_e = chern_character_array(
        2,
        ChowArray.from_slots(n, xi=a1, f=a2),
        ChowArray.from_slots(n, xi2=b1, f2=b2),
        ChowArray.from_slots(n),
    )
    zero = ChowArray.from_slots(n)
    ch_l = chern_character_array(1, ChowArray.from_slots(n, xi=-d1, f=-d2), zero, zero)
    _, c2 = from_chern_character_array(ch_e * ch_l, top=2)
    return c2.reduced()
