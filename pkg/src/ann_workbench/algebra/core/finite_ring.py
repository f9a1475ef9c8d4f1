"""
Finite unital ring stored as Cayley tables on the indices 0..n-1.
"""
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ...config.settings import settings
from ...exceptions import ShapeError
from .tables import Index, as_index, frozen_table, inverse_vector


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """
    A finite ring as explicit tables. Elements are the indices 0..order-1.

    The tables are not checked against the ring laws here; that is what
    `validate_ring` is for. Construction only enforces shapes and ranges.
    All lookup methods accept plain ints or integer arrays (broadcasting).
    """

    order: int
    add: np.ndarray
    mul: np.ndarray
    zero: int
    one: int
    neg: np.ndarray = field(default=None)
    name: str = ""

    def __post_init__(self):
        n = int(self.order)
        if not 1 <= n <= settings.MAX_RING_ORDER:
            raise ShapeError(f"ring order must lie in 1..{settings.MAX_RING_ORDER}, got {n}")
        object.__setattr__(self, 'order', n)
        object.__setattr__(self, 'add', frozen_table(self.add, (n, n), n, "ring add"))
        object.__setattr__(self, 'mul', frozen_table(self.mul, (n, n), n, "ring mul"))
        for label in ('zero', 'one'):
            value = int(getattr(self, label))
            if not 0 <= value < n:
                raise ShapeError(f"ring {label} must lie in 0..{n - 1}, got {value}")
            object.__setattr__(self, label, value)
        neg = self.neg if self.neg is not None else inverse_vector(self.add, self.zero)
        object.__setattr__(self, 'neg', frozen_table(neg, (n,), n, "ring neg"))

    @classmethod
    def from_tables(cls, add, mul, zero: int = 0, one: int = 1, name: str = "") -> "FiniteRing":
        return cls(order=len(add), add=add, mul=mul, zero=zero, one=one, name=name)

    @property
    def elements(self) -> np.ndarray:
        return np.arange(self.order)

    def plus(self, x: Index, y: Index) -> Index:
        """Ring addition; broadcasts over index arrays."""
        return as_index(self.add[x, y])

    def times(self, x: Index, y: Index) -> Index:
        """Ring multiplication; broadcasts over index arrays."""
        return as_index(self.mul[x, y])

    def negate(self, x: Index) -> Index:
        """Additive inverse."""
        return as_index(self.neg[x])

    def patched(self, add: Optional[dict] = None, mul: Optional[dict] = None) -> "FiniteRing":
        """Copy with individual table entries overwritten, e.g. mul={(1, 1): 0}."""
        add_table, mul_table = self.add.copy(), self.mul.copy()
        for key, value in (add or {}).items():
            add_table[key] = value
        for key, value in (mul or {}).items():
            mul_table[key] = value
        return FiniteRing(self.order, add_table, mul_table, self.zero, self.one, name=self.name)

    def __repr__(self):
        label = self.name or f"ring of order {self.order}"
        return f"FiniteRing({label})"
