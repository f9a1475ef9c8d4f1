"""
Finite bimodule over a FiniteRing: an abelian group with two actions.
"""
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ...config.settings import settings
from ...exceptions import ShapeError
from .tables import Index, as_index, frozen_table, inverse_vector


@dataclass(frozen=True, eq=False)
class FiniteBimodule:
    """
    Elements are the indices 0..order-1. `left_action[x, u]` is x·u and
    `right_action[u, x]` is u·x for ring elements x. The ring order is
    read off the action tables.
    """

    order: int
    add: np.ndarray
    zero: int
    left_action: np.ndarray
    right_action: np.ndarray
    neg: np.ndarray = field(default=None)
    name: str = ""

    def __post_init__(self):
        m = int(self.order)
        if not 1 <= m <= settings.MAX_MODULE_ORDER:
            raise ShapeError(f"module order must lie in 1..{settings.MAX_MODULE_ORDER}, got {m}")
        object.__setattr__(self, 'order', m)
        object.__setattr__(self, 'add', frozen_table(self.add, (m, m), m, "module add"))
        zero = int(self.zero)
        if not 0 <= zero < m:
            raise ShapeError(f"module zero must lie in 0..{m - 1}, got {zero}")
        object.__setattr__(self, 'zero', zero)
        n = np.shape(self.left_action)[0] if np.ndim(self.left_action) == 2 else 0
        object.__setattr__(self, 'left_action', frozen_table(self.left_action, (n, m), m, "left action"))
        object.__setattr__(self, 'right_action', frozen_table(self.right_action, (m, n), m, "right action"))
        neg = self.neg if self.neg is not None else inverse_vector(self.add, zero)
        object.__setattr__(self, 'neg', frozen_table(neg, (m,), m, "module neg"))

    @property
    def ring_order(self) -> int:
        return self.left_action.shape[0]

    def plus(self, u: Index, v: Index) -> Index:
        """Module addition; broadcasts over index arrays."""
        return as_index(self.add[u, v])

    def minus(self, u: Index, v: Index) -> Index:
        """u - v."""
        return as_index(self.add[u, self.neg[v]])

    def negate(self, u: Index) -> Index:
        return as_index(self.neg[u])

    def lact(self, x: Index, u: Index) -> Index:
        """x·u"""
        return as_index(self.left_action[x, u])

    def ract(self, u: Index, x: Index) -> Index:
        """u·x"""
        return as_index(self.right_action[u, x])

    def patched(self, left_action: Optional[dict] = None, right_action: Optional[dict] = None) -> "FiniteBimodule":
        """Copy with individual action entries overwritten, e.g. left_action={(0, 1): 1}."""
        left, right = self.left_action.copy(), self.right_action.copy()
        for key, value in (left_action or {}).items():
            left[key] = value
        for key, value in (right_action or {}).items():
            right[key] = value
        return FiniteBimodule(self.order, self.add, self.zero, left, right, name=self.name)

    def __repr__(self):
        label = self.name or f"bimodule of order {self.order}"
        return f"FiniteBimodule({label})"
