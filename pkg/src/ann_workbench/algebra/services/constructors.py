"""
Standard rings and bimodules.
"""
import logging

import numpy as np

from ...config.settings import settings
from ...exceptions import ShapeError
from ..core.finite_bimodule import FiniteBimodule
from ..core.finite_ring import FiniteRing

logger = logging.getLogger(__name__)


def cyclic_ring(n: int) -> FiniteRing:
    """Z/n with the standard tables; n = 1 gives the zero ring (zero == one)."""
    if not 1 <= n <= settings.MAX_RING_ORDER:
        raise ShapeError(f"cyclic ring order must lie in 1..{settings.MAX_RING_ORDER}, got {n}")
    x = np.arange(n)
    return FiniteRing(
        order=n,
        add=(x[:, None] + x[None, :]) % n,
        mul=(x[:, None] * x[None, :]) % n,
        zero=0,
        one=1 % n,
        neg=(-x) % n,
        name=f"Z/{n}",
    )


def ring_bimodule(ring: FiniteRing) -> FiniteBimodule:
    """The regular bimodule: (R, +) with both actions given by ring multiplication."""
    return FiniteBimodule(
        order=ring.order,
        add=ring.add,
        zero=ring.zero,
        left_action=ring.mul,
        right_action=ring.mul,
        neg=ring.neg,
        name=f"regular {ring.name}".strip(),
    )


def quotient_bimodule(ring: FiniteRing, m: int) -> FiniteBimodule:
    """
    Z/m over Z/n (n = ring.order, m | n), acting by reduction mod m.

    Ring elements are read as residues, so this is only meaningful for a
    cyclic ring in its standard labelling; validate_bimodule catches misuse.
    """
    if m < 1 or ring.order % m:
        raise ShapeError(f"Z/{m} is not a quotient of a ring of order {ring.order}")
    u = np.arange(m)
    x = np.arange(ring.order)
    action = (x[:, None] * u[None, :]) % m
    return FiniteBimodule(
        order=m,
        add=(u[:, None] + u[None, :]) % m,
        zero=0,
        left_action=action,
        right_action=action.T,
        neg=(-u) % m,
        name=f"Z/{m} over {ring.name}".strip(),
    )
