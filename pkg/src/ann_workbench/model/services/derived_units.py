"""
Derivation of the unit-compatibility isomorphisms L̂^A: A0 -> 0 and
R̂^A: 0A -> 0.

In the skeleton the square with L^A(g) (and the probe object X) has exactly
one solution for L̂^A:

    candidate(A, X) = A·g(X) - L(A, 0, X) - g(AX)

The canonical value is candidate(A, 0); the derivation is consistent when
no probe X disagrees with it. The companion square with d gives a second
family of candidates, kept for the cross-check. R̂ mirrors all of this with
the right action and R.
"""
import logging
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from ..core.skeletal_model import ModelBatch, SkeletalModel

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class UnitDerivation:
    """One derived table together with every candidate that produced it."""

    side: str
    table: np.ndarray
    candidates: np.ndarray        # [A, X], from the g-square
    cross_candidates: np.ndarray  # [A, X], from the d-square

    @property
    def consistent(self) -> bool:
        return bool(np.all(self.candidates == self.table[:, None]))

    @property
    def cross_consistent(self) -> bool:
        return bool(np.all(self.cross_candidates == self.table[:, None]))

    @property
    def conflicts(self) -> List[Tuple[int, int, int]]:
        """(A, X, candidate) for every probe that disagrees with the canonical value."""
        return _disagreements(self.candidates, self.table)

    @property
    def cross_conflicts(self) -> List[Tuple[int, int, int]]:
        return _disagreements(self.cross_candidates, self.table)


@dataclass(frozen=True, eq=False)
class DerivedUnits:
    lhat: UnitDerivation
    rhat: UnitDerivation

    @property
    def consistent(self) -> bool:
        return self.lhat.consistent and self.rhat.consistent


def _disagreements(candidates: np.ndarray, table: np.ndarray) -> List[Tuple[int, int, int]]:
    bad = np.argwhere(candidates != table[:, None])
    return [(int(a), int(x), int(candidates[a, x])) for a, x in bad]


def _grids(batch: ModelBatch):
    n = batch.ring.order
    b = np.arange(batch.size)[:, None, None]
    a = np.arange(n)[None, :, None]
    x = np.arange(n)[None, None, :]
    return b, a, x


def lhat_candidates(batch: ModelBatch) -> Tuple[np.ndarray, np.ndarray]:
    """Candidate arrays [batch, A, X] from the g-square and the d-square."""
    ring, module = batch.ring, batch.module
    g, d, ldist = batch.tables['g'], batch.tables['d'], batch.tables['ldist']
    b, a, x = _grids(batch)
    ax = ring.mul[a, x]
    zero = ring.zero

    from_g = module.minus(module.minus(module.lact(a, g[b, x]), ldist[b, a, zero, x]), g[b, ax])
    from_d = module.minus(module.minus(module.lact(a, d[b, x]), ldist[b, a, x, zero]), d[b, ax])
    return from_g, from_d


def rhat_candidates(batch: ModelBatch) -> Tuple[np.ndarray, np.ndarray]:
    """Mirror of lhat_candidates: g(X)·A - R(0, X, A) - g(XA), and the d version."""
    ring, module = batch.ring, batch.module
    g, d, rdist = batch.tables['g'], batch.tables['d'], batch.tables['rdist']
    b, a, x = _grids(batch)
    xa = ring.mul[x, a]
    zero = ring.zero

    from_g = module.minus(module.minus(module.ract(g[b, x], a), rdist[b, zero, x, a]), g[b, xa])
    from_d = module.minus(module.minus(module.ract(d[b, x], a), rdist[b, x, zero, a]), d[b, xa])
    return from_g, from_d


def derive_batch_units(batch: ModelBatch) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Canonical (lhat, rhat) tables [batch, A] and per-model consistency flags."""
    zero = batch.ring.zero
    left, _ = lhat_candidates(batch)
    right, _ = rhat_candidates(batch)
    lhat, rhat = left[:, :, zero], right[:, :, zero]
    lhat_ok = np.all(left == lhat[:, :, None], axis=(1, 2))
    rhat_ok = np.all(right == rhat[:, :, None], axis=(1, 2))
    return lhat, rhat, lhat_ok, rhat_ok


def _derive(model: SkeletalModel, side: str) -> UnitDerivation:
    compute = lhat_candidates if side == "lhat" else rhat_candidates
    from_g, from_d = compute(model.batch())
    candidates, cross = from_g[0], from_d[0]
    derivation = UnitDerivation(side, candidates[:, model.ring.zero].copy(), candidates, cross)
    if not derivation.consistent:
        logger.info(f"{side} is inconsistent: {len(derivation.conflicts)} conflicting probes")
    if not derivation.cross_consistent:
        logger.info(f"{side} disagrees with its d-square at {len(derivation.cross_conflicts)} probes")
    return derivation


def derive_lhat(model: SkeletalModel) -> UnitDerivation:
    """
    Derive lhat from the g-square and check it against every probe object X.

    Args:
        model: Model supplying g, ldist and the bimodule actions

    Returns:
        The canonical X = 0 table with its conflicts and the d-square cross-check
    """
    return _derive(model, "lhat")


def derive_rhat(model: SkeletalModel) -> UnitDerivation:
    """Derive rhat with the right action and R; the mirror image of `derive_lhat`."""
    return _derive(model, "rhat")


def derive_units(model: SkeletalModel) -> DerivedUnits:
    """
    Derive both unit isomorphisms of a model.

    Args:
        model: Model to derive from

    Returns:
        DerivedUnits holding the lhat and rhat derivations
    """
    return DerivedUnits(derive_lhat(model), derive_rhat(model))
