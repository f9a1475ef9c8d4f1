"""
Skeletal models: one object per ring element, Aut(x) identified with the
bimodule, and one bimodule-valued table per natural constraint.
"""
import logging
from dataclasses import dataclass, replace
from typing import Dict, Iterable, Mapping, Optional, Sequence, Union

import numpy as np

from ...algebra.core.finite_bimodule import FiniteBimodule
from ...algebra.core.finite_ring import FiniteRing
from ...algebra.core.tables import frozen_table
from ...exceptions import ArityError, MissingUnitsError, ShapeError, SkeletonError
from .constraints import SIGNATURES, TABLE_ARITY, TABLE_NAMES, ConstraintKind, table_name
from .morphism import Morphism, same_objects

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SkeletalModel:
    """
    A candidate Ann-category / categorical ring.

    Tables left as None are filled with the module zero. `lhat`/`rhat` are
    only present after `with_derived_units`.
    """

    ring: FiniteRing
    module: FiniteBimodule
    xi: Optional[np.ndarray] = None
    eta: Optional[np.ndarray] = None
    g: Optional[np.ndarray] = None
    d: Optional[np.ndarray] = None
    alpha: Optional[np.ndarray] = None
    lam_u: Optional[np.ndarray] = None
    rho_u: Optional[np.ndarray] = None
    ldist: Optional[np.ndarray] = None
    rdist: Optional[np.ndarray] = None
    lhat: Optional[np.ndarray] = None
    rhat: Optional[np.ndarray] = None
    name: str = ""
    notes: str = ""

    def __post_init__(self):
        n, m = self.ring.order, self.module.order
        if self.module.ring_order != n:
            raise ShapeError(f"bimodule acts on a ring of order {self.module.ring_order}, not {n}")
        for table in TABLE_NAMES:
            shape = (n,) * TABLE_ARITY[table]
            data = getattr(self, table)
            if data is None:
                data = np.full(shape, self.module.zero)
            object.__setattr__(self, table, frozen_table(data, shape, m, table))
        for table in ('lhat', 'rhat'):
            data = getattr(self, table)
            if data is not None:
                object.__setattr__(self, table, frozen_table(data, (n,), m, table))

    @classmethod
    def random(cls, ring: FiniteRing, module: FiniteBimodule, rng: np.random.Generator,
               tables: Iterable[str] = TABLE_NAMES, **fixed) -> "SkeletalModel":
        """Uniformly random entries for `tables`; the rest zero unless given in `fixed`."""
        n, m = ring.order, module.order
        drawn = {t: rng.integers(0, m, size=(n,) * TABLE_ARITY[t]) for t in tables}
        drawn.update(fixed)
        return cls(ring, module, **drawn)

    @property
    def tables(self) -> Dict[str, np.ndarray]:
        return {t: getattr(self, t) for t in TABLE_NAMES}

    @property
    def has_units(self) -> bool:
        return self.lhat is not None and self.rhat is not None

    def table_for(self, kind: ConstraintKind) -> np.ndarray:
        table = getattr(self, SIGNATURES[kind].table)
        if table is None:
            raise MissingUnitsError(f"constraint '{kind.value}' needs derived units; call with_derived_units() first")
        return table

    def patched(self, table: str, entries: Mapping[tuple, int]) -> "SkeletalModel":
        """Copy with entries of one table overwritten, e.g. patched('L', {(1, 1, 1): 1})."""
        name = table_name(table)
        data = getattr(self, name).copy()
        for key, value in entries.items():
            data[tuple(key)] = value
        return replace(self, **{name: data, 'lhat': None, 'rhat': None})

    def with_units(self, lhat, rhat) -> "SkeletalModel":
        return replace(self, lhat=lhat, rhat=rhat)

    def with_derived_units(self) -> "SkeletalModel":
        """Copy carrying the canonical lhat/rhat tables derived from this model."""
        from ..services.derived_units import derive_units

        units = derive_units(self)
        return self.with_units(units.lhat.table, units.rhat.table)

    def batch(self) -> "ModelBatch":
        """A one-model batch."""
        tables = {t: getattr(self, t)[None, ...] for t in TABLE_NAMES}
        lhat = None if self.lhat is None else self.lhat[None, :]
        rhat = None if self.rhat is None else self.rhat[None, :]
        return ModelBatch(self.ring, self.module, tables, lhat, rhat)

    def __repr__(self):
        label = f" '{self.name}'" if self.name else ""
        return f"SkeletalModel{label}({self.ring!r}, {self.module!r})"


def trivial_model(ring: FiniteRing, module: FiniteBimodule) -> SkeletalModel:
    """All constraint tables zero."""
    return SkeletalModel(ring, module, name="trivial")


@dataclass(frozen=True, eq=False)
class ModelBatch:
    """
    A stack of models sharing one ring and bimodule. Every table carries a
    leading batch axis; a single model is a batch of size one.
    """

    ring: FiniteRing
    module: FiniteBimodule
    tables: Dict[str, np.ndarray]
    lhat: Optional[np.ndarray] = None
    rhat: Optional[np.ndarray] = None

    @property
    def size(self) -> int:
        return len(next(iter(self.tables.values())))

    def table_for(self, kind: ConstraintKind) -> np.ndarray:
        name = SIGNATURES[kind].table
        table = getattr(self, name) if kind.derived else self.tables[name]
        if table is None:
            raise MissingUnitsError(f"constraint '{kind.value}' needs derived units")
        return table

    def lookup(self, kind: ConstraintKind, args: Sequence[np.ndarray]) -> np.ndarray:
        """Table values for a grid of arguments: (B, N) from args of shape (N,)."""
        table = self.table_for(kind)
        batch_axis = np.arange(len(table))[:, None]
        return table[(batch_axis,) + tuple(np.asarray(a)[None, :] for a in args)]

    def with_units(self, lhat: np.ndarray, rhat: np.ndarray) -> "ModelBatch":
        return replace(self, lhat=lhat, rhat=rhat)

    def slice(self, start: int, stop: int) -> "ModelBatch":
        """Models start..stop-1 as a new batch."""
        return ModelBatch(
            self.ring,
            self.module,
            {t: v[start:stop] for t, v in self.tables.items()},
            None if self.lhat is None else self.lhat[start:stop],
            None if self.rhat is None else self.rhat[start:stop],
        )

    def head(self, k: int = 1) -> "ModelBatch":
        return self.slice(0, k)

    def model(self, i: int, name: str = "") -> SkeletalModel:
        """Model i of the batch as a standalone SkeletalModel."""
        return SkeletalModel(
            self.ring,
            self.module,
            name=name,
            **{t: np.array(v[i]) for t, v in self.tables.items()},
        )


def constraint(model: SkeletalModel, kind: Union[ConstraintKind, str], args: Sequence[int]) -> Morphism:
    """
    The constraint morphism `kind(args)` of a single model.

    Source and target are computed independently from the ring tables and
    must coincide in the skeleton.
    """
    if not isinstance(kind, ConstraintKind):
        kind = ConstraintKind.parse(kind)
    signature = SIGNATURES[kind]
    if len(args) != signature.arity:
        raise ArityError(f"constraint '{kind.value}' takes {signature.arity} arguments, got {len(args)}")
    n = model.ring.order
    if any(not 0 <= int(a) < n for a in args):
        raise ShapeError(f"constraint '{kind.value}' arguments {tuple(args)} out of range for ring order {n}")

    args = tuple(int(a) for a in args)
    source = signature.source(model.ring, *args)
    target = signature.target(model.ring, *args)
    if not same_objects(source, target):
        raise SkeletonError(f"{kind.value}{args}: source {source} differs from target {target}")
    return Morphism(source, target, int(model.table_for(kind)[args]))
