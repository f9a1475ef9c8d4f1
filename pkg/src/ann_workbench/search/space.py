"""
Search spaces of skeletal models over a small ring and bimodule.

A space varies some constraint tables and keeps the rest fixed at a base
model (all zero for the strict base). Models are addressed by an index:
in exhaustive mode the index spells the varied entries as base-|M| digits,
the first entry of the first varied table being the most significant, so
index 0 is the base model itself. In random mode the index is a row of a
seeded draw.
"""
import logging
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Tuple, Union

import numpy as np

from ..algebra.core.finite_bimodule import FiniteBimodule
from ..algebra.core.finite_ring import FiniteRing
from ..algebra.services.constructors import cyclic_ring, quotient_bimodule, ring_bimodule
from ..algebra.services.validator import validate_bimodule, validate_ring
from ..config.settings import settings
from ..exceptions import InvalidModelError, SearchBoundError, ShapeError, UnknownNameError
from ..model.core.constraints import TABLE_ARITY, TABLE_NAMES, table_name
from ..model.core.skeletal_model import ModelBatch, SkeletalModel, trivial_model

logger = logging.getLogger(__name__)

MODULE_TOKENS = ('regular', 'z2')
MODES = ('exhaustive', 'random')

# Rows drawn per seeded block in random mode.
RANDOM_BLOCK = 4096


def parse_ring(token: str) -> FiniteRing:
    """Ring token z<n>, for any n from 1 up to the MAX_RING_ORDER cap."""
    match = re.fullmatch(r"[zZ](\d+)", token.strip())
    if not match:
        raise UnknownNameError(f"unknown ring '{token}'; expected z<n> with 1 <= n <= {settings.MAX_RING_ORDER}, e.g. z2")
    return cyclic_ring(int(match.group(1)))


def parse_module(token: str, ring: FiniteRing) -> FiniteBimodule:
    """Module token: 'regular', or 'z2' (Z/2 by reduction, even rings only)."""
    token = token.strip().lower()
    if token == 'regular':
        return ring_bimodule(ring)
    if token == 'z2':
        try:
            return quotient_bimodule(ring, 2)
        except ShapeError as e:
            raise SearchBoundError(f"module 'z2' does not exist over {ring.name}: {e}")
    raise UnknownNameError(f"unknown module '{token}'; choose from {', '.join(MODULE_TOKENS)}")


def _check_base(base: SkeletalModel, ring: FiniteRing, module: FiniteBimodule, ring_token: str, module_token: str) -> None:
    if base.ring.order != ring.order or base.module.order != module.order:
        raise ShapeError(
            f"base model '{base.name}' has orders {base.ring.order}/{base.module.order}, "
            f"the space {ring_token}/{module_token} has {ring.order}/{module.order}"
        )
    same_ring = (
        base.ring.zero == ring.zero and base.ring.one == ring.one
        and np.array_equal(base.ring.add, ring.add) and np.array_equal(base.ring.mul, ring.mul)
    )
    same_module = (
        base.module.zero == module.zero and np.array_equal(base.module.add, module.add)
        and np.array_equal(base.module.left_action, module.left_action)
        and np.array_equal(base.module.right_action, module.right_action)
    )
    if not (same_ring and same_module):
        raise InvalidModelError(
            f"base model '{base.name}' is not over {ring_token}/{module_token}: its ring or bimodule tables differ"
        )


def parse_vary(vary: Union[str, Iterable[str], None]) -> Tuple[str, ...]:
    """Canonical table names in enumeration order; 'none' or '' is the empty list."""
    if vary is None:
        return ()
    if isinstance(vary, str):
        vary = [] if vary.strip().lower() in ('', 'none') else vary.split(',')
    names = {table_name(token.strip()) for token in vary if token.strip()}
    return tuple(name for name in TABLE_NAMES if name in names)


@dataclass(frozen=True, eq=False)
class SearchSpace:
    ring: FiniteRing
    module: FiniteBimodule
    vary: Tuple[str, ...] = ()
    base: Optional[SkeletalModel] = None
    mode: str = 'exhaustive'
    seed: Optional[int] = None
    count: Optional[int] = None
    ring_token: str = ""
    module_token: str = ""

    def __post_init__(self):
        object.__setattr__(self, 'vary', parse_vary(self.vary))
        if self.base is None:
            object.__setattr__(self, 'base', trivial_model(self.ring, self.module))
        elif self.base.ring.order != self.ring.order or self.base.module.order != self.module.order:
            raise ShapeError("the base model lives over a different ring or bimodule")
        if self.mode not in MODES:
            raise SearchBoundError(f"unknown search mode '{self.mode}'")
        if self.mode == 'random':
            if self.seed is None or self.seed < 0:
                raise SearchBoundError("random mode requires an explicit non-negative seed")
            if self.count is None:
                object.__setattr__(self, 'count', settings.DEFAULT_RANDOM_COUNT)
            if self.count < 1:
                raise SearchBoundError(f"random mode needs a positive count, got {self.count}")
        elif self.size > settings.EXHAUSTIVE_BOUND:
            raise SearchBoundError(
                f"{self.size} models exceed the exhaustive bound {settings.EXHAUSTIVE_BOUND}; "
                f"use random mode with a seed"
            )

    @classmethod
    def from_tokens(
        cls,
        ring: str = 'z2',
        module: str = 'regular',
        vary: Union[str, Sequence[str], None] = None,
        base: Optional[SkeletalModel] = None,
        random: bool = False,
        seed: Optional[int] = None,
        count: Optional[int] = None,
    ) -> "SearchSpace":
        finite_ring = parse_ring(ring)
        finite_module = parse_module(module, finite_ring)
        reports = [validate_ring(finite_ring), validate_bimodule(finite_ring, finite_module)]
        if not all(report.passed for report in reports):
            raise InvalidModelError("; ".join(r.summary() for r in reports if not r.passed), reports)
        if base is not None:
            _check_base(base, finite_ring, finite_module, ring, module)
            base = SkeletalModel(finite_ring, finite_module, **base.tables, name=base.name)
        return cls(
            finite_ring,
            finite_module,
            vary=parse_vary(vary),
            base=base,
            mode='random' if random else 'exhaustive',
            seed=seed,
            count=count,
            ring_token=ring,
            module_token=module,
        )

    @property
    def shapes(self) -> Tuple[Tuple[int, ...], ...]:
        n = self.ring.order
        return tuple((n,) * TABLE_ARITY[t] for t in self.vary)

    @property
    def entries(self) -> int:
        return sum(int(np.prod(shape)) for shape in self.shapes)

    @property
    def size(self) -> int:
        """Number of models in the exhaustive space."""
        return self.module.order ** self.entries

    @property
    def total(self) -> int:
        """Number of models a search visits."""
        return self.count if self.mode == 'random' else self.size

    def describe(self) -> str:
        tables = ','.join(self.vary) or 'none'
        label = f"{self.ring.name}, {self.module.name}, vary {tables}"
        if self.mode == 'random':
            return f"{label}, random {self.count} (seed {self.seed})"
        return f"{label}, exhaustive {self.size}"

    def _draws(self, start: int, stop: int) -> np.ndarray:
        # block k comes from its own generator seeded with (seed, k)
        blocks = []
        for k in range(start // RANDOM_BLOCK, (stop - 1) // RANDOM_BLOCK + 1):
            rng = np.random.default_rng([self.seed, k])
            blocks.append(rng.integers(0, self.module.order, size=(RANDOM_BLOCK, self.entries)))
        first = (start // RANDOM_BLOCK) * RANDOM_BLOCK
        return np.concatenate(blocks)[start - first:stop - first]

    def entries_at(self, start: int, stop: int) -> np.ndarray:
        """Varied entries of models start..stop-1, shape (stop - start, entries)."""
        if self.mode == 'random':
            return self._draws(start, stop)
        m, e = self.module.order, self.entries
        index = np.arange(start, stop, dtype=np.int64)
        powers = m ** np.arange(e - 1, -1, -1, dtype=np.int64)
        return (index[:, None] // powers[None, :]) % m

    def batch(self, start: int, stop: int) -> ModelBatch:
        """Models start..stop-1 of the space as one batch."""
        digits = self.entries_at(start, stop)
        size = len(digits)
        tables = {}
        offset = 0
        for name in TABLE_NAMES:
            base = getattr(self.base, name)
            if name in self.vary:
                width = base.size
                tables[name] = digits[:, offset:offset + width].reshape((size,) + base.shape).astype(np.intp)
                offset += width
            else:
                tables[name] = np.broadcast_to(base, (size,) + base.shape)
        return ModelBatch(self.ring, self.module, tables)

    def iter_batches(self, start: int = 0, stop: Optional[int] = None, batch_size: Optional[int] = None) -> Iterator[Tuple[int, ModelBatch]]:
        stop = self.total if stop is None else min(stop, self.total)
        batch_size = batch_size or settings.SEARCH_BATCH_SIZE
        for lo in range(start, stop, batch_size):
            hi = min(lo + batch_size, stop)
            logger.debug(f"models {lo}..{hi - 1} of {self.total}")
            yield lo, self.batch(lo, hi)

    def model_at(self, index: int, name: str = "") -> SkeletalModel:
        """The model at an index; raises SearchBoundError outside the space."""
        if not 0 <= index < self.total:
            raise SearchBoundError(f"model index {index} outside 0..{self.total - 1}")
        return self.batch(index, index + 1).model(0, name=name)


def enumerate_models(space: SearchSpace) -> Iterator[SkeletalModel]:
    """Every model of the space, in index order."""
    for start, batch in space.iter_batches():
        for i in range(batch.size):
            yield batch.model(i, name=f"model-{start + i}")
