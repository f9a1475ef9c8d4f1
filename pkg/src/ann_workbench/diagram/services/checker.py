"""
Exhaustive commutativity checks of catalog diagrams.
"""
import logging
from dataclasses import dataclass, field
from typing import AbstractSet, Optional, Tuple

import numpy as np

from ...exceptions import ObjectMismatchError
from ...model.core.morphism import Morphism, same_objects
from ...model.core.skeletal_model import ModelBatch, SkeletalModel
from ..core.evaluator import AssignmentGrid, TermEvaluator
from .catalog import DiagramSpec

logger = logging.getLogger(__name__)

# Upper bound on model-times-assignment cells evaluated in one pass.
MAX_CELLS = 2**22


@dataclass(frozen=True)
class Failure:
    assignment: Tuple[int, ...]
    generics: Tuple[int, ...]
    lhs: int
    rhs: int


@dataclass(frozen=True)
class CheckReport:
    diagram: str
    total: int
    failures: Tuple[Failure, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def witness(self) -> Optional[Failure]:
        return self.failures[0] if self.failures else None


def evaluate_spec(spec: DiagramSpec, batch: ModelBatch, grid: Optional[AssignmentGrid] = None) -> Tuple[Morphism, Morphism, AssignmentGrid]:
    """Both sides of a diagram over the whole grid; values have shape (models, assignments)."""
    if grid is None:
        grid = AssignmentGrid.exhaustive(batch.ring.order, spec.arity, batch.module.order, spec.generic_slots)
    evaluator = TermEvaluator(batch, grid, spec.slots)
    try:
        lhs, rhs = evaluator.term(spec.lhs), evaluator.term(spec.rhs)
        if not (same_objects(lhs.source, rhs.source) and same_objects(lhs.target, rhs.target)):
            raise ObjectMismatchError(f"diagram '{spec.name}': the two paths are not parallel")
    except ObjectMismatchError:
        logger.error(f"diagram '{spec.name}' is ill-typed over {batch.ring!r}")
        raise
    return lhs, rhs, grid


def check_diagram(spec: DiagramSpec, model: SkeletalModel, max_cells: Optional[int] = None) -> CheckReport:
    """
    Check one diagram on every assignment, in lexicographic order.

    Diagrams that use lhat/rhat run on the model's derived units, which are
    computed here when the model does not carry them yet. The grid is walked
    in slices of at most `max_cells` assignments.

    Args:
        spec: Diagram to check
        model: Model supplying the constraint tables
        max_cells: Slice size (defaults to MAX_CELLS)
    """
    if spec.requires_units and not model.has_units:
        model = model.with_derived_units()
    batch = model.batch()
    total = AssignmentGrid.exhaustive_size(batch.ring.order, spec.arity, batch.module.order, spec.generic_slots)
    failures = []
    for offset, grid in _grid_slices(spec, batch, max_cells or MAX_CELLS):
        lhs, rhs, _ = evaluate_spec(spec, batch, grid)
        left, right = lhs.value[0], rhs.value[0]
        for j in np.flatnonzero(left != right):
            assignment, generics = grid.point(j)
            failures.append(Failure(assignment, generics, int(left[j]), int(right[j])))
        if offset:
            logger.debug(f"diagram '{spec.name}': {offset + grid.size} of {total} assignments checked")
    if failures:
        logger.info(f"diagram '{spec.name}' fails at {len(failures)} of {total} assignments")
    return CheckReport(spec.name, total, tuple(failures))


def diagram_verdicts(spec: DiagramSpec, batch: ModelBatch, varied: Optional[AbstractSet[str]] = None,
                     max_cells: Optional[int] = None) -> np.ndarray:
    """
    Pass/fail per model of a batch, shape (B,).

    When `varied` names the tables that differ across the batch and the
    diagram reads none of them, it is evaluated on the first model only.
    """
    if varied is not None and not (spec.tables & set(varied)):
        return np.broadcast_to(diagram_verdicts(spec, batch.head(1), max_cells=max_cells), (batch.size,)).copy()

    budget = max_cells or MAX_CELLS
    verdicts = np.ones(batch.size, dtype=bool)
    for _, grid in _grid_slices(spec, batch, budget):
        step = max(1, budget // grid.size)
        for start in range(0, batch.size, step):
            chunk = batch if batch.size <= step else batch.slice(start, start + step)
            lhs, rhs, _ = evaluate_spec(spec, chunk, grid)
            verdicts[start:start + chunk.size] &= np.all(lhs.value == rhs.value, axis=1)
    return verdicts


def _grid_slices(spec: DiagramSpec, batch: ModelBatch, max_cells: int):
    return AssignmentGrid.chunks(batch.ring.order, spec.arity, batch.module.order, spec.generic_slots, max_cells)
