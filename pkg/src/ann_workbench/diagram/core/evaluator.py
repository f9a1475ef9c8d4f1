"""
Evaluation of object expressions and morphism terms.

The evaluator works on a whole AssignmentGrid and a whole ModelBatch at
once: objects come out as (N,) arrays over the grid and morphism values as
(B, N) arrays over (model, assignment). The scalar helpers `eval_obj`,
`eval_term` and `trace_path` are thin wrappers over a one-point grid and a
one-model batch.
"""
import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ...algebra.core.finite_ring import FiniteRing
from ...exceptions import ArityError, ObjectMismatchError, SkeletonError
from ...model.core.constraints import SIGNATURES
from ...model.core.morphism import Morphism, SkeletalGroupoid, same_objects
from ...model.core.skeletal_model import ModelBatch, SkeletalModel
from .terms import (
    Comp, Constraint, GenMor, Id, Inv, MorTerm, ObjExpr, One, OPlus, OTimes, Product, Sum, Var, Zero,
    flatten_comp, render,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class AssignmentGrid:
    """
    Points of the assignment space, one column per point.

    `objects` has shape (arity, N) and `generics` shape (slots, N). The
    exhaustive grid lists points lexicographically, the first variable
    being the most significant.
    """

    objects: np.ndarray
    generics: np.ndarray

    @property
    def size(self) -> int:
        return self.objects.shape[1]

    @classmethod
    def exhaustive(cls, ring_order: int, arity: int, module_order: int = 1, slots: int = 0) -> "AssignmentGrid":
        dims = (ring_order,) * arity + (module_order,) * slots
        if not dims:
            return cls(np.zeros((0, 1), dtype=np.intp), np.zeros((0, 1), dtype=np.intp))
        points = np.indices(dims).reshape(len(dims), -1)
        return cls(points[:arity], points[arity:])

    @staticmethod
    def exhaustive_size(ring_order: int, arity: int, module_order: int = 1, slots: int = 0) -> int:
        """Number of points of the exhaustive grid."""
        return ring_order**arity * module_order**slots

    @classmethod
    def chunks(cls, ring_order: int, arity: int, module_order: int = 1, slots: int = 0,
               max_points: int = 2**22) -> Iterator[Tuple[int, "AssignmentGrid"]]:
        """
        The exhaustive grid in consecutive lexicographic slices.

        Yields (offset, grid) pairs; each slice holds at most `max_points`
        points and `offset` is the index of its first point in the whole grid.
        """
        dims = (ring_order,) * arity + (module_order,) * slots
        total = cls.exhaustive_size(ring_order, arity, module_order, slots)
        if total <= max_points:
            yield 0, cls.exhaustive(ring_order, arity, module_order, slots)
            return
        step = max(1, max_points)
        for start in range(0, total, step):
            flat = np.arange(start, min(start + step, total), dtype=np.intp)
            points = np.stack(np.unravel_index(flat, dims)).astype(np.intp, copy=False)
            yield start, cls(points[:arity], points[arity:])

    @classmethod
    def single(cls, assignment: Sequence[int], generics: Sequence[int] = ()) -> "AssignmentGrid":
        objects = np.asarray(assignment, dtype=np.intp).reshape(len(assignment), 1)
        values = np.asarray(generics, dtype=np.intp).reshape(len(generics), 1)
        return cls(objects, values)

    def point(self, j: int) -> tuple:
        return tuple(int(v) for v in self.objects[:, j]), tuple(int(v) for v in self.generics[:, j])


class TermEvaluator:
    """Evaluates terms of one diagram over a model batch and an assignment grid."""

    def __init__(self, batch: ModelBatch, grid: AssignmentGrid, slot_objects: Sequence[ObjExpr] = ()):
        self.batch = batch
        self.grid = grid
        self.slot_objects = tuple(slot_objects)
        self.groupoid = SkeletalGroupoid(batch.ring, batch.module)

    def _column(self, value) -> np.ndarray:
        return np.broadcast_to(np.asarray(value, dtype=np.intp), (self.grid.size,))

    def _values(self, value) -> np.ndarray:
        return np.broadcast_to(np.asarray(value, dtype=np.intp), (self.batch.size, self.grid.size))

    def obj(self, expr: ObjExpr) -> np.ndarray:
        ring = self.batch.ring
        match expr:
            case Var(index):
                if not 0 <= index < len(self.grid.objects):
                    raise ArityError(f"unbound object variable {index}; the assignment has {len(self.grid.objects)}")
                return self.grid.objects[index]
            case Zero():
                return self._column(ring.zero)
            case One():
                return self._column(ring.one)
            case Sum(left, right):
                return self._column(ring.plus(self.obj(left), self.obj(right)))
            case Product(left, right):
                return self._column(ring.times(self.obj(left), self.obj(right)))
        raise TypeError(f"not an object expression: {expr!r}")

    def term(self, term: MorTerm) -> Morphism:
        groupoid = self.groupoid
        match term:
            case Id(obj):
                x = self.obj(obj)
                return Morphism(x, x, self._values(self.batch.module.zero))
            case Constraint(kind, args):
                return self._constraint(term)
            case GenMor(slot):
                if not 0 <= slot < min(len(self.slot_objects), len(self.grid.generics)):
                    raise ArityError(f"generic slot {slot} is not declared")
                x = self.obj(self.slot_objects[slot])
                return Morphism(x, x, self._values(self.grid.generics[slot][None, :]))
            case Inv(inner):
                return groupoid.invert(self.term(inner))
            case Comp(first, second):
                f, g = self.term(first), self.term(second)
                if not same_objects(f.target, g.source):
                    raise ObjectMismatchError(f"ill-typed composite at '{render(term)}'")
                return groupoid.compose(f, g)
            case OPlus(left, right):
                return groupoid.oplus(self.term(left), self.term(right))
            case OTimes(left, right):
                return groupoid.otimes(self.term(left), self.term(right))
        raise TypeError(f"not a morphism term: {term!r}")

    def _constraint(self, term: Constraint) -> Morphism:
        ring = self.batch.ring
        signature = SIGNATURES[term.kind]
        args = [self.obj(a) for a in term.args]
        source = self._column(signature.source(ring, *args))
        target = self._column(signature.target(ring, *args))
        if not same_objects(source, target):
            raise SkeletonError(f"{render(term)}: source and target differ in the skeleton")
        return Morphism(source, target, self.batch.lookup(term.kind, args))


def eval_obj(expr: ObjExpr, ring: FiniteRing, assignment: Sequence[int]) -> int:
    """Evaluate an object expression at one assignment."""
    match expr:
        case Var(index):
            if not 0 <= index < len(assignment):
                raise ArityError(f"unbound object variable {index}; the assignment has {len(assignment)}")
            return int(assignment[index])
        case Zero():
            return ring.zero
        case One():
            return ring.one
        case Sum(left, right):
            return ring.plus(eval_obj(left, ring, assignment), eval_obj(right, ring, assignment))
        case Product(left, right):
            return ring.times(eval_obj(left, ring, assignment), eval_obj(right, ring, assignment))
    raise TypeError(f"not an object expression: {expr!r}")


def _scalar(morphism: Morphism) -> Morphism:
    return Morphism(int(morphism.source[0]), int(morphism.target[0]), int(morphism.value[0, 0]))


def _single_point(model: SkeletalModel, assignment, generics, slot_objects) -> TermEvaluator:
    n = model.ring.order
    if any(not 0 <= int(a) < n for a in assignment):
        raise ArityError(f"assignment {tuple(assignment)} is out of range for a ring of order {n}")
    if any(not 0 <= int(u) < model.module.order for u in generics):
        raise ArityError(f"generic values {tuple(generics)} are out of range for a module of order {model.module.order}")
    return TermEvaluator(model.batch(), AssignmentGrid.single(assignment, generics), slot_objects)


def eval_term(
    term: MorTerm,
    model: SkeletalModel,
    assignment: Sequence[int],
    generics: Sequence[int] = (),
    slot_objects: Sequence[ObjExpr] = (),
) -> Morphism:
    """Evaluate a term at one assignment; the result has plain int fields."""
    return _scalar(_single_point(model, assignment, generics, slot_objects).term(term))


@dataclass(frozen=True)
class TraceStep:
    arrow: str
    source: int
    target: int
    value: int
    running: int


def trace_path(
    term: MorTerm,
    model: SkeletalModel,
    assignment: Sequence[int],
    generics: Sequence[int] = (),
    slot_objects: Sequence[ObjExpr] = (),
    names: Sequence[str] = (),
) -> List[TraceStep]:
    """Evaluate a composite arrow by arrow, keeping the running value."""
    evaluator = _single_point(model, assignment, generics, slot_objects)
    groupoid = evaluator.groupoid
    steps: List[TraceStep] = []
    running: Optional[Morphism] = None
    for arrow in flatten_comp(term):
        step = _scalar(evaluator.term(arrow))
        if running is not None and not same_objects(running.target, step.source):
            raise ObjectMismatchError(f"ill-typed composite before '{render(arrow, names)}'")
        running = step if running is None else groupoid.compose(running, step)
        steps.append(TraceStep(render(arrow, names), step.source, step.target, step.value, int(running.value)))
    return steps
