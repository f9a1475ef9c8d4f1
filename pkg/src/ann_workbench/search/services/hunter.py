"""
Counterexample hunt for axiom (U): categorical rings whose derived units
fail the unit squares.

Every visited model is also run through the implication checks; a model
contradicting one of them is recorded as a theorem violation, which points
at an encoding bug rather than at mathematics.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from ...axioms.suites import SUITES, batch_verdicts, suite_passes
from ...axioms.theorems import PROPERTY_DIAGRAMS, property_arrays, violated
from ...config.settings import settings
from ...model.core.skeletal_model import ModelBatch, SkeletalModel
from ..space import SearchSpace

logger = logging.getLogger(__name__)

NO_COUNTEREXAMPLE = "no counterexample in this space"
COUNTEREXAMPLE_FOUND = "counterexample found in this space"


@dataclass(frozen=True, eq=False)
class Counterexample:
    index: int
    model: SkeletalModel
    failed: Tuple[str, ...]


@dataclass(frozen=True, eq=False)
class TheoremViolation:
    index: int
    property: str
    model: SkeletalModel


@dataclass(frozen=True, eq=False)
class SearchOutcome:
    """
    Counts are exact; at most MAX_STORED_COUNTEREXAMPLES models are kept,
    those with the smallest indices.
    """

    space: str
    visited: int = 0
    ann_passing: int = 0
    cring_passing: int = 0
    cring_u_passing: int = 0
    premises: Dict[str, int] = field(default_factory=dict)
    relaxed_prop2_exceptions: int = 0
    counterexamples: Tuple[Counterexample, ...] = ()
    violations: Tuple[TheoremViolation, ...] = ()

    @property
    def u_failing(self) -> int:
        return self.cring_passing - self.cring_u_passing

    @property
    def verdict(self) -> str:
        return COUNTEREXAMPLE_FOUND if self.u_failing else NO_COUNTEREXAMPLE

    def merge(self, other: "SearchOutcome") -> "SearchOutcome":
        """Sum the counts and keep the stored models with the smallest indices."""
        limit = settings.MAX_STORED_COUNTEREXAMPLES
        premises = dict(self.premises)
        for name, count in other.premises.items():
            premises[name] = premises.get(name, 0) + count
        return replace(
            self,
            visited=self.visited + other.visited,
            ann_passing=self.ann_passing + other.ann_passing,
            cring_passing=self.cring_passing + other.cring_passing,
            cring_u_passing=self.cring_u_passing + other.cring_u_passing,
            premises=premises,
            relaxed_prop2_exceptions=self.relaxed_prop2_exceptions + other.relaxed_prop2_exceptions,
            counterexamples=tuple(sorted(self.counterexamples + other.counterexamples, key=lambda c: c.index))[:limit],
            violations=tuple(sorted(self.violations + other.violations, key=lambda v: (v.index, v.property)))[:limit],
        )


def scan_batch(space: SearchSpace, start: int, batch: ModelBatch) -> SearchOutcome:
    """Classify one batch of models whose first index is `start`."""
    limit = settings.MAX_STORED_COUNTEREXAMPLES
    verdicts = batch_verdicts(batch, PROPERTY_DIAGRAMS, varied=set(space.vary))
    ann = suite_passes(verdicts, 'ann')
    cring = suite_passes(verdicts, 'cring')
    u = suite_passes(verdicts, 'u')
    arrays = property_arrays(verdicts)
    relaxed_premise, relaxed_conclusion = property_arrays(verdicts, relaxed=True)['prop2']

    counterexamples = []
    for i in np.flatnonzero(cring & ~u)[:limit]:
        failed = tuple(name for name in SUITES['u'] if not verdicts[name][i])
        model = batch.model(int(i), name=f"counterexample-{start + i}")
        counterexamples.append(Counterexample(start + int(i), model, failed))

    violations = []
    for name, mask in violated(arrays).items():
        for i in np.flatnonzero(mask)[:limit]:
            logger.error(f"model {start + i} of {space.describe()} contradicts {name}")
            violations.append(TheoremViolation(start + int(i), name, batch.model(int(i), name=f"{name}-violation-{start + i}")))

    return SearchOutcome(
        space=space.describe(),
        visited=batch.size,
        ann_passing=int(ann.sum()),
        cring_passing=int(cring.sum()),
        cring_u_passing=int((cring & u).sum()),
        premises={name: int(premise.sum()) for name, (premise, _) in arrays.items()},
        relaxed_prop2_exceptions=int((relaxed_premise & ~relaxed_conclusion).sum()),
        counterexamples=tuple(counterexamples),
        violations=tuple(violations),
    )


def scan_range(space: SearchSpace, start: int, stop: int) -> SearchOutcome:
    """Classify models start..stop-1; the unit of work handed to a pool worker."""
    outcome = SearchOutcome(space.describe())
    for lo, batch in space.iter_batches(start, stop):
        outcome = outcome.merge(scan_batch(space, lo, batch))
    return outcome


def _partition(total: int, parts: int) -> List[Tuple[int, int]]:
    bounds = np.linspace(0, total, parts + 1).astype(int)
    return [(int(lo), int(hi)) for lo, hi in zip(bounds[:-1], bounds[1:]) if hi > lo]


def find_u_counterexample(space: SearchSpace, workers: Optional[int] = None) -> SearchOutcome:
    """
    Visit every model of the space and collect the categorical rings that
    fail (U). The outcome does not depend on `workers`.
    """
    workers = workers or settings.SEARCH_WORKERS
    logger.info(f"searching {space.describe()} with {workers} worker(s)")
    outcome = SearchOutcome(space.describe())

    with tqdm(total=space.total, unit="model", desc="search", disable=not settings.SHOW_PROGRESS) as progress:
        if workers <= 1:
            for start, batch in space.iter_batches():
                outcome = outcome.merge(scan_batch(space, start, batch))
                progress.update(batch.size)
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                futures = [pool.submit(scan_range, space, lo, hi) for lo, hi in _partition(space.total, workers)]
                for future in futures:
                    part = future.result()
                    outcome = outcome.merge(part)
                    progress.update(part.visited)

    logger.info(
        f"visited {outcome.visited}: {outcome.cring_passing} categorical rings, "
        f"{outcome.u_failing} failing (U), {len(outcome.violations)} theorem violations"
    )
    return outcome
