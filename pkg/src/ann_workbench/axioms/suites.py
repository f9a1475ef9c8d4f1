"""
Axiom suites assembled from the diagram catalog.
"""
import logging
from dataclasses import dataclass
from typing import AbstractSet, Dict, Iterable, Optional, Tuple, Union

import numpy as np

from ..diagram.services.catalog import get_diagram
from ..diagram.services.checker import CheckReport, Failure, check_diagram, diagram_verdicts
from ..exceptions import UnknownNameError
from ..model.core.constraints import STRUCTURAL_KINDS, ConstraintKind
from ..model.core.skeletal_model import ModelBatch, SkeletalModel
from ..model.services.derived_units import UnitDerivation, derive_batch_units, derive_units

logger = logging.getLogger(__name__)

# Pseudo-diagrams of the (U) suite: a derived unit table is independent of its probe object.
UNIT_CONSISTENCY = ('lhat_consistency', 'rhat_consistency')


@dataclass(frozen=True)
class AxiomSuite:
    name: str
    members: Tuple[str, ...]

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, diagram: str) -> bool:
        return diagram in self.members


def _nat(*kinds: ConstraintKind) -> Tuple[str, ...]:
    return tuple(f"nat_{kind.value}" for kind in kinds)


def union(*parts: Iterable[str]) -> Tuple[str, ...]:
    members: Dict[str, None] = {}
    for part in parts:
        members.update(dict.fromkeys(part))
    return tuple(members)


K = ConstraintKind
PIC = ('pentagon_plus', 'hexagon', 'symmetry', 'triangle_plus') + _nat(K.APLUS, K.C, K.G, K.D)
TENSOR = ('pentagon_times', 'triangle_times') + _nat(K.A, K.L_UNIT, K.R_UNIT)
ANN1 = ('lfun_aplus', 'lfun_c', 'rfun_aplus', 'rfun_c')
ANN1_MINUS_C = ('lfun_aplus', 'rfun_aplus')
ANN2 = ('d1.1', 'd1.1p', 'd1.2', 'd1.3')
ANN3 = ('d1.4', 'd1.4p')
U = UNIT_CONSISTENCY + ('d1.5', 'd1.5p', 'd1.6', 'd1.6p')
CRING_EXTRA = ('d3.1', 'd3.1p')

SUITES: Dict[str, AxiomSuite] = {
    suite.name: suite
    for suite in (
        AxiomSuite('pic', PIC),
        AxiomSuite('tensor', TENSOR),
        AxiomSuite('ann1', ANN1),
        AxiomSuite('ann1_minus_c', ANN1_MINUS_C),
        AxiomSuite('ann2', ANN2),
        AxiomSuite('ann3', ANN3),
        AxiomSuite('ann', union(PIC, TENSOR, ANN1, ANN2, ANN3)),
        AxiomSuite('u', U),
        AxiomSuite('cring', union(PIC, TENSOR, ANN2, ANN3, CRING_EXTRA)),
    )
}

NATURALITY = _nat(*STRUCTURAL_KINDS)


def get_suite(suite: Union[str, AxiomSuite]) -> AxiomSuite:
    """Look up a suite by name; raises UnknownNameError."""
    if isinstance(suite, AxiomSuite):
        return suite
    try:
        return SUITES[suite]
    except KeyError:
        raise UnknownNameError(f"unknown suite '{suite}'; choose from {', '.join(SUITES)}")


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    reports: Tuple[CheckReport, ...]

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports)

    @property
    def failed(self) -> Tuple[str, ...]:
        return tuple(report.diagram for report in self.reports if not report.passed)

    def report(self, diagram: str) -> CheckReport:
        for report in self.reports:
            if report.diagram == diagram:
                return report
        raise UnknownNameError(f"diagram '{diagram}' is not in suite '{self.suite}'")


def consistency_report(name: str, derivation: UnitDerivation) -> CheckReport:
    """A unit derivation seen as a check over the probe grid (A, X)."""
    failures = tuple(
        Failure((a, x), (), candidate, int(derivation.table[a]))
        for a, x, candidate in derivation.conflicts
    )
    return CheckReport(name, derivation.candidates.size, failures)


def check_suite(model: SkeletalModel, suite: Union[str, AxiomSuite]) -> SuiteReport:
    """
    Check every member of a suite; all members are always checked.

    Unit diagrams run on the canonical derived tables even when a derivation
    is inconsistent, so the report lists every failing diagram.
    """
    suite = get_suite(suite)
    units = None
    if any(name in UNIT_CONSISTENCY or get_diagram(name).requires_units for name in suite):
        units = derive_units(model)
        model = model.with_units(units.lhat.table, units.rhat.table)

    reports = []
    for name in suite:
        if name == 'lhat_consistency':
            reports.append(consistency_report(name, units.lhat))
        elif name == 'rhat_consistency':
            reports.append(consistency_report(name, units.rhat))
        else:
            reports.append(check_diagram(get_diagram(name), model))

    result = SuiteReport(suite.name, tuple(reports))
    if not result.passed:
        logger.info(f"suite '{suite.name}' fails on {model!r}: {', '.join(result.failed)}")
    return result


def batch_verdicts(
    batch: ModelBatch,
    names: Iterable[str],
    varied: Optional[AbstractSet[str]] = None,
) -> Dict[str, np.ndarray]:
    """Per-model verdicts, shape (B,), for each named diagram or consistency check."""
    names = list(dict.fromkeys(names))
    verdicts: Dict[str, np.ndarray] = {}
    if any(name in UNIT_CONSISTENCY or get_diagram(name).requires_units for name in names):
        lhat, rhat, lhat_ok, rhat_ok = derive_batch_units(batch)
        batch = batch.with_units(lhat, rhat)
        verdicts.update(lhat_consistency=lhat_ok, rhat_consistency=rhat_ok)
    for name in names:
        if name not in verdicts:
            verdicts[name] = diagram_verdicts(get_diagram(name), batch, varied)
    return verdicts


def all_of(verdicts: Dict[str, np.ndarray], names: Iterable[str]) -> np.ndarray:
    result = None
    for name in names:
        result = verdicts[name] if result is None else result & verdicts[name]
    if result is None:
        raise UnknownNameError("empty conjunction of diagrams")
    return result


def suite_passes(verdicts: Dict[str, np.ndarray], suite: Union[str, AxiomSuite]) -> np.ndarray:
    """Per-model pass of a whole suite from per-diagram verdicts."""
    return all_of(verdicts, get_suite(suite).members)
