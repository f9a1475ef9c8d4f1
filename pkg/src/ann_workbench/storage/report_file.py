"""
Report documents for the command line: JSON for machines, text for people.

Reports carry the tool version and a digest of their inputs and nothing
time-dependent, so the same inputs always give the same bytes.
"""
import hashlib
import logging
from typing import Dict, List, Optional, Sequence

import pandas as pd
from pydantic import BaseModel

from .. import __version__
from ..algebra.services.validator import ValidationReport
from ..axioms.suites import SuiteReport
from ..diagram.core.evaluator import TraceStep
from ..diagram.services.checker import CheckReport
from ..model.services.derived_units import DerivedUnits, UnitDerivation
from ..search.services.hunter import SearchOutcome
from ..search.space import SearchSpace
from .model_file import dump_json, model_digest

logger = logging.getLogger(__name__)

TOOL = "ann-workbench"


class ReportDocument(BaseModel):
    tool: str = TOOL
    version: str = __version__
    input_digest: str

    def to_json(self) -> str:
        return dump_json(self.model_dump())


class FailureEntry(BaseModel):
    assignment: List[int]
    generics: List[int] = []
    lhs: int
    rhs: int


class DiagramEntry(BaseModel):
    diagram: str
    passed: bool
    total: int
    failures: List[FailureEntry]


class SuiteDocument(ReportDocument):
    model: str
    suite: str
    passed: bool
    failed: List[str]
    diagrams: List[DiagramEntry]


class ConflictEntry(BaseModel):
    A: int
    X: int
    candidate: int


class UnitEntry(BaseModel):
    table: List[int]
    consistent: bool
    conflicts: List[ConflictEntry]
    cross_consistent: bool
    cross_conflicts: List[ConflictEntry]


class DeriveDocument(ReportDocument):
    model: str
    consistent: bool
    lhat: UnitEntry
    rhat: UnitEntry


class ViolationEntry(BaseModel):
    law: str
    witness: List[int]
    detail: str = ""


class LawReportEntry(BaseModel):
    subject: str
    passed: bool
    violations: List[ViolationEntry]


class ValidateDocument(ReportDocument):
    model: str
    passed: bool
    reports: List[LawReportEntry]


class CounterexampleEntry(BaseModel):
    index: int
    failed: List[str]
    digest: str
    file: Optional[str] = None


class TheoremViolationEntry(BaseModel):
    index: int
    property: str
    digest: str
    file: Optional[str] = None


class SearchDocument(ReportDocument):
    space: str
    ring: str
    module: str
    vary: List[str]
    mode: str
    seed: Optional[int] = None
    visited: int
    ann_passing: int
    cring_passing: int
    cring_u_passing: int
    u_failing: int
    premises: Dict[str, int]
    relaxed_prop2_exceptions: int
    verdict: str
    counterexamples: List[CounterexampleEntry]
    theorem_violations: List[TheoremViolationEntry]


def _entry(report: CheckReport) -> DiagramEntry:
    return DiagramEntry(
        diagram=report.diagram,
        passed=report.passed,
        total=report.total,
        failures=[FailureEntry(assignment=list(f.assignment), generics=list(f.generics), lhs=f.lhs, rhs=f.rhs) for f in report.failures],
    )


def suite_document(report: SuiteReport, model, digest: Optional[str] = None) -> SuiteDocument:
    """Report document of a suite check."""
    return SuiteDocument(
        input_digest=digest or model_digest(model),
        model=model.name,
        suite=report.suite,
        passed=report.passed,
        failed=list(report.failed),
        diagrams=[_entry(r) for r in report.reports],
    )


def _unit_entry(derivation: UnitDerivation) -> UnitEntry:
    return UnitEntry(
        table=derivation.table.tolist(),
        consistent=derivation.consistent,
        conflicts=[ConflictEntry(A=a, X=x, candidate=v) for a, x, v in derivation.conflicts],
        cross_consistent=derivation.cross_consistent,
        cross_conflicts=[ConflictEntry(A=a, X=x, candidate=v) for a, x, v in derivation.cross_conflicts],
    )


def derive_document(units: DerivedUnits, model, digest: Optional[str] = None) -> DeriveDocument:
    return DeriveDocument(
        input_digest=digest or model_digest(model),
        model=model.name,
        consistent=units.consistent,
        lhat=_unit_entry(units.lhat),
        rhat=_unit_entry(units.rhat),
    )


def validate_document(reports: Sequence[ValidationReport], model_name: str, digest: str) -> ValidateDocument:
    return ValidateDocument(
        input_digest=digest,
        model=model_name,
        passed=all(r.passed for r in reports),
        reports=[
            LawReportEntry(
                subject=r.subject,
                passed=r.passed,
                violations=[ViolationEntry(law=v.law, witness=list(v.witness), detail=v.detail) for v in r.violations],
            )
            for r in reports
        ],
    )


def space_digest(space: SearchSpace) -> str:
    """sha256 of the space description and its base tables."""
    key = dump_json({
        'ring': space.ring.name,
        'module': space.module.name,
        'vary': list(space.vary),
        'mode': space.mode,
        'seed': space.seed,
        'count': space.count if space.mode == 'random' else None,
        'base': model_digest(space.base),
    })
    return hashlib.sha256(key.encode('utf-8')).hexdigest()


def search_document(outcome: SearchOutcome, space: SearchSpace, files: Optional[Dict[str, str]] = None) -> SearchDocument:
    """
    Report document of a search.

    Args:
        outcome: Merged search outcome
        space: The space that was searched
        files: Saved model files by model name, when --outdir was given
    """
    files = files or {}
    return SearchDocument(
        input_digest=space_digest(space),
        space=outcome.space,
        ring=space.ring.name,
        module=space.module.name,
        vary=list(space.vary),
        mode=space.mode,
        seed=space.seed if space.mode == 'random' else None,
        visited=outcome.visited,
        ann_passing=outcome.ann_passing,
        cring_passing=outcome.cring_passing,
        cring_u_passing=outcome.cring_u_passing,
        u_failing=outcome.u_failing,
        premises=dict(sorted(outcome.premises.items())),
        relaxed_prop2_exceptions=outcome.relaxed_prop2_exceptions,
        verdict=outcome.verdict,
        counterexamples=[
            CounterexampleEntry(index=c.index, failed=list(c.failed), digest=model_digest(c.model), file=files.get(c.model.name))
            for c in outcome.counterexamples
        ],
        theorem_violations=[
            TheoremViolationEntry(index=v.index, property=v.property, digest=model_digest(v.model), file=files.get(v.model.name))
            for v in outcome.violations
        ],
    )


# Text rendering

def _table(rows: List[dict], columns: List[str]) -> str:
    if not rows:
        return ""
    return pd.DataFrame(rows, columns=columns).to_string(index=False) + "\n"


def suite_text(document: SuiteDocument) -> str:
    status = "PASSED" if document.passed else f"FAILED ({len(document.failed)} of {len(document.diagrams)} diagrams)"
    lines = f"suite {document.suite} on {document.model or 'model'}: {status}\n"
    rows = []
    for entry in document.diagrams:
        witness = entry.failures[0] if entry.failures else None
        rows.append({
            'diagram': entry.diagram,
            'result': 'pass' if entry.passed else 'FAIL',
            'assignments': entry.total,
            'failures': len(entry.failures),
            'witness': '' if witness is None else str(tuple(witness.assignment + witness.generics)),
            'lhs': '' if witness is None else witness.lhs,
            'rhs': '' if witness is None else witness.rhs,
        })
    return lines + _table(rows, ['diagram', 'result', 'assignments', 'failures', 'witness', 'lhs', 'rhs'])


def _unit_text(side: str, entry: UnitEntry) -> str:
    text = f"{side}: {entry.table} ({'consistent' if entry.consistent else 'INCONSISTENT'})\n"
    rows = [{'A': c.A, 'X': c.X, 'candidate': c.candidate, 'canonical': entry.table[c.A]} for c in entry.conflicts]
    text += _table(rows, ['A', 'X', 'candidate', 'canonical'])
    if not entry.cross_consistent:
        text += f"{side} disagrees with the d-square at {len(entry.cross_conflicts)} probe(s)\n"
    return text


def derive_text(document: DeriveDocument) -> str:
    head = f"derived units of {document.model or 'model'}: {'consistent' if document.consistent else 'INCONSISTENT'}\n"
    return head + _unit_text('lhat', document.lhat) + _unit_text('rhat', document.rhat)


def validate_text(document: ValidateDocument) -> str:
    text = ""
    for report in document.reports:
        text += f"{report.subject}: {'all laws hold' if report.passed else 'FAILED'}\n"
        rows = [{'law': v.law, 'detail': v.detail, 'witness': str(tuple(v.witness))} for v in report.violations]
        text += _table(rows, ['law', 'detail', 'witness'])
    return text


def search_text(document: SearchDocument) -> str:
    counts = pd.Series({
        'visited': document.visited,
        'ann passing': document.ann_passing,
        'cring passing': document.cring_passing,
        'cring and (U) passing': document.cring_u_passing,
        'cring failing (U)': document.u_failing,
        'theorem violations': len(document.theorem_violations),
    })
    text = f"search over {document.space}\n{counts.to_string()}\nverdict: {document.verdict}\n"
    rows = [{'index': c.index, 'failed': ','.join(c.failed), 'file': c.file or ''} for c in document.counterexamples]
    text += _table(rows, ['index', 'failed', 'file'])
    rows = [{'index': v.index, 'property': v.property, 'file': v.file or ''} for v in document.theorem_violations]
    return text + _table(rows, ['index', 'property', 'file'])


def trace_text(diagram: str, variables: Sequence[str], assignment: Sequence[int], generics: Sequence[int],
               lhs: Sequence[TraceStep], rhs: Sequence[TraceStep]) -> str:
    binding = ", ".join(f"{name}={value}" for name, value in zip(variables, assignment))
    if generics:
        binding += "; " + ", ".join(f"u{i}={value}" for i, value in enumerate(generics))
    text = f"diagram {diagram} at {binding}\n"
    for side, steps in (('lhs', lhs), ('rhs', rhs)):
        rows = [{'step': i + 1, 'arrow': s.arrow, 'source': s.source, 'target': s.target, 'value': s.value, 'running': s.running}
                for i, s in enumerate(steps)]
        text += f"{side}:\n" + _table(rows, ['step', 'arrow', 'source', 'target', 'value', 'running'])
    left, right = lhs[-1].running, rhs[-1].running
    verdict = "equal" if left == right else "unequal"
    return text + f"lhs value {left}, rhs value {right}: {verdict}\n"
