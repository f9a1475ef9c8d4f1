"""
Command-line entry point of the Ann-category workbench.

    ann-workbench check MODEL --suite ann
    ann-workbench derive MODEL
    ann-workbench search --ring z2 --module regular --vary L,R
    ann-workbench explain MODEL d1.4 --at 1,1
    ann-workbench validate MODEL

Exit status: 0 pass, 1 failing suite or inconsistent derivation, 2 input
error, 3 theorem violation found by a search.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from ann_workbench import __version__
from ann_workbench.algebra import validate_bimodule, validate_ring
from ann_workbench.axioms import SUITES, check_suite
from ann_workbench.config import settings
from ann_workbench.diagram import get_diagram, trace_path
from ann_workbench.exceptions import (
    ArityError, ConfigurationError, InvalidModelError, ModelFileError, SearchBoundError, ShapeError,
    UnknownNameError,
)
from ann_workbench.model import derive_units
from ann_workbench.search import SearchSpace, find_u_counterexample
from ann_workbench.storage import load_model, save_model
from ann_workbench.storage.model_file import model_digest
from ann_workbench.storage.report_file import (
    derive_document, derive_text, search_document, search_text, suite_document, suite_text, trace_text,
    validate_document, validate_text,
)
from ann_workbench.utils import setup_logging

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_THEOREM = 3

INPUT_ERRORS = (
    ModelFileError, InvalidModelError, UnknownNameError, ArityError, ShapeError, SearchBoundError, ConfigurationError,
)


def _ints(text: str) -> List[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(part) for part in text.split(',')]
    except ValueError:
        raise ArityError(f"expected comma-separated integers, got '{text}'")


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding='utf-8')
        logger.info(f"report written to {path}")
    else:
        sys.stdout.write(text)


def cmd_check(args) -> int:
    """Check a suite on a model file. Exit 0 when every diagram commutes, 1 otherwise."""
    model = load_model(args.model)
    report = check_suite(model, args.suite)
    document = suite_document(report, model)
    _emit(document.to_json() if args.format == 'json' else suite_text(document), args.out)
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_derive(args) -> int:
    """Derive lhat and rhat. Exit 1 when a derivation depends on the probe object."""
    model = load_model(args.model)
    units = derive_units(model)
    document = derive_document(units, model)
    _emit(document.to_json() if args.format == 'json' else derive_text(document), args.out)
    return EXIT_PASS if units.consistent else EXIT_FAIL


def cmd_validate(args) -> int:
    """Validate the ring, then the bimodule. Exit 2 on any violated law."""
    model = load_model(args.model, validate=False)
    ring_report = validate_ring(model.ring)
    reports = [ring_report]
    if ring_report.passed:
        reports.append(validate_bimodule(model.ring, model.module))
    document = validate_document(reports, model.name, model_digest(model))
    _emit(document.to_json() if args.format == 'json' else validate_text(document), args.out)
    return EXIT_PASS if document.passed else EXIT_INPUT


def cmd_explain(args) -> int:
    """
    Trace both paths of one diagram at one assignment.

    Unit diagrams are traced with the canonical derived tables, even when
    the derivation is inconsistent.
    """
    model = load_model(args.model)
    spec = get_diagram(args.diagram)
    assignment, generics = _ints(args.at), _ints(args.generics)
    if len(assignment) != spec.arity:
        raise ArityError(f"diagram '{spec.name}' takes {spec.arity} objects ({', '.join(spec.variables)}), got {len(assignment)}")
    if len(generics) != spec.generic_slots:
        raise ArityError(f"diagram '{spec.name}' takes {spec.generic_slots} generic values, got {len(generics)}")
    if spec.requires_units:
        units = derive_units(model)
        if not units.consistent:
            logger.warning("derived units are inconsistent; tracing with the canonical (X = 0) tables")
        model = model.with_units(units.lhat.table, units.rhat.table)

    def trace(term):
        return trace_path(term, model, assignment, generics, spec.slots, spec.variables)

    lhs, rhs = trace(spec.lhs), trace(spec.rhs)
    _emit(trace_text(spec.name, spec.variables, assignment, generics, lhs, rhs), args.out)
    return EXIT_PASS if lhs[-1].running == rhs[-1].running else EXIT_FAIL


def cmd_search(args) -> int:
    """
    Search a model space for categorical rings failing (U).

    Exit 3 when a visited model contradicts one of the implication checks.
    """
    base = None
    if args.base:
        if args.strict_base:
            raise SearchBoundError("--base needs --no-strict-base")
        base = load_model(args.base)
    elif not args.strict_base:
        raise SearchBoundError("--no-strict-base needs --base PATH")

    space = SearchSpace.from_tokens(
        ring=args.ring,
        module=args.module,
        vary=args.vary,
        base=base,
        random=args.random,
        seed=args.seed,
        count=args.count,
    )
    outcome = find_u_counterexample(space)

    files = {}
    if args.outdir:
        outdir = Path(args.outdir)
        for model in [c.model for c in outcome.counterexamples] + [v.model for v in outcome.violations]:
            files[model.name] = str(save_model(model, outdir / f"{model.name}.json"))

    document = search_document(outcome, space, files)
    _emit(document.to_json() if args.format == 'json' else search_text(document), args.out)
    if outcome.violations:
        logger.error(f"{len(outcome.violations)} theorem violation(s): audit the diagram encodings")
        return EXIT_THEOREM
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='ann-workbench',
        description="Check Ann-category and categorical-ring axioms on finite skeletal models",
    )
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    parser.add_argument('--verbose', '-v', action='store_true', help='Log at DEBUG level on stderr')
    commands = parser.add_subparsers(dest='command', required=True)

    def output_flags(command):
        command.add_argument('--out', help='Write the report to this path instead of stdout')
        command.add_argument('--format', choices=['json', 'text'], default='json', help='Report format')

    check = commands.add_parser('check', help='Check an axiom suite on a model file')
    check.add_argument('model', help='Model file (JSON)')
    check.add_argument('--suite', default='ann', choices=sorted(SUITES), help='Suite to check')
    output_flags(check)
    check.set_defaults(handler=cmd_check)

    derive = commands.add_parser('derive', help='Derive lhat and rhat and report their consistency')
    derive.add_argument('model', help='Model file (JSON)')
    output_flags(derive)
    derive.set_defaults(handler=cmd_derive)

    validate = commands.add_parser('validate', help='Validate the ring and bimodule of a model file')
    validate.add_argument('model', help='Model file (JSON)')
    output_flags(validate)
    validate.set_defaults(handler=cmd_validate)

    explain = commands.add_parser('explain', help='Trace both paths of a diagram arrow by arrow')
    explain.add_argument('model', help='Model file (JSON)')
    explain.add_argument('diagram', help='Catalog name, e.g. d1.4')
    explain.add_argument('--at', required=True, help='Object assignment, e.g. 1,1')
    explain.add_argument('--generics', default='', help='Generic slot values for nat_* diagrams, e.g. 1,0')
    explain.add_argument('--out', help='Write the trace to this path instead of stdout')
    explain.set_defaults(handler=cmd_explain)

    search = commands.add_parser('search', help='Search a model space for categorical rings failing (U)')
    search.add_argument('--ring', default='z2', help=f'Ring token z<n> for Z/n, 1 <= n <= {settings.MAX_RING_ORDER}; exhaustive mode is practical for z2..z4')
    search.add_argument('--module', default='regular', help='Module token: regular or z2')
    search.add_argument('--vary', default='none', help="Comma-separated tables to vary, e.g. L,R,g,d, or 'none'")
    search.add_argument('--random', action='store_true', help='Sample models instead of enumerating')
    search.add_argument('--seed', type=int, help='Seed for --random')
    search.add_argument('--count', type=int, help=f'Models sampled by --random (default {settings.DEFAULT_RANDOM_COUNT})')
    search.add_argument('--outdir', help='Directory for counterexample model files')
    search.add_argument('--strict-base', action=argparse.BooleanOptionalAction, default=True,
                        help='Keep unvaried tables at zero (default); --no-strict-base takes them from --base')
    search.add_argument('--base', help='Model file supplying the unvaried tables')
    output_flags(search)
    search.set_defaults(handler=cmd_search)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the workbench and return its exit status."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        setup_logging(logging.DEBUG if args.verbose else settings.LOG_LEVEL)
        return args.handler(args)
    except INPUT_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
