"""
Coherence diagrams as data, and their exhaustive evaluation.
"""

from .core.evaluator import AssignmentGrid, TermEvaluator, TraceStep, eval_obj, eval_term, trace_path
from .core.terms import (
    ONE, ZERO, Comp, Constraint, GenMor, Id, Inv, MorTerm, ObjExpr, OPlus, OTimes, Product, Sum, Var, con, lift,
    render,
)
from .services.catalog import CATALOG, DiagramSpec, build_v, build_v_alternative, get_diagram, naturality_spec
from .services.checker import CheckReport, Failure, check_diagram, diagram_verdicts, evaluate_spec

__all__ = [
    'AssignmentGrid',
    'TermEvaluator',
    'TraceStep',
    'eval_obj',
    'eval_term',
    'trace_path',
    'ONE',
    'ZERO',
    'Comp',
    'Constraint',
    'GenMor',
    'Id',
    'Inv',
    'MorTerm',
    'ObjExpr',
    'OPlus',
    'OTimes',
    'Product',
    'Sum',
    'Var',
    'con',
    'lift',
    'render',
    'CATALOG',
    'DiagramSpec',
    'build_v',
    'build_v_alternative',
    'get_diagram',
    'naturality_spec',
    'CheckReport',
    'Failure',
    'check_diagram',
    'diagram_verdicts',
    'evaluate_spec',
]
