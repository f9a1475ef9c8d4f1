"""
Model spaces and the search for categorical rings violating (U).
"""

from .services.hunter import NO_COUNTEREXAMPLE, Counterexample, SearchOutcome, TheoremViolation, find_u_counterexample
from .space import SearchSpace, enumerate_models, parse_module, parse_ring, parse_vary

__all__ = [
    'NO_COUNTEREXAMPLE',
    'Counterexample',
    'SearchOutcome',
    'TheoremViolation',
    'find_u_counterexample',
    'SearchSpace',
    'enumerate_models',
    'parse_module',
    'parse_ring',
    'parse_vary',
]
