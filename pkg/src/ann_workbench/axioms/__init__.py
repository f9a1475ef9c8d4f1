"""
Axiom suites and the implications between them.
"""

from .suites import SUITES, AxiomSuite, SuiteReport, batch_verdicts, check_suite, get_suite, suite_passes
from .theorems import PropertyVerdict, check_prop1, check_prop2, check_thm1, check_thm2, property_arrays

__all__ = [
    'SUITES',
    'AxiomSuite',
    'SuiteReport',
    'batch_verdicts',
    'check_suite',
    'get_suite',
    'suite_passes',
    'PropertyVerdict',
    'check_prop1',
    'check_prop2',
    'check_thm1',
    'check_thm2',
    'property_arrays',
]
