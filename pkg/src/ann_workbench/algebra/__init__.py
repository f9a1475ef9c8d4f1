"""
Finite unital rings and finite bimodules given by explicit tables.
"""

from .core.finite_ring import FiniteRing
from .core.finite_bimodule import FiniteBimodule
from .services.constructors import cyclic_ring, ring_bimodule, quotient_bimodule
from .services.validator import LawViolation, ValidationReport, validate_ring, validate_bimodule

__all__ = [
    'FiniteRing',
    'FiniteBimodule',
    'cyclic_ring',
    'ring_bimodule',
    'quotient_bimodule',
    'LawViolation',
    'ValidationReport',
    'validate_ring',
    'validate_bimodule',
]
