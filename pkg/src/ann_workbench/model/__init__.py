"""
Skeletal candidates for Ann-categories and categorical rings.
"""

from .core.constraints import ConstraintKind, SIGNATURES, TABLE_NAMES
from .core.morphism import Morphism, SkeletalGroupoid
from .core.skeletal_model import ModelBatch, SkeletalModel, constraint, trivial_model
from .services.derived_units import DerivedUnits, UnitDerivation, derive_lhat, derive_rhat, derive_units

__all__ = [
    'ConstraintKind',
    'SIGNATURES',
    'TABLE_NAMES',
    'Morphism',
    'SkeletalGroupoid',
    'ModelBatch',
    'SkeletalModel',
    'constraint',
    'trivial_model',
    'DerivedUnits',
    'UnitDerivation',
    'derive_lhat',
    'derive_rhat',
    'derive_units',
]
