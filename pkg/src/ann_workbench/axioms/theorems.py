"""
Implications between axiom suites, checked model by model.

Each check returns a verdict (premise, conclusion) instead of asserting the
premise, so a search can stream arbitrary models through it. A verdict
that is not respected means the premise holds while the conclusion fails.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np

from ..model.core.skeletal_model import SkeletalModel
from .suites import ANN1, ANN1_MINUS_C, ANN2, ANN3, CRING_EXTRA, PIC, SUITES, TENSOR, all_of, batch_verdicts, union

logger = logging.getLogger(__name__)

PROP2_CONCLUSION = ('lfun_c', 'rfun_c')
PROP2_PREMISE = union(PIC, TENSOR, ANN1_MINUS_C, ANN2, ANN3)
# Weaker premise for check_prop2(relaxed=True): no hexagon.
PROP2_RELAXED_PREMISE = tuple(name for name in PROP2_PREMISE if name != 'hexagon')

PROPERTIES: Dict[str, Tuple[Tuple[str, ...], Tuple[str, ...]]] = {
    'prop1': (SUITES['ann'].members, SUITES['u'].members),
    'prop2': (PROP2_PREMISE, PROP2_CONCLUSION),
    'thm1': (SUITES['ann'].members, CRING_EXTRA),
    'thm2': (union(SUITES['cring'].members, SUITES['u'].members), ANN1),
}

# Every diagram any property reads.
PROPERTY_DIAGRAMS = union(*(premise + conclusion for premise, conclusion in PROPERTIES.values()))


@dataclass(frozen=True)
class PropertyVerdict:
    name: str
    premise: bool
    conclusion: bool

    @property
    def respected(self) -> bool:
        return not self.premise or self.conclusion


def property_arrays(verdicts: Dict[str, np.ndarray], relaxed: bool = False) -> Dict[str, Tuple[np.ndarray, np.ndarray]]:
    """(premise, conclusion) arrays per property from per-diagram batch verdicts."""
    arrays = {}
    for name, (premise, conclusion) in PROPERTIES.items():
        if name == 'prop2' and relaxed:
            premise = PROP2_RELAXED_PREMISE
        arrays[name] = (all_of(verdicts, premise), all_of(verdicts, conclusion))
    return arrays


def violated(arrays: Dict[str, Tuple[np.ndarray, np.ndarray]]) -> Dict[str, np.ndarray]:
    """Models where a premise holds and its conclusion does not."""
    return {name: premise & ~conclusion for name, (premise, conclusion) in arrays.items()}


def _check(name: str, model: SkeletalModel, relaxed: bool = False) -> PropertyVerdict:
    premise_names, conclusion_names = PROPERTIES[name]
    if relaxed:
        premise_names = PROP2_RELAXED_PREMISE
    verdicts = batch_verdicts(model.batch(), premise_names + conclusion_names)
    verdict = PropertyVerdict(
        name,
        bool(all_of(verdicts, premise_names)[0]),
        bool(all_of(verdicts, conclusion_names)[0]),
    )
    if not verdict.respected:
        logger.warning(f"{name} is contradicted by {model!r}")
    return verdict


def check_prop1(model: SkeletalModel) -> PropertyVerdict:
    """ann ⇒ (U): the derived units exist, are consistent and satisfy the unit squares."""
    return _check('prop1', model)


def check_prop2(model: SkeletalModel, relaxed: bool = False) -> PropertyVerdict:
    """
    ann without {lfun_c, rfun_c} ⇒ lfun_c and rfun_c.

    With `relaxed` the premise also drops the hexagon.
    """
    return _check('prop2', model, relaxed)


def check_thm1(model: SkeletalModel) -> PropertyVerdict:
    """ann ⇒ d3.1 and d3.1p."""
    return _check('thm1', model)


def check_thm2(model: SkeletalModel) -> PropertyVerdict:
    """cring and (U) ⇒ ann1, which together with cring is the whole ann suite."""
    return _check('thm2', model)
