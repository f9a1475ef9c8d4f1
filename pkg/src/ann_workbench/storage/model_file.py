"""
Model files: a JSON document with ring, module, constraints and metadata.

Absent constraint tables default to all-zero. Saved files list every table,
so loading and saving a saved file is byte-stable.
"""
import hashlib
import json
import logging
import re
from pathlib import Path
from typing import List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..algebra.core.finite_bimodule import FiniteBimodule
from ..algebra.core.finite_ring import FiniteRing
from ..algebra.services.validator import validate_bimodule, validate_ring
from ..exceptions import InvalidModelError, ModelFileError, ShapeError
from ..model.core.constraints import TABLE_NAMES
from ..model.core.skeletal_model import SkeletalModel

logger = logging.getLogger(__name__)

# A k-ary table as nested lists, ring indices outermost.
NestedTable = Union[List[int], List[List[int]], List[List[List[int]]]]


class RingSection(BaseModel):
    model_config = ConfigDict(extra='forbid')

    order: int
    add: List[List[int]]
    mul: List[List[int]]
    zero: int = 0
    one: int = 1


class ModuleSection(BaseModel):
    model_config = ConfigDict(extra='forbid')

    order: int
    add: List[List[int]]
    zero: int = 0
    left_action: List[List[int]]
    right_action: List[List[int]]


class ConstraintSection(BaseModel):
    model_config = ConfigDict(extra='forbid', populate_by_name=True)

    xi: Optional[NestedTable] = None
    eta: Optional[NestedTable] = None
    g: Optional[NestedTable] = None
    d: Optional[NestedTable] = None
    alpha: Optional[NestedTable] = None
    lam_u: Optional[NestedTable] = None
    rho_u: Optional[NestedTable] = None
    ldist: Optional[NestedTable] = Field(default=None, alias='L')
    rdist: Optional[NestedTable] = Field(default=None, alias='R')


class Metadata(BaseModel):
    name: str = ""
    notes: str = ""


class ModelFile(BaseModel):
    model_config = ConfigDict(extra='forbid')

    ring: RingSection
    module: ModuleSection
    constraints: ConstraintSection = Field(default_factory=ConstraintSection)
    metadata: Metadata = Field(default_factory=Metadata)


_FLAT_LIST = re.compile(r"\[\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\]")


def dump_json(data: dict) -> str:
    """Indented JSON with every innermost list of numbers on one line."""
    text = json.dumps(data, indent=2, ensure_ascii=False)
    text = _FLAT_LIST.sub(lambda m: "[" + ", ".join(v.strip() for v in m.group(1).split(",")) + "]", text)
    return text + "\n"


def model_from_document(document: ModelFile, validate: bool = True) -> SkeletalModel:
    """
    Build a model from a parsed document.

    Shape problems raise ModelFileError; with `validate`, ring or bimodule
    law violations raise InvalidModelError carrying the reports.
    """
    try:
        ring = FiniteRing(
            order=document.ring.order,
            add=document.ring.add,
            mul=document.ring.mul,
            zero=document.ring.zero,
            one=document.ring.one,
        )
        module = FiniteBimodule(
            order=document.module.order,
            add=document.module.add,
            zero=document.module.zero,
            left_action=document.module.left_action,
            right_action=document.module.right_action,
        )
    except ShapeError as e:
        raise ModelFileError(str(e))

    if validate:
        ring_report = validate_ring(ring)
        reports = [ring_report]
        if ring_report.passed:
            reports.append(validate_bimodule(ring, module))
        failed = [r for r in reports if not r.passed]
        if failed:
            raise InvalidModelError("; ".join(r.summary() for r in failed), reports)

    tables = {name: getattr(document.constraints, name) for name in TABLE_NAMES}
    try:
        return SkeletalModel(
            ring,
            module,
            **{name: table for name, table in tables.items() if table is not None},
            name=document.metadata.name,
            notes=document.metadata.notes,
        )
    except ShapeError as e:
        raise ModelFileError(str(e))


def parse_model(text: str, validate: bool = True) -> SkeletalModel:
    try:
        document = ModelFile.model_validate_json(text)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first['loc'])
        raise ModelFileError(f"{location}: {first['msg']} ({e.error_count()} error(s))")
    return model_from_document(document, validate)


def load_model(path: Union[str, Path], validate: bool = True) -> SkeletalModel:
    """
    Read a model file.

    Args:
        path: Path to the JSON model file
        validate: Reject rings and bimodules that break their laws

    Raises:
        ModelFileError: If the file cannot be read or parsed
        InvalidModelError: If validation is on and a law fails
    """
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        raise ModelFileError(f"cannot read {path}: {e.strerror}")
    try:
        model = parse_model(text, validate)
    except ModelFileError as e:
        raise ModelFileError(f"{path}: {e}")
    logger.debug(f"loaded {model!r} from {path}")
    return model


def model_to_document(model: SkeletalModel) -> ModelFile:
    ring, module = model.ring, model.module
    return ModelFile(
        ring=RingSection(
            order=ring.order,
            add=ring.add.tolist(),
            mul=ring.mul.tolist(),
            zero=ring.zero,
            one=ring.one,
        ),
        module=ModuleSection(
            order=module.order,
            add=module.add.tolist(),
            zero=module.zero,
            left_action=module.left_action.tolist(),
            right_action=module.right_action.tolist(),
        ),
        constraints=ConstraintSection(**{name: getattr(model, name).tolist() for name in TABLE_NAMES}),
        metadata=Metadata(name=model.name, notes=model.notes),
    )


def dump_model(model: SkeletalModel) -> str:
    return dump_json(model_to_document(model).model_dump(by_alias=True))


def save_model(model: SkeletalModel, path: Union[str, Path]) -> Path:
    """Write a model file, creating parent directories."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_model(model), encoding='utf-8')
    logger.info(f"saved {model!r} to {path}")
    return path


def model_digest(model: SkeletalModel) -> str:
    """sha256 of the canonical document, metadata excluded."""
    document = model_to_document(model).model_dump(by_alias=True, exclude={'metadata'})
    return hashlib.sha256(dump_json(document).encode('utf-8')).hexdigest()
