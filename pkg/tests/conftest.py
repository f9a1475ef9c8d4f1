import json

import numpy as np
import pytest

from ann_workbench.algebra import cyclic_ring, ring_bimodule
from ann_workbench.config import settings
from ann_workbench.model import trivial_model
from ann_workbench.storage import dump_model


@pytest.fixture
def mock_settings(monkeypatch):
    monkeypatch.setattr(settings, "SEARCH_BATCH_SIZE", 64)
    monkeypatch.setattr(settings, "SEARCH_WORKERS", 1)
    monkeypatch.setattr(settings, "SHOW_PROGRESS", False)
    return settings


@pytest.fixture
def z2():
    return cyclic_ring(2)


@pytest.fixture
def m2(z2):
    return ring_bimodule(z2)


@pytest.fixture
def trivial_z2(z2, m2):
    return trivial_model(z2, m2)


@pytest.fixture
def d14_violator(trivial_z2):
    """Ldist(1,1,1) = 1, everything else zero."""
    return trivial_z2.patched('L', {(1, 1, 1): 1})


@pytest.fixture
def lhat_inconsistent(trivial_z2):
    """Ldist(1,0,1) = 1: the derived lhat depends on the probe object."""
    return trivial_z2.patched('L', {(1, 0, 1): 1})


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def write_model(tmp_path):
    def write(model, name="model.json"):
        path = tmp_path / name
        path.write_text(dump_model(model), encoding="utf-8")
        return path

    return write


@pytest.fixture
def write_json(tmp_path):
    def write(document, name="model.json"):
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return path

    return write
