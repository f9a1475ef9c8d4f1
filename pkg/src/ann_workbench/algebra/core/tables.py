"""
Helpers shared by the table-backed structures.
"""
from typing import Tuple, Union

import numpy as np

from ...exceptions import ShapeError

Index = Union[int, np.ndarray]


def as_index(value) -> Index:
    """Plain int for scalar lookups, the array itself otherwise."""
    array = np.asarray(value)
    if array.ndim == 0:
        return int(array)
    return array


def frozen_table(data, shape: Tuple[int, ...], bound: int, name: str) -> np.ndarray:
    """Copy `data` into a read-only intp array of `shape` with entries in [0, bound)."""
    try:
        table = np.array(data, dtype=np.intp)
    except (TypeError, ValueError) as e:
        raise ShapeError(f"{name}: not an integer table ({e})")
    if table.shape != shape:
        raise ShapeError(f"{name}: expected shape {shape}, got {table.shape}")
    if table.size and (table.min() < 0 or table.max() >= bound):
        raise ShapeError(f"{name}: entries must lie in 0..{bound - 1}")
    table.setflags(write=False)
    return table


def inverse_vector(add: np.ndarray, zero: int) -> np.ndarray:
    """neg[x] = the first y with add[x, y] == zero, or x itself when no such y exists."""
    hits = add == zero
    neg = np.where(hits.any(axis=1), hits.argmax(axis=1), np.arange(len(add)))
    return neg.astype(np.intp)
