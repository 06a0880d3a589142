"""Array type aliases shared by the numerical modules."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np
from numpy.typing import NDArray

FloatArray = NDArray[np.float64]

EPS = float(np.finfo(np.float64).eps)


def as_vector(values: Sequence[float] | FloatArray, size: int | None = None) -> FloatArray:
    """Copy values into a 1-D float64 array, optionally checking its length.

    Raises:
        ValueError: if `size` is given and does not match.
    """
    vector = np.array(values, dtype=np.float64).reshape(-1)
    if size is not None and vector.shape[0] != size:
        raise ValueError(f"expected {size} entries, got {vector.shape[0]}")
    return vector


def max_norm(vector: FloatArray) -> float:
    """Max-norm, 0.0 for an empty vector."""
    if vector.size == 0:
        return 0.0
    return float(np.max(np.abs(vector)))
