"""Decision and objective vectors.

Both are plain float64 numpy arrays; these helpers validate them at the
boundaries where values enter the solver.
"""

from __future__ import annotations
from typing import Sequence, Union

import numpy as np

from .errors import DimensionError, DomainError

VectorLike = Union[Sequence[float], np.ndarray]


def _as_vector(values: VectorLike, expected: int | None, minimum: int, what: str) -> np.ndarray:
    arr = np.array(values, dtype=float).reshape(-1)
    if expected is not None and arr.size != expected:
        raise DimensionError(f"{what} has length {arr.size}, expected {expected}")
    if arr.size < minimum:
        raise DimensionError(f"{what} needs at least {minimum} components, got {arr.size}")
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{what} has non-finite components: {arr.tolist()}")
    return arr


def as_decision(values: VectorLike, n: int | None = None) -> np.ndarray:
    """Validate a decision vector x in R^n (n >= 1, finite)."""
    return _as_vector(values, n, 1, "decision vector")


def as_objective(values: VectorLike, p: int | None = None) -> np.ndarray:
    """Validate an objective vector F(x) in R^p (p >= 2, finite)."""
    return _as_vector(values, p, 2, "objective vector")


def vector_key(x: np.ndarray) -> bytes:
    """Exact-match key: bitwise-equal coordinates map to the same key."""
    # +0.0 so that -0.0 and 0.0 share a key
    return (np.asarray(x, dtype=float) + 0.0).tobytes()


def clip_to_box(x: np.ndarray, lower: np.ndarray | None, upper: np.ndarray | None) -> np.ndarray:
    """Coordinatewise projection onto the box; no-op without bounds."""
    if lower is None or upper is None:
        return np.array(x, dtype=float)
    return np.minimum(np.maximum(x, lower), upper)
