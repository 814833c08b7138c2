"""Pareto dominance between objective vectors (minimisation)."""

from __future__ import annotations

import numpy as np

from .enums import Dominance
from .errors import DimensionError


def dominates(a: np.ndarray, b: np.ndarray) -> Dominance:
    """
    Compare objective vector a against b.

    Returns EQUAL when the vectors are componentwise equal, DOMINATES when
    a_i <= b_i for all i with at least one strict inequality, and
    INCOMPARABLE otherwise (including when b dominates a). Comparison is exact.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise DimensionError(f"cannot compare vectors of length {a.size} and {b.size}")

    if np.array_equal(a, b):
        return Dominance.EQUAL
    if np.all(a <= b):
        return Dominance.DOMINATES
    return Dominance.INCOMPARABLE


def nondominated_mask(objectives: np.ndarray) -> np.ndarray:
    """
    Boolean mask of the nondominated rows of an (N, p) objective matrix.

    Of several equal rows only the first (in input order) is kept, matching
    the archive's Equal -> Rejected rule.
    """
    F = np.asarray(objectives, dtype=float)
    if F.ndim != 2:
        raise DimensionError("objective matrix must be two-dimensional")
    n_points = F.shape[0]
    mask = np.zeros(n_points, dtype=bool)
    if n_points == 0:
        return mask

    # A dominator always precedes its victim in lexicographic order, so one
    # pass against the survivors so far is enough.
    order = np.lexsort(F.T[::-1])
    front = np.empty_like(F)
    size = 0
    for idx in order:
        f = F[idx]
        if size and np.any(np.all(front[:size] <= f, axis=1)):
            continue
        front[size] = f
        size += 1
        mask[idx] = True
    return mask
