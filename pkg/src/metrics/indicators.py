"""Quality indicators for approximated Pareto fronts: GD and hypervolume."""

from __future__ import annotations
import logging

import numpy as np
from scipy.spatial import cKDTree

from src.core.dominance import nondominated_mask
from src.core.errors import DimensionError, EmptySetError, ReferenceViolation

_log = logging.getLogger(__name__)

MC_SAMPLES = 10 ** 6
MC_CHUNK = 10 ** 5
REFERENCE_MARGIN = 0.1


def _as_matrix(points, what: str) -> np.ndarray:
    F = np.asarray(points, dtype=float)
    if F.ndim == 1:
        F = F.reshape(1, -1) if F.size else F.reshape(0, 0)
    if F.ndim != 2:
        raise DimensionError(f"{what} must be a list of objective vectors")
    return F


def gd(produced, front) -> float:
    """
    Generational distance sqrt(sum_j d_j^2) / M.

    d_j is the distance of produced point j to its nearest front sample and
    M the number of produced points.
    """
    P = _as_matrix(produced, "produced set")
    if P.shape[0] == 0:
        raise EmptySetError("generational distance needs at least one produced point")
    Fr = _as_matrix(getattr(front, "points", front), "front sample")
    if Fr.shape[0] == 0:
        raise EmptySetError("front sample is empty")
    if Fr.shape[1] != P.shape[1]:
        raise DimensionError(f"produced points have {P.shape[1]} objectives, front has {Fr.shape[1]}")
    distances, _ = cKDTree(Fr).query(P)
    return float(np.sqrt(np.sum(distances ** 2)) / P.shape[0])


def _check_reference(F: np.ndarray, ref: np.ndarray) -> None:
    if F.shape[1] != ref.size:
        raise DimensionError(f"points have {F.shape[1]} objectives, reference has {ref.size}")
    bad = np.flatnonzero(np.any(F > ref, axis=1))
    if bad.size:
        raise ReferenceViolation(F[bad[0]], ref)


def _hv2d(F: np.ndarray, ref: np.ndarray) -> float:
    """Sweep over f1 of the nondominated points (f2 then decreases)."""
    if F.shape[0] == 0:
        return 0.0
    front = F[nondominated_mask(F)]
    front = front[np.argsort(front[:, 0], kind="stable")]
    right = np.append(front[1:, 0], ref[0])
    return float(np.sum((right - front[:, 0]) * (ref[1] - front[:, 1])))


def _hv3d(F: np.ndarray, ref: np.ndarray) -> float:
    """Slabs between consecutive f3 levels, each a 2-D sweep."""
    front = F[nondominated_mask(F)]
    levels = np.unique(front[:, 2])
    tops = np.append(levels[1:], ref[2])
    volume = 0.0
    for level, top in zip(levels, tops):
        below = front[front[:, 2] <= level]
        volume += _hv2d(below[:, :2], ref[:2]) * (top - level)
    return float(volume)


def hypervolume_estimate(
    points,
    ref,
    samples: int = MC_SAMPLES,
    seed: int = 0,
) -> tuple[float, float]:
    """
    Monte Carlo hypervolume and its standard error.

    Samples are drawn uniformly from the box spanned by the componentwise
    minimum of the points and the reference.
    """
    F = _as_matrix(points, "points")
    ref = np.asarray(ref, dtype=float).reshape(-1)
    if F.shape[0] == 0:
        return 0.0, 0.0
    _check_reference(F, ref)
    F = F[nondominated_mask(F)]
    low = F.min(axis=0)
    box_volume = float(np.prod(ref - low))
    if box_volume <= 0.0:
        return 0.0, 0.0

    rng = np.random.default_rng(seed)
    hits = 0
    drawn = 0
    while drawn < samples:
        size = min(MC_CHUNK, samples - drawn)
        u = low + (ref - low) * rng.random((size, ref.size))
        covered = np.zeros(size, dtype=bool)
        for f in F:
            covered |= np.all(u >= f, axis=1)
        hits += int(covered.sum())
        drawn += size
    fraction = hits / samples
    return box_volume * fraction, box_volume * float(np.sqrt(fraction * (1.0 - fraction) / samples))


def hypervolume(points, ref) -> float:
    """
    Measure of the union of boxes [f, ref] over all points.

    Exact for two and three objectives, Monte Carlo beyond. Every point must
    weakly dominate the reference.
    """
    F = _as_matrix(points, "points")
    ref = np.asarray(ref, dtype=float).reshape(-1)
    if F.shape[0] == 0:
        return 0.0
    _check_reference(F, ref)
    p = ref.size
    if p == 2:
        return _hv2d(F, ref)
    if p == 3:
        return _hv3d(F, ref)
    value, stderr = hypervolume_estimate(F, ref)
    _log.debug("Monte Carlo hypervolume %.6g +- %.2g", value, stderr)
    return value


def default_reference(evaluations) -> np.ndarray:
    """Componentwise maximum plus a margin of 10% of the observed range."""
    F = _as_matrix(evaluations, "evaluations")
    if F.shape[0] == 0:
        raise EmptySetError("no evaluations to derive a hypervolume reference from")
    top = F.max(axis=0)
    span = top - F.min(axis=0)
    fallback = REFERENCE_MARGIN * np.maximum(1.0, np.abs(top))
    return top + np.where(span > 0, REFERENCE_MARGIN * span, fallback)


def tracked_hypervolume(points, ref) -> float:
    """Hypervolume for run logs: points violating the reference are dropped with a warning."""
    F = _as_matrix(points, "points")
    ref = np.asarray(ref, dtype=float).reshape(-1)
    if F.shape[0] == 0:
        return 0.0
    inside = np.all(F <= ref, axis=1)
    if not np.all(inside):
        _log.warning("%d point(s) do not dominate the hypervolume reference and are ignored", int((~inside).sum()))
    return hypervolume(F[inside], ref)
