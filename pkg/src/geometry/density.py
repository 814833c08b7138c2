"""Influence and density functions on the projection hyperplane, and reference selection."""

from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.spatial.distance import cdist

from src.core.archive import Archive
from src.core.enums import InfluenceKind
from src.core.errors import DegenerateRange, DomainError, EmptySetError
from src.geometry.projection import ProjectedPoint, ProjectionBasis, build_basis, project_all

_log = logging.getLogger(__name__)


@dataclass(frozen=True)
class DecreasingFunction:
    """
    Kernel phi used by every influence function.

    SHARING: 1 - (d/sigma)^alpha for d <= sigma, else 0.
    GAUSSIAN: exp(-d^2 / (2 sigma^2)).
    """
    kind: InfluenceKind = InfluenceKind.GAUSSIAN
    sigma: float = 0.05
    alpha: int = 1

    def __post_init__(self) -> None:
        if not self.sigma > 0:
            raise DomainError(f"sigma must be positive, got {self.sigma}")
        if self.kind is InfluenceKind.SHARING and (int(self.alpha) != self.alpha or self.alpha < 1):
            raise DomainError(f"sharing exponent must be a positive integer, got {self.alpha}")

    @classmethod
    def sharing(cls, sigma: float, alpha: int = 1) -> DecreasingFunction:
        return cls(InfluenceKind.SHARING, sigma, alpha)

    @classmethod
    def gaussian(cls, sigma: float) -> DecreasingFunction:
        return cls(InfluenceKind.GAUSSIAN, sigma)

    def __call__(self, d: np.ndarray | float) -> np.ndarray:
        d = np.asarray(d, dtype=float)
        if np.any(d < 0):
            raise DomainError("distance must be nonnegative")
        if self.kind is InfluenceKind.SHARING:
            return np.where(d <= self.sigma, 1.0 - (d / self.sigma) ** self.alpha, 0.0)
        return np.exp(-(d ** 2) / (2.0 * self.sigma ** 2))


def phi(fun: DecreasingFunction, d: float) -> float:
    """Scalar kernel value phi(d)."""
    return float(fun(d))


def density_at(
    projections: Sequence[ProjectedPoint],
    fun: DecreasingFunction,
    y: np.ndarray,
) -> float:
    """D(y) = sum_i phi(|Pr(F(x_i)) - y|)."""
    if len(projections) == 0:
        raise EmptySetError("density needs at least one projected point")
    Y = np.vstack([np.atleast_1d(pt.y) for pt in projections])
    distances = np.linalg.norm(Y - np.atleast_1d(np.asarray(y, dtype=float)), axis=1)
    return float(np.sum(fun(distances)))


def _scaled_objectives(objectives: np.ndarray, normalize: bool) -> np.ndarray:
    if not normalize:
        return objectives
    lo = objectives.min(axis=0)
    span = objectives.max(axis=0) - lo
    span = np.where(span > 0, span, 1.0)
    return (objectives - lo) / span


def archive_basis(objectives: np.ndarray) -> ProjectionBasis:
    """
    Basis from the componentwise min/max of the given objectives.

    When the range collapses (a single point) the plane falls back to the
    direction (1, ..., 1) through the utopia point.
    """
    G = objectives.min(axis=0)
    B = objectives.max(axis=0)
    try:
        return build_basis(G, B)
    except DegenerateRange:
        _log.debug("degenerate objective range, using the diagonal direction")
        return build_basis(G, G + 1.0)


def archive_projections(
    archive: Archive,
    normalize: bool = False,
) -> tuple[ProjectionBasis, list[ProjectedPoint]]:
    """Project every archive entry onto the hyperplane built from the archive itself."""
    if len(archive) == 0:
        raise EmptySetError("archive is empty")
    F = _scaled_objectives(archive.objectives(), normalize)
    basis = archive_basis(F)
    Y = project_all(basis, F)
    return basis, [ProjectedPoint(y=Y[i], source_index=i) for i in range(len(archive))]


def archive_densities(archive: Archive, fun: DecreasingFunction, normalize: bool = False) -> np.ndarray:
    """gamma(x_i) = D(Pr(F(x_i))) for every archive entry."""
    _, projections = archive_projections(archive, normalize)
    Y = np.vstack([pt.y for pt in projections])
    return fun(cdist(Y, Y)).sum(axis=1)


def select_reference(
    archive: Archive,
    fun: DecreasingFunction,
    normalize: bool = False,
    eligible: np.ndarray | None = None,
) -> int:
    """
    Index of the sparsest archive entry.

    Densities are computed over the whole archive; when `eligible` is given
    only those entries compete. Ties go to the lowest insertion index.
    """
    if len(archive) == 0:
        raise EmptySetError("cannot select a reference from an empty archive")
    if eligible is not None and not np.any(eligible):
        raise EmptySetError("no archive entry is eligible as reference")
    if len(archive) == 1:
        return 0

    gamma = archive_densities(archive, fun, normalize)
    if eligible is not None:
        gamma = np.where(eligible, gamma, np.inf)
    return int(np.argmin(gamma))


def density_surface(
    archive: Archive,
    fun: DecreasingFunction,
    normalize: bool = False,
    resolution: int | None = None,
) -> np.ndarray:
    """
    Density sampled for plotting, rows (y_1, ..., y_{p-1}, D).

    One- and two-dimensional hyperplanes get a regular grid spanning the
    projected points plus a 3-sigma margin; higher dimensions get the
    density at the projected points only.
    """
    _, projections = archive_projections(archive, normalize)
    Y = np.vstack([pt.y for pt in projections])
    dim = Y.shape[1]

    if dim > 2:
        grid = Y
    else:
        steps = resolution or (201 if dim == 1 else 61)
        margin = 3.0 * fun.sigma
        axes = [np.linspace(Y[:, k].min() - margin, Y[:, k].max() + margin, steps) for k in range(dim)]
        mesh = np.meshgrid(*axes, indexing="ij")
        grid = np.column_stack([m.ravel() for m in mesh])

    values = fun(cdist(grid, Y)).sum(axis=1)
    return np.column_stack([grid, values])
