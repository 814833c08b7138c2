"""Projection hyperplane through the utopia point, orthogonal to utopia -> anti-utopia."""

from __future__ import annotations
import logging
from dataclasses import dataclass

import numpy as np
from scipy.linalg import null_space

from src.core.errors import DegenerateRange, DimensionError

_log = logging.getLogger(__name__)

RANGE_TOL = 1e-12
GRAM_SCHMIDT_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class ProjectionBasis:
    """
    Orthonormal basis j_1..j_p of objective space.

    j_1 points from the utopia point G to the anti-utopia point B; j_2..j_p
    span the projection hyperplane, whose origin is G.
    """
    utopia: np.ndarray
    anti_utopia: np.ndarray
    j: np.ndarray  # (p, p), row k is j_{k+1}

    @property
    def p(self) -> int:
        return self.j.shape[0]

    @property
    def direction(self) -> np.ndarray:
        return self.j[0]

    @property
    def plane(self) -> np.ndarray:
        """Rows j_2..j_p."""
        return self.j[1:]


@dataclass(frozen=True, eq=False)
class ProjectedPoint:
    """Hyperplane coordinates of one archive point."""
    y: np.ndarray
    source_index: int


def build_basis(utopia: np.ndarray, anti_utopia: np.ndarray) -> ProjectionBasis:
    """
    Gram-Schmidt basis with j_1 = (B - G)/|B - G|.

    The Cartesian unit vectors i_2..i_p, then i_1, are orthogonalised against
    the vectors accepted so far; a candidate whose remainder is shorter than
    GRAM_SCHMIDT_TOL is skipped. Any vectors still missing are filled in from
    the orthogonal complement.
    """
    G = np.asarray(utopia, dtype=float)
    B = np.asarray(anti_utopia, dtype=float)
    if G.shape != B.shape or G.ndim != 1:
        raise DimensionError("utopia and anti-utopia must be vectors of equal length")

    span = B - G
    length = float(np.linalg.norm(span))
    if length < RANGE_TOL:
        raise DegenerateRange(f"utopia and anti-utopia coincide (|B - G| = {length:g})")

    p = G.size
    basis = [span / length]
    candidates = list(range(1, p)) + [0]
    for axis in candidates:
        if len(basis) == p:
            break
        v = np.zeros(p)
        v[axis] = 1.0
        for q in basis:
            v = v - np.dot(v, q) * q
        norm = float(np.linalg.norm(v))
        if norm < GRAM_SCHMIDT_TOL:
            _log.debug("Gram-Schmidt skipped axis %d (remainder %.3g)", axis + 1, norm)
            continue
        basis.append(v / norm)

    if len(basis) < p:
        complement = null_space(np.vstack(basis))
        basis.extend(complement.T[: p - len(basis)])

    return ProjectionBasis(utopia=G.copy(), anti_utopia=B.copy(), j=np.vstack(basis))


def project(basis: ProjectionBasis, f: np.ndarray, source_index: int = -1) -> ProjectedPoint:
    """y_k = (f - G) . j_{k+1} for k = 1..p-1."""
    f = np.asarray(f, dtype=float)
    if f.shape != basis.utopia.shape:
        raise DimensionError(f"objective vector of length {f.size} for a {basis.p}-objective basis")
    return ProjectedPoint(y=basis.plane @ (f - basis.utopia), source_index=source_index)


def project_all(basis: ProjectionBasis, objectives: np.ndarray) -> np.ndarray:
    """Hyperplane coordinates of every row of an (N, p) matrix, shape (N, p-1)."""
    F = np.atleast_2d(np.asarray(objectives, dtype=float))
    if F.shape[1] != basis.p:
        raise DimensionError(f"objective matrix has {F.shape[1]} columns for a {basis.p}-objective basis")
    return (F - basis.utopia) @ basis.plane.T


def reconstruct(basis: ProjectionBasis, point: ProjectedPoint, offset: float) -> np.ndarray:
    """Inverse of `project` given the discarded coordinate along j_1."""
    return basis.utopia + point.y @ basis.plane + offset * basis.direction
