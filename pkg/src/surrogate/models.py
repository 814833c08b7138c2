"""Quadratic interpolation models of the black-box objectives."""

from __future__ import annotations
import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import TYPE_CHECKING, Sequence

import numpy as np
from scipy.linalg import LinAlgError, lu_factor, lu_solve

from src.core.errors import DimensionError, SingularInterpolation

if TYPE_CHECKING:
    from src.surrogate.sampling import SampleSet

_log = logging.getLogger(__name__)

CONDITION_LIMIT = 1e8


def n_interpolation_points(n: int) -> int:
    """q = (n+1)(n+2)/2, the dimension of the quadratic polynomials on R^n."""
    return (n + 1) * (n + 2) // 2


def quadratic_basis(s: np.ndarray) -> np.ndarray:
    """
    Natural quadratic basis evaluated row-wise.

    Columns: 1, s_1..s_n, s_1^2/2..s_n^2/2, then s_a s_b for a < b.
    """
    s = np.atleast_2d(np.asarray(s, dtype=float))
    n = s.shape[1]
    pairs = [s[:, a] * s[:, b] for a, b in combinations(range(n), 2)]
    columns = [np.ones(s.shape[0]), *s.T, *(0.5 * s.T ** 2), *pairs]
    return np.column_stack(columns)


def interpolation_matrix(points: np.ndarray, center: np.ndarray, scale: float) -> np.ndarray:
    """Basis matrix of the points in the scaled coordinates (y - center) / scale."""
    return quadratic_basis((np.asarray(points, dtype=float) - center) / scale)


@dataclass(frozen=True, eq=False)
class QuadraticModel:
    """m(x) = c + g.(x - center) + 1/2 (x - center)^T H (x - center)."""
    center: np.ndarray
    c: float
    g: np.ndarray
    H: np.ndarray

    def __post_init__(self) -> None:
        n = self.center.size
        if self.g.shape != (n,) or self.H.shape != (n, n):
            raise DimensionError("model gradient/Hessian do not match the centre's dimension")

    @property
    def n(self) -> int:
        return self.center.size

    def value(self, x: np.ndarray) -> float:
        d = np.asarray(x, dtype=float) - self.center
        return float(self.c + self.g @ d + 0.5 * d @ self.H @ d)

    def gradient(self, x: np.ndarray) -> np.ndarray:
        d = np.asarray(x, dtype=float) - self.center
        return self.g + self.H @ d


def model_eval(m: QuadraticModel, x: np.ndarray) -> float:
    return m.value(x)


def model_grad(m: QuadraticModel, x: np.ndarray) -> np.ndarray:
    return m.gradient(x)


@dataclass(frozen=True, eq=False)
class ModelVector:
    """One quadratic model per objective, all built on the same sample set."""
    models: list[QuadraticModel]
    sample: SampleSet | None = field(default=None, repr=False)

    def __len__(self) -> int:
        return len(self.models)

    def __iter__(self):
        return iter(self.models)

    def __getitem__(self, index: int) -> QuadraticModel:
        return self.models[index]

    @property
    def center(self) -> np.ndarray:
        return self.models[0].center

    def values(self, x: np.ndarray) -> np.ndarray:
        return np.array([m.value(x) for m in self.models])

    def gradients(self, x: np.ndarray) -> np.ndarray:
        """Gradients stacked as rows, shape (p, n)."""
        return np.vstack([m.gradient(x) for m in self.models])


def _unpack(coeffs: np.ndarray, n: int, scale: float) -> tuple[np.ndarray, np.ndarray]:
    """Turn scaled-basis coefficients (without constant) into g and H in x units."""
    g = coeffs[:n] / scale
    H = np.diag(coeffs[n:2 * n]) / scale ** 2
    for k, (a, b) in enumerate(combinations(range(n), 2)):
        H[a, b] = H[b, a] = coeffs[2 * n + k] / scale ** 2
    return g, H


def fit_models(sample: SampleSet, evals: Sequence[np.ndarray] | np.ndarray) -> ModelVector:
    """
    Interpolate every objective on the sample set.

    The centre is sample 0, so its value fixes the constant term exactly and
    the remaining q-1 conditions determine gradient and Hessian.
    """
    F = np.atleast_2d(np.asarray(evals, dtype=float))
    points = sample.points
    q, n = points.shape
    if F.shape[0] != q:
        raise DimensionError(f"{F.shape[0]} objective vectors for {q} sample points")
    if not np.array_equal(points[0], sample.center):
        raise DimensionError("the first sample point must be the centre")

    M = interpolation_matrix(points, sample.center, sample.radius)
    cond = np.linalg.cond(M)
    if not np.isfinite(cond) or cond > CONDITION_LIMIT:
        raise SingularInterpolation(f"interpolation matrix condition number {cond:.3g}")

    try:
        factors = lu_factor(M[1:, 1:], check_finite=True)
    except (LinAlgError, ValueError) as exc:
        raise SingularInterpolation(str(exc)) from exc
    coeffs = lu_solve(factors, F[1:] - F[0])

    models = []
    for i in range(F.shape[1]):
        g, H = _unpack(coeffs[:, i], n, sample.radius)
        models.append(QuadraticModel(center=sample.center.copy(), c=float(F[0, i]), g=g, H=0.5 * (H + H.T)))
    _log.debug("fitted %d models on %d points (cond %.3g)", len(models), q, cond)
    return ModelVector(models=models, sample=sample)
