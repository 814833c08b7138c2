"""Pareto criticality measure omega(x) = -min_{|d|<=1} max_i g_i.d.

By minimax duality omega equals the norm of the min-norm element of the
convex hull of the gradients, which is found with away-step Frank-Wolfe on
the simplex (exact line search, the objective being quadratic).
"""

from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from src.core.errors import DimensionError, EmptySetError

_log = logging.getLogger(__name__)

MAX_ITERATIONS = 500
GAP_TOL = 1e-10
ZERO_OMEGA = 1e-12


@dataclass(frozen=True, eq=False)
class CriticalityResult:
    """omega, the simplex weights alpha and the steepest common descent direction."""
    omega: float
    alpha: np.ndarray
    d_omega: np.ndarray


def omega(gradients: Sequence[np.ndarray] | np.ndarray) -> CriticalityResult:
    """Criticality measure of a set of p gradients in R^n."""
    Gm = np.atleast_2d(np.asarray(gradients, dtype=float))
    if Gm.shape[0] == 0:
        raise EmptySetError("omega needs at least one gradient")
    if not np.all(np.isfinite(Gm)):
        raise DimensionError("gradients must be finite")

    p = Gm.shape[0]
    Q = Gm @ Gm.T

    # start at the shortest gradient
    alpha = np.zeros(p)
    alpha[int(np.argmin(np.diag(Q)))] = 1.0

    for iteration in range(MAX_ITERATIONS):
        grad = 2.0 * Q @ alpha
        s = int(np.argmin(grad))
        fw_gap = float(grad @ alpha - grad[s])
        if fw_gap <= GAP_TOL:
            break

        support = np.flatnonzero(alpha > 0)
        v = int(support[np.argmax(grad[support])])
        away_gap = float(grad[v] - grad @ alpha)

        if fw_gap >= away_gap:
            direction = -alpha.copy()
            direction[s] += 1.0
            step_max = 1.0
        else:
            direction = alpha.copy()
            direction[v] -= 1.0
            step_max = alpha[v] / (1.0 - alpha[v]) if alpha[v] < 1.0 else np.inf

        curvature = float(direction @ Q @ direction)
        slope = float(alpha @ Q @ direction)
        step = step_max if curvature <= 0 else min(step_max, max(0.0, -slope / curvature))
        if not np.isfinite(step):
            break
        alpha = alpha + step * direction
        alpha = np.clip(alpha, 0.0, None)
        alpha /= alpha.sum()
    else:
        _log.debug("Frank-Wolfe reached %d iterations without closing the gap", MAX_ITERATIONS)

    combo = alpha @ Gm
    value = float(np.linalg.norm(combo))
    d_omega = -combo / value if value > ZERO_OMEGA else np.zeros(Gm.shape[1])
    return CriticalityResult(omega=value, alpha=alpha, d_omega=d_omega)
