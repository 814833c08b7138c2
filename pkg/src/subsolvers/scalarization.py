"""Pascoletti-Serafini trial point.

    min t  s.t.  f_c - m(x) + t r >= 0,  x in the trust region

is solved through its minimax form min_x max_i (m_i(x) - f_c_i) / r_i:
multi-start projected subgradient descent followed by an SLSQP polish of
the epigraph problem. Objectives with r_i ~ 0 become hard constraints
m_i(x) <= f_c_i.
"""

from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.optimize import minimize

from src.core.errors import DimensionError
from src.core.region import TrustRegion
from src.subsolvers.trust_region import min_quadratic_on_ball
from src.surrogate.models import ModelVector

_log = logging.getLogger(__name__)

ZERO_DIRECTION = 1e-12
CONSTRAINT_TOL = 1e-10
RANDOM_STARTS = 8
SUBGRADIENT_STEPS = 300
STEP_FACTOR = 0.3


@dataclass(frozen=True, eq=False)
class ScalarizationResult:
    """Optimal t, trial point x_plus and the direction r used."""
    t: float
    x_plus: np.ndarray
    r: np.ndarray


class _MaxRatio:
    """phi(x) = max_i (m_i(x) - f_c_i) / r_i with hard constraints where r_i = 0."""

    def __init__(self, models: ModelVector, f_center: np.ndarray, r: np.ndarray) -> None:
        self.models = models
        self.f_center = f_center
        self.r = r
        self.scaled = r > ZERO_DIRECTION

    def value_and_subgradient(self, x: np.ndarray) -> tuple[float, np.ndarray]:
        m = self.models.values(x)
        excess = m - self.f_center
        hard = ~self.scaled & (excess > CONSTRAINT_TOL)
        if np.any(hard):
            i = int(np.flatnonzero(hard)[np.argmax(excess[hard])])
            return np.inf, self.models[i].gradient(x)
        ratios = np.where(self.scaled, excess / np.where(self.scaled, self.r, 1.0), -np.inf)
        i = int(np.argmax(ratios))
        return float(ratios[i]), self.models[i].gradient(x) / self.r[i]

    def value(self, x: np.ndarray) -> float:
        return self.value_and_subgradient(x)[0]


def _subgradient_descent(
    objective: _MaxRatio,
    region: TrustRegion,
    start: np.ndarray,
) -> tuple[np.ndarray, float]:
    x = region.retract(start)
    best_x, best_val = x, objective.value(x)
    for j in range(1, SUBGRADIENT_STEPS + 1):
        _, sub = objective.value_and_subgradient(x)
        norm = float(np.linalg.norm(sub))
        if norm <= ZERO_DIRECTION:
            break
        x = region.retract(x - (STEP_FACTOR * region.effective_radius / np.sqrt(j)) * sub / norm)
        val = objective.value(x)
        if val < best_val:
            best_x, best_val = x, val
    return best_x, best_val


def _polish(
    models: ModelVector,
    region: TrustRegion,
    f_center: np.ndarray,
    r: np.ndarray,
    x0: np.ndarray,
    t0: float,
) -> np.ndarray:
    """SLSQP on variables (x, t): min t s.t. t r_i - m_i(x) + f_c_i >= 0, ball, box."""
    n = region.n
    r2 = region.effective_radius ** 2

    def model_gap(z: np.ndarray) -> np.ndarray:
        return z[n] * r - models.values(z[:n]) + f_center

    def model_gap_jac(z: np.ndarray) -> np.ndarray:
        return np.hstack([-models.gradients(z[:n]), r[:, None]])

    constraints = [
        {"type": "ineq", "fun": model_gap, "jac": model_gap_jac},
        {
            "type": "ineq",
            "fun": lambda z: r2 - float(np.sum((z[:n] - region.center) ** 2)),
            "jac": lambda z: np.append(-2.0 * (z[:n] - region.center), 0.0),
        },
    ]
    bounds = region.bounds_for_slsqp() + [(-1.0, 0.0)]
    res = minimize(
        lambda z: z[n], np.append(x0, t0), jac=lambda z: np.append(np.zeros(n), 1.0),
        method="SLSQP", bounds=bounds, constraints=constraints,
        options={"maxiter": 200, "ftol": 1e-12},
    )
    return region.retract(res.x[:n])


def pascoletti_serafini(
    models: ModelVector,
    region: TrustRegion,
    f_center: np.ndarray,
    ideal_points: Sequence[np.ndarray] | None = None,
    ideal_values: np.ndarray | None = None,
    rng: np.random.Generator | None = None,
) -> ScalarizationResult:
    """
    Trial point of the Pascoletti-Serafini problem with r = f_c - s.

    `ideal_values` are the per-objective minima s_i over the region (computed
    here when omitted) and `ideal_points` their minimisers, used as starts.
    """
    f_center = np.asarray(f_center, dtype=float)
    if f_center.size != len(models):
        raise DimensionError(f"{f_center.size} objective values for {len(models)} models")

    if ideal_values is None or ideal_points is None:
        solved = [min_quadratic_on_ball(m, region) for m in models]
        ideal_points = [x for x, _ in solved]
        ideal_values = np.array([v for _, v in solved])

    r = np.maximum(f_center - np.asarray(ideal_values, dtype=float), 0.0)
    if np.all(r <= ZERO_DIRECTION):
        return ScalarizationResult(t=0.0, x_plus=region.center.copy(), r=r)

    objective = _MaxRatio(models, f_center, r)
    rng = rng if rng is not None else np.random.default_rng(0)
    starts = [region.center.copy(), *[np.asarray(x, dtype=float) for x in ideal_points]]
    starts.extend(region.random_points(rng, RANDOM_STARTS))

    best_x, best_val = region.center.copy(), objective.value(region.center)
    for start in starts:
        x, val = _subgradient_descent(objective, region, start)
        if val < best_val:
            best_x, best_val = x, val

    if np.isfinite(best_val):
        polished = _polish(models, region, f_center, r, best_x, min(0.0, max(-1.0, best_val)))
        polished_val = objective.value(polished)
        if polished_val < best_val:
            best_x, best_val = polished, polished_val

    # t is re-derived from the returned point so the constraints hold exactly
    t = best_val if np.isfinite(best_val) else 0.0
    if t < -1.0 - 1e-6:
        _log.warning("scalarization returned t=%.6g below -1; model minima may be inaccurate", t)
    t = float(min(0.0, max(-1.0, t)))
    if t == 0.0:
        best_x = region.center.copy()
    return ScalarizationResult(t=t, x_plus=best_x, r=r)
