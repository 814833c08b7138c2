"""Global minimisation of a quadratic model over the trust region.

The ball problem

    min g.d + 1/2 d^T H d   s.t.  |d| <= radius

is solved exactly from the eigendecomposition of H: either the interior
Newton step, or the boundary solution (H + mu I) d = -g with mu found by
root-finding on the secular equation, or the hard case (g orthogonal to the
leftmost eigenspace) completed with an eigenvector step.
"""

from __future__ import annotations
import logging

import numpy as np
from scipy.optimize import brentq, minimize

from src.core.region import TrustRegion
from src.surrogate.models import QuadraticModel

_log = logging.getLogger(__name__)

HARD_CASE_TOL = 1e-10


def _step_norm(mu: float, eigvals: np.ndarray, g_hat: np.ndarray) -> float:
    return float(np.linalg.norm(g_hat / (eigvals + mu)))


def solve_ball_subproblem(g: np.ndarray, H: np.ndarray, radius: float) -> np.ndarray:
    """Step d minimising g.d + 1/2 d^T H d over |d| <= radius."""
    g = np.asarray(g, dtype=float)
    H = np.asarray(H, dtype=float)
    eigvals, Q = np.linalg.eigh(0.5 * (H + H.T))
    g_hat = Q.T @ g
    lam_min = float(eigvals[0])
    scale = max(1.0, float(np.abs(eigvals).max()), float(np.linalg.norm(g)))

    # Interior solution of a positive definite model
    if lam_min > HARD_CASE_TOL * scale:
        d_hat = -g_hat / eigvals
        if np.linalg.norm(d_hat) <= radius:
            return Q @ d_hat

    lower = max(0.0, -lam_min)
    # Eigen-directions whose shifted eigenvalue vanishes at mu = lower
    singular = np.abs(eigvals + lower) <= HARD_CASE_TOL * scale

    def hard_case_step() -> np.ndarray | None:
        d_hat = np.zeros_like(g_hat)
        regular = ~singular
        d_hat[regular] = -g_hat[regular] / (eigvals[regular] + lower)
        norm = float(np.linalg.norm(d_hat))
        if norm > radius:
            return None
        if np.any(singular) and lower > 0:
            k = int(np.flatnonzero(singular)[0])
            d_hat[k] = np.sqrt(max(radius ** 2 - norm ** 2, 0.0))
        return Q @ d_hat

    if np.all(np.abs(g_hat[singular]) <= HARD_CASE_TOL * scale):
        step = hard_case_step()
        if step is not None:
            return step

    def secular(mu: float) -> float:
        return 1.0 / radius - 1.0 / _step_norm(mu, eigvals, g_hat)

    left = lower + 1e-14 * scale
    upper = lower + float(np.linalg.norm(g)) / radius + scale
    if secular(left) <= 0:
        # The boundary is out of reach before the pole: nearly the hard case.
        step = hard_case_step()
        if step is not None:
            return step
        d_hat = -g_hat / (eigvals + left)
        return Q @ (d_hat * (radius / np.linalg.norm(d_hat)))

    mu = brentq(secular, left, upper, xtol=1e-15, rtol=1e-14, maxiter=200)
    d_hat = -g_hat / (eigvals + mu)
    norm = float(np.linalg.norm(d_hat))
    if norm > radius:
        d_hat *= radius / norm
    return Q @ d_hat


def _polish_in_box(m: QuadraticModel, region: TrustRegion, starts: list[np.ndarray]) -> np.ndarray:
    """SLSQP on ball intersected with box, from several feasible starts."""
    r2 = region.effective_radius ** 2
    constraint = {
        "type": "ineq",
        "fun": lambda x: r2 - float(np.sum((x - region.center) ** 2)),
        "jac": lambda x: -2.0 * (x - region.center),
    }
    _log.debug("ball minimiser leaves the box, polishing from %d starts", len(starts))
    best = min(starts, key=m.value)
    for start in starts:
        res = minimize(
            m.value, start, jac=m.gradient, method="SLSQP",
            bounds=region.bounds_for_slsqp(), constraints=[constraint],
            options={"maxiter": 200, "ftol": 1e-14},
        )
        candidate = region.retract(res.x)
        if m.value(candidate) < m.value(best):
            best = candidate
    return best


def min_quadratic_on_ball(m: QuadraticModel, region: TrustRegion) -> tuple[np.ndarray, float]:
    """
    Global minimiser of the model over the trust region and its value.

    Exact on the ball; when the ball solution leaves the box it is polished
    on the intersection and the better of the feasible candidates is kept.
    """
    d = solve_ball_subproblem(m.g + m.H @ (region.center - m.center), m.H, region.effective_radius)
    x_star = region.center + d
    if region.has_box and not region.contains(x_star):
        x_star = _polish_in_box(m, region, [region.retract(x_star), region.center.copy()])

    value = m.value(x_star)
    center_value = m.value(region.center)
    if value > center_value:
        x_star, value = region.center.copy(), center_value
    return x_star, value
