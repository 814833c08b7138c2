"""Poised interpolation sample sets inside a (box-clipped) trust region."""

from __future__ import annotations
import logging
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from src.core.errors import DegenerateRegion
from src.core.region import TrustRegion
from src.surrogate.models import CONDITION_LIMIT, interpolation_matrix

_log = logging.getLogger(__name__)

IMPROVEMENT_ROUNDS = 10
CANDIDATES = 2000
MIN_OFFSET = 1e-12


@dataclass(frozen=True, eq=False)
class SampleSet:
    """q = (n+1)(n+2)/2 points in the trust region; points[0] is the centre."""
    center: np.ndarray
    radius: float
    points: np.ndarray

    @property
    def q(self) -> int:
        return self.points.shape[0]

    def condition(self) -> float:
        return float(np.linalg.cond(interpolation_matrix(self.points, self.center, self.radius)))


def _axis_offsets(region: TrustRegion, h: float) -> tuple[list[np.ndarray], np.ndarray]:
    """Two points per coordinate: +-h when both sides have room, else one-sided h and h/2."""
    up, down = region.room
    n = region.n
    points = []
    signs = np.ones(n)
    for j in range(n):
        e = np.zeros(n)
        e[j] = 1.0
        if up[j] >= h and down[j] >= h:
            offsets = (h, -h)
        else:
            sign = 1.0 if up[j] >= down[j] else -1.0
            reach = min(h, up[j] if sign > 0 else down[j])
            if reach <= MIN_OFFSET * max(1.0, abs(region.center[j])):
                raise DegenerateRegion(f"box leaves no room along coordinate {j + 1}")
            signs[j] = sign
            offsets = (sign * reach, sign * reach / 2.0)
        points.extend(region.center + off * e for off in offsets)
    return points, signs


def _improve(points: np.ndarray, region: TrustRegion, scale: float) -> np.ndarray:
    """
    Replace the point whose Lagrange polynomial grows largest over the region.

    Each round evaluates all Lagrange polynomials on a fixed candidate cloud
    and swaps in the maximiser of the largest |l_i|; the centre never moves.
    """
    rng = np.random.default_rng(0)
    candidates = region.random_points(rng, CANDIDATES)
    points = points.copy()
    for round_ in range(IMPROVEMENT_ROUNDS):
        M = interpolation_matrix(points, region.center, scale)
        cond = np.linalg.cond(M)
        if np.isfinite(cond) and cond <= CONDITION_LIMIT:
            return points
        lagrange = interpolation_matrix(candidates, region.center, scale) @ np.linalg.pinv(M)
        lagrange[:, 0] = 0.0
        k, i = np.unravel_index(np.argmax(np.abs(lagrange)), lagrange.shape)
        _log.debug("poisedness round %d: cond %.3g, replacing point %d", round_ + 1, cond, i)
        points[i] = candidates[k]
    return points


def generate_sample_set(
    center: np.ndarray,
    radius: float,
    box: tuple[np.ndarray, np.ndarray] | None = None,
    active_fraction: float = 0.25,
) -> SampleSet:
    """
    Deterministic poised stencil around `center`.

    The stencil is the centre, two points along every coordinate at half the
    effective radius and one point per coordinate pair along the diagonal
    (e_a + e_b)/sqrt(2); every point is retracted into the region and the set
    is improved until the interpolation matrix is well conditioned.
    """
    region = TrustRegion.around(center, radius, box, active_fraction)
    r = region.effective_radius
    h = r / 2.0

    points, signs = _axis_offsets(region, h)
    for a, b in combinations(range(region.n), 2):
        direction = np.zeros(region.n)
        direction[a], direction[b] = signs[a], signs[b]
        points.append(region.center + h * direction / np.sqrt(2.0))

    stencil = np.vstack([region.center] + [region.retract(pt) for pt in points])
    stencil = _improve(stencil, region, r)
    sample = SampleSet(center=region.center.copy(), radius=r, points=stencil)
    cond = sample.condition()
    if not np.isfinite(cond) or cond > CONDITION_LIMIT:
        raise DegenerateRegion(f"no poised sample set found (condition number {cond:.3g})")
    return sample
