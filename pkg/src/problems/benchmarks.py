"""Benchmark objectives and the discretised Pareto fronts of each."""

from __future__ import annotations

import numpy as np

from src.core.dominance import nondominated_mask
from src.core.errors import DimensionError, DomainError


def _check_box(name: str, x: np.ndarray, lower: np.ndarray, upper: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != lower.shape:
        raise DimensionError(f"{name} takes {lower.size} variables, got {x.size}")
    if np.any(x < lower) or np.any(x > upper):
        raise DomainError(f"{name}: x={x.tolist()} lies outside the box")
    return x


# =============================================================================
# OBJECTIVES
# =============================================================================

FONSECA_BOX = (np.full(4, -2.0), np.full(4, 2.0))
DTLZ2_BOX = (np.zeros(3), np.ones(3))
COMET_BOX = (np.array([1.0, -2.0, 0.0]), np.array([3.5, 2.0, 1.0]))
DTLZ7_BOX = (np.zeros(3), np.ones(3))


def fonseca_variant(x: np.ndarray, literal: bool = False) -> np.ndarray:
    """
    Biobjective exponential pair on R^4.

    f1 = 1 - exp(-sum (x_i - 1/2)^2), f2 = 1 - exp(-sum (x_i + 1/2)^2).
    With `literal` both objectives use the (x_i - 1/2) form, which maps every
    point onto the diagonal.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (4,):
        raise DimensionError(f"fonseca takes 4 variables, got {x.size}")
    f1 = 1.0 - np.exp(-np.sum((x - 0.5) ** 2))
    f2 = f1 if literal else 1.0 - np.exp(-np.sum((x + 0.5) ** 2))
    return np.array([f1, f2])


def dtlz2(x: np.ndarray) -> np.ndarray:
    """Three-objective DTLZ2 with g(x) = (x3 - 0.5)^2."""
    x = _check_box("dtlz2", x, *DTLZ2_BOX)
    g = (x[2] - 0.5) ** 2
    a, b = x[0] * np.pi / 2.0, x[1] * np.pi / 2.0
    return (1.0 + g) * np.array([np.cos(a) * np.cos(b), np.cos(a) * np.sin(b), np.sin(a)])


def comet(x: np.ndarray) -> np.ndarray:
    x = _check_box("comet", x, *COMET_BOX)
    x1, x2, x3 = x
    scale = 1.0 + x3
    core = x1 ** 3 * x2 ** 2 - 10.0 * x1
    return np.array([scale * (core - 4.0 * x2), scale * (core + 4.0 * x2), 3.0 * scale * x1 ** 2])


def dtlz7(x: np.ndarray) -> np.ndarray:
    """
    Disconnected-front problem with g(x) = 1 + 4.5 x3.

    f1 = x1, f2 = x2, f3 = (1 + g)(3 - sum_i x_i / (1 + g) (1 + sin(3 pi x_i))).
    """
    x = _check_box("dtlz7", x, *DTLZ7_BOX)
    g = 1.0 + 4.5 * x[2]
    head = x[:2]
    tail = np.sum(head / (1.0 + g) * (1.0 + np.sin(3.0 * np.pi * head)))
    return np.array([x[0], x[1], (1.0 + g) * (3.0 - tail)])


# =============================================================================
# PARETO FRONTS
# =============================================================================

def fonseca_front(count: int = 1000) -> np.ndarray:
    """Images of x_1 = ... = x_4 = a for a in [-1/2, 1/2]."""
    a = np.linspace(-0.5, 0.5, count)
    f1 = 1.0 - np.exp(-4.0 * (a - 0.5) ** 2)
    f2 = 1.0 - np.exp(-4.0 * (a + 0.5) ** 2)
    return np.column_stack([f1, f2])


def dtlz2_front(rings: int = 50) -> np.ndarray:
    """
    Unit-sphere octant sampled ring by ring.

    Ring k sits at elevation k/(rings-1) * pi/2 and holds about
    rings * cos(elevation) points spread evenly in azimuth.
    """
    points = []
    for k in range(rings):
        elevation = k / (rings - 1) * np.pi / 2.0
        count = max(1, int(round(rings * np.cos(elevation))))
        azimuth = np.linspace(0.0, np.pi / 2.0, count) if count > 1 else np.zeros(1)
        ring = np.column_stack([
            np.cos(elevation) * np.cos(azimuth),
            np.cos(elevation) * np.sin(azimuth),
            np.full(count, np.sin(elevation)),
        ])
        points.append(ring)
    return np.vstack(points)


def _grid_front(evaluator, axes: list[np.ndarray]) -> np.ndarray:
    """Nondominated images of the full tensor grid spanned by `axes`."""
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, len(axes))
    F = np.vstack([evaluator(x) for x in grid])
    return F[nondominated_mask(F)]


def comet_front(steps: int = 81, levels: int = 11) -> np.ndarray:
    """
    Nondominated images of a steps x steps x levels grid over the whole box.

    The (1 + x3) factor pushes negative f1 and f2 further down while f3 grows,
    so efficient points exist for every x3 and the third variable is gridded too.
    """
    lower, upper = COMET_BOX
    axes = [
        np.linspace(lower[0], upper[0], steps),
        np.linspace(lower[1], upper[1], steps),
        np.linspace(lower[2], upper[2], levels),
    ]
    return _grid_front(comet, axes)


def dtlz7_front(steps: int = 201) -> np.ndarray:
    """The four disconnected patches of the x3 = 0 surface; f3 grows with x3."""
    lower, upper = DTLZ7_BOX
    axes = [np.linspace(lower[0], upper[0], steps), np.linspace(lower[1], upper[1], steps), lower[2:]]
    return _grid_front(dtlz7, axes)
