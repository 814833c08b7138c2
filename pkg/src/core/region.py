"""Trust regions: a Euclidean ball around a centre, optionally intersected with a box."""

from __future__ import annotations
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import DimensionError, DomainError
from .vectors import clip_to_box


@dataclass(frozen=True, eq=False)
class TrustRegion:
    """
    B(center, radius), optionally restricted to the box [lower, upper].

    Bounds at least `active_fraction * radius` away from the centre shrink
    the ball until it fits; bounds closer than that are "active" and are
    enforced by clipping, so a centre on the boundary keeps a usable half-ball.
    """
    center: np.ndarray
    radius: float
    lower: np.ndarray | None = None
    upper: np.ndarray | None = None
    active_fraction: float = 0.25

    def __post_init__(self) -> None:
        if not self.radius > 0:
            raise DomainError(f"trust-region radius must be positive, got {self.radius}")
        if (self.lower is None) != (self.upper is None):
            raise DimensionError("box needs both lower and upper bounds")
        if self.lower is not None:
            if self.lower.shape != self.center.shape or self.upper.shape != self.center.shape:
                raise DimensionError("box bounds must match the centre's dimension")
            if np.any(self.center < self.lower) or np.any(self.center > self.upper):
                raise DomainError(f"centre {self.center.tolist()} lies outside the box")

    @classmethod
    def around(
        cls,
        center: np.ndarray,
        radius: float,
        box: tuple[np.ndarray, np.ndarray] | None = None,
        active_fraction: float = 0.25,
    ) -> TrustRegion:
        lower, upper = (None, None) if box is None else (np.asarray(box[0], float), np.asarray(box[1], float))
        return cls(np.asarray(center, dtype=float), float(radius), lower, upper, active_fraction)

    @property
    def n(self) -> int:
        return self.center.size

    @property
    def has_box(self) -> bool:
        return self.lower is not None

    @cached_property
    def room(self) -> tuple[np.ndarray, np.ndarray]:
        """Distance to the upper and lower bound per coordinate (inf without a box)."""
        if not self.has_box:
            inf = np.full(self.n, np.inf)
            return inf, inf
        return self.upper - self.center, self.center - self.lower

    @cached_property
    def effective_radius(self) -> float:
        """Ball radius after shrinking to the non-active bounds."""
        up, down = self.room
        rooms = np.concatenate([up, down])
        far = rooms[rooms >= self.active_fraction * self.radius]
        return float(min(self.radius, far.min())) if far.size else self.radius

    def retract(self, x: np.ndarray) -> np.ndarray:
        """Feasible point: scale into the ball, then clip into the box."""
        d = np.asarray(x, dtype=float) - self.center
        norm = float(np.linalg.norm(d))
        if norm > self.effective_radius:
            d = d * (self.effective_radius / norm)
        return clip_to_box(self.center + d, self.lower, self.upper)

    def contains(self, x: np.ndarray, tol: float = 1e-10) -> bool:
        x = np.asarray(x, dtype=float)
        if np.linalg.norm(x - self.center) > self.effective_radius * (1 + tol) + tol:
            return False
        if self.has_box and (np.any(x < self.lower - tol) or np.any(x > self.upper + tol)):
            return False
        return True

    def bounds_for_slsqp(self) -> list[tuple[float | None, float | None]]:
        """Box as scipy bound pairs."""
        if not self.has_box:
            return [(None, None)] * self.n
        return [(float(lo), float(hi)) for lo, hi in zip(self.lower, self.upper)]

    def random_points(self, rng: np.random.Generator, count: int) -> np.ndarray:
        """Uniform draws in the ball, retracted into the box."""
        directions = rng.standard_normal((count, self.n))
        directions /= np.linalg.norm(directions, axis=1, keepdims=True)
        radii = self.effective_radius * rng.random(count) ** (1.0 / self.n)
        return np.vstack([self.retract(self.center + r * d) for r, d in zip(radii, directions)])
