"""Problem descriptions consumed by the solver and the front samplers."""

from __future__ import annotations
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from src.core.errors import DimensionError, DomainError, UnsupportedProblem
from src.core.vectors import as_decision, as_objective

Evaluator = Callable[[np.ndarray], np.ndarray]
FrontParameterization = Callable[[], np.ndarray]


@dataclass(eq=False)
class ProblemSpec:
    """
    A box-constrained black-box problem.

    `front` returns a discretised Pareto front as an (N, p) matrix when the
    front is known analytically.
    """
    name: str
    n: int
    p: int
    lower: np.ndarray
    upper: np.ndarray
    evaluator: Evaluator
    front: FrontParameterization | None = field(default=None, repr=False)
    description: str = ""

    def __post_init__(self) -> None:
        self.lower = np.asarray(self.lower, dtype=float)
        self.upper = np.asarray(self.upper, dtype=float)
        if self.n < 1 or self.p < 2:
            raise DimensionError(f"problem needs n >= 1 and p >= 2, got n={self.n}, p={self.p}")
        if self.lower.shape != (self.n,) or self.upper.shape != (self.n,):
            raise DimensionError("box bounds must have length n")
        if not np.all(self.lower < self.upper):
            raise DomainError(f"{self.name}: lower bounds must lie strictly below upper bounds")

    @property
    def box(self) -> tuple[np.ndarray, np.ndarray]:
        return self.lower, self.upper

    @property
    def has_front(self) -> bool:
        return self.front is not None

    @property
    def box_center(self) -> np.ndarray:
        return 0.5 * (self.lower + self.upper)

    def in_box(self, x: np.ndarray) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all(x >= self.lower) and np.all(x <= self.upper))

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        """F(x) with dimension and finiteness checks."""
        x = as_decision(x, self.n)
        return as_objective(self.evaluator(x), self.p)

    def front_points(self) -> np.ndarray:
        if self.front is None:
            raise UnsupportedProblem(f"problem '{self.name}' has no known Pareto front")
        return self.front()
