"""Discretised true Pareto fronts used as GD references."""

from __future__ import annotations
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from src.core.archive import read_objective_csv, write_objective_csv
from src.core.errors import EmptySetError, UnsupportedProblem
from src.problems.problem import ProblemSpec


@dataclass(frozen=True, eq=False)
class FrontSample:
    """Nonempty set of mutually nondominated objective vectors."""
    points: np.ndarray

    def __post_init__(self) -> None:
        if self.points.ndim != 2 or self.points.shape[0] == 0:
            raise EmptySetError("front sample must contain at least one objective vector")

    def __len__(self) -> int:
        return self.points.shape[0]

    @classmethod
    def from_csv(cls, path: str | Path) -> FrontSample:
        return cls(read_objective_csv(path))

    def to_csv(self, path: str | Path) -> None:
        write_objective_csv(path, self.points)


def front_sampler(problem: ProblemSpec) -> FrontSample:
    """Deterministic sample of the problem's known front."""
    if not problem.has_front:
        raise UnsupportedProblem(f"problem '{problem.name}' has no known Pareto front")
    return FrontSample(np.asarray(problem.front_points(), dtype=float))
