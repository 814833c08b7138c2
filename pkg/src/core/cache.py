"""Black-box evaluation cache with budget accounting."""

from __future__ import annotations
import logging
from dataclasses import dataclass, field
from typing import Protocol

import numpy as np

from .errors import BudgetExhausted, DomainError
from .events import EventBus, SolverEvent
from .vectors import as_objective, vector_key

_log = logging.getLogger(__name__)


class BlackBox(Protocol):
    """Anything that maps a decision vector to an objective vector."""
    name: str
    p: int

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        ...


@dataclass
class EvalCache:
    """
    Exact-match memo of true evaluations.

    `eval_count` counts distinct true evaluations and never exceeds `budget`;
    repeated requests for a bitwise-equal x are served from the cache for free.
    """
    budget: int
    bus: EventBus | None = None
    eval_count: int = 0
    _values: dict[bytes, np.ndarray] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        if self.budget < 1:
            raise DomainError(f"evaluation budget must be positive, got {self.budget}")

    def __len__(self) -> int:
        return len(self._values)

    @property
    def remaining(self) -> int:
        return self.budget - self.eval_count

    def lookup(self, x: np.ndarray) -> np.ndarray | None:
        value = self._values.get(vector_key(x))
        return None if value is None else value.copy()

    def evaluate(self, problem: BlackBox, x: np.ndarray) -> np.ndarray:
        """Return F(x), evaluating the black box only for unseen x."""
        key = vector_key(x)
        cached = self._values.get(key)
        if cached is not None:
            return cached.copy()
        if self.eval_count >= self.budget:
            raise BudgetExhausted(self.budget)

        f = as_objective(problem.evaluate(np.array(x, dtype=float)), problem.p)
        self._values[key] = f
        self.eval_count += 1
        _log.debug("evaluation %d: x=%s f=%s", self.eval_count, np.array2string(np.asarray(x)), np.array2string(f))
        if self.bus is not None:
            self.bus.emit(SolverEvent.point_evaluated(np.array(x, dtype=float), f.copy(), self.eval_count))
        return f.copy()

    def values(self) -> np.ndarray:
        """All cached objective vectors, in evaluation order."""
        if not self._values:
            return np.empty((0, 0))
        return np.vstack(list(self._values.values()))


def evaluate(cache: EvalCache, problem: BlackBox, x: np.ndarray) -> np.ndarray:
    """Functional spelling of `EvalCache.evaluate`."""
    return cache.evaluate(problem, x)
