"""Event bus for solver events - lets writers and monitors react to a run."""

from __future__ import annotations
from dataclasses import dataclass, field
from enum import Enum, auto
from itertools import count
from typing import TYPE_CHECKING, Any, Callable

if TYPE_CHECKING:
    import numpy as np
    from src.driver.records import IterationRecord, RunResult


class EventType(Enum):
    """Types of events emitted during a solver run."""
    RUN_STARTED = auto()
    POINT_EVALUATED = auto()
    REFERENCE_SELECTED = auto()
    ITERATION_COMPLETED = auto()
    RUN_FINISHED = auto()


@dataclass
class SolverEvent:
    """A solver event with associated data."""
    event_type: EventType
    data: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def run_started(cls, problem_name: str, seed: int) -> SolverEvent:
        return cls(EventType.RUN_STARTED, {"problem": problem_name, "seed": seed})

    @classmethod
    def point_evaluated(cls, x: np.ndarray, f: np.ndarray, eval_count: int) -> SolverEvent:
        return cls(EventType.POINT_EVALUATED, {"x": x, "f": f, "eval_count": eval_count})

    @classmethod
    def reference_selected(cls, index: int, radius: float) -> SolverEvent:
        return cls(EventType.REFERENCE_SELECTED, {"index": index, "radius": radius})

    @classmethod
    def iteration_completed(cls, record: IterationRecord) -> SolverEvent:
        return cls(EventType.ITERATION_COMPLETED, {"record": record})

    @classmethod
    def run_finished(cls, result: RunResult) -> SolverEvent:
        return cls(EventType.RUN_FINISHED, {"result": result})


Handler = Callable[[SolverEvent], None]


@dataclass(frozen=True)
class Subscription:
    handler_id: int
    event_type: EventType
    priority: int
    handler: Handler = field(compare=False)


class EventBus:
    """
    Per-run dispatcher of solver events.

    Output writers, progress monitors and tests subscribe to it. Handlers of
    one event type run by descending priority, then in subscription order.
    Runs never share a bus.
    """

    def __init__(self) -> None:
        self._subscriptions: dict[int, Subscription] = {}
        self._ids = count()

    def subscribe(self, event_type: EventType, handler: Handler, priority: int = 0) -> int:
        """Register `handler` for `event_type`; returns an id for `unsubscribe`."""
        handler_id = next(self._ids)
        self._subscriptions[handler_id] = Subscription(handler_id, event_type, priority, handler)
        return handler_id

    def unsubscribe(self, handler_id: int) -> bool:
        """False when the id is unknown or already removed."""
        return self._subscriptions.pop(handler_id, None) is not None

    def handlers(self, event_type: EventType) -> list[Handler]:
        matching = [sub for sub in self._subscriptions.values() if sub.event_type is event_type]
        matching.sort(key=lambda sub: (-sub.priority, sub.handler_id))
        return [sub.handler for sub in matching]

    def emit(self, event: SolverEvent) -> None:
        for handler in self.handlers(event.event_type):
            handler(event)
