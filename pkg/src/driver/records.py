"""Per-iteration log records and the outcome of a run."""

from __future__ import annotations
import json
from dataclasses import dataclass, field
from typing import Any, Optional

import numpy as np

from src.core.archive import Archive
from src.core.enums import TerminationReason

RECORD_KEYS = ("k", "ref_index", "delta", "inner_shrinks", "t_plus", "rho",
               "accepted", "archive_size", "evals", "gd", "hv")


@dataclass
class IterationRecord:
    """What happened in iteration k."""
    k: int
    ref_index: int
    delta: float
    inner_shrinks: int
    t_plus: float
    rho: float
    accepted: bool
    archive_size: int
    evals: int
    gd: Optional[float] = None
    hv: Optional[float] = None

    def to_dict(self) -> dict[str, Any]:
        return {key: getattr(self, key) for key in RECORD_KEYS}

    def to_json(self) -> str:
        """One JSON line with the keys in fixed order."""
        return json.dumps(self.to_dict())


@dataclass
class RunResult:
    archive: Archive
    records: list[IterationRecord] = field(default_factory=list)
    termination: TerminationReason = TerminationReason.MAX_ITERATIONS
    eval_count: int = 0
    hv_reference: Optional[np.ndarray] = None
    final_omega: Optional[float] = None

    @property
    def iterations(self) -> int:
        return len(self.records)

    def summary(self) -> dict[str, Any]:
        last = self.records[-1] if self.records else None
        return {
            "termination": self.termination.value,
            "iterations": self.iterations,
            "evals": self.eval_count,
            "archive_size": len(self.archive),
            "gd": last.gd if last else None,
            "hv": last.hv if last else None,
            "hv_reference": None if self.hv_reference is None else self.hv_reference.tolist(),
        }
