# Solver configuration, iteration records and the main loop
from .config import SolverConfig
from .records import IterationRecord, RunResult, RECORD_KEYS
from .solver import (
    TrustRegionSolver,
    run,
    step5_reduction_ratio,
    step6_new_radius,
    step8_evaluate_iteration,
)

__all__ = [
    "SolverConfig",
    "IterationRecord",
    "RunResult",
    "RECORD_KEYS",
    "TrustRegionSolver",
    "run",
    "step5_reduction_ratio",
    "step6_new_radius",
    "step8_evaluate_iteration",
]
