# Core types: vectors, dominance, archive, evaluation cache, events
from .enums import Dominance, InsertOutcome, InfluenceKind, RhoConvention, StepOutcome, TerminationReason
from .errors import (
    MotrError,
    DimensionError,
    DomainError,
    EmptySetError,
    BudgetExhausted,
    DegenerateRange,
    DegenerateRegion,
    SingularInterpolation,
    EvaluatorFailure,
    UnsupportedProblem,
    ReferenceViolation,
    ManifestError,
)
from .vectors import as_decision, as_objective, vector_key, clip_to_box
from .dominance import dominates, nondominated_mask
from .archive import Archive, ArchiveEntry, archive_insert
from .region import TrustRegion
from .cache import BlackBox, EvalCache, evaluate
from .events import EventBus, SolverEvent, EventType

__all__ = [
    "Dominance",
    "InsertOutcome",
    "InfluenceKind",
    "RhoConvention",
    "StepOutcome",
    "TerminationReason",
    "MotrError",
    "DimensionError",
    "DomainError",
    "EmptySetError",
    "BudgetExhausted",
    "DegenerateRange",
    "DegenerateRegion",
    "SingularInterpolation",
    "EvaluatorFailure",
    "UnsupportedProblem",
    "ReferenceViolation",
    "ManifestError",
    "as_decision",
    "as_objective",
    "vector_key",
    "clip_to_box",
    "dominates",
    "nondominated_mask",
    "Archive",
    "ArchiveEntry",
    "archive_insert",
    "TrustRegion",
    "BlackBox",
    "EvalCache",
    "evaluate",
    "EventBus",
    "SolverEvent",
    "EventType",
]
