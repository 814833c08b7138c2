"""Core enumerations for the multiobjective trust-region solver."""

from enum import Enum, auto


class Dominance(Enum):
    """Outcome of comparing objective vector a against b (minimisation)."""
    DOMINATES = auto()
    EQUAL = auto()
    INCOMPARABLE = auto()

    @property
    def weakly_dominates(self) -> bool:
        """True when a_i <= b_i for every objective."""
        return self in (Dominance.DOMINATES, Dominance.EQUAL)


class InsertOutcome(Enum):
    """Result of offering a candidate to the archive."""
    ACCEPTED = auto()
    REJECTED = auto()


class InfluenceKind(str, Enum):
    """Decreasing functions usable as influence kernels."""
    SHARING = "sharing"
    GAUSSIAN = "gaussian"


class RhoConvention(str, Enum):
    """How per-objective reduction ratios are aggregated."""
    MIN = "min"
    MAX = "max"


class StepOutcome(Enum):
    """Iteration evaluation result."""
    ADVANCE = auto()
    RETRY = auto()


class TerminationReason(str, Enum):
    """Why a solver run stopped."""
    BUDGET_EXHAUSTED = "BudgetExhausted"
    MAX_ITERATIONS = "MaxIterations"
    ALL_RADII_BELOW_TOL = "AllRadiiBelowTol"
