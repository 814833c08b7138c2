"""Exception hierarchy shared by every solver component."""

from __future__ import annotations
from typing import Sequence


class MotrError(Exception):
    """Base class for all solver errors."""


class DimensionError(MotrError, ValueError):
    """Vector lengths disagree with each other or with the problem."""


class DomainError(MotrError, ValueError):
    """An argument lies outside the domain of the function called."""


class EmptySetError(MotrError, ValueError):
    """An operation needs at least one point and got none."""


class BudgetExhausted(MotrError):
    """The evaluation budget does not allow another true evaluation."""

    def __init__(self, budget: int) -> None:
        super().__init__(f"evaluation budget of {budget} exhausted")
        self.budget = budget


class DegenerateRange(MotrError):
    """Utopia and anti-utopia points coincide."""


class DegenerateRegion(MotrError):
    """No poised sample set fits inside the trust region."""


class SingularInterpolation(MotrError):
    """The quadratic interpolation system is singular or ill-conditioned."""


class EvaluatorFailure(MotrError):
    """An external black-box evaluator misbehaved."""


class UnsupportedProblem(MotrError):
    """The problem lacks a capability the caller asked for."""


class ReferenceViolation(MotrError, ValueError):
    """A point does not weakly dominate the hypervolume reference point."""

    def __init__(self, point: Sequence[float], reference: Sequence[float]) -> None:
        super().__init__(
            f"point {list(map(float, point))} does not dominate reference "
            f"{list(map(float, reference))}"
        )
        self.point = tuple(float(v) for v in point)
        self.reference = tuple(float(v) for v in reference)


class ManifestError(MotrError, ValueError):
    """A run manifest is malformed; `field` names the offending key."""

    def __init__(self, field: str, message: str) -> None:
        super().__init__(f"{field}: {message}")
        self.field = field
