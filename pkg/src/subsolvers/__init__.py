# Inner optimisation kernels: trust-region subproblem, criticality, scalarization
from src.core.region import TrustRegion
from .trust_region import min_quadratic_on_ball, solve_ball_subproblem
from .criticality import CriticalityResult, omega
from .scalarization import ScalarizationResult, pascoletti_serafini

__all__ = [
    "TrustRegion",
    "min_quadratic_on_ball",
    "solve_ball_subproblem",
    "CriticalityResult",
    "omega",
    "ScalarizationResult",
    "pascoletti_serafini",
]
