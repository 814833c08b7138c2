# Benchmark problems, registry and the external evaluator protocol
from .problem import ProblemSpec
from .benchmarks import (
    fonseca_variant,
    dtlz2,
    comet,
    dtlz7,
    fonseca_front,
    dtlz2_front,
    comet_front,
    dtlz7_front,
)
from .registry import (
    COMET,
    DTLZ2,
    DTLZ7,
    FONSECA,
    FONSECA_LITERAL,
    PROBLEM_REGISTRY,
    get_problem,
    list_problems,
)
from .external import ExternalEvaluator, external_evaluator, external_problem

__all__ = [
    "ProblemSpec",
    "fonseca_variant",
    "dtlz2",
    "comet",
    "dtlz7",
    "fonseca_front",
    "dtlz2_front",
    "comet_front",
    "dtlz7_front",
    "FONSECA",
    "FONSECA_LITERAL",
    "DTLZ2",
    "COMET",
    "DTLZ7",
    "PROBLEM_REGISTRY",
    "get_problem",
    "list_problems",
    "ExternalEvaluator",
    "external_evaluator",
    "external_problem",
]
