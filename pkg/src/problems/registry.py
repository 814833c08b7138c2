"""Built-in problems by name."""

from __future__ import annotations
from functools import partial

from .benchmarks import (
    COMET_BOX,
    DTLZ2_BOX,
    DTLZ7_BOX,
    FONSECA_BOX,
    comet,
    comet_front,
    dtlz2,
    dtlz2_front,
    dtlz7,
    dtlz7_front,
    fonseca_front,
    fonseca_variant,
)
from .problem import ProblemSpec


def _fonseca(literal: bool = False) -> ProblemSpec:
    return ProblemSpec(
        name="fonseca-literal" if literal else "fonseca",
        n=4,
        p=2,
        lower=FONSECA_BOX[0],
        upper=FONSECA_BOX[1],
        evaluator=partial(fonseca_variant, literal=literal),
        front=None if literal else fonseca_front,
        description="biobjective exponential pair on [-2, 2]^4",
    )


FONSECA = _fonseca()
FONSECA_LITERAL = _fonseca(literal=True)

DTLZ2 = ProblemSpec(
    name="dtlz2", n=3, p=3, lower=DTLZ2_BOX[0], upper=DTLZ2_BOX[1],
    evaluator=dtlz2, front=dtlz2_front,
    description="spherical front on the positive octant",
)

COMET = ProblemSpec(
    name="comet", n=3, p=3, lower=COMET_BOX[0], upper=COMET_BOX[1],
    evaluator=comet, front=comet_front,
    description="front with a narrow and a wide part",
)

DTLZ7 = ProblemSpec(
    name="dtlz7", n=3, p=3, lower=DTLZ7_BOX[0], upper=DTLZ7_BOX[1],
    evaluator=dtlz7, front=dtlz7_front,
    description="front made of four disconnected patches",
)

PROBLEM_REGISTRY: dict[str, ProblemSpec] = {
    problem.name: problem for problem in (FONSECA, FONSECA_LITERAL, DTLZ2, COMET, DTLZ7)
}


def get_problem(name: str, literal: bool = False) -> ProblemSpec | None:
    """Look up a problem by name; `literal` selects the printed Fonseca pair."""
    key = name.strip().lower()
    if literal and key == "fonseca":
        key = "fonseca-literal"
    return PROBLEM_REGISTRY.get(key)


def list_problems() -> list[ProblemSpec]:
    return list(PROBLEM_REGISTRY.values())
