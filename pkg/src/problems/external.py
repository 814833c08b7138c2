"""Black boxes living in a separate process.

Wire protocol: one line "x1 x2 ... xn" to the child's stdin, one line
"f1 f2 ... fp" back on its stdout. The child stays alive between calls.
"""

from __future__ import annotations
import logging
import shlex
import subprocess
from typing import Sequence

import numpy as np

from src.core.errors import EvaluatorFailure
from .problem import ProblemSpec

_log = logging.getLogger(__name__)


class ExternalEvaluator:
    """Persistent child process answering one objective line per decision line."""

    def __init__(self, command: str | Sequence[str], p: int | None = None) -> None:
        self.args = shlex.split(command) if isinstance(command, str) else list(command)
        if not self.args:
            raise EvaluatorFailure("empty evaluator command")
        self.p = p
        self._child: subprocess.Popen[str] | None = None

    def _spawn(self) -> subprocess.Popen[str]:
        try:
            child = subprocess.Popen(
                self.args,
                stdin=subprocess.PIPE,
                stdout=subprocess.PIPE,
                text=True,
                bufsize=1,
            )
        except OSError as exc:
            raise EvaluatorFailure(f"cannot start evaluator {self.args[0]!r}: {exc}") from exc
        _log.info("started external evaluator pid %d: %s", child.pid, " ".join(self.args))
        return child

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return self.evaluate(x)

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        if self._child is None:
            self._child = self._spawn()
        child = self._child
        request = " ".join(repr(float(v)) for v in np.asarray(x, dtype=float))
        try:
            child.stdin.write(request + "\n")
            child.stdin.flush()
            reply = child.stdout.readline()
        except (BrokenPipeError, OSError) as exc:
            raise EvaluatorFailure(f"evaluator died while evaluating x=[{request}]: {exc}") from exc

        if not reply:
            code = child.poll()
            raise EvaluatorFailure(f"evaluator exited (code {code}) before answering x=[{request}]")
        try:
            values = np.array([float(token) for token in reply.split()])
        except ValueError as exc:
            raise EvaluatorFailure(f"malformed evaluator output {reply.strip()!r} for x=[{request}]") from exc
        if self.p is not None and values.size != self.p:
            raise EvaluatorFailure(f"evaluator returned {values.size} values, expected {self.p}")
        if not np.all(np.isfinite(values)):
            raise EvaluatorFailure(f"evaluator returned non-finite values {reply.strip()!r}")
        return values

    def close(self) -> None:
        if self._child is None:
            return
        child, self._child = self._child, None
        try:
            child.stdin.close()
            child.wait(timeout=5)
        except (OSError, subprocess.TimeoutExpired):
            child.kill()
            child.wait()

    def __enter__(self) -> ExternalEvaluator:
        return self

    def __exit__(self, *exc_info) -> None:
        self.close()


def external_evaluator(command: str | Sequence[str], x: np.ndarray) -> np.ndarray:
    """One-shot evaluation through a fresh child."""
    with ExternalEvaluator(command) as evaluator:
        return evaluator.evaluate(x)


def external_problem(
    command: str | Sequence[str],
    n: int,
    p: int,
    lower: Sequence[float],
    upper: Sequence[float],
) -> tuple[ProblemSpec, ExternalEvaluator]:
    """Wrap a child process as a problem; the caller closes the evaluator."""
    evaluator = ExternalEvaluator(command, p)
    name = evaluator.args[-1] if evaluator.args else "external"
    problem = ProblemSpec(
        name=f"external:{name}", n=n, p=p,
        lower=np.asarray(lower, dtype=float), upper=np.asarray(upper, dtype=float),
        evaluator=evaluator,
    )
    return problem, evaluator
