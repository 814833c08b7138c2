"""Run manifests: flat `section.key = value` files describing one solver run.

    # comments and blank lines are ignored
    problem.name = dtlz2
    solver.x0 = 0.5, 0.5, 0.5
    solver.expand_factor = 5
    metrics.hv = true
"""

from __future__ import annotations
from pathlib import Path
from typing import Callable, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from src.core.errors import ManifestError
from src.driver.config import SolverConfig
from src.metrics.fronts import FrontSample, front_sampler
from src.problems.external import external_problem
from src.problems.problem import ProblemSpec
from src.problems.registry import get_problem
from src.surrogate.models import n_interpolation_points

SECTIONS = ("problem", "solver", "metrics", "output")
LIST_KEYS = {"problem.lower", "problem.upper", "solver.x0", "solver.hv_reference", "metrics.hv_ref"}


class ProblemSection(BaseModel):
    """Either a registered problem `name` or an external `command` with its dimensions and box."""
    model_config = ConfigDict(extra="forbid")

    name: Optional[str] = None
    command: Optional[str] = None
    n: Optional[int] = Field(None, ge=1)
    p: Optional[int] = Field(None, ge=2)
    lower: Optional[list[float]] = None
    upper: Optional[list[float]] = None
    literal: bool = False

    @model_validator(mode="after")
    def _one_source(self) -> ProblemSection:
        if (self.name is None) == (self.command is None):
            raise ValueError("give exactly one of problem.name and problem.command")
        if self.command is not None:
            missing = [key for key in ("n", "p", "lower", "upper") if getattr(self, key) is None]
            if missing:
                raise ValueError(f"external problems need problem.{', problem.'.join(missing)}")
        return self


class MetricsSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    gd: bool = True
    hv: bool = True
    front: Optional[str] = None
    hv_ref: Optional[list[float]] = None


class OutputSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    dir: Optional[str] = None


class RunManifest(BaseModel):
    """Everything needed to reproduce one run."""
    model_config = ConfigDict(extra="forbid")

    problem: ProblemSection
    solver: SolverConfig = Field(default_factory=SolverConfig)
    metrics: MetricsSection = Field(default_factory=MetricsSection)
    output: OutputSection = Field(default_factory=OutputSection)

    def build_problem(self) -> tuple[ProblemSpec, Callable[[], None]]:
        """The problem and a callable releasing its resources."""
        section = self.problem
        if section.command is not None:
            problem, evaluator = external_problem(
                section.command, section.n, section.p, section.lower, section.upper
            )
            return problem, evaluator.close
        problem = get_problem(section.name, literal=section.literal)
        if problem is None:
            raise ManifestError("problem.name", f"unknown problem '{section.name}'")
        return problem, lambda: None

    def solver_config(self, seed: int | None = None) -> SolverConfig:
        """Solver parameters with the metric toggles folded in."""
        updates: dict = {"track_gd": self.metrics.gd, "track_hv": self.metrics.hv}
        if self.metrics.hv_ref is not None:
            updates["hv_reference"] = self.metrics.hv_ref
        if seed is not None:
            updates["seed"] = seed
        return self.solver.model_copy(update=updates)

    def front_sample(self, problem: ProblemSpec) -> FrontSample | None:
        """Front used for GD: the manifest's file, else the problem's own sample."""
        if not self.metrics.gd:
            return None
        if self.metrics.front is not None:
            return FrontSample.from_csv(self.metrics.front)
        return front_sampler(problem) if problem.has_front else None


def _parse_value(key: str, raw: str) -> object:
    if key in LIST_KEYS:
        try:
            return [float(token) for token in raw.split(",") if token.strip()]
        except ValueError as exc:
            raise ManifestError(key, f"expected comma-separated numbers, got {raw!r}") from exc
    return raw


def parse_manifest_text(text: str, base_dir: str | Path | None = None) -> RunManifest:
    """
    Parse and validate manifest text.

    Every problem is reported as a ManifestError naming the key. A relative
    metrics.front path is resolved against `base_dir` when given.
    """
    sections: dict[str, dict[str, object]] = {name: {} for name in SECTIONS}
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ManifestError(f"line {number}", f"expected 'key = value', got {line!r}")
        key, raw = (part.strip() for part in line.split("=", 1))
        section, _, name = key.partition(".")
        if section not in sections or not name or "." in name:
            raise ManifestError(key, "unknown key")
        if name in sections[section]:
            raise ManifestError(key, "given more than once")
        sections[section][name] = _parse_value(key, raw)

    data = {name: values for name, values in sections.items() if values}
    data.setdefault("problem", {})
    try:
        manifest = RunManifest.model_validate(data)
    except ValidationError as exc:
        error = exc.errors()[0]
        location = ".".join(str(part) for part in error["loc"]) or "manifest"
        raise ManifestError(location, error["msg"]) from exc

    front = manifest.metrics.front
    if front is not None and base_dir is not None and not Path(front).is_absolute():
        manifest.metrics.front = str(Path(base_dir) / front)
    _check_consistency(manifest)
    return manifest


def _check_consistency(manifest: RunManifest) -> None:
    section = manifest.problem
    if section.name is not None:
        problem = get_problem(section.name, literal=section.literal)
        if problem is None:
            raise ManifestError("problem.name", f"unknown problem '{section.name}'")
        n, lower, upper = problem.n, problem.lower, problem.upper
    else:
        n, lower, upper = section.n, np.asarray(section.lower), np.asarray(section.upper)
        if len(section.lower) != n or len(section.upper) != n:
            raise ManifestError("problem.lower", f"bounds must have {n} entries")
        if not np.all(lower < upper):
            raise ManifestError("problem.upper", "upper bounds must exceed lower bounds")

    x0 = manifest.solver.x0
    if x0 is not None:
        if len(x0) != n:
            raise ManifestError("solver.x0", f"expected {n} coordinates, got {len(x0)}")
        if np.any(np.asarray(x0) < lower) or np.any(np.asarray(x0) > upper):
            raise ManifestError("solver.x0", "initial point lies outside the box")

    q = n_interpolation_points(n)
    if manifest.solver.eval_budget < q:
        raise ManifestError("solver.eval_budget", f"must be at least {q} to fit one model")

    if manifest.metrics.front is not None and not Path(manifest.metrics.front).is_file():
        raise ManifestError("metrics.front", f"no such file: {manifest.metrics.front}")


def parse_manifest(path: str | Path) -> RunManifest:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ManifestError("manifest", f"cannot read {path}: {exc}") from exc
    return parse_manifest_text(text, path.parent)
