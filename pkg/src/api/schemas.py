"""Pydantic models for API requests and responses."""

from __future__ import annotations
from typing import Optional, List, Dict, Any
from pydantic import BaseModel, ConfigDict, Field


# =============================================================================
# RESPONSE MODELS
# =============================================================================

class ProblemResponse(BaseModel):
    """A registered benchmark problem."""
    name: str
    n: int
    p: int
    lower: List[float]
    upper: List[float]
    has_front: bool
    description: str = ""


class EvaluateResponse(BaseModel):
    f: List[float]


class MetricsResponse(BaseModel):
    """GD is null when no front was supplied."""
    gd: Optional[float] = None
    hv: float
    hv_reference: List[float]


class ArchivePointResponse(BaseModel):
    x: List[float]
    f: List[float]
    delta: float


class SolveResponse(BaseModel):
    """Final archive and run summary."""
    problem: str
    termination: str
    evals: int
    iterations: int
    archive: List[ArchivePointResponse]
    gd: Optional[float] = None
    hv: Optional[float] = None
    hv_reference: Optional[List[float]] = None


# =============================================================================
# REQUEST MODELS
# =============================================================================

class EvaluateRequest(BaseModel):
    """Evaluate a registered problem at x."""
    problem: str
    x: List[float]
    literal: bool = False


class MetricsRequest(BaseModel):
    produced: List[List[float]]
    front: Optional[List[List[float]]] = None
    ref: Optional[List[float]] = None


class SolveRequest(BaseModel):
    """Solve a registered problem; `solver` holds SolverConfig overrides."""
    model_config = ConfigDict(extra="forbid")

    problem: str
    literal: bool = False
    solver: Dict[str, Any] = Field(default_factory=dict)
