"""FastAPI application exposing the solver, the problems and the metrics."""

from __future__ import annotations
from contextlib import asynccontextmanager
from typing import Dict, List

import numpy as np
from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import ValidationError

from src.api.schemas import (
    # Response models
    ProblemResponse,
    EvaluateResponse,
    MetricsResponse,
    ArchivePointResponse,
    SolveResponse,
    # Request models
    EvaluateRequest,
    MetricsRequest,
    SolveRequest,
)
from src.core.errors import MotrError
from src.core.log import configure_logging
from src.driver.config import SolverConfig
from src.driver.solver import run
from src.metrics.indicators import default_reference, gd, hypervolume
from src.problems.problem import ProblemSpec
from src.problems.registry import get_problem, list_problems

MAX_SOLVE_BUDGET = 5000


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Configure logging on startup."""
    configure_logging()
    yield


app = FastAPI(
    title="Multiobjective Trust-Region API",
    description="Black-box multiobjective optimisation with density-driven trust regions",
    version="1.0.0",
    lifespan=lifespan,
)

# Add CORS middleware - allow all origins for deployment
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


def problem_to_response(problem: ProblemSpec) -> ProblemResponse:
    """Convert a ProblemSpec to ProblemResponse."""
    return ProblemResponse(
        name=problem.name,
        n=problem.n,
        p=problem.p,
        lower=problem.lower.tolist(),
        upper=problem.upper.tolist(),
        has_front=problem.has_front,
        description=problem.description,
    )


def lookup_problem(name: str, literal: bool = False) -> ProblemSpec:
    """Get a problem or raise 404."""
    problem = get_problem(name, literal=literal)
    if problem is None:
        raise HTTPException(status_code=404, detail=f"Problem {name} not found")
    return problem


@app.get("/api/problems", response_model=List[ProblemResponse])
def problems() -> List[ProblemResponse]:
    return [problem_to_response(problem) for problem in list_problems()]


@app.post("/api/evaluate", response_model=EvaluateResponse)
def evaluate(request: EvaluateRequest) -> EvaluateResponse:
    problem = lookup_problem(request.problem, request.literal)
    try:
        f = problem.evaluate(np.asarray(request.x, dtype=float))
    except MotrError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return EvaluateResponse(f=f.tolist())


@app.post("/api/metrics", response_model=MetricsResponse)
def metrics(request: MetricsRequest) -> MetricsResponse:
    try:
        produced = np.asarray(request.produced, dtype=float)
        reference = np.asarray(request.ref, dtype=float) if request.ref is not None else default_reference(produced)
        value = hypervolume(produced, reference)
        distance = gd(produced, np.asarray(request.front, dtype=float)) if request.front else None
    except (MotrError, ValueError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return MetricsResponse(gd=distance, hv=value, hv_reference=reference.tolist())


@app.post("/api/solve", response_model=SolveResponse)
def solve(request: SolveRequest) -> SolveResponse:
    problem = lookup_problem(request.problem, request.literal)
    try:
        config = SolverConfig.model_validate(request.solver)
    except ValidationError as exc:
        raise HTTPException(status_code=422, detail=exc.errors(include_url=False, include_context=False)) from exc
    if config.eval_budget > MAX_SOLVE_BUDGET:
        raise HTTPException(status_code=422, detail=f"eval_budget is capped at {MAX_SOLVE_BUDGET} per request")

    try:
        result = run(problem, config)
    except MotrError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc

    summary = result.summary()
    return SolveResponse(
        problem=problem.name,
        termination=summary["termination"],
        evals=summary["evals"],
        iterations=summary["iterations"],
        archive=[
            ArchivePointResponse(x=entry.x.tolist(), f=entry.f.tolist(), delta=float(entry.radius))
            for entry in result.archive
        ],
        gd=summary["gd"],
        hv=summary["hv"],
        hv_reference=summary["hv_reference"],
    )


@app.get("/api/health")
def health_check() -> Dict[str, str]:
    """Health check endpoint."""
    return {"status": "healthy"}
