"""Command-line front end.

    python -m src.main solve --manifest manifests/dtlz2.txt --out runs/dtlz2
    python -m src.main metrics --front front.csv --produced archive.csv [--ref "1.1,1.1,1.1"]
    python -m src.main problems list
    python -m src.main evaluate --problem dtlz2 --x "0,0,0.5"
"""

from __future__ import annotations
import argparse
import csv
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Sequence

import numpy as np

from src.core.archive import read_objective_csv
from src.core.errors import DimensionError, ManifestError, MotrError
from src.core.events import EventBus, EventType
from src.core.log import configure_logging
from src.driver.solver import run
from src.geometry.density import density_surface
from src.manifest import RunManifest, parse_manifest
from src.metrics.fronts import FrontSample
from src.metrics.indicators import default_reference, gd, tracked_hypervolume
from src.problems.registry import get_problem, list_problems

_log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

# options whose values may start with a minus sign
VECTOR_FLAGS = ("--ref", "--x")


def _parse_vector(text: str) -> list[float]:
    try:
        return [float(token) for token in text.replace(" ", "").split(",") if token]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from exc


# =============================================================================
# SOLVE
# =============================================================================

def write_density_surface(path: Path, surface: np.ndarray) -> None:
    dims = surface.shape[1] - 1
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow([f"y_{i + 1}" for i in range(dims)] + ["density"])
        for row in surface:
            writer.writerow([repr(float(v)) for v in row])


def solve_once(manifest: RunManifest, out_dir: Path, seed: int | None = None) -> int:
    """One run writing archive.csv, iterations.jsonl, density_surface.csv and metrics.json."""
    out_dir.mkdir(parents=True, exist_ok=True)
    problem, release = manifest.build_problem()
    config = manifest.solver_config(seed)
    bus = EventBus()
    try:
        front = manifest.front_sample(problem)
        with open(out_dir / "iterations.jsonl", "w", encoding="utf-8") as log_file:
            bus.subscribe(
                EventType.ITERATION_COMPLETED,
                lambda event: log_file.write(event.data["record"].to_json() + "\n"),
            )
            result = run(problem, config, bus, front=None if front is None else front.points)
    finally:
        release()

    result.archive.to_csv(out_dir / "archive.csv")
    surface = density_surface(result.archive, config.decreasing_function(), config.normalize_objectives)
    write_density_surface(out_dir / "density_surface.csv", surface)

    F = result.archive.objectives()
    summary = result.summary()
    summary["gd"] = gd(F, front) if front is not None else None
    if config.track_hv:
        reference = result.hv_reference if result.hv_reference is not None else default_reference(F)
        summary["hv"] = tracked_hypervolume(F, reference)
        summary["hv_reference"] = reference.tolist()
    if front is not None:
        front.to_csv(out_dir / "front_sample.csv")
    with open(out_dir / "metrics.json", "w", encoding="utf-8") as handle:
        json.dump(summary, handle, indent=2)
        handle.write("\n")

    _log.info("wrote results for %s to %s", problem.name, out_dir)
    return EXIT_OK


def _solve_replicate(manifest: RunManifest, out_dir: Path, seed: int) -> int:
    configure_logging()
    return solve_once(manifest, out_dir, seed)


def cmd_solve(args: argparse.Namespace) -> int:
    manifest = parse_manifest(args.manifest)
    out = Path(args.out or manifest.output.dir or "out")
    if args.replicates <= 1:
        return solve_once(manifest, out)

    base_seed = manifest.solver.seed
    with ProcessPoolExecutor(max_workers=args.workers) as pool:
        futures = [
            pool.submit(_solve_replicate, manifest, out / f"rep_{i:03d}", base_seed + i)
            for i in range(args.replicates)
        ]
        codes = [future.result() for future in futures]
    return max(codes)


# =============================================================================
# METRICS, PROBLEMS, EVALUATE
# =============================================================================

def cmd_metrics(args: argparse.Namespace) -> int:
    """GD and HV of produced points; HV drops points beyond --ref exactly as a solve does."""
    produced = read_objective_csv(args.produced)
    front = FrontSample.from_csv(args.front)
    reference = np.asarray(args.ref, dtype=float) if args.ref is not None else default_reference(produced)
    if reference.size != produced.shape[1]:
        raise DimensionError(f"--ref has {reference.size} entries, produced points have {produced.shape[1]}")
    print(json.dumps({"gd": gd(produced, front), "hv": tracked_hypervolume(produced, reference)}))
    return EXIT_OK


def cmd_problems(args: argparse.Namespace) -> int:
    for problem in list_problems():
        box = ", ".join(f"[{lo:g}, {hi:g}]" for lo, hi in zip(problem.lower, problem.upper))
        front = "front" if problem.has_front else "no front"
        print(f"{problem.name:16s} n={problem.n} p={problem.p}  {front:8s}  {box}")
    return EXIT_OK


def cmd_evaluate(args: argparse.Namespace) -> int:
    problem = get_problem(args.problem, literal=args.literal)
    if problem is None:
        print(f"unknown problem '{args.problem}'", file=sys.stderr)
        return EXIT_USAGE
    print(json.dumps(problem.evaluate(np.asarray(args.x)).tolist()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="motr", description="Multiobjective trust-region solver")
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", help="run the solver from a manifest")
    solve.add_argument("--manifest", required=True, help="run manifest path")
    solve.add_argument("--out", help="output directory (default: output.dir or ./out)")
    solve.add_argument("--replicates", type=int, default=1, help="independent runs with seeds seed..seed+R-1")
    solve.add_argument("--workers", type=int, default=None, help="process pool size for replicates")
    solve.set_defaults(handler=cmd_solve)

    metrics = commands.add_parser("metrics", help="GD and hypervolume of a produced front")
    metrics.add_argument("--front", required=True, help="front sample CSV")
    metrics.add_argument("--produced", required=True, help="produced points CSV (archive.csv works)")
    metrics.add_argument("--ref", type=_parse_vector, help="hypervolume reference 'r1,...,rp'")
    metrics.set_defaults(handler=cmd_metrics)

    problems = commands.add_parser("problems", help="built-in problems")
    problems.add_argument("action", choices=["list"])
    problems.set_defaults(handler=cmd_problems)

    evaluate = commands.add_parser("evaluate", help="evaluate a built-in problem at one point")
    evaluate.add_argument("--problem", required=True)
    evaluate.add_argument("--x", required=True, type=_parse_vector, help="'x1,...,xn'")
    evaluate.add_argument("--literal", action="store_true", help="printed Fonseca pair")
    evaluate.set_defaults(handler=cmd_evaluate)
    return parser


def bind_vector_values(argv: Sequence[str]) -> list[str]:
    """Rewrite '--ref -9.5,-3,1' as '--ref=-9.5,-3,1' so argparse keeps negative vectors as values."""
    tokens = list(argv)
    bound: list[str] = []
    i = 0
    while i < len(tokens):
        if tokens[i] in VECTOR_FLAGS and i + 1 < len(tokens):
            bound.append(f"{tokens[i]}={tokens[i + 1]}")
            i += 2
        else:
            bound.append(tokens[i])
            i += 1
    return bound


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(bind_vector_values(sys.argv[1:] if argv is None else argv))
    configure_logging()
    try:
        return args.handler(args)
    except ManifestError as exc:
        print(f"manifest error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MotrError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
