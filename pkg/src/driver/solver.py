"""Density-driven multiobjective trust-region loop."""

from __future__ import annotations
import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from src.core.archive import Archive, ArchiveEntry
from src.core.cache import EvalCache
from src.core.enums import InsertOutcome, RhoConvention, StepOutcome, TerminationReason
from src.core.errors import (
    BudgetExhausted,
    DegenerateRegion,
    DimensionError,
    DomainError,
    SingularInterpolation,
)
from src.core.events import EventBus, SolverEvent
from src.core.region import TrustRegion
from src.core.vectors import vector_key
from src.geometry.density import select_reference
from src.metrics.indicators import default_reference, gd, tracked_hypervolume
from src.problems.problem import ProblemSpec
from src.subsolvers.criticality import omega
from src.subsolvers.scalarization import ScalarizationResult, pascoletti_serafini
from src.subsolvers.trust_region import min_quadratic_on_ball
from src.surrogate.models import ModelVector, fit_models
from src.surrogate.sampling import generate_sample_set

from .config import SolverConfig
from .records import IterationRecord, RunResult

_log = logging.getLogger(__name__)

ZERO_T = 1e-12
ZERO_DECREASE = 1e-14


# =============================================================================
# STEP RULES
# =============================================================================

def step5_reduction_ratio(
    models: ModelVector,
    center: np.ndarray,
    f_center: np.ndarray,
    x_plus: np.ndarray,
    f_plus: np.ndarray,
    t_plus: float,
    convention: RhoConvention = RhoConvention.MIN,
) -> float:
    """
    Actual over predicted decrease, aggregated over objectives.

    Zero when t_plus is (numerically) zero or some model predicts no change.
    """
    if t_plus >= -ZERO_T:
        return 0.0
    m_center = models.values(center)
    predicted = m_center - models.values(x_plus)
    if np.any(np.abs(predicted) <= ZERO_DECREASE * np.maximum(1.0, np.abs(m_center))):
        return 0.0
    ratios = (np.asarray(f_center, dtype=float) - np.asarray(f_plus, dtype=float)) / predicted
    rho = float(ratios.min() if convention is RhoConvention.MIN else ratios.max())
    if not np.isfinite(rho):
        _log.warning("non-finite reduction ratio %s treated as 0", rho)
        return 0.0
    return rho


def step6_new_radius(rho: float, delta_tilde: float, config: SolverConfig) -> float:
    """Radius given to points that enter the archive this iteration."""
    if rho < config.eta1:
        return config.gamma1 * delta_tilde
    if rho < config.eta2:
        return delta_tilde
    return min(config.expand_factor * delta_tilde, config.expand_cap * config.delta0)


def step8_evaluate_iteration(rho: float, archive_changed: bool, eta1: float) -> StepOutcome:
    if rho >= eta1 and archive_changed:
        return StepOutcome.ADVANCE
    return StepOutcome.RETRY


# =============================================================================
# SOLVER
# =============================================================================

@dataclass
class ModelBuild:
    """Outcome of the model loop: models, final radius and every sample seen."""
    models: ModelVector
    delta_tilde: float
    shrinks: int
    samples: list[tuple[np.ndarray, np.ndarray]]
    omega_m: float


@dataclass
class SolverState:
    """Mutable state of one run."""
    archive: Archive = field(default_factory=Archive)
    k: int = 0
    previous_key: Optional[bytes] = None
    retry_key: Optional[bytes] = None
    retry_delta: Optional[float] = None
    last_omega: Optional[float] = None
    hv_reference: Optional[np.ndarray] = None
    records: list[IterationRecord] = field(default_factory=list)


class TrustRegionSolver:
    """
    Runs the iteration on one problem.

    Every iteration picks the sparsest archive point (by projected density)
    as trust-region centre, fits quadratic models, moves to the
    Pascoletti-Serafini trial point and merges all evaluated points into the
    nondominated archive.
    """

    def __init__(
        self,
        problem: ProblemSpec,
        config: SolverConfig,
        bus: EventBus | None = None,
        front: np.ndarray | None = None,
    ) -> None:
        self.problem = problem
        self.config = config
        self.bus = bus if bus is not None else EventBus()
        self.cache = EvalCache(config.eval_budget, self.bus)
        self.fun = config.decreasing_function()
        self.rng = np.random.default_rng(config.seed)
        self.state = SolverState(
            hv_reference=None if config.hv_reference is None else np.asarray(config.hv_reference, dtype=float)
        )
        self.front = self._load_front(front)

    def _load_front(self, front: np.ndarray | None) -> np.ndarray | None:
        if not self.config.track_gd:
            return None
        if front is not None:
            return np.asarray(front, dtype=float)
        return self.problem.front_points() if self.problem.has_front else None

    @property
    def box(self) -> tuple[np.ndarray, np.ndarray]:
        return self.problem.box

    def _region(self, center: np.ndarray, radius: float) -> TrustRegion:
        return TrustRegion.around(center, radius, self.box, self.config.box_active_fraction)

    def initial_point(self) -> np.ndarray:
        if self.config.x0 is None:
            return self.problem.box_center
        x0 = np.asarray(self.config.x0, dtype=float)
        if x0.shape != (self.problem.n,):
            raise DimensionError(f"x0 has {x0.size} coordinates, problem '{self.problem.name}' has {self.problem.n}")
        if not self.problem.in_box(x0):
            raise DomainError(f"x0={x0.tolist()} lies outside the box of '{self.problem.name}'")
        return x0

    # -------------------------------------------------------------------------
    # Steps
    # -------------------------------------------------------------------------

    def step1_select_reference(self) -> tuple[int, float] | None:
        """Sparsest eligible entry and its radius; None when no entry is eligible."""
        archive = self.state.archive
        threshold = self.config.radius_threshold
        while True:
            eligible = archive.radii() >= threshold
            if not np.any(eligible):
                return None
            index = select_reference(archive, self.fun, self.config.normalize_objectives, eligible)
            entry = archive[index]
            if entry.key == self.state.previous_key:
                entry.radius *= self.config.gamma0
                if entry.radius < threshold:
                    # the shrink retired this entry; pick among the rest
                    continue
            self.bus.emit(SolverEvent.reference_selected(index, entry.radius))
            return index, entry.radius

    def step2_model_loop(self, reference: ArchiveEntry, delta_tilde: float) -> ModelBuild:
        """
        Build models, shrinking the radius until it is at most max(delta_tol, omega_m).

        Every sample is evaluated as it is drawn; samples of all rounds are kept
        for the archive update.
        """
        cfg = self.config
        samples: list[tuple[np.ndarray, np.ndarray]] = []
        seen: set[bytes] = set()
        shrinks = 0
        delta = delta_tilde
        while True:
            try:
                sample = generate_sample_set(reference.x, delta, self.box, cfg.box_active_fraction)
                evals = []
                for y in sample.points:
                    f = self.cache.evaluate(self.problem, y)
                    evals.append(f)
                    key = vector_key(y)
                    if key not in seen:
                        seen.add(key)
                        samples.append((y.copy(), f))
                models = fit_models(sample, evals)
            except (SingularInterpolation, DegenerateRegion) as exc:
                if shrinks >= cfg.max_shrinks:
                    raise DegenerateRegion(f"no usable models around reference after {shrinks} shrinks: {exc}") from exc
                _log.debug("model build failed at radius %.3g (%s), shrinking", delta, exc)
                delta *= cfg.gamma0
                shrinks += 1
                continue

            omega_m = omega(models.gradients(reference.x)).omega
            if delta <= max(cfg.delta_tol, omega_m):
                return ModelBuild(models, delta, shrinks, samples, omega_m)
            if shrinks >= cfg.max_shrinks:
                _log.warning(
                    "model loop hit %d shrinks at radius %.3g (omega_m=%.3g); using current models",
                    shrinks, delta, omega_m,
                )
                return ModelBuild(models, delta, shrinks, samples, omega_m)
            delta *= cfg.gamma0
            shrinks += 1

    def step3_ideal_point(self, models: ModelVector, region: TrustRegion) -> tuple[list[np.ndarray], np.ndarray]:
        solved = [min_quadratic_on_ball(m, region) for m in models]
        return [x for x, _ in solved], np.array([value for _, value in solved])

    def step4_trial_point(
        self,
        models: ModelVector,
        region: TrustRegion,
        f_center: np.ndarray,
        ideal: tuple[list[np.ndarray], np.ndarray],
    ) -> ScalarizationResult:
        points, values = ideal
        return pascoletti_serafini(models, region, f_center, points, values, self.rng)

    def step6_update_radii(
        self,
        candidates: list[tuple[np.ndarray, np.ndarray]],
        rho: float,
        delta_tilde: float,
    ) -> list[ArchiveEntry]:
        """Archive candidates carrying the radius for this iteration's new points."""
        radius = step6_new_radius(rho, delta_tilde, self.config)
        return [ArchiveEntry(x=x, f=f, radius=radius, birth_iteration=self.state.k) for x, f in candidates]

    def step7_update_archive(self, entries: list[ArchiveEntry]) -> bool:
        """Offer every candidate; True when at least one entered the archive."""
        changed = False
        for entry in entries:
            if self.state.archive.insert(entry) is InsertOutcome.ACCEPTED:
                changed = True
        return changed

    # -------------------------------------------------------------------------
    # Iteration
    # -------------------------------------------------------------------------

    def _reference_for_iteration(self) -> tuple[int, float] | None:
        """Retry the previous reference when it is still usable, otherwise run Step 1."""
        state = self.state
        if state.retry_key is not None:
            index = state.archive.index_of_key(state.retry_key)
            delta = state.retry_delta
            state.retry_key, state.retry_delta = None, None
            if index is not None and delta is not None and delta >= self.config.radius_threshold:
                return index, delta
        return self.step1_select_reference()

    def iterate(self) -> IterationRecord | None:
        """
        One iteration. Returns None when no archive entry can serve as reference.

        Raises BudgetExhausted when a needed evaluation does not fit the
        budget; the archive then keeps its state from the previous iteration.
        """
        cfg = self.config
        state = self.state
        while True:
            chosen = self._reference_for_iteration()
            if chosen is None:
                return None
            ref_index, delta_tilde = chosen
            reference = state.archive[ref_index]
            state.previous_key = reference.key
            try:
                build = self.step2_model_loop(reference, delta_tilde)
            except DegenerateRegion as exc:
                _log.warning("dropping reference %d as a centre: %s", ref_index, exc)
                reference.radius = min(reference.radius, 0.5 * cfg.radius_threshold)
                continue
            break

        state.k += 1
        state.last_omega = build.omega_m
        region = self._region(reference.x, build.delta_tilde)
        ideal = self.step3_ideal_point(build.models, region)
        trial = self.step4_trial_point(build.models, region, reference.f, ideal)
        x_plus = region.retract(trial.x_plus)
        f_plus = self.cache.evaluate(self.problem, x_plus)

        rho = step5_reduction_ratio(
            build.models, reference.x, reference.f, x_plus, f_plus, trial.t, cfg.rho_convention
        )
        candidates = build.samples + [(x_plus, f_plus)]
        entries = self.step6_update_radii(candidates, rho, build.delta_tilde)
        changed = self.step7_update_archive(entries)
        outcome = step8_evaluate_iteration(rho, changed, cfg.eta1)

        if outcome is StepOutcome.RETRY:
            shrunk = cfg.gamma1 * build.delta_tilde
            index = state.archive.index_of_key(reference.key)
            if index is not None:
                state.archive[index].radius = shrunk
                state.retry_key, state.retry_delta = reference.key, shrunk

        record = IterationRecord(
            k=state.k,
            ref_index=ref_index,
            delta=build.delta_tilde,
            inner_shrinks=build.shrinks,
            t_plus=trial.t,
            rho=rho,
            accepted=outcome is StepOutcome.ADVANCE,
            archive_size=len(state.archive),
            evals=self.cache.eval_count,
        )
        self._track_metrics(record)
        state.records.append(record)
        _log.debug(
            "iteration %d: ref=%d delta=%.4g shrinks=%d t=%.4g rho=%.4g %s archive=%d evals=%d",
            record.k, ref_index, record.delta, record.inner_shrinks, record.t_plus, rho,
            outcome.name, record.archive_size, record.evals,
        )
        self.bus.emit(SolverEvent.iteration_completed(record))
        return record

    def _track_metrics(self, record: IterationRecord) -> None:
        F = self.state.archive.objectives()
        if self.front is not None:
            record.gd = gd(F, self.front)
        if self.config.track_hv:
            if self.state.hv_reference is None:
                self.state.hv_reference = default_reference(self.cache.values())
                _log.info("hypervolume reference fixed at %s", self.state.hv_reference.tolist())
            record.hv = tracked_hypervolume(F, self.state.hv_reference)

    def run(self) -> RunResult:
        cfg = self.config
        state = self.state
        self.bus.emit(SolverEvent.run_started(self.problem.name, cfg.seed))
        _log.info(
            "solving %s (n=%d, p=%d) with budget %d, seed %d",
            self.problem.name, self.problem.n, self.problem.p, cfg.eval_budget, cfg.seed,
        )

        x0 = self.initial_point()
        f0 = self.cache.evaluate(self.problem, x0)
        state.archive.insert(ArchiveEntry(x=x0, f=f0, radius=cfg.delta0, birth_iteration=0))

        termination = TerminationReason.MAX_ITERATIONS
        try:
            while state.k < cfg.max_iterations:
                if self.iterate() is None:
                    termination = TerminationReason.ALL_RADII_BELOW_TOL
                    break
        except BudgetExhausted:
            termination = TerminationReason.BUDGET_EXHAUSTED

        result = RunResult(
            archive=state.archive,
            records=state.records,
            termination=termination,
            eval_count=self.cache.eval_count,
            hv_reference=state.hv_reference,
            final_omega=state.last_omega,
        )
        _log.info(
            "finished after %d iterations (%s): %d archive points, %d evaluations",
            result.iterations, termination.value, len(state.archive), result.eval_count,
        )
        self.bus.emit(SolverEvent.run_finished(result))
        return result


def run(
    problem: ProblemSpec,
    config: SolverConfig,
    bus: EventBus | None = None,
    front: np.ndarray | None = None,
) -> RunResult:
    """
    Solve `problem` with `config`; budget exhaustion ends the run normally.

    `front` overrides the problem's own front sample for GD tracking.
    """
    return TrustRegionSolver(problem, config, bus, front).run()
