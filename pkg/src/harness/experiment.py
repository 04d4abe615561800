# src/harness/experiment.py

import logging
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.config import get_settings
from src.harness.channels import random_instance, trial_rng
from src.harness.runtime import measure_runtime
from src.harness.sweep import sweep_points
from src.solvers import EXACT_SOLVERS, run_solver

logger = logging.getLogger(__name__)

SolverName = Literal["exhaustive", "dp", "sdt", "pdt"]


# ---------------------------------------------------------
# Experiment document
# ---------------------------------------------------------
class SweepRange(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True, allow_inf_nan=False)

    start: float = Field(ge=0)
    stop: float
    step: float = Field(gt=0)


class ExperimentConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True, populate_by_name=True)

    k_list: list[int] = Field(alias="K_list", min_length=1)
    t_list: Optional[list[int]] = None
    t_lim: Optional[float] = Field(default=None, alias="T_lim", ge=0)
    sweep: Optional[SweepRange] = None
    trials: int = Field(default=1, ge=1)
    seed: int = 0
    solvers: list[SolverName] = Field(default_factory=lambda: ["dp", "sdt", "pdt"], min_length=1)
    capacity_mode: Literal["channels", "direct"] = "channels"
    snr_db: float = Field(default_factory=lambda: get_settings().snr_db)
    log_base: float = Field(default=2.0, gt=0)
    runtime_repeats: int = Field(default_factory=lambda: get_settings().runtime_repeats, ge=1)

    @model_validator(mode="after")
    def _check_grid(self) -> "ExperimentConfig":
        if (self.t_lim is None) == (self.sweep is None):
            raise ValueError("give exactly one of T_lim or sweep")
        if self.log_base == 1:
            raise ValueError("log_base must differ from 1")
        if len(set(self.solvers)) != len(self.solvers):
            raise ValueError("solvers must not repeat")
        for k, t in self.grid():
            if not 1 <= t <= k - 1:
                raise ValueError(f"invalid (K, t) pair ({k}, {t}): need 1 <= t <= K-1")
        return self

    def grid(self) -> list[tuple[int, int]]:
        if self.t_list is None:
            return [(k, t) for k in self.k_list for t in range(1, k)]
        return [(k, t) for k in self.k_list for t in self.t_list]

    def budgets(self) -> list[float]:
        if self.sweep is not None:
            return sweep_points(self.sweep.start, self.sweep.stop, self.sweep.step)
        return [self.t_lim]

    def exact_solver(self) -> Optional[str]:
        return next((name for name in EXACT_SOLVERS if name in self.solvers), None)


# ---------------------------------------------------------
# Results
# ---------------------------------------------------------
@dataclass(frozen=True)
class SolverOutcome:
    qoe_sum: int
    qoe_per_user: tuple[int, ...]
    wall_time: float


@dataclass(frozen=True)
class TrialResult:
    k: int
    t: int
    seed: int
    trial: int
    t_lim: float
    outcomes: dict[str, SolverOutcome]

    def dominance_holds(self) -> bool:
        exact = [self.outcomes[n].qoe_sum for n in EXACT_SOLVERS if n in self.outcomes]
        if not exact:
            return True
        if len(set(exact)) > 1:
            return False
        return all(o.qoe_sum <= exact[0] for o in self.outcomes.values())


@dataclass(frozen=True)
class AggregateRow:
    k: int
    t: int
    t_lim: float
    trials: int
    mean_qoe: dict[str, float]
    mean_wall_time: dict[str, float]
    gap_pdt_opt_pct: Optional[float] = None
    gap_sdt_opt_pct: Optional[float] = None
    pdt_over_sdt_pct: Optional[float] = None
    runtime_pdt_opt_pct: Optional[float] = None
    runtime_sdt_opt_pct: Optional[float] = None
    runtime_ratio_pdt_sdt: Optional[float] = None

    @property
    def k_over_t(self) -> float:
        return self.k / self.t


@dataclass(frozen=True)
class ComparisonResult:
    config: ExperimentConfig
    trials: list[TrialResult]
    rows: list[AggregateRow] = field(default_factory=list)


# ---------------------------------------------------------
# Trial execution
# ---------------------------------------------------------
def run_trial(config: ExperimentConfig, k: int, t: int, trial: int) -> list[TrialResult]:
    """One random instance, every requested solver, every budget of the config."""
    rng = trial_rng(config.seed, k, t, trial)
    budgets = config.budgets()
    instance = random_instance(
        k, t, budgets[0] if budgets else 0.0, rng, config.capacity_mode, config.snr_db, config.log_base
    )
    groups = instance.groups

    results = []
    for t_lim in budgets:
        outcomes = {}
        for name in config.solvers:
            report, wall = measure_runtime(
                lambda: run_solver(name, groups, t_lim, t), config.runtime_repeats
            )
            outcomes[name] = SolverOutcome(report.qoe_sum, report.schedule.qoe_per_user, wall)
        results.append(TrialResult(k, t, config.seed, trial, t_lim, outcomes))
    return results


def _run_trial_task(args: tuple) -> list[TrialResult]:
    return run_trial(*args)


def _relative_gap(value: int, reference: int) -> float:
    return 0.0 if reference == 0 else (value - reference) / reference


def aggregate(config: ExperimentConfig, results: list[TrialResult]) -> list[AggregateRow]:
    cells: dict[tuple[int, int, float], list[TrialResult]] = {}
    for r in results:
        cells.setdefault((r.k, r.t, r.t_lim), []).append(r)

    exact = config.exact_solver()
    rows = []
    for (k, t, t_lim), cell in cells.items():
        mean_qoe = {n: statistics.fmean(r.outcomes[n].qoe_sum for r in cell) for n in config.solvers}
        mean_wall = {n: statistics.fmean(r.outcomes[n].wall_time for r in cell) for n in config.solvers}
        extra = {}

        def pct_gap(name: str, reference: str) -> float:
            return 100.0 * statistics.fmean(
                _relative_gap(r.outcomes[name].qoe_sum, r.outcomes[reference].qoe_sum) for r in cell
            )

        def pct_runtime(name: str, reference: str) -> Optional[float]:
            if mean_wall[reference] == 0:
                return None
            return 100.0 * (mean_wall[name] - mean_wall[reference]) / mean_wall[reference]

        if exact is not None:
            for name in ("pdt", "sdt"):
                if name in config.solvers:
                    extra[f"gap_{name}_opt_pct"] = pct_gap(name, exact)
                    extra[f"runtime_{name}_opt_pct"] = pct_runtime(name, exact)
        if "pdt" in config.solvers and "sdt" in config.solvers:
            extra["pdt_over_sdt_pct"] = pct_gap("pdt", "sdt")
            if mean_wall["sdt"] > 0:
                extra["runtime_ratio_pdt_sdt"] = mean_wall["pdt"] / mean_wall["sdt"]

        rows.append(AggregateRow(k, t, t_lim, len(cell), mean_qoe, mean_wall, **extra))
        means = ", ".join(f"{n}={v:.3f}" for n, v in mean_qoe.items())
        logger.info(f"K={k} t={t} T_lim={t_lim}: {len(cell)} trials, mean qoe {means}")
    return rows


def compare_solvers(config: ExperimentConfig, jobs: int = 1) -> ComparisonResult:
    """
    Run ``config.trials`` seeded trials for every (K, t) of the grid and
    aggregate them per (K, t, T_lim). Output does not depend on ``jobs``.
    """
    tasks = [(config, k, t, trial) for k, t in config.grid() for trial in range(config.trials)]
    logger.info(
        f"comparing {', '.join(config.solvers)} over {len(config.grid())} (K, t) cells, "
        f"{config.trials} trials each, jobs={jobs}"
    )

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(_run_trial_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        batches = [_run_trial_task(task) for task in tasks]

    results = [r for batch in batches for r in batch]
    results.sort(key=lambda r: (r.k, r.t, r.t_lim, r.trial))

    violations = [r for r in results if not r.dominance_holds()]
    for r in violations:
        values = {n: o.qoe_sum for n, o in r.outcomes.items()}
        logger.error(f"dominance violated: K={r.k} t={r.t} trial={r.trial} T_lim={r.t_lim} {values}")

    rows = aggregate(config, results)
    logger.info(f"compared {len(results)} trial rows into {len(rows)} aggregate rows")
    return ComparisonResult(config=config, trials=results, rows=rows)
