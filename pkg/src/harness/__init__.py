from src.harness.channels import (
    draw_raw_channels,
    gen_capacities,
    gen_channels,
    random_instance,
    snr_linear,
    trial_rng,
)
from src.harness.experiment import (
    AggregateRow,
    ComparisonResult,
    ExperimentConfig,
    SolverOutcome,
    SweepRange,
    TrialResult,
    aggregate,
    compare_solvers,
    run_trial,
)
from src.harness.runtime import measure_runtime
from src.harness.sweep import SweepRow, sweep_points, sweep_tlim

__all__ = [
    "AggregateRow",
    "ComparisonResult",
    "ExperimentConfig",
    "SolverOutcome",
    "SweepRange",
    "SweepRow",
    "TrialResult",
    "aggregate",
    "compare_solvers",
    "draw_raw_channels",
    "gen_capacities",
    "gen_channels",
    "measure_runtime",
    "random_instance",
    "run_trial",
    "snr_linear",
    "sweep_points",
    "sweep_tlim",
    "trial_rng",
]
