# src/cli/commands.py

import argparse
import logging
from pathlib import Path
from typing import Optional, Sequence

from src.codec import default_demands, generate_library, place_caches, simulate_delivery
from src.config import FEASIBILITY_EPS, get_settings
from src.errors import DocumentError, InvalidParameterError, TooLargeForExactError
from src.harness import compare_solvers, sweep_tlim, trial_rng
from src.model import (
    demo_instance,
    demo_reference_assignment,
    evaluate_schedule,
    full_cc_time,
    selection_count,
    uncoded_time,
)
from src.solvers import ALGORITHMS, run_solver
from src.tools.csv_writer import render_csv, write_csv
from src.tools.documents import load_experiment, load_instance

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ANCHOR_FAILURE = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE_CAP = 3

DEMO_ANCHORS = {10.0: 10, 45.0: 30}
DEMO_FULL_CC_TIME = 45.0
DEMO_UNCODED_TIME = 90.0
DEMO_REFERENCE_QOE_PER_USER = (6, 3, 1, 0, 0)


def _fmt_levels(levels: Sequence[int]) -> str:
    return "(" + ", ".join(str(j) for j in levels) + ")"


# ---------------------------------------------------------
# demo
# ---------------------------------------------------------
def cmd_demo(seed: int = 0) -> int:
    """Five-user example: all four solvers at T_lim = 10 and 45, baselines, codec check."""
    settings = get_settings()
    failures = []

    def expect(ok: bool, what: str) -> None:
        if not ok:
            failures.append(what)
            print(f"[Demo] MISMATCH: {what}")

    instance = demo_instance()
    groups = instance.groups

    cc_time = full_cc_time(instance)
    unicast_time = uncoded_time(instance)
    print(
        f"[Demo] K={instance.k} t={instance.t} P={instance.subpacketization} groups={len(groups)} "
        f"selections={selection_count(instance.k, instance.t)}"
    )
    print(f"[Demo] Coded caching (all groups at j=t+1): {cc_time!r} s")
    print(f"[Demo] Uncoded unicast: {unicast_time!r} s")
    expect(abs(cc_time - DEMO_FULL_CC_TIME) <= FEASIBILITY_EPS, f"full CC time {cc_time} != 45")
    expect(abs(unicast_time - DEMO_UNCODED_TIME) <= FEASIBILITY_EPS, f"uncoded time {unicast_time} != 90")

    reference = evaluate_schedule(demo_reference_assignment(), groups, instance.k, instance.t)
    print(
        f"[Demo] Reference assignment {_fmt_levels(reference.levels())}: "
        f"qoe_sum={reference.qoe_sum} time={reference.total_time!r} per_user={reference.qoe_per_user}"
    )
    expect(reference.qoe_per_user == DEMO_REFERENCE_QOE_PER_USER, "reference per-user QoE")

    exact_at_ten = None
    for t_lim, wanted in DEMO_ANCHORS.items():
        for name in ALGORITHMS:
            report = run_solver(name, groups, t_lim, instance.t)
            schedule = report.schedule
            print(
                f"[Demo] T_lim={t_lim:g} {name:>10}: qoe_sum={schedule.qoe_sum} "
                f"time={schedule.total_time!r} levels={_fmt_levels(schedule.levels())} "
                f"per_user={schedule.qoe_per_user}"
            )
            expect(schedule.qoe_sum == wanted, f"{name} at T_lim={t_lim:g}: qoe {schedule.qoe_sum} != {wanted}")
            expect(schedule.total_time <= t_lim + FEASIBILITY_EPS, f"{name} at T_lim={t_lim:g} over budget")
            if name == "dp" and t_lim == 10.0:
                exact_at_ten = schedule
                expect(
                    abs(schedule.total_time - t_lim) <= FEASIBILITY_EPS,
                    f"exact schedule time {schedule.total_time} != 10",
                )

    # codec: actually send the exact T_lim = 10 schedule and decode it everywhere
    library = generate_library(instance.k, instance.k, instance.t, settings.descriptor_bytes, trial_rng(seed, 5, 2, 0))
    caches = place_caches(library, instance.k, instance.t)
    outcome = simulate_delivery(exact_at_ten, groups, default_demands(instance.k, library.n), library, caches)
    print(
        f"[Demo] Delivery simulation: {len(outcome.codewords)} codewords, "
        f"received per user {outcome.counts}, intact={outcome.intact}"
    )
    expect(outcome.intact, "decoded payloads differ from the library")
    expect(outcome.counts == exact_at_ten.qoe_per_user, "decoded counts differ from scheduled QoE")

    if failures:
        logger.error(f"demo self-test failed: {len(failures)} mismatches")
        return EXIT_ANCHOR_FAILURE
    print("[Demo] All anchors reproduced.")
    return EXIT_OK


# ---------------------------------------------------------
# solve
# ---------------------------------------------------------
def cmd_solve(instance_path: Path, algo: str, output_path: Optional[Path], omit_timing: bool = False) -> int:
    instance = load_instance(instance_path)
    report = run_solver(algo, instance.groups, instance.t_lim, instance.t)
    schedule = report.schedule

    rows = [
        (" ".join(str(u) for u in group.members), j, group.time_ladder[j])
        for group, j in zip(instance.groups, schedule.levels())
    ]
    text = render_csv(
        header=("group_members", "j", "time_seconds"),
        rows=rows,
        comments=(
            f"algorithm={algo} K={instance.k} t={instance.t} T_lim={instance.t_lim!r}",
            "footer: total,qoe_sum,total_time,wall_time",
        ),
        footer=("total", schedule.qoe_sum, schedule.total_time, None if omit_timing else report.wall_time),
    )
    write_csv(output_path, text)
    logger.info(f"{algo}: qoe_sum={schedule.qoe_sum} total_time={schedule.total_time!r}")
    return EXIT_OK


# ---------------------------------------------------------
# sweep
# ---------------------------------------------------------
def cmd_sweep(
    instance_path: Path, solver: str, start: float, stop: float, step: float, output_path: Optional[Path]
) -> int:
    instance = load_instance(instance_path)
    rows = sweep_tlim(instance, solver, start, stop, step)
    text = render_csv(
        header=("T_lim", "qoe_sum", *(f"qoe_user_{u}" for u in range(1, instance.k + 1))),
        rows=[(r.t_lim, r.qoe_sum, *r.qoe_per_user) for r in rows],
        comments=(f"solver={solver} K={instance.k} t={instance.t}",),
    )
    write_csv(output_path, text)
    return EXIT_OK


# ---------------------------------------------------------
# compare
# ---------------------------------------------------------
COMPARE_SOLVER_COLUMNS = ("exhaustive", "dp", "sdt", "pdt")
COMPARE_TIMING_FIELDS = (
    "runtime_pdt_opt_pct",
    "runtime_sdt_opt_pct",
    "runtime_ratio_pdt_sdt",
)


def cmd_compare(
    config_path: Path,
    output_path: Optional[Path],
    seed: Optional[int] = None,
    jobs: int = 1,
    omit_timing: bool = False,
) -> int:
    config = load_experiment(config_path)
    if seed is not None:
        config = config.model_copy(update={"seed": seed})
    result = compare_solvers(config, jobs=jobs)

    header = (
        "K", "t", "K_over_t", "T_lim", "trials",
        *(f"mean_qoe_{n}" for n in COMPARE_SOLVER_COLUMNS),
        "gap_pdt_opt_pct", "gap_sdt_opt_pct", "pdt_over_sdt_pct",
        *COMPARE_TIMING_FIELDS,
        *(f"mean_wall_{n}" for n in COMPARE_SOLVER_COLUMNS),
    )
    rows = []
    for r in result.rows:
        timing = [getattr(r, f) for f in COMPARE_TIMING_FIELDS]
        walls = [r.mean_wall_time.get(n) for n in COMPARE_SOLVER_COLUMNS]
        if omit_timing:
            timing = [None] * len(timing)
            walls = [None] * len(walls)
        rows.append((
            r.k, r.t, r.k_over_t, r.t_lim, r.trials,
            *(r.mean_qoe.get(n) for n in COMPARE_SOLVER_COLUMNS),
            r.gap_pdt_opt_pct, r.gap_sdt_opt_pct, r.pdt_over_sdt_pct,
            *timing,
            *walls,
        ))

    text = render_csv(
        header=header,
        rows=rows,
        comments=(
            f"seed={config.seed} snr_db={config.snr_db!r} trials={config.trials} "
            f"capacity_mode={config.capacity_mode} log_base={config.log_base!r} "
            f"solvers={','.join(config.solvers)} runtime_repeats={config.runtime_repeats}",
        ),
    )
    write_csv(output_path, text)
    return EXIT_OK


# ---------------------------------------------------------
# argument parsing / dispatch
# ---------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="RNG seed (overrides document seeds)")
    common.add_argument("--jobs", type=int, default=1, help="parallel trial workers")

    parser = argparse.ArgumentParser(
        prog="qoe-cc",
        description="QoE-maximizing coded-caching delivery: solvers, sweeps and comparisons.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("demo", parents=[common], help="reproduce the five-user example and self-check")

    solve = sub.add_parser("solve", parents=[common], help="solve one instance file")
    solve.add_argument("--algo", choices=ALGORITHMS, required=True)
    solve.add_argument("--instance", type=Path, required=True)
    solve.add_argument("--out", type=Path, default=None, help="CSV path (stdout when omitted)")
    solve.add_argument("--omit-timing", action="store_true", help="leave wall-clock fields empty")

    sweep = sub.add_parser("sweep", parents=[common], help="QoE versus T_lim for one instance")
    sweep.add_argument("--solver", choices=ALGORITHMS, required=True)
    sweep.add_argument("--instance", type=Path, required=True)
    sweep.add_argument("--start", type=float, required=True)
    sweep.add_argument("--stop", type=float, required=True)
    sweep.add_argument("--step", type=float, required=True)
    sweep.add_argument("--out", type=Path, default=None)

    compare = sub.add_parser("compare", parents=[common], help="heuristics versus exact over random instances")
    compare.add_argument("--config", type=Path, required=True)
    compare.add_argument("--out", type=Path, default=None)
    compare.add_argument("--omit-timing", action="store_true", help="leave wall-clock fields empty")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.jobs < 1:
        logger.error("--jobs must be at least 1")
        return EXIT_INPUT_ERROR

    try:
        if args.command == "demo":
            return cmd_demo(seed=args.seed if args.seed is not None else 0)
        if args.command == "solve":
            return cmd_solve(args.instance, args.algo, args.out, args.omit_timing)
        if args.command == "sweep":
            return cmd_sweep(args.instance, args.solver, args.start, args.stop, args.step, args.out)
        if args.command == "compare":
            return cmd_compare(args.config, args.out, args.seed, args.jobs, args.omit_timing)
    except (DocumentError, InvalidParameterError) as e:
        logger.error(str(e))
        return EXIT_INPUT_ERROR
    except TooLargeForExactError as e:
        logger.error(str(e))
        return EXIT_RESOURCE_CAP
    return EXIT_INPUT_ERROR
