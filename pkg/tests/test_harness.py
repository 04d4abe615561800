import math

import numpy as np
import pytest
from pydantic import ValidationError

from src.errors import InvalidParameterError
from src.harness import (
    ExperimentConfig,
    aggregate,
    compare_solvers,
    draw_raw_channels,
    gen_capacities,
    gen_channels,
    measure_runtime,
    random_instance,
    run_trial,
    snr_linear,
    sweep_points,
    sweep_tlim,
    trial_rng,
)
from src.model import capacity

CHANNEL_SAMPLES = 10_000


# ---------------------------------------------------------
# channels
# ---------------------------------------------------------
def test_channels_normalized_to_unit_peak():
    for trial in range(20):
        h = gen_channels(8, trial_rng(1, 8, 2, trial))
        assert np.max(np.abs(h)) == 1.0
        assert np.count_nonzero(h == 1.0) >= 1


def test_channels_reproducible_from_seed():
    first = gen_channels(6, trial_rng(7, 6, 2, 3))
    second = gen_channels(6, trial_rng(7, 6, 2, 3))
    other = gen_channels(6, trial_rng(7, 6, 2, 4))
    assert np.array_equal(first, second)
    assert not np.array_equal(first, other)


def test_raw_channels_are_zero_mean():
    h = draw_raw_channels(CHANNEL_SAMPLES, np.random.default_rng(2020))
    sigma = math.sqrt(0.5 / CHANNEL_SAMPLES)
    assert abs(h.real.mean()) <= 5 * sigma
    assert abs(h.imag.mean()) <= 5 * sigma
    assert np.mean(np.abs(h) ** 2) == pytest.approx(1.0, abs=0.05)


def test_direct_capacities_peak_at_one():
    c = gen_capacities(7, np.random.default_rng(0))
    assert c.max() == 1.0
    assert np.all(c > 0)


def test_random_instance_strongest_user_gets_full_snr_rate():
    instance = random_instance(5, 2, 4.0, trial_rng(0, 5, 2, 0), snr_db=10.0)
    assert instance.capacities.c.max() == pytest.approx(capacity(1.0, snr_linear(10.0), 1.0))
    assert snr_linear(10.0) == pytest.approx(10.0)


def test_random_instance_rejects_unknown_mode():
    with pytest.raises(InvalidParameterError):
        random_instance(5, 2, 4.0, trial_rng(0, 5, 2, 0), capacity_mode="rayleigh")


# ---------------------------------------------------------
# runtime
# ---------------------------------------------------------
def test_measure_runtime_returns_result_and_median():
    result, wall = measure_runtime(lambda: sum(range(1000)), repeats=3)
    assert result == 499500
    assert wall >= 0


def test_measure_runtime_needs_a_repeat():
    with pytest.raises(InvalidParameterError):
        measure_runtime(lambda: None, repeats=0)


# ---------------------------------------------------------
# sweeps
# ---------------------------------------------------------
def test_sweep_points_inclusive():
    assert sweep_points(0, 45, 1) == [float(i) for i in range(46)]
    assert sweep_points(10, 10, 5) == [10.0]
    assert sweep_points(0, 1, 0.1)[-1] == pytest.approx(1.0)
    assert len(sweep_points(0, 1, 0.1)) == 11


def test_sweep_points_empty_when_reversed():
    assert sweep_points(10, 5, 1) == []


@pytest.mark.parametrize("start, step", [(0, 0), (0, -1), (-1, 1), (0, math.nan)])
def test_sweep_points_rejects_bad_range(start, step):
    with pytest.raises(InvalidParameterError):
        sweep_points(start, 10, step)


@pytest.mark.parametrize("start, stop", [(0, math.inf), (math.nan, 5), (0, math.nan)])
def test_sweep_points_rejects_non_finite_bounds(start, stop):
    with pytest.raises(InvalidParameterError):
        sweep_points(start, stop, 1)


def test_config_rejects_non_finite_sweep():
    with pytest.raises(ValidationError):
        _config(T_lim=None, sweep={"start": 0, "stop": math.inf, "step": 1})


def test_demo_sweep(demo):
    rows = sweep_tlim(demo, "dp", 0, 45, 1)
    values = {row.t_lim: row.qoe_sum for row in rows}
    assert values[0.0] == 0
    assert values[3.0] == 3
    assert values[10.0] == 10
    assert values[45.0] == 30
    qoe = [row.qoe_sum for row in rows]
    assert qoe == sorted(qoe)
    assert all(sum(row.qoe_per_user) == row.qoe_sum for row in rows)


def test_sweep_heuristic_stays_below_exact(demo):
    exact = sweep_tlim(demo, "dp", 0, 45, 2.5)
    for name in ("sdt", "pdt"):
        rows = sweep_tlim(demo, name, 0, 45, 2.5)
        assert all(r.qoe_sum <= e.qoe_sum for r, e in zip(rows, exact))


# ---------------------------------------------------------
# experiment documents
# ---------------------------------------------------------
def _config(**overrides):
    payload = {"K_list": [4], "T_lim": 2.0, "trials": 4, "seed": 9, "runtime_repeats": 1}
    payload.update(overrides)
    return ExperimentConfig.model_validate(payload)


def test_config_grid_defaults_to_every_gain():
    assert _config(K_list=[4, 5]).grid() == [(4, 1), (4, 2), (4, 3), (5, 1), (5, 2), (5, 3), (5, 4)]
    assert _config(K_list=[6], t_list=[2]).grid() == [(6, 2)]


def test_config_budgets_from_sweep():
    config = _config(T_lim=None, sweep={"start": 0, "stop": 2, "step": 1})
    assert config.budgets() == [0.0, 1.0, 2.0]


@pytest.mark.parametrize(
    "overrides",
    [
        {"sweep": {"start": 0, "stop": 1, "step": 1}},
        {"T_lim": None},
        {"t_list": [4]},
        {"solvers": ["dp", "dp"]},
        {"solvers": ["simplex"]},
        {"colour": "blue"},
        {"trials": 0},
        {"log_base": 1},
    ],
)
def test_config_rejects_invalid(overrides):
    with pytest.raises(ValidationError):
        _config(**overrides)


def test_exact_solver_preference():
    assert _config(solvers=["exhaustive", "dp", "sdt"]).exact_solver() == "dp"
    assert _config(solvers=["exhaustive", "pdt"]).exact_solver() == "exhaustive"
    assert _config(solvers=["sdt", "pdt"]).exact_solver() is None


# ---------------------------------------------------------
# comparisons
# ---------------------------------------------------------
def test_trial_is_independent_of_execution_order():
    config = _config(solvers=["dp", "sdt", "pdt"])
    later = run_trial(config, 4, 2, 3)
    earlier = run_trial(config, 4, 2, 3)
    assert [o.qoe_sum for o in later[0].outcomes.values()] == [o.qoe_sum for o in earlier[0].outcomes.values()]


def test_compare_small_grid_holds_dominance():
    config = _config(solvers=["exhaustive", "dp", "sdt", "pdt"])
    result = compare_solvers(config)
    assert len(result.trials) == 3 * config.trials
    assert all(r.dominance_holds() for r in result.trials)
    assert [(row.k, row.t) for row in result.rows] == [(4, 1), (4, 2), (4, 3)]
    for row in result.rows:
        assert row.trials == config.trials
        assert row.mean_qoe["dp"] == row.mean_qoe["exhaustive"]
        assert row.gap_pdt_opt_pct <= 0
        assert row.gap_sdt_opt_pct <= 0
        assert row.pdt_over_sdt_pct is not None
        assert row.k_over_t == row.k / row.t


def test_compare_without_exact_has_no_gaps():
    result = compare_solvers(_config(solvers=["sdt", "pdt"], K_list=[8], t_list=[3], trials=2))
    (row,) = result.rows
    assert row.gap_pdt_opt_pct is None
    assert row.gap_sdt_opt_pct is None
    assert row.runtime_pdt_opt_pct is None
    assert row.pdt_over_sdt_pct is not None


def test_compare_sweep_rows_per_budget():
    config = _config(T_lim=None, sweep={"start": 0, "stop": 3, "step": 1.5}, t_list=[1], trials=2)
    result = compare_solvers(config)
    assert [row.t_lim for row in result.rows] == [0.0, 1.5, 3.0]
    assert result.rows[0].mean_qoe["dp"] == 0


def test_aggregate_gap_uses_exact_reference():
    config = _config(solvers=["dp", "sdt"], trials=3, t_list=[1])
    results = [r for trial in range(3) for r in run_trial(config, 4, 1, trial)]
    (row,) = aggregate(config, results)
    expected = 100.0 * np.mean([
        (r.outcomes["sdt"].qoe_sum - r.outcomes["dp"].qoe_sum) / r.outcomes["dp"].qoe_sum
        if r.outcomes["dp"].qoe_sum else 0.0
        for r in results
    ])
    assert row.gap_sdt_opt_pct == pytest.approx(expected)
    assert row.gap_pdt_opt_pct is None


@pytest.mark.slow
def test_compare_parallel_matches_serial():
    config = _config(K_list=[5], t_list=[2], trials=6)
    serial = compare_solvers(config, jobs=1)
    parallel = compare_solvers(config, jobs=2)
    assert [r.mean_qoe for r in serial.rows] == [r.mean_qoe for r in parallel.rows]
    assert [(r.trial, r.outcomes["dp"].qoe_sum) for r in serial.trials] == [
        (r.trial, r.outcomes["dp"].qoe_sum) for r in parallel.trials
    ]


@pytest.mark.slow
def test_five_user_table_gaps_are_small():
    config = ExperimentConfig.model_validate({
        "K_list": [5], "t_list": [2], "T_lim": 4, "trials": 1000, "seed": 2020,
        "solvers": ["dp", "sdt", "pdt"], "runtime_repeats": 1,
    })
    result = compare_solvers(config)
    assert all(r.dominance_holds() for r in result.trials)
    (row,) = result.rows
    assert abs(row.gap_pdt_opt_pct) <= 1.0
    assert abs(row.gap_sdt_opt_pct) <= 2.0


@pytest.mark.slow
def test_pdt_beats_sdt_on_sixteen_users():
    config = ExperimentConfig.model_validate({
        "K_list": [16], "t_list": list(range(1, 11)), "T_lim": 4, "trials": 50, "seed": 2020,
        "solvers": ["sdt", "pdt"], "runtime_repeats": 1,
    })
    result = compare_solvers(config)
    for row in result.rows:
        assert row.mean_qoe["pdt"] >= row.mean_qoe["sdt"]
    total_pdt = sum(row.mean_wall_time["pdt"] for row in result.rows)
    total_sdt = sum(row.mean_wall_time["sdt"] for row in result.rows)
    assert total_pdt > total_sdt
