import csv
from pathlib import Path

import pytest

from src.cli.commands import EXIT_INPUT_ERROR, EXIT_OK, EXIT_RESOURCE_CAP, main

DATA = Path(__file__).resolve().parent.parent / "src" / "data"

DEMO_CAPACITIES = [0.1, 0.05, 1 / 30, 0.025, 0.02]


def _read_rows(path):
    lines = [line for line in Path(path).read_text(encoding="utf-8").splitlines() if not line.startswith("#")]
    return list(csv.reader(lines))


def _demo_doc(**overrides):
    doc = {"K": 5, "t": 2, "T_lim": 10, "capacities": DEMO_CAPACITIES}
    doc.update(overrides)
    return doc


# ---------------------------------------------------------
# demo
# ---------------------------------------------------------
def test_demo_reproduces_anchors(capsys):
    assert main(["demo"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "All anchors reproduced." in out
    assert "MISMATCH" not in out


# ---------------------------------------------------------
# solve
# ---------------------------------------------------------
@pytest.mark.parametrize("algo", ["exhaustive", "dp", "sdt", "pdt"])
def test_solve_demo_file(tmp_path, algo):
    out = tmp_path / "schedule.csv"
    assert main(["solve", "--algo", algo, "--instance", str(DATA / "demo_instance.json"), "--out", str(out)]) == EXIT_OK
    rows = _read_rows(out)
    assert rows[0] == ["group_members", "j", "time_seconds"]
    assert len(rows) == 1 + 10 + 1
    footer = rows[-1]
    assert footer[0] == "total"
    assert footer[1] == "10"
    assert float(footer[2]) == pytest.approx(10.0, abs=1e-9)
    assert sum(int(r[1]) for r in rows[1:-1]) == 10


def test_solve_zero_budget(tmp_path, write_json):
    path = write_json("zero.json", _demo_doc(T_lim=0))
    out = tmp_path / "schedule.csv"
    assert main(["solve", "--algo", "dp", "--instance", str(path), "--out", str(out)]) == EXIT_OK
    rows = _read_rows(out)
    assert all(r[1] == "0" for r in rows[1:-1])
    assert rows[-1][1] == "0"


def test_solve_channel_document(tmp_path):
    out = tmp_path / "schedule.csv"
    args = ["solve", "--algo", "pdt", "--instance", str(DATA / "demo_channels_instance.json"), "--out", str(out)]
    assert main(args) == EXIT_OK
    assert len(_read_rows(out)) == 1 + 6 + 1


def test_solve_without_timing_is_reproducible(tmp_path):
    outputs = []
    for name in ("a.csv", "b.csv"):
        out = tmp_path / name
        args = ["solve", "--algo", "sdt", "--instance", str(DATA / "demo_instance.json"), "--out", str(out), "--omit-timing"]
        assert main(args) == EXIT_OK
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]
    assert _read_rows(tmp_path / "a.csv")[-1][3] == "NA"


def test_solve_to_stdout(capsys):
    assert main(["solve", "--algo", "dp", "--instance", str(DATA / "demo_instance.json")]) == EXIT_OK
    assert "total,10," in capsys.readouterr().out


@pytest.mark.parametrize(
    "doc",
    [
        _demo_doc(extra_field=1),
        _demo_doc(channels=[[1.0, 0.0]] * 5, P_T=1.0, N_0=1.0),
        _demo_doc(capacities=[0.1, 0.2]),
        _demo_doc(t=5),
        _demo_doc(T_lim=-1),
        {"K": 5, "t": 2, "T_lim": 10},
    ],
)
def test_solve_rejects_malformed_instances(tmp_path, write_json, doc):
    path = write_json("bad.json", doc)
    assert main(["solve", "--algo", "dp", "--instance", str(path), "--out", str(tmp_path / "x.csv")]) == EXIT_INPUT_ERROR


def test_solve_rejects_unreadable_files(tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")
    assert main(["solve", "--algo", "dp", "--instance", str(broken)]) == EXIT_INPUT_ERROR
    assert main(["solve", "--algo", "dp", "--instance", str(tmp_path / "missing.json")]) == EXIT_INPUT_ERROR


def test_solve_exhaustive_over_cap(write_json):
    path = write_json("big.json", {"K": 7, "t": 3, "T_lim": 1, "capacities": [1.0] * 7})
    assert main(["solve", "--algo", "exhaustive", "--instance", str(path)]) == EXIT_RESOURCE_CAP


def test_solve_dp_over_configured_cap(monkeypatch):
    monkeypatch.setenv("QOE_DP_CELL_CAP", "10")
    assert main(["solve", "--algo", "dp", "--instance", str(DATA / "demo_instance.json")]) == EXIT_RESOURCE_CAP


def test_unknown_algorithm_is_a_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--algo", "simplex", "--instance", str(DATA / "demo_instance.json")])
    assert exc.value.code == 2


# ---------------------------------------------------------
# sweep
# ---------------------------------------------------------
def test_sweep_demo(tmp_path):
    out = tmp_path / "sweep.csv"
    args = ["sweep", "--solver", "dp", "--instance", str(DATA / "demo_instance.json"),
            "--start", "0", "--stop", "45", "--step", "1", "--out", str(out)]
    assert main(args) == EXIT_OK
    rows = _read_rows(out)
    assert rows[0][:2] == ["T_lim", "qoe_sum"]
    assert len(rows[0]) == 2 + 5
    assert len(rows) == 1 + 46
    assert rows[-1][:2] == ["45.0", "30"]
    assert rows[11][:2] == ["10.0", "10"]


def test_sweep_single_point(tmp_path):
    out = tmp_path / "sweep.csv"
    args = ["sweep", "--solver", "exhaustive", "--instance", str(DATA / "demo_instance.json"),
            "--start", "10", "--stop", "10", "--step", "1", "--out", str(out)]
    assert main(args) == EXIT_OK
    rows = _read_rows(out)
    assert len(rows) == 2
    assert rows[1] == ["10.0", "10", "6", "3", "1", "0", "0"]


def test_sweep_reversed_range_is_empty(tmp_path):
    out = tmp_path / "sweep.csv"
    args = ["sweep", "--solver", "sdt", "--instance", str(DATA / "demo_instance.json"),
            "--start", "10", "--stop", "5", "--step", "1", "--out", str(out)]
    assert main(args) == EXIT_OK
    assert len(_read_rows(out)) == 1


@pytest.mark.parametrize("start, stop", [("0", "inf"), ("nan", "5"), ("0", "nan")])
def test_sweep_rejects_non_finite_bounds(start, stop):
    args = ["sweep", "--solver", "dp", "--instance", str(DATA / "demo_instance.json"),
            "--start", start, "--stop", stop, "--step", "1"]
    assert main(args) == EXIT_INPUT_ERROR


def test_compare_rejects_non_finite_sweep(write_json):
    config = write_json("cmp.json", {"K_list": [4], "sweep": {"start": 0, "stop": float("inf"), "step": 1}})
    assert main(["compare", "--config", str(config)]) == EXIT_INPUT_ERROR


def test_sweep_rejects_nonpositive_step():
    args = ["sweep", "--solver", "dp", "--instance", str(DATA / "demo_instance.json"),
            "--start", "0", "--stop", "5", "--step", "0"]
    assert main(args) == EXIT_INPUT_ERROR


# ---------------------------------------------------------
# compare
# ---------------------------------------------------------
def _compare(tmp_path, config_path, name, *extra):
    out = tmp_path / name
    assert main(["compare", "--config", str(config_path), "--out", str(out), *extra]) == EXIT_OK
    return out


def test_compare_with_exact_reference(tmp_path, write_json):
    config = write_json("cmp.json", {"K_list": [4], "T_lim": 2, "trials": 3, "seed": 5,
                                     "solvers": ["dp", "sdt", "pdt"], "runtime_repeats": 1})
    rows = _read_rows(_compare(tmp_path, config, "cmp.csv"))
    header, body = rows[0], rows[1:]
    assert len(body) == 3
    gap = header.index("gap_pdt_opt_pct")
    exhaustive = header.index("mean_qoe_exhaustive")
    for row in body:
        assert float(row[gap]) <= 0.0
        assert row[exhaustive] == "NA"


def test_compare_without_exact_leaves_gaps_empty(tmp_path, write_json):
    config = write_json("cmp.json", {"K_list": [8], "t_list": [3], "T_lim": 4, "trials": 2,
                                     "solvers": ["sdt", "pdt"], "runtime_repeats": 1})
    header, row = _read_rows(_compare(tmp_path, config, "cmp.csv"))
    assert row[header.index("gap_pdt_opt_pct")] == "NA"
    assert row[header.index("gap_sdt_opt_pct")] == "NA"
    assert row[header.index("pdt_over_sdt_pct")] != "NA"


def test_compare_is_byte_identical_without_timing(tmp_path, write_json):
    config = write_json("cmp.json", {"K_list": [5], "t_list": [1, 2], "T_lim": 3, "trials": 4,
                                     "solvers": ["dp", "sdt", "pdt"], "runtime_repeats": 1})
    first = _compare(tmp_path, config, "a.csv", "--omit-timing", "--seed", "11")
    second = _compare(tmp_path, config, "b.csv", "--omit-timing", "--seed", "11", "--jobs", "2")
    assert first.read_bytes() == second.read_bytes()
    assert "seed=11" in first.read_text(encoding="utf-8")


def test_compare_rejects_invalid_config(write_json):
    config = write_json("cmp.json", {"K_list": [4], "t_list": [4], "T_lim": 2})
    assert main(["compare", "--config", str(config)]) == EXIT_INPUT_ERROR


def test_jobs_must_be_positive(write_json):
    config = write_json("cmp.json", {"K_list": [4], "T_lim": 2})
    assert main(["compare", "--config", str(config), "--jobs", "0"]) == EXIT_INPUT_ERROR
