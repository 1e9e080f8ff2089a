"""Tests for the command line, driven through main(argv)."""
import json

import pytest

from thetalab.main import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_theta_ekr(capsys):
    code, out = run(capsys, "theta", "--n", "9", "--k", "3", "--L", "1,2")
    report = json.loads(out)
    assert code == 0
    assert report["theta"]["exact"] == "28/1"
    assert report["instance"] == {"n": 9, "k": 3, "L": [1, 2]}
    assert report["rcw_bound"]["exact"] == "36/1"
    assert report["timing_seconds"] is None


def test_theta_reports_structure_and_feasible_point(capsys):
    code, out = run(capsys, "theta", "--n", "12", "--k", "3", "--L", "1")
    report = json.loads(out)
    assert code == 0
    assert report["def_structure"]["divisibility_chain"] is True
    schrijver = report["schrijver"]
    assert schrijver["theta_complement"]["exact"] == "2860/121"
    assert schrijver["def_complement"]["exact"] == "40/1"
    assert schrijver["within"] is False
    assert schrijver["complement_within"] is True
    assert schrijver["counterexample_candidate"] is True
    point = report["feasible_point"]
    assert point["feasible"] is True
    assert point["objective"]["exact"] == "121/13"
    assert point["leading_terms"] == [{"coefficient": "3/4", "exponent": 1}]


def test_theta_empty_L(capsys):
    code, out = run(capsys, "theta", "--n", "10", "--k", "3", "--L", "")
    assert code == 0
    report = json.loads(out)
    assert report["theta"]["exact"] == "1/1"
    assert report["feasible_point"] is None


def test_theta_with_sigma(capsys):
    code, out = run(capsys, "theta", "--n", "12", "--k", "3", "--L", "1", "--sigma")
    report = json.loads(out)
    assert report["sigma"]["exact"] == "121/13"
    assert report["sigma_le_theta"] is True


def test_sigma_alias(capsys):
    code, out = run(capsys, "sigma", "--n", "12", "--k", "3", "--L", "1")
    assert code == 0
    assert json.loads(out)["sigma"]["exact"] == "121/13"


@pytest.mark.parametrize("argv", [
    ["theta", "--n", "12", "--k", "3", "--L", "1,1"],
    ["theta", "--n", "12", "--k", "3", "--L", "3"],
    ["theta", "--n", "12", "--k", "3", "--L", "x"],
    ["theta", "--n", "5", "--k", "3", "--L", "1"],
    ["gap", "--q", "6", "--n", "50"],
    ["theta", "--k", "3"],
    ["theta", "--n", "12", "--k", "3", "--L", "1", "--precision", "0"],
    ["theta", "--n", "12", "--k", "3", "--L", "1", "--precision", "-3"],
    ["sweep", "--k", "3", "--L", "1", "--n-from", "6", "--n-to", "20", "--samples", "-2"],
    ["sweep", "--k", "3", "--L", "1", "--n-from", "6", "--n-to", "20", "--step", "0"],
    ["alpha", "--n", "5", "--k", "2", "--L", "1", "--cap", "0"],
])
def test_input_errors_exit_2(capsys, argv):
    assert main(argv) == 2


def test_output_is_deterministic(capsys):
    argv = ["theta", "--n", "14", "--k", "4", "--L", "0,2", "--sigma"]
    assert run(capsys, *argv) == run(capsys, *argv)


def test_timing_flag(capsys):
    code, out = run(capsys, "theta", "--n", "9", "--k", "3", "--L", "1,2", "--timing")
    assert json.loads(out)["timing_seconds"] is not None


def test_sweep_csv(capsys):
    code, out = run(
        capsys, "sweep", "--k", "3", "--L", "1", "--n-from", "6", "--n-to", "12",
        "--step", "3", "--format", "csv",
    )
    lines = out.splitlines()
    assert code == 0
    assert lines[0].startswith("n,theta,theta_approx,")
    assert [line.split(",")[0] for line in lines[1:]] == ["6", "9", "12"]


def test_sweep_rejects_small_n(capsys):
    assert main(["sweep", "--k", "3", "--L", "1", "--n-from", "5", "--n-to", "9"]) == 2


def test_verify(capsys):
    code, out = run(capsys, "verify", "--k-max", "2")
    report = json.loads(out)
    assert code == 0
    assert report["passed"] is True
    assert {s["name"] for s in report["suites"]} == {"factorial", "ekr", "product", "singleton", "schrijver", "feasible"}


def test_gap(capsys):
    code, out = run(capsys, "gap", "--q", "2", "--n", "50,100", "--no-alpha")
    rows = json.loads(out)
    assert code == 0
    assert [r["minrank_bound"] for r in rows] == ["50/1", "100/1"]
    assert rows[0]["target_exponent"] == "1/3"
    assert rows[0]["alpha"] is None
    assert rows[0]["alpha_exact"] is None


def test_gap_alpha_budget_marks_lower_bound(capsys, monkeypatch, fresh_settings):
    monkeypatch.setenv("THETALAB_ALPHA_NODE_BUDGET", "0")
    fresh_settings()
    code, out = run(capsys, "gap", "--q", "2", "--n", "7")
    row = json.loads(out)[0]
    assert code == 0
    assert row["alpha_exact"] is False
    assert row["alpha"] >= 1


def test_alpha(capsys):
    code, out = run(capsys, "alpha", "--n", "5", "--k", "2", "--L", "1")
    report = json.loads(out)
    assert code == 0
    assert report["alpha"] == 4
    assert report["alpha_equals_theta"] is True


def test_alpha_cap_exceeded(capsys):
    assert main(["alpha", "--n", "12", "--k", "5", "--L", "1", "--cap", "100"]) == 4


def test_cap_from_environment(capsys, monkeypatch, fresh_settings):
    monkeypatch.setenv("THETALAB_CAP", "50")
    fresh_settings()
    assert main(["alpha", "--n", "9", "--k", "3", "--L", "1,2"]) == 4


def test_dump_graph(capsys):
    code, out = run(capsys, "dump-graph", "--n", "5", "--k", "2", "--L", "1")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 10
    assert lines[0] == "1,2: 5 8 9"


def test_metrics_out(capsys, tmp_path):
    path = tmp_path / "metrics.prom"
    assert main(["theta", "--n", "10", "--k", "3", "--L", "1", "--metrics-out", str(path)]) == 0
    assert "thetalab_lp_solves_total" in path.read_text()
