"""CLI tests: output shapes, float round-tripping, exit codes."""

import json
import math

import pytest
from click.testing import CliRunner

import stirling_remainder.verify as verify_mod
from stirling_remainder import (
    CheckRecord,
    VerificationReport,
    lambda_accuracy,
    sigma,
    theta_deriv_full,
)
from stirling_remainder.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def _rows(text):
    lines = text.strip().split("\n")
    return lines[0].split(","), [ln.split(",") for ln in lines[1:]]


def test_eval_csv_shape_and_roundtrip(runner):
    result = runner.invoke(main, ["eval", "--x", "1.0"])
    assert result.exit_code == 0
    header, rows = _rows(result.stdout)
    assert header == ["x", "quantity", "n", "value", "accuracy", "method"]
    assert len(rows) == 1
    x, quantity, n, value, accuracy, method = rows[0]
    assert quantity == "sigma" and n == ""
    ev = sigma(1.0)
    # repr printing means the text field round-trips to the exact double
    assert float(value) == ev.sigma
    assert float(accuracy) == ev.accuracy
    assert method == ev.method


def test_eval_quantity_variants(runner):
    ev = sigma(2.0)
    result = runner.invoke(main, ["eval", "--x", "2.0", "--quantity", "lambda"])
    _, rows = _rows(result.stdout)
    assert float(rows[0][3]) == ev.lambda_
    assert float(rows[0][4]) == lambda_accuracy(ev)

    result = runner.invoke(main, ["eval", "--x", "2.0", "--quantity", "h"])
    _, rows = _rows(result.stdout)
    assert float(rows[0][3]) == ev.h

    result = runner.invoke(main, ["eval", "--x", "2.0", "--quantity", "lngamma"])
    _, rows = _rows(result.stdout)
    assert float(rows[0][3]) == pytest.approx(math.lgamma(3.0), rel=1e-13)


def test_eval_theta_derivative(runner):
    result = runner.invoke(
        main, ["eval", "--x", "2.0", "--quantity", "theta", "--n", "2",
               "--format", "json"])
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["command"] == "eval"
    assert payload["params"]["n"] == 2
    rec = payload["records"][0]
    d = theta_deriv_full(2, 2.0)
    assert rec["value"] == d.value
    assert rec["accuracy"] == d.accuracy
    assert rec["n"] == 2


def test_eval_json_envelope(runner):
    result = runner.invoke(main, ["eval", "--x", "1.5", "--format", "json"])
    payload = json.loads(result.stdout)
    assert set(payload) == {"command", "params", "records"}
    assert payload["params"]["tol"] == 1e-10
    assert len(payload["records"]) == 1


@pytest.mark.parametrize(
    "args",
    [
        ["eval", "--x", "-1.0"],
        ["eval", "--x", "0.0"],
        ["eval", "--x", "1.0", "--n", "2"],  # --n without theta
        ["eval", "--x", "1.0", "--quantity", "bogus"],
        ["eval", "--x", "1.0", "--tol", "1e-14"],
        ["table", "--lo", "5.0", "--hi", "1.0"],
        ["table", "--count", "1"],
        ["verify", "--suite", "nonsense"],
    ],
)
def test_usage_and_domain_errors_exit_two(runner, args):
    result = runner.invoke(main, args)
    assert result.exit_code == 2


def test_eval_accuracy_failure_exits_one(runner):
    result = runner.invoke(
        main, ["eval", "--x", "0.3", "--tol", "1e-12", "--max-panels", "2"])
    assert result.exit_code == 1
    assert "error:" in result.stderr


def test_table_structure(runner):
    result = runner.invoke(
        main, ["table", "--lo", "1", "--hi", "4", "--count", "4",
               "--quantities", "sigma,h"])
    assert result.exit_code == 0
    header, rows = _rows(result.stdout)
    assert header == ["x", "sigma", "h", "sigma_accuracy", "h_accuracy"]
    assert len(rows) == 4
    assert float(rows[0][0]) == 1.0
    assert float(rows[-1][0]) == 4.0


def test_table_rejects_unknown_quantity(runner):
    result = runner.invoke(
        main, ["table", "--lo", "1", "--hi", "2", "--count", "2",
               "--quantities", "sigma,nope"])
    assert result.exit_code == 2


def test_table_output_is_deterministic(runner):
    args = ["table", "--lo", "0.5", "--hi", "50", "--count", "7"]
    first = runner.invoke(main, args)
    second = runner.invoke(main, args)
    assert first.exit_code == second.exit_code == 0
    assert first.stdout == second.stdout


def test_table_json_records(runner):
    result = runner.invoke(
        main, ["table", "--lo", "1", "--hi", "2", "--count", "2",
               "--quantities", "sigma", "--format", "json"])
    payload = json.loads(result.stdout)
    assert payload["command"] == "table"
    assert [rec["x"] for rec in payload["records"]] == [1.0, 2.0]
    assert all({"x", "sigma", "sigma_accuracy"} == set(r)
               for r in payload["records"])


def test_verify_pass_and_stream_separation(runner):
    result = runner.invoke(
        main, ["verify", "--suite", "thm1", "--lo", "0.5", "--hi", "10",
               "--count", "6"])
    assert result.exit_code == 0
    header, rows = _rows(result.stdout)
    assert header == ["check", "x", "n", "value", "bound", "margin", "status"]
    assert len(rows) == 5  # five adjacent pairs
    assert all(r[-1] == "pass" for r in rows)
    assert "sigma_increasing: PASS" in result.stderr
    assert "PASS" not in result.stdout


def test_verify_all_covers_every_check(runner):
    result = runner.invoke(
        main, ["verify", "--lo", "0.5", "--hi", "20", "--count", "5",
               "--nmax", "2"])
    assert result.exit_code == 0
    _, rows = _rows(result.stdout)
    names = {r[0] for r in rows}
    assert names == {
        "sigma_increasing", "lambda_decreasing", "complete_monotonicity",
        "alternating_differences", "sigma_envelope", "oracle_cross_check",
    }


def test_verify_json_schema(runner):
    result = runner.invoke(
        main, ["verify", "--suite", "envelope", "--lo", "1", "--hi", "4",
               "--count", "3", "--format", "json"])
    payload = json.loads(result.stdout)
    assert payload["command"] == "verify"
    report = payload["records"][0]
    assert set(report) == {"check_name", "passed", "worst_margin",
                           "worst_location", "details"}
    assert report["passed"] is True
    assert len(report["details"]) == 3


def test_verify_inconclusive_exits_three(runner):
    hi = math.nextafter(math.nextafter(1.0, 2.0), 2.0)
    result = runner.invoke(
        main, ["verify", "--suite", "thm1", "--lo", "1.0", "--hi", repr(hi),
               "--count", "2"])
    assert result.exit_code == 3
    assert "INCONCLUSIVE" in result.stderr


def test_verify_failure_exits_one(runner, monkeypatch):
    rec = CheckRecord(x=1.0, n=None, value=-1.0, bound=0.5, margin=-1.5,
                      status="fail")
    report = VerificationReport(
        check_name="sigma_increasing", passed=False, worst_margin=-1.5,
        worst_location=1.0, details=[rec])
    monkeypatch.setattr(verify_mod, "check_sigma_increasing",
                        lambda grid, cfg: report)
    result = runner.invoke(main, ["verify", "--suite", "thm1"])
    assert result.exit_code == 1
    assert "sigma_increasing: FAIL" in result.stderr
