"""Command-line interface.

Three subcommands: eval (one quantity at one point), table (a grid
sweep), verify (structural checks with certified margins).  Output goes
to stdout as CSV or JSON; progress summaries for verify go to stderr.
Floats are printed with repr, the shortest digit string that round-trips
to the same double, so identical invocations produce identical bytes.

Exit codes: 0 success; 1 accuracy or verification failure; 2 bad usage
or domain error; 3 verification inconclusive (nothing failed, but some
comparison could not be resolved).
"""
import csv
import io
import json
import sys

import click

from . import oracle, remainder, verify
from .errors import (AccuracyError, BudgetExceededError, DomainError,
                     StirlingRemainderError)

QUANTITIES = ("sigma", "lambda", "theta", "h", "lngamma")
SUITES = ("thm1", "thm2", "thm3", "envelope", "oracle", "all")
FORMATS = ("csv", "json")


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def _json_text(command: str, params: dict, records) -> str:
    return json.dumps({"command": command, "params": params,
                       "records": records}, indent=2) + "\n"


def _die(message: str, code: int):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _config(tol, gl_order, max_panels) -> remainder.EvalConfig:
    return remainder.EvalConfig(tol=tol, gl_order=gl_order,
                                max_panels=max_panels)


def _eval_quantity(ev: remainder.RemainderEval, quantity: str) \
        -> tuple[float, float]:
    if quantity == "sigma":
        return ev.sigma, ev.accuracy
    if quantity == "lambda":
        return ev.lambda_, remainder.lambda_accuracy(ev)
    if quantity == "theta":
        return ev.theta, remainder.theta_accuracy(ev)
    if quantity == "h":
        return ev.h, remainder.h_accuracy(ev)
    return remainder.ln_gamma_from_eval(ev)


@click.group()
def main():
    """Stirling remainder toolkit.

    Evaluates the remainder scale sigma(x) in
    Gamma(x+1) = sqrt(2 pi x) (x/e)^x exp(sigma(x)/(12 x)) through its
    Laplace-transform integral, along with h = sigma/(12 x),
    lambda = expm1(h), theta = 1 - sigma, theta derivatives, and
    ln Gamma(x+1); verifies monotonicity and complete-monotonicity
    properties with certified margins.
    """


@main.command("eval")
@click.option("--x", "x", type=float, required=True,
              help="Evaluation point, x > 0.")
@click.option("--quantity", type=click.Choice(QUANTITIES), default="sigma",
              show_default=True)
@click.option("--n", type=int, default=None,
              help="Derivative order; only valid with --quantity theta.")
@click.option("--tol", type=float, default=1e-10, show_default=True,
              help="Absolute accuracy target.")
@click.option("--gl-order", type=int, default=96, show_default=True,
              help="Gauss-Laguerre order for x >= 1.")
@click.option("--max-panels", type=int, default=200, show_default=True,
              help="Adaptive panel budget for x < 1.")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="csv",
              show_default=True)
def cmd_eval(x, quantity, n, tol, gl_order, max_panels, fmt):
    """Evaluate one quantity at one point."""
    if n is not None and quantity != "theta":
        raise click.UsageError("--n applies only to --quantity theta")
    try:
        cfg = _config(tol, gl_order, max_panels)
        if quantity == "theta" and n is not None:
            d = remainder.theta_deriv_full(n, x, cfg)
            value, accuracy, method = d.value, d.accuracy, d.method
        else:
            ev = remainder.sigma(x, cfg)
            value, accuracy = _eval_quantity(ev, quantity)
            method = ev.method
    except DomainError as exc:
        _die(str(exc), 2)
    except (AccuracyError, BudgetExceededError) as exc:
        _die(str(exc), 1)
    except StirlingRemainderError as exc:
        _die(str(exc), 1)
    record = {"x": x, "quantity": quantity, "n": n, "value": value,
              "accuracy": accuracy, "method": method}
    if fmt == "json":
        params = {"x": x, "quantity": quantity, "n": n, "tol": tol,
                  "gl_order": gl_order, "max_panels": max_panels}
        click.echo(_json_text("eval", params, [record]), nl=False)
    else:
        header = ["x", "quantity", "n", "value", "accuracy", "method"]
        row = [x, quantity, n, value, accuracy, method]
        click.echo(_csv_text(header, [row]), nl=False)


def _parse_quantities(spec: str) -> list[str]:
    names = [q.strip() for q in spec.split(",") if q.strip()]
    if not names:
        raise click.UsageError("--quantities must name at least one quantity")
    seen = []
    for q in names:
        if q not in QUANTITIES:
            raise click.UsageError(
                f"unknown quantity {q!r}; choose from {', '.join(QUANTITIES)}")
        if q not in seen:
            seen.append(q)
    return seen


@main.command("table")
@click.option("--lo", type=float, default=1e-2, show_default=True)
@click.option("--hi", type=float, default=1e2, show_default=True)
@click.option("--count", type=int, default=50, show_default=True)
@click.option("--scale", type=click.Choice(("log", "linear")), default="log",
              show_default=True)
@click.option("--quantities", default="sigma,lambda,theta", show_default=True,
              help="Comma-separated subset of " + ",".join(QUANTITIES) + ".")
@click.option("--tol", type=float, default=1e-10, show_default=True)
@click.option("--gl-order", type=int, default=96, show_default=True)
@click.option("--max-panels", type=int, default=200, show_default=True)
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="csv",
              show_default=True)
def cmd_table(lo, hi, count, scale, quantities, tol, gl_order, max_panels,
              fmt):
    """Sweep a grid and tabulate quantities with accuracies."""
    names = _parse_quantities(quantities)
    try:
        cfg = _config(tol, gl_order, max_panels)
        grid = verify.GridSpec(lo, hi, count, scale)
        rows = []
        records = []
        for x in grid.points():
            ev = remainder.sigma(float(x), cfg)
            pairs = [_eval_quantity(ev, q) for q in names]
            rows.append([ev.x] + [p[0] for p in pairs] + [p[1] for p in pairs])
            rec = {"x": ev.x}
            rec.update({q: p[0] for q, p in zip(names, pairs)})
            rec.update({f"{q}_accuracy": p[1] for q, p in zip(names, pairs)})
            records.append(rec)
    except DomainError as exc:
        _die(str(exc), 2)
    except (AccuracyError, BudgetExceededError) as exc:
        _die(str(exc), 1)
    if fmt == "json":
        params = {"lo": lo, "hi": hi, "count": count, "scale": scale,
                  "quantities": names, "tol": tol, "gl_order": gl_order,
                  "max_panels": max_panels}
        click.echo(_json_text("table", params, records), nl=False)
    else:
        header = (["x"] + names + [f"{q}_accuracy" for q in names])
        click.echo(_csv_text(header, rows), nl=False)


def _suite_reports(suite, grid, nmax, step, cfg):
    reports = []
    if suite in ("thm1", "all"):
        reports.append(verify.check_sigma_increasing(grid, cfg))
    if suite in ("thm2", "all"):
        reports.append(verify.check_lambda_decreasing(grid, cfg))
    if suite in ("thm3", "all"):
        reports.append(verify.check_complete_monotonicity(grid, nmax, cfg))
        alt_n = min(4, nmax)
        if alt_n >= 1:
            reports.append(verify.check_alternating_differences(
                grid, alt_n, step, cfg))
    if suite in ("envelope", "all"):
        reports.append(verify.check_envelope(grid, cfg))
    if suite in ("oracle", "all"):
        reports.append(verify.cross_check_vs_oracle(grid, cfg))
    return reports


@main.command("verify")
@click.option("--suite", type=click.Choice(SUITES), default="all",
              show_default=True)
@click.option("--lo", type=float, default=1e-2, show_default=True)
@click.option("--hi", type=float, default=1e2, show_default=True)
@click.option("--count", type=int, default=50, show_default=True)
@click.option("--scale", type=click.Choice(("log", "linear")), default="log",
              show_default=True)
@click.option("--nmax", type=int, default=8, show_default=True,
              help="Highest derivative order for the thm3 suite.")
@click.option("--diff-step", type=float, default=0.1, show_default=True,
              help="Step for the alternating-difference corroboration.")
@click.option("--tol", type=float, default=1e-10, show_default=True)
@click.option("--gl-order", type=int, default=96, show_default=True)
@click.option("--max-panels", type=int, default=200, show_default=True)
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="csv",
              show_default=True)
def cmd_verify(suite, lo, hi, count, scale, nmax, diff_step, tol, gl_order,
               max_panels, fmt):
    """Run structural checks and report certified margins."""
    try:
        cfg = _config(tol, gl_order, max_panels)
        grid = verify.GridSpec(lo, hi, count, scale)
        reports = _suite_reports(suite, grid, nmax, diff_step, cfg)
    except DomainError as exc:
        _die(str(exc), 2)
    except (AccuracyError, BudgetExceededError) as exc:
        _die(str(exc), 1)

    if fmt == "json":
        payload = [
            {"check_name": r.check_name, "passed": r.passed,
             "worst_margin": r.worst_margin,
             "worst_location": r.worst_location,
             "details": [
                 {"x": d.x, "n": d.n, "value": d.value, "bound": d.bound,
                  "margin": d.margin, "status": d.status}
                 for d in r.details]}
            for r in reports
        ]
        params = {"suite": suite, "lo": lo, "hi": hi, "count": count,
                  "scale": scale, "nmax": nmax, "diff_step": diff_step,
                  "tol": tol, "gl_order": gl_order, "max_panels": max_panels}
        click.echo(_json_text("verify", params, payload), nl=False)
    else:
        header = ["check", "x", "n", "value", "bound", "margin", "status"]
        rows = [
            [r.check_name, d.x, d.n, d.value, d.bound, d.margin, d.status]
            for r in reports for d in r.details
        ]
        click.echo(_csv_text(header, rows), nl=False)

    for r in reports:
        verdict = "PASS" if r.passed else (
            "FAIL" if r.has_failure else "INCONCLUSIVE")
        click.echo(
            f"{r.check_name}: {verdict} "
            f"(worst margin {r.worst_margin:.3e} at x={r.worst_location!r})",
            err=True)

    if any(r.has_failure for r in reports):
        sys.exit(1)
    if any(r.has_inconclusive for r in reports):
        sys.exit(3)


if __name__ == "__main__":
    main()
