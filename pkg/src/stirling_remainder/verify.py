"""Grid-based certification of the remainder family's structural claims.

Each check evaluates quantities with certified accuracies and grades
every comparison three ways:

    pass          the claimed inequality holds with margin to spare
                  even after granting both sides their error bounds;
    fail          the opposite inequality holds with margin, i.e. a
                  certified violation;
    inconclusive  the bounds overlap, so the grid spacing or tolerance
                  cannot resolve the claim at this point.

A report passes only when every record passes, and that flag is a pure
function of the records, so any outcome can be reproduced from the
details alone.
"""
import math
from dataclasses import dataclass

import numpy as np

from . import oracle, remainder
from .errors import DomainError
from .remainder import DEFAULT_CONFIG, EvalConfig

_STATUS_PASS = "pass"
_STATUS_FAIL = "fail"
_STATUS_INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class GridSpec:
    """Evaluation grid on (0, inf): log- or linear-spaced."""
    lo: float
    hi: float
    count: int
    scale: str = "log"

    def __post_init__(self):
        if not (isinstance(self.lo, float) and math.isfinite(self.lo)
                and self.lo > 0.0):
            raise DomainError(f"lo must be a finite float > 0, got {self.lo!r}")
        if not (isinstance(self.hi, float) and math.isfinite(self.hi)
                and self.hi > self.lo):
            raise DomainError(f"hi must be finite and > lo, got {self.hi!r}")
        if not (isinstance(self.count, int) and not isinstance(self.count, bool)
                and self.count >= 2):
            raise DomainError(f"count must be an int >= 2, got {self.count!r}")
        if self.scale not in ("log", "linear"):
            raise DomainError(f"scale must be 'log' or 'linear', "
                              f"got {self.scale!r}")

    def points(self) -> np.ndarray:
        if self.scale == "log":
            return np.geomspace(self.lo, self.hi, self.count)
        return np.linspace(self.lo, self.hi, self.count)


DEFAULT_GRID = GridSpec(1e-2, 1e2, 50, "log")


@dataclass(frozen=True)
class CheckRecord:
    """One graded comparison: value must exceed bound for a pass."""
    x: float
    n: int | None
    value: float
    bound: float
    margin: float
    status: str


@dataclass(frozen=True)
class VerificationReport:
    check_name: str
    passed: bool
    worst_margin: float
    worst_location: float
    details: tuple[CheckRecord, ...]

    @property
    def has_failure(self) -> bool:
        return any(r.status == _STATUS_FAIL for r in self.details)

    @property
    def has_inconclusive(self) -> bool:
        return any(r.status == _STATUS_INCONCLUSIVE for r in self.details)


def _grade(value: float, bound: float) -> tuple[float, str]:
    margin = value - bound
    if margin > 0.0:
        return margin, _STATUS_PASS
    if value + bound < 0.0:
        return margin, _STATUS_FAIL
    return margin, _STATUS_INCONCLUSIVE


def _record(x: float, n: int | None, value: float, bound: float) -> CheckRecord:
    margin, status = _grade(value, bound)
    return CheckRecord(x=float(x), n=n, value=value, bound=bound,
                       margin=margin, status=status)


def _report(name: str, records: list[CheckRecord]) -> VerificationReport:
    worst = min(records, key=lambda r: r.margin)
    return VerificationReport(
        check_name=name,
        passed=all(r.status == _STATUS_PASS for r in records),
        worst_margin=worst.margin,
        worst_location=worst.x,
        details=tuple(records))


def check_sigma_increasing(grid: GridSpec = DEFAULT_GRID,
                           cfg: EvalConfig = DEFAULT_CONFIG) \
        -> VerificationReport:
    """Certify that sigma is strictly increasing across the grid.

    Each record grades one consecutive pair: value is the forward
    difference, bound the sum of the two accuracies, x the right
    endpoint.
    """
    evs = [remainder.sigma(float(x), cfg) for x in grid.points()]
    records = [
        _record(b.x, None, b.sigma - a.sigma, a.accuracy + b.accuracy)
        for a, b in zip(evs, evs[1:])
    ]
    return _report("sigma_increasing", records)


def check_lambda_decreasing(grid: GridSpec = DEFAULT_GRID,
                            cfg: EvalConfig = DEFAULT_CONFIG) \
        -> VerificationReport:
    """Certify that lambda is strictly decreasing across the grid."""
    evs = [remainder.sigma(float(x), cfg) for x in grid.points()]
    records = [
        _record(b.x, None, a.lambda_ - b.lambda_,
                remainder.lambda_accuracy(a) + remainder.lambda_accuracy(b))
        for a, b in zip(evs, evs[1:])
    ]
    return _report("lambda_decreasing", records)


def check_envelope(grid: GridSpec = DEFAULT_GRID,
                   cfg: EvalConfig = DEFAULT_CONFIG) -> VerificationReport:
    """Certify 0 < sigma < 1 pointwise: value is min(sigma, 1 - sigma)."""
    records = []
    for x in grid.points():
        ev = remainder.sigma(float(x), cfg)
        records.append(_record(ev.x, None, min(ev.sigma, 1.0 - ev.sigma),
                               ev.accuracy))
    return _report("sigma_envelope", records)


def check_complete_monotonicity(grid: GridSpec = DEFAULT_GRID,
                                n_max: int | None = None,
                                cfg: EvalConfig = DEFAULT_CONFIG) \
        -> VerificationReport:
    """Certify (-1)^n theta^(n) > 0 for n = 0..n_max across the grid."""
    if n_max is None:
        n_max = cfg.max_deriv_order
    if not isinstance(n_max, int) or isinstance(n_max, bool) or n_max < 0:
        raise DomainError(f"n_max must be an int >= 0, got {n_max!r}")
    if n_max > cfg.max_deriv_order:
        raise DomainError(f"n_max={n_max} exceeds "
                          f"max_deriv_order={cfg.max_deriv_order}")
    records = []
    for x in grid.points():
        for n in range(n_max + 1):
            d = remainder.theta_deriv_full(n, float(x), cfg)
            signed = d.value if n % 2 == 0 else -d.value
            records.append(_record(d.x, n, signed, d.accuracy))
    return _report("complete_monotonicity", records)


def _alternating_records(fn, points, n_max: int, step: float) \
        -> list[CheckRecord]:
    """Grade (-1)^n Delta_step^n f > 0 for n = 1..n_max at each point.

    fn maps x to (value, accuracy).  The alternating forward difference
    of a completely monotone f is positive after the sign flip; its
    bound is the binomially weighted sum of the stencil accuracies,
    which is why too small a step drowns the signal (inconclusive, not
    fail).
    """
    cache: dict[float, tuple[float, float]] = {}

    def at(z: float) -> tuple[float, float]:
        if z not in cache:
            cache[z] = fn(z)
        return cache[z]

    records = []
    for x in points:
        xf = float(x)
        for n in range(1, n_max + 1):
            terms = []
            bound = 0.0
            for j in range(n + 1):
                v, a = at(xf + j * step)
                c = math.comb(n, j)
                # (-1)^n Delta^n f(x) = sum_j (-1)^j C(n,j) f(x + j step)
                terms.append(c * v if j % 2 == 0 else -c * v)
                bound += c * a
            records.append(_record(xf, n, math.fsum(terms), bound))
    return records


def check_alternating_differences(grid: GridSpec = DEFAULT_GRID,
                                  n_max: int = 4, step: float = 0.1,
                                  cfg: EvalConfig = DEFAULT_CONFIG) \
        -> VerificationReport:
    """Certify the alternating finite differences of theta up to n_max.

    This corroborates the derivative-route monotonicity check without
    integrating derivatives: it only ever evaluates theta itself.
    """
    if not isinstance(n_max, int) or isinstance(n_max, bool) \
            or not 1 <= n_max <= 6:
        raise DomainError(f"n_max must be an int in [1, 6], got {n_max!r}")
    if not (isinstance(step, float) and math.isfinite(step) and step > 0.0):
        raise DomainError(f"step must be a finite float > 0, got {step!r}")

    def theta_at(z: float) -> tuple[float, float]:
        ev = remainder.sigma(z, cfg)
        return ev.theta, remainder.theta_accuracy(ev)

    records = _alternating_records(theta_at, grid.points(), n_max, step)
    return _report("alternating_differences", records)


def cross_check_vs_oracle(grid: GridSpec = DEFAULT_GRID,
                          cfg: EvalConfig = DEFAULT_CONFIG) \
        -> VerificationReport:
    """Compare integral-route sigma against the scalar reference.

    value is the allowed discrepancy (tol + reference bound) minus the
    observed one, so positive margins mean agreement.
    """
    records = []
    for x in grid.points():
        ev = remainder.sigma(float(x), cfg)
        ref = oracle.sigma_ref(float(x))
        allowed = cfg.tol + ref.bound
        diff = abs(ev.sigma - ref.value)
        margin = allowed - diff
        status = _STATUS_PASS if margin > 0.0 else _STATUS_FAIL
        records.append(CheckRecord(x=ev.x, n=None, value=diff, bound=allowed,
                                   margin=margin, status=status))
    return _report("oracle_cross_check", records)
