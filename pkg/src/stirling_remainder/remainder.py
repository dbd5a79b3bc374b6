"""Stirling remainder quantities via their Laplace-transform integrals.

sigma(x) in (0, 1) scales the remainder in Stirling's formula,
Gamma(x+1) = sqrt(2 pi x) (x/e)^x exp(sigma(x)/(12 x)), and

    h(x) = sigma(x)/(12 x) = integral_0^infty phi(t) e^{-x t} dt.

Derived quantities: lambda = expm1(h) (the multiplicative correction
minus 1), theta = 1 - sigma, and theta's derivatives

    theta^(n)(x) = 12 (-1)^n integral_0^infty t^n psi(t) e^{-x t} dt,

all positive after the sign flip, which is what the verification checks
certify.  Every evaluation reports a certified absolute accuracy.

For x >= 1 the substitution s = x t turns each integral into a smooth
Gauss-Laguerre problem; an embedded pair of rules supplies the error
estimate, escalating the order if needed.  For x < 1 the integrand
outlives the weight's unit scale and the adaptive panel integrator with
an analytic tail bound takes over.
"""
import math
from dataclasses import dataclass

from . import kernels
from .errors import AccuracyError, DomainError
from .quadrature import (MAX_ORDER, gauss_laguerre, integrate_adaptive,
                         integrate_laguerre)

_EPS = 2.220446049250313e-16
_LN_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)

# below this x, Gauss-Laguerre nodes cluster inside the kernel's own scale
GL_THRESHOLD = 1.0

# sup of psi, used only to size relative accuracy targets
_PSI_SUP = 0.006


def _is_int(n) -> bool:
    return isinstance(n, int) and not isinstance(n, bool)


@dataclass(frozen=True)
class EvalConfig:
    """Evaluation parameters shared by all integral-route quantities."""
    tol: float = 1e-10
    gl_order: int = 96
    max_panels: int = 200
    max_deriv_order: int = 8

    def __post_init__(self):
        if not (isinstance(self.tol, float) and math.isfinite(self.tol)):
            raise DomainError(f"tol must be a finite float, got {self.tol!r}")
        if self.tol < 1e-13:
            raise DomainError(
                f"tol={self.tol!r} is below 1e-13; double-precision "
                "quadrature cannot certify tighter targets")
        if not _is_int(self.gl_order) or not 1 <= self.gl_order <= MAX_ORDER:
            raise DomainError(
                f"gl_order must be an int in [1, {MAX_ORDER}], "
                f"got {self.gl_order!r}")
        if not _is_int(self.max_panels) or self.max_panels < 1:
            raise DomainError(
                f"max_panels must be an int >= 1, got {self.max_panels!r}")
        if not _is_int(self.max_deriv_order) or self.max_deriv_order < 0:
            raise DomainError(
                f"max_deriv_order must be an int >= 0, "
                f"got {self.max_deriv_order!r}")


DEFAULT_CONFIG = EvalConfig()


@dataclass(frozen=True)
class RemainderEval:
    """One evaluation of the remainder family at a point."""
    x: float
    sigma: float
    h: float
    lambda_: float
    theta: float
    accuracy: float     # certified absolute bound on sigma (and theta)
    method: str         # "gauss_laguerre" or "adaptive"


@dataclass(frozen=True)
class DerivEval:
    """One theta derivative: value = theta^(n)(x)."""
    n: int
    x: float
    value: float
    accuracy: float
    method: str


def _check_x(x) -> float:
    try:
        xf = float(x)
    except (TypeError, ValueError):
        raise DomainError(f"x must be a real number, got {x!r}") from None
    if not math.isfinite(xf) or xf <= 0.0:
        raise DomainError(f"x must be finite and > 0, got {x!r}")
    return xf


def _ladder(start: int):
    order = start
    while True:
        yield order
        if order >= MAX_ORDER:
            return
        order = min(MAX_ORDER, max(order + 8, (3 * order) // 2))


def _gl_pair(f, order: int) -> tuple[float, float]:
    """Integral estimate plus an embedded lower-order discrepancy."""
    hi = integrate_laguerre(f, gauss_laguerre(order))
    lo = integrate_laguerre(f, gauss_laguerre(max(4, (2 * order) // 3)))
    return hi, abs(hi - lo)


def _upper_tail(m: int, y: float) -> float:
    """Upper bound on integral_y^infty u^m e^{-u} du (exact for m >= 0)."""
    if m < 0:
        return y ** m * math.exp(-y)
    s = math.fsum(y ** j / math.factorial(j) for j in range(m + 1))
    return math.factorial(m) * math.exp(-y) * s


# Pointwise closed-form kernel bounds integrated against the weight, so
# the reported accuracies stay sound even when the quadrature pair agrees
# to the last bit.  phi: |err| <= 9e-15 (1 + 1/t^2) everywhere; psi:
# |err| <= 5e-18 below t = 1 and <= 1.1e-14/t^2 above.

def _phi_floor_gl(x: float) -> float:
    return 5e-17 + 4.5e-14 * math.exp(-0.5 * x)


def _phi_floor_adaptive(x: float) -> float:
    return (5e-17 + 4.5e-14 * math.exp(-0.5 * x)) / x


def _psi_floor_gl(n: int, x: float) -> float:
    return 5e-18 * math.factorial(n) + 1.1e-14 * x * x * _upper_tail(n - 2, x)


def _psi_floor_adaptive(n: int, x: float) -> float:
    return 5e-18 + 1.1e-14 * x ** (1 - n) * _upper_tail(n - 2, x)


def _binet_h(x: float, cfg: EvalConfig) -> tuple[float, float, str]:
    """h(x) with a certified absolute accuracy on the sigma scale / 12x."""
    if x >= GL_THRESHOLD:
        f = lambda s: kernels.phi_closed(s / x)
        floor = _phi_floor_gl(x)
        best_j, best_acc = math.inf, math.inf
        for order in _ladder(cfg.gl_order):
            j, dj = _gl_pair(f, order)
            acc_j = dj + floor
            if 12.0 * acc_j <= cfg.tol:
                return j / x, acc_j / x, "gauss_laguerre"
            if acc_j < best_acc:
                best_j, best_acc = j, acc_j
        raise AccuracyError(
            f"sigma(x={x!r}): best certified accuracy {12.0 * best_acc:.3e} "
            f"exceeds tol={cfg.tol:.3e} at gl_order={MAX_ORDER}",
            value=12.0 * best_j, achieved=12.0 * best_acc)
    floor = _phi_floor_adaptive(x)
    tol_i = cfg.tol / (12.0 * x) - floor
    if tol_i <= 0.0:
        raise AccuracyError(
            f"sigma(x={x!r}): tol={cfg.tol:.3e} sits below the kernel "
            f"rounding floor {12.0 * x * floor:.3e} at this x",
            achieved=12.0 * x * floor)
    res = integrate_adaptive(kernels.phi_closed, x, tol_i, cfg.max_panels,
                             sup_f=kernels.PHI_AT_ZERO)
    return res.value, res.error_estimate + floor, "adaptive"


def sigma(x, cfg: EvalConfig = DEFAULT_CONFIG) -> RemainderEval:
    """Evaluate sigma(x) and its companions at finite x > 0.

    The returned record keeps the algebra exact by construction:
    sigma = 12 x h, theta = 1 - sigma, lambda = expm1(h).
    """
    xf = _check_x(x)
    h, acc_h, method = _binet_h(xf, cfg)
    sig = 12.0 * xf * h
    return RemainderEval(x=xf, sigma=sig, h=h, lambda_=math.expm1(h),
                         theta=1.0 - sig, accuracy=12.0 * xf * acc_h,
                         method=method)


def lambda_fn(x, cfg: EvalConfig = DEFAULT_CONFIG) -> RemainderEval:
    """Evaluate lambda(x) = expm1(h(x)); same record as sigma."""
    return sigma(x, cfg)


def h_accuracy(ev: RemainderEval) -> float:
    """Certified absolute accuracy of ev.h."""
    return ev.accuracy / (12.0 * ev.x)


def lambda_accuracy(ev: RemainderEval) -> float:
    """Certified absolute accuracy of ev.lambda_."""
    return (1.0 + ev.lambda_) * h_accuracy(ev) + 4.0 * _EPS * abs(ev.lambda_)


def theta_accuracy(ev: RemainderEval) -> float:
    """Certified absolute accuracy of ev.theta = 1 - ev.sigma."""
    return ev.accuracy + 0.5 * math.ulp(1.0)


def _check_deriv_order(n, cfg: EvalConfig) -> int:
    if not _is_int(n) or n < 0:
        raise DomainError(f"n must be an integer >= 0, got {n!r}")
    if n > cfg.max_deriv_order:
        raise DomainError(
            f"n={n} exceeds max_deriv_order={cfg.max_deriv_order}; the "
            f"t^n psi moment grows like n!, so raise the cap deliberately")
    return n


def _theta_tail(n: int, x: float):
    """Tail bound for integral_T^infty t^n psi(t) e^{-x t} dt, T >= 4.

    Uses psi(t) <= 1/(2 t^2), valid from t = 4 on; the adaptive cutoff
    search never evaluates below T = 4.
    """
    m = n - 2
    if m < 0:
        return lambda T: 0.5 * T ** m * math.exp(-x * T) / x
    return lambda T: 0.5 * x ** (-(m + 1)) * _upper_tail(m, x * T)


def theta_deriv_full(n, x, cfg: EvalConfig = DEFAULT_CONFIG) -> DerivEval:
    """theta^(n)(x) with certified accuracy.

    Accuracy targets are absolute (cfg.tol) while |theta^(n)| stays of
    order one and become relative once the value grows beyond that, which
    happens for higher n at small x where the n! moment inflates the
    integral.
    """
    xf = _check_x(x)
    nn = _check_deriv_order(n, cfg)
    sign = -1.0 if nn % 2 else 1.0
    if xf >= GL_THRESHOLD:
        f = lambda s: (s ** nn) * kernels.psi_closed(s / xf)
        floor = _psi_floor_gl(nn, xf)
        scale = 12.0 / xf ** (nn + 1)
        best_v, best_acc = math.inf, math.inf
        for order in _ladder(cfg.gl_order):
            j, dj = _gl_pair(f, order)
            value = sign * scale * j
            acc = scale * (dj + floor)
            if acc <= cfg.tol * max(1.0, abs(value)):
                return DerivEval(n=nn, x=xf, value=value, accuracy=acc,
                                 method="gauss_laguerre")
            if acc < best_acc:
                best_v, best_acc = value, acc
        raise AccuracyError(
            f"theta_deriv(n={nn}, x={xf!r}): best certified accuracy "
            f"{best_acc:.3e} misses tol={cfg.tol:.3e}",
            value=best_v, achieved=best_acc)
    upper = _PSI_SUP * math.factorial(nn) / xf ** (nn + 1)
    if nn >= 2:
        upper = min(upper, 0.5 * math.factorial(nn - 2) / xf ** (nn - 1))
    target = cfg.tol * max(1.0, 12.0 * upper)
    floor = _psi_floor_adaptive(nn, xf)
    tol_raw = target / 12.0 - floor
    if tol_raw <= 0.0:
        raise AccuracyError(
            f"theta_deriv(n={nn}, x={xf!r}): tol={cfg.tol:.3e} sits below "
            f"the kernel rounding floor {12.0 * floor:.3e}",
            achieved=12.0 * floor)
    g = lambda ts: (ts ** nn) * kernels.psi_closed(ts)
    res = integrate_adaptive(g, xf, tol_raw, cfg.max_panels,
                             tail_bound=_theta_tail(nn, xf))
    return DerivEval(n=nn, x=xf, value=sign * 12.0 * res.value,
                     accuracy=12.0 * (res.error_estimate + floor),
                     method="adaptive")


def theta_deriv(n, x, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """theta^(n)(x); see theta_deriv_full for the record with accuracy."""
    return theta_deriv_full(n, x, cfg).value


def ln_gamma_binet_full(x, cfg: EvalConfig = DEFAULT_CONFIG) \
        -> tuple[float, float, str]:
    """ln Gamma(x+1) = (x+1/2) ln x - x + ln sqrt(2 pi) + h(x).

    Returns (value, accuracy, method).  The accuracy covers the integral
    term h; the elementary prefactor contributes at most a few ulps of
    its own magnitude on top.
    """
    xf = _check_x(x)
    h, acc_h, method = _binet_h(xf, cfg)
    value = (xf + 0.5) * math.log(xf) - xf + _LN_SQRT_2PI + h
    return value, acc_h, method


def ln_gamma_binet(x, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """ln Gamma(x+1) via the integral route; see ln_gamma_binet_full."""
    return ln_gamma_binet_full(x, cfg)[0]


def ln_gamma_from_eval(ev: RemainderEval) -> tuple[float, float]:
    """(ln Gamma(x+1), accuracy) reusing an existing evaluation."""
    value = (ev.x + 0.5) * math.log(ev.x) - ev.x + _LN_SQRT_2PI + ev.h
    return value, h_accuracy(ev)
