"""Gauss-Laguerre rules and adaptive integration against e^{-x t}.

Two integration strategies for integral_0^infty f(t) e^{-x t} dt:

  * substitute s = x t and apply a fixed Gauss-Laguerre rule (excellent
    once x is moderate, since the transformed integrand is smooth on the
    weight's own scale);
  * split [0, T] into panels with an embedded Gauss-Legendre pair per
    panel and a certified analytic bound for the tail past T (needed for
    small x, where the integrand decays far more slowly than the weight).
"""
import heapq
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import AccuracyError, DomainError, EvaluationError

MAX_ORDER = 256

_TINY = 5e-324  # smallest positive double


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights approximating integral_0^infty f(s) e^{-s} ds."""
    order: int
    nodes: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        if not isinstance(self.order, int) or isinstance(self.order, bool):
            raise DomainError(f"order must be an int, got {self.order!r}")
        if not 1 <= self.order <= MAX_ORDER:
            raise DomainError(
                f"order must be in [1, {MAX_ORDER}], got {self.order}")
        nodes, weights = self.nodes, self.weights
        if nodes.shape != (self.order,) or weights.shape != (self.order,):
            raise DomainError("nodes and weights must both have length order")
        if not (np.all(np.isfinite(nodes)) and np.all(nodes > 0.0)
                and np.all(np.diff(nodes) > 0.0)):
            raise DomainError("nodes must be finite, positive, increasing")
        if not (np.all(np.isfinite(weights)) and np.all(weights > 0.0)):
            raise DomainError("weights must be finite and positive")
        if abs(math.fsum(weights) - 1.0) > 1e-13:
            raise DomainError("weights must sum to 1 within 1e-13")
        if nodes[-1] >= 4.0 * self.order:
            raise DomainError("largest node must stay below 4*order")


def _scaled_laguerre(order: int, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """M_order(x) and M_{order-1}(x), where M_k(x) = L_k(x) exp(-x/2).

    The exp(-x/2) scaling keeps every intermediate finite for x < 4*order
    (plain L_k overflows near order 150), and exp(-x/2) itself stays
    normal there since 4*MAX_ORDER/2 = 512 < 745.
    """
    m_prev = np.exp(-0.5 * x)
    m = (1.0 - x) * m_prev
    for k in range(1, order):
        m, m_prev = ((2.0 * k + 1.0 - x) * m - k * m_prev) / (k + 1.0), m
    return m, m_prev


@lru_cache(maxsize=None)
def gauss_laguerre(order: int) -> QuadratureRule:
    """Gauss-Laguerre rule of the given order.

    Eigenvalues of the symmetrized Jacobi matrix (diagonal 2i+1, first
    off-diagonal i) seed the nodes; two Newton steps on the scaled
    polynomial polish them to machine precision, which matters above
    order ~50 where raw eigenvalues lose several digits.  Weights come
    from w_i = x_i e^{-x_i} / ((n+1) M_{n+1}(x_i))^2.  Weights whose true
    size falls below the smallest positive double are clamped to it: they
    are real and positive but not representable, and contribute nothing
    at double precision.
    """
    if not isinstance(order, int) or isinstance(order, bool):
        raise DomainError(f"order must be an int, got {order!r}")
    if not 1 <= order <= MAX_ORDER:
        raise DomainError(f"order must be in [1, {MAX_ORDER}], got {order}")
    if order == 1:
        nodes = np.array([1.0])
        weights = np.array([1.0])
    else:
        k = np.arange(order, dtype=np.float64)
        jac = np.diag(2.0 * k + 1.0)
        off = np.arange(1.0, order)
        jac += np.diag(off, 1) + np.diag(off, -1)
        nodes = np.linalg.eigvalsh(jac)
        for _ in range(2):
            m_n, m_nm1 = _scaled_laguerre(order, nodes)
            # x L_n'(x) = n (L_n(x) - L_{n-1}(x))
            deriv = order * (m_n - m_nm1) / nodes
            nodes = nodes - m_n / deriv
        m_np1, _ = _scaled_laguerre(order + 1, nodes)
        weights = nodes * np.exp(-nodes) / ((order + 1.0) * m_np1) ** 2
        weights /= math.fsum(weights)
        weights[weights < _TINY] = _TINY
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return QuadratureRule(order, nodes, weights)


def _eval_on(f, xs: np.ndarray, where: str) -> np.ndarray:
    """Apply f over the node array, accepting scalar-only callables."""
    try:
        out = np.asarray(f(xs), dtype=np.float64)
        if out.shape != xs.shape:
            raise TypeError
    except (TypeError, ValueError):
        out = np.array([float(f(float(x))) for x in xs])
    finite = np.isfinite(out)
    if not np.all(finite):
        i = int(np.argmin(finite))
        raise EvaluationError(
            f"{where}: integrand returned {out[i]!r} at node {xs[i]!r}")
    return out


def integrate_laguerre(f, rule: QuadratureRule) -> float:
    """Weighted node sum: integral_0^infty f(s) e^{-s} ds."""
    if not isinstance(rule, QuadratureRule):
        raise DomainError(f"rule must be a QuadratureRule, got {rule!r}")
    vals = _eval_on(f, rule.nodes, "integrate_laguerre")
    return math.fsum(map(float, rule.weights * vals))


@dataclass(frozen=True)
class PanelResult:
    """Adaptive integration outcome: value, certified estimate, panel count."""
    value: float
    error_estimate: float
    panels_used: int


_PAIR_LO = np.polynomial.legendre.leggauss(10)
_PAIR_HI = np.polynomial.legendre.leggauss(21)

# panels narrower than this relative width cannot be resolved further
_MIN_REL_WIDTH = 64.0 * 2.220446049250313e-16


def _panel(f, x: float, lo: float, hi: float) -> tuple[float, float]:
    """One panel of integral f(t) e^{-x t} dt with an embedded error pair."""
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    results = []
    for pts, wts in (_PAIR_HI, _PAIR_LO):
        ts = mid + half * pts
        vals = _eval_on(f, ts, "integrate_adaptive") * np.exp(-x * ts)
        results.append(half * math.fsum(map(float, wts * vals)))
    return results[0], abs(results[0] - results[1])


def _find_cutoff(tail_bound, tol_half: float) -> tuple[float, float]:
    """Smallest power-of-two-ish T >= 4 whose tail bound fits tol/2."""
    t_cut = 4.0
    grow = 0
    while tail_bound(t_cut) > tol_half:
        t_cut *= 2.0
        grow += 1
        if grow > 60:
            raise AccuracyError(
                f"tail bound never reaches {tol_half:.2e}; "
                f"still {tail_bound(t_cut):.2e} at T={t_cut:.3e}")
    return t_cut, tail_bound(t_cut)


def integrate_adaptive(f, x, tol, max_panels: int = 200, *,
                       sup_f=None, tail_bound=None) -> PanelResult:
    """Adaptive panel integration of integral_0^infty f(t) e^{-x t} dt.

    The domain is cut at T where an analytic tail bound drops below
    tol/2; [0, T] is then refined by bisecting the panel with the worst
    embedded-pair discrepancy until the certified total fits tol or the
    panel budget runs out (which raises AccuracyError, never returning a
    silently wrong value).

    tail_bound, when given, must map T to an upper bound on the absolute
    tail integral past T.  Otherwise sup_f (a bound on |f|) yields
    sup_f e^{-x T}/x; if that is missing too, sup|f| is estimated from a
    coarse sample and inflated by 2.
    """
    xf = float(x)
    tolf = float(tol)
    if not (math.isfinite(xf) and xf > 0.0):
        raise DomainError(f"x must be finite and > 0, got {x!r}")
    if not (math.isfinite(tolf) and tolf > 0.0):
        raise DomainError(f"tol must be finite and > 0, got {tol!r}")
    if not isinstance(max_panels, int) or isinstance(max_panels, bool) \
            or max_panels < 1:
        raise DomainError(f"max_panels must be an int >= 1, got {max_panels!r}")

    if tail_bound is None:
        if sup_f is None:
            probe = np.linspace(0.0, max(4.0, 20.0 / xf), 257)[1:]
            sup_f = 2.0 * float(np.max(np.abs(_eval_on(f, probe,
                                                       "integrate_adaptive"))))
        supf = float(sup_f)
        if not (math.isfinite(supf) and supf >= 0.0):
            raise DomainError(f"sup_f must be finite and >= 0, got {sup_f!r}")
        tail_bound = lambda T: supf * math.exp(-xf * T) / xf

    t_cut, tail = _find_cutoff(tail_bound, 0.5 * tolf)

    val, err = _panel(f, xf, 0.0, t_cut)
    live = [(-err, 0.0, t_cut, val)]  # max-heap on panel error
    frozen = []                       # panels too narrow to split further
    frozen_err = 0.0
    n_panels = 1
    while n_panels < max_panels:
        total = -sum(e for e, *_ in live) + frozen_err
        if total <= 0.5 * tolf or not live:
            break
        neg_err, lo, hi, v = heapq.heappop(live)
        if hi - lo < _MIN_REL_WIDTH * max(1.0, hi):
            frozen.append((lo, hi, v))
            frozen_err += -neg_err
            continue
        mid = 0.5 * (lo + hi)
        v1, e1 = _panel(f, xf, lo, mid)
        v2, e2 = _panel(f, xf, mid, hi)
        heapq.heappush(live, (-e1, lo, mid, v1))
        heapq.heappush(live, (-e2, mid, hi, v2))
        n_panels += 1

    pieces = sorted([(lo, hi, v) for _, lo, hi, v in live] + frozen)
    value = math.fsum(v for _, _, v in pieces)
    estimate = -sum(e for e, *_ in live) + frozen_err + tail
    if estimate > tolf:
        raise AccuracyError(
            f"integrate_adaptive(x={xf!r}): achieved {estimate:.3e} with "
            f"{n_panels} panels (max {max_panels}), needed {tolf:.3e}",
            value=value, achieved=estimate)
    return PanelResult(value, estimate, n_panels)
