"""Remainder evaluation tests: sigma/lambda/theta, derivatives, log-gamma."""

import math

import numpy as np
import pytest

from _mp import mp_h, mp_ln_gamma, mp_sigma, mp_theta_deriv
from stirling_remainder import (
    AccuracyError,
    DomainError,
    EvalConfig,
    ln_gamma_binet,
    ln_gamma_binet_full,
    ln_gamma_from_eval,
    sigma,
    theta_deriv,
    theta_deriv_full,
)
from stirling_remainder.remainder import (
    h_accuracy,
    lambda_accuracy,
    theta_accuracy,
)

SIGMA_ONE = 0.97273760154392709864
SIGMA_HALF = 0.92055845832016407175
SIGMA_TWO = 0.99217670292982305825
SIGMA_1000 = 0.99999996666667619047
LAMBDA_ONE = 0.084437551419227546612
LAMBDA_HALF = 0.16582199079856210168
THETA_ONE = 0.027262398456072901364
THETA1_ONE = -0.046149622725532771358
THETA1_TWO = -0.007380060389435448556
THETA2_TWO = 0.010290686718041605232
THETA4_TEN = 3.9220837150319140618e-6
LN_24 = 3.1780538303479456196
LN_GAMMA_THREE_HALVES = -0.12078223763524522235


def test_config_validation():
    EvalConfig(tol=1e-13)  # tightest permitted target
    with pytest.raises(DomainError):
        EvalConfig(tol=9e-14)
    with pytest.raises(DomainError):
        EvalConfig(tol=0.0)
    with pytest.raises(DomainError):
        EvalConfig(gl_order=0)
    with pytest.raises(DomainError):
        EvalConfig(gl_order=300)
    with pytest.raises(DomainError):
        EvalConfig(max_panels=0)
    with pytest.raises(DomainError):
        EvalConfig(max_deriv_order=-1)


@pytest.mark.parametrize(
    "x,ref,method",
    [
        (1.0, SIGMA_ONE, "gauss_laguerre"),
        (0.5, SIGMA_HALF, "adaptive"),
        (2.0, SIGMA_TWO, "gauss_laguerre"),
        (1000.0, SIGMA_1000, "gauss_laguerre"),
    ],
)
def test_sigma_anchors(x, ref, method):
    ev = sigma(x)
    assert ev.method == method
    assert abs(ev.sigma - ref) <= ev.accuracy
    assert ev.accuracy <= 1e-10


def test_sigma_accuracy_honest_on_random_grid():
    rng = np.random.default_rng(41509)
    for _ in range(12):
        x = float(np.exp(rng.uniform(math.log(0.2), math.log(200.0))))
        ev = sigma(x)
        assert abs(ev.sigma - float(mp_sigma(x))) <= ev.accuracy


def test_eval_identities_exact():
    # sigma, h, lambda, theta are one evaluation viewed four ways; the
    # record must satisfy the defining identities to the last bit.
    rng = np.random.default_rng(77003)
    for _ in range(25):
        x = float(np.exp(rng.uniform(math.log(0.1), math.log(100.0))))
        ev = sigma(x)
        assert ev.sigma == 12.0 * ev.x * ev.h
        assert ev.lambda_ == math.expm1(ev.h)
        assert ev.theta == 1.0 - ev.sigma
        assert ev.x == x


def test_lambda_anchors():
    ev = sigma(1.0)
    assert abs(ev.lambda_ - LAMBDA_ONE) <= lambda_accuracy(ev)
    ev = sigma(0.5)
    assert abs(ev.lambda_ - LAMBDA_HALF) <= lambda_accuracy(ev)


def test_theta_anchor():
    ev = sigma(1.0)
    assert abs(ev.theta - THETA_ONE) <= theta_accuracy(ev)


def test_derived_accuracies_scale_sensibly():
    ev = sigma(3.0)
    assert 0.0 < h_accuracy(ev) < ev.accuracy
    assert lambda_accuracy(ev) < ev.accuracy
    assert theta_accuracy(ev) >= ev.accuracy


def test_theta_deriv_order_zero_matches_sigma_route():
    # theta comes out of an independent integral (psi kernel, not phi),
    # so agreement here is a real cross-check, not an identity.
    for x in (0.4, 1.0, 3.0, 25.0):
        ev = sigma(x)
        d = theta_deriv_full(0, x)
        tol = ev.accuracy + d.accuracy
        assert abs((1.0 - ev.sigma) - d.value) <= 2e-10 + tol


def test_theta_deriv_signs_alternate():
    for x in (0.5, 1.0, 7.0, 40.0):
        for n in range(0, 9):
            val = theta_deriv(n, x)
            assert (-1.0) ** n * val > 0.0, f"n={n}, x={x}"


@pytest.mark.parametrize(
    "n,x,ref",
    [
        (1, 1.0, THETA1_ONE),
        (1, 2.0, THETA1_TWO),
        (2, 2.0, THETA2_TWO),
        (4, 10.0, THETA4_TEN),
    ],
)
def test_theta_deriv_anchors(n, x, ref):
    d = theta_deriv_full(n, x)
    assert abs(d.value - ref) <= d.accuracy
    assert abs(d.value - ref) <= 1e-10 * max(1.0, abs(ref))


def test_theta_deriv_accuracy_honest_vs_reference():
    cases = [(1, 0.3), (2, 0.7), (3, 1.5), (5, 4.0), (8, 2.0), (2, 50.0)]
    for n, x in cases:
        d = theta_deriv_full(n, x)
        ref = float(mp_theta_deriv(n, x))
        assert abs(d.value - ref) <= d.accuracy + 1e-13 * abs(ref)


def test_theta_deriv_fd_consistency():
    # Central differences of theta^(n-1) reproduce theta^(n).
    for x in (1.0, 2.0, 10.0):
        step = 1e-4 * x
        for n in range(1, 5):
            lo = theta_deriv(n - 1, x - step)
            hi = theta_deriv(n - 1, x + step)
            fd = (hi - lo) / (2.0 * step)
            val = theta_deriv(n, x)
            assert abs(fd - val) <= 1e-5 * abs(val)


def test_deriv_order_cap():
    with pytest.raises(DomainError) as exc:
        theta_deriv(9, 2.0)
    assert "max_deriv_order" in str(exc.value)
    with pytest.raises(DomainError):
        theta_deriv(-1, 2.0)
    with pytest.raises(DomainError):
        theta_deriv(1.5, 2.0)
    with pytest.raises(DomainError):
        theta_deriv(True, 2.0)
    # raising the cap unlocks higher orders
    cfg = EvalConfig(max_deriv_order=5)
    with pytest.raises(DomainError):
        theta_deriv(6, 2.0, cfg)


def test_domain_rejections():
    for bad in (0.0, -1.0, float("nan"), float("inf")):
        with pytest.raises(DomainError):
            sigma(bad)
        with pytest.raises(DomainError):
            theta_deriv(1, bad)
        with pytest.raises(DomainError):
            ln_gamma_binet(bad)


def test_accuracy_error_is_best_effort():
    cfg = EvalConfig(tol=1e-12, max_panels=2)
    with pytest.raises(AccuracyError) as exc:
        sigma(0.3, cfg)
    err = exc.value
    assert err.value is not None
    assert err.achieved is not None
    assert err.achieved > 1e-12
    # the best-effort value should still be in the right ballpark
    assert abs(err.value - float(mp_h(0.3))) < 1e-3


def test_routes_agree_where_both_apply(monkeypatch):
    # Push the route switch up so moderate x takes the panel integrator,
    # then compare against the default rule-based result.
    import stirling_remainder.remainder as rem

    gl = sigma(2.0)
    assert gl.method == "gauss_laguerre"
    monkeypatch.setattr(rem, "GL_THRESHOLD", 10.0)
    ad = sigma(2.0)
    assert ad.method == "adaptive"
    assert abs(gl.sigma - ad.sigma) <= 1e-9
    assert abs(gl.sigma - ad.sigma) <= gl.accuracy + ad.accuracy


def test_ln_gamma_binet_anchors():
    val, acc, _ = ln_gamma_binet_full(4.0)
    assert abs(val - LN_24) <= 1e-12
    assert abs(val - LN_24) <= acc + 4e-16 * LN_24
    assert ln_gamma_binet(4.0) == val
    assert abs(ln_gamma_binet(1.0)) <= 1e-12
    assert abs(ln_gamma_binet(0.5) - LN_GAMMA_THREE_HALVES) <= 1e-12


def test_ln_gamma_binet_full_reports_method():
    _, _, method = ln_gamma_binet_full(5.0)
    assert method == "gauss_laguerre"
    _, _, method = ln_gamma_binet_full(0.5)
    assert method == "adaptive"


def test_ln_gamma_from_eval_consistent():
    for x in (0.5, 1.0, 7.5, 300.0):
        ev = sigma(x)
        val, acc = ln_gamma_from_eval(ev)
        ref = float(mp_ln_gamma(x + 1.0))
        assert abs(val - ref) <= acc + 4e-16 * max(1.0, abs(ref))


def test_tight_tolerance_achieved_at_moderate_x():
    cfg = EvalConfig(tol=1e-13)
    ev = sigma(5.0, cfg)
    assert ev.accuracy <= 1e-13
    assert abs(ev.sigma - float(mp_sigma(5.0))) <= 1e-13
