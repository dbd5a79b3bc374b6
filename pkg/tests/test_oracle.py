"""Oracle tests: reference log-gamma and its certified error bounds.

The reference path must stay independent of the kernel/quadrature route;
the import test at the bottom enforces that structurally.
"""

import ast
import math
import pathlib

import numpy as np
import pytest

from _mp import mp_h, mp_ln_gamma, mp_sigma
from stirling_remainder import DomainError, lambda_ref, ln_gamma_ref, sigma_ref

LN_GAMMA_THREE_HALVES = -0.12078223763524522235
SIGMA_TWO = 0.99217670292982305825
LAMBDA_ONE = 0.084437551419227546612


def test_integer_anchors():
    # ln Gamma(n) = ln (n-1)! exactly computable through 20.
    for n in range(2, 21):
        ref = math.log(math.factorial(n - 1))
        out = ln_gamma_ref(float(n))
        scale = max(1.0, abs(ref))
        assert abs(out.value - ref) <= 1e-12 * scale
        assert abs(out.value - ref) <= out.bound + 1e-15 * scale


def test_half_integer_anchor():
    out = ln_gamma_ref(1.5)
    assert abs(out.value - LN_GAMMA_THREE_HALVES) <= 1e-12


def test_continuity_across_regime_boundaries():
    # The evaluation strategy switches at z=1 and z=4; values must agree
    # to near machine precision on both sides of each seam.
    for z0 in (1.0, 4.0):
        lo = ln_gamma_ref(z0 - 1e-9).value
        hi = ln_gamma_ref(z0 + 1e-9).value
        # slope of ln Gamma is psi0(z), at most ~1.4 on [1, 4]
        assert abs(hi - lo) <= 3e-9


def test_ln_gamma_bound_sound_on_grid():
    for z in np.geomspace(0.1, 2000.0, 140):
        z = float(z)
        out = ln_gamma_ref(z)
        err = abs(out.value - float(mp_ln_gamma(z)))
        assert err <= out.bound, f"z={z}: err {err:.3e} > bound {out.bound:.3e}"


def test_ln_gamma_bound_small_above_one():
    for z in np.geomspace(1.0, 1000.0, 90):
        out = ln_gamma_ref(float(z))
        assert out.bound <= 1e-11


def test_sigma_ref_at_one_matches_closed_constant():
    # sigma(1) = 12 - 6 ln(2 pi), an elementary identity.
    out = sigma_ref(1.0)
    exact = 12.0 - 6.0 * math.log(2.0 * math.pi)
    assert abs(out.value - exact) <= out.bound
    assert out.bound <= 5e-11


def test_sigma_ref_anchor_at_two():
    out = sigma_ref(2.0)
    assert abs(out.value - SIGMA_TWO) <= out.bound
    assert out.bound <= 5e-11


def test_sigma_ref_sound_and_tight_on_grid():
    for x in np.geomspace(1e-2, 1e3, 100):
        x = float(x)
        out = sigma_ref(x)
        err = abs(out.value - float(mp_sigma(x)))
        assert err <= out.bound, f"x={x}: err {err:.3e} > bound {out.bound:.3e}"
        assert out.bound <= 1e-10, f"x={x}: bound {out.bound:.3e} too loose"


def test_sigma_ref_stays_inside_envelope():
    for x in np.geomspace(1e-3, 1e4, 60):
        out = sigma_ref(float(x))
        assert 0.0 < out.value < 1.0


def test_lambda_ref_anchor():
    out = lambda_ref(1.0)
    assert abs(out.value - LAMBDA_ONE) <= out.bound
    assert out.bound <= 1e-11


def test_lambda_ref_sound_on_grid():
    import mpmath as mp

    for x in np.geomspace(1e-2, 1e3, 60):
        x = float(x)
        out = lambda_ref(x)
        ref = float(mp.expm1(mp_h(x)))
        err = abs(out.value - ref)
        assert err <= out.bound, f"x={x}: err {err:.3e} > bound {out.bound:.3e}"


def test_domain_rejections():
    for bad in (0.0, -1.0, float("nan"), float("inf")):
        with pytest.raises(DomainError):
            ln_gamma_ref(bad)
        with pytest.raises(DomainError):
            sigma_ref(bad)
        with pytest.raises(DomainError):
            lambda_ref(bad)


def test_reference_module_is_independent():
    # The whole point of the reference path is cross-validation, so it
    # must not import the series/quadrature machinery it checks.
    import stirling_remainder.oracle as oracle_mod

    src = pathlib.Path(oracle_mod.__file__).read_text()
    tree = ast.parse(src)
    banned = {"kernels", "quadrature", "backend", "remainder", "verify",
              "cli", "numpy", "scipy", "mpmath"}
    for node in ast.walk(tree):
        names = []
        if isinstance(node, ast.Import):
            names = [a.name for a in node.names]
        elif isinstance(node, ast.ImportFrom):
            names = [node.module or ""] + [a.name for a in node.names]
        for name in names:
            leaf = name.split(".")[-1]
            assert leaf not in banned, f"reference module imports {name}"
