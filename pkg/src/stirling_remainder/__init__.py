"""Stirling remainder toolkit.

Evaluates the remainder scale sigma(x) in
Gamma(x+1) = sqrt(2 pi x) (x/e)^x exp(sigma(x)/(12 x)) via its
Laplace-transform integral, together with h = sigma/(12 x),
lambda = expm1(h), theta = 1 - sigma and theta's derivatives, and
certifies their monotonicity and complete-monotonicity properties
numerically with explicit error bounds.
"""
from .backend import backend_name
from .errors import (AccuracyError, BackendError, BudgetExceededError,
                     DomainError, EvaluationError, StirlingRemainderError)
from .kernels import (BoundedValue, TruncationBudget, PHI_AT_ZERO,
                      phi, phi_closed, phi_series, psi, psi_closed,
                      psi_series)
from .oracle import OracleValue, lambda_ref, ln_gamma_ref, sigma_ref
from .quadrature import (MAX_ORDER, PanelResult, QuadratureRule,
                         gauss_laguerre, integrate_adaptive,
                         integrate_laguerre)
from .remainder import (DEFAULT_CONFIG, DerivEval, EvalConfig, GL_THRESHOLD,
                        RemainderEval, h_accuracy, lambda_accuracy, lambda_fn,
                        ln_gamma_binet, ln_gamma_binet_full,
                        ln_gamma_from_eval, sigma, theta_accuracy,
                        theta_deriv, theta_deriv_full)
from .verify import (DEFAULT_GRID, CheckRecord, GridSpec, VerificationReport,
                     check_alternating_differences, check_complete_monotonicity,
                     check_envelope, check_lambda_decreasing,
                     check_sigma_increasing, cross_check_vs_oracle)

__version__ = "0.1.0"

__all__ = [
    "AccuracyError", "BackendError", "BoundedValue", "BudgetExceededError",
    "CheckRecord", "DEFAULT_CONFIG", "DEFAULT_GRID", "DerivEval",
    "DomainError", "EvalConfig", "EvaluationError", "GL_THRESHOLD",
    "GridSpec", "MAX_ORDER", "OracleValue", "PHI_AT_ZERO", "PanelResult",
    "QuadratureRule", "RemainderEval", "StirlingRemainderError",
    "TruncationBudget", "VerificationReport", "backend_name",
    "check_alternating_differences", "check_complete_monotonicity",
    "check_envelope", "check_lambda_decreasing", "check_sigma_increasing",
    "cross_check_vs_oracle", "gauss_laguerre", "h_accuracy",
    "integrate_adaptive", "integrate_laguerre", "lambda_accuracy",
    "lambda_fn", "lambda_ref", "ln_gamma_binet", "ln_gamma_binet_full",
    "ln_gamma_from_eval", "ln_gamma_ref", "phi", "phi_closed", "phi_series",
    "psi", "psi_closed",
    "psi_series", "sigma", "sigma_ref", "theta_accuracy", "theta_deriv",
    "theta_deriv_full",
]
