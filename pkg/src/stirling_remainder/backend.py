"""Selection of the series-summation backend.

The STIRREM_BACKEND environment variable picks the implementation of the
two hot series loops:

    auto   (default) numba when importable, numpy otherwise
    numba  require the JIT path, fail loudly if numba is missing
    numpy  force the pure-numpy path

The flag changes execution strategy only.  Both backends compute the same
sums with compensated accumulation and agree to within a couple of ulps;
results for a fixed backend are deterministic.
"""
import os

from .errors import BackendError

ENV_VAR = "STIRREM_BACKEND"
_VALID = ("auto", "numba", "numpy")


def _select():
    choice = os.environ.get(ENV_VAR, "auto").strip().lower()
    if choice not in _VALID:
        raise BackendError(
            f"{ENV_VAR} must be one of {', '.join(_VALID)}; got {choice!r}")
    if choice in ("auto", "numba"):
        try:
            from . import _series_numba as impl
            return "numba", impl
        except ImportError as exc:
            if choice == "numba":
                raise BackendError(
                    f"{ENV_VAR}=numba but numba cannot be imported") from exc
    from . import _series_numpy as impl
    return "numpy", impl


_NAME, _IMPL = _select()

phi_series_sum = _IMPL.phi_series_sum
psi_series_sum = _IMPL.psi_series_sum


def backend_name() -> str:
    """Name of the active backend: "numba" or "numpy"."""
    return _NAME
