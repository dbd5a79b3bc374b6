"""Pure-numpy implementations of the hot partial-fraction sums.

Fallback path used when numba is unavailable or STIRREM_BACKEND=numpy.
Terms are generated in descending v order (smallest magnitude first) and
combined chunk-wise: numpy pairwise summation inside each chunk, exact
math.fsum across chunk subtotals.  This keeps the rounding error within a
couple of ulps of the numba path for any term count.
"""
import math

import numpy as np

_FOUR_PI_SQ = 4.0 * math.pi * math.pi
_CHUNK = 1 << 15


def phi_series_sum(t: float, n_terms: int) -> float:
    """Sum of 2/(4 pi^2 v^2 + t^2) for v = 1..n_terms."""
    t2 = t * t
    parts = []
    for hi in range(n_terms, 0, -_CHUNK):
        lo = max(hi - _CHUNK, 0)
        v = np.arange(hi, lo, -1, dtype=np.float64)
        parts.append(float(np.sum(2.0 / (_FOUR_PI_SQ * v * v + t2))))
    return math.fsum(parts)


def psi_series_sum(t: float, n_terms: int) -> float:
    """Sum of 4 t/(4 pi^2 v^2 + t^2)^2 for v = 1..n_terms."""
    t2 = t * t
    four_t = 4.0 * t
    parts = []
    for hi in range(n_terms, 0, -_CHUNK):
        lo = max(hi - _CHUNK, 0)
        v = np.arange(hi, lo, -1, dtype=np.float64)
        den = _FOUR_PI_SQ * v * v + t2
        parts.append(float(np.sum(four_t / (den * den))))
    return math.fsum(parts)
