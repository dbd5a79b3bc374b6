"""Scalar reference values for cross-checking the integral route.

ln Gamma comes from Spouge's formula (a = 14, relative method error below
7.2e-13) for small arguments and from the enveloped asymptotic tail
sum B_2n/((2n)(2n-1) z^(2n-1)) for z >= 4, truncated at its smallest term
so the first omitted term bounds the truncation error.  The remainder
scale h(z) is assembled in forms free of the large-term cancellation that
a naive ln Gamma difference would suffer, which is what keeps
sigma_ref = 12 z h(z) accurate even at z = 1000 where the factor 12 z
amplifies any rounding of ln Gamma itself.

This module is deliberately self-contained scalar math: it imports none
of the kernel, quadrature, or remainder machinery, so agreement with the
integral route is evidence, not circularity.
"""
import math
from dataclasses import dataclass

from .errors import DomainError

_EPS = 2.220446049250313e-16
_LN_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)

_SPOUGE_A = 14
_SPOUGE_C0 = math.sqrt(2.0 * math.pi)
_SPOUGE_C = tuple(
    (-1.0) ** (k - 1) * (_SPOUGE_A - k) ** (k - 0.5)
    * math.exp(_SPOUGE_A - k) / math.factorial(k - 1)
    for k in range(1, _SPOUGE_A))
# >= (2 pi)^-(a+1/2)/sqrt(a) at a = 14, valid for arguments with Re >= 0
_SPOUGE_REL = 7.2e-13

# B_2n/((2n)(2n-1)) for n = 1..17; the final entry only ever acts as the
# first-omitted-term bound, never entering a sum
_STIRLING_C = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
    854513.0 / 63756.0,
    -236364091.0 / 1506960.0,
    8553103.0 / 3900.0,
    -23749461029.0 / 657720.0,
    8615841276005.0 / 12460140.0,
    -7709321041217.0 / 505920.0,
    26315271553053477373.0 / 2153331180.0,
)

_STIRLING_CUT = 4.0


@dataclass(frozen=True)
class OracleValue:
    """A reference value with a certified absolute error bound."""
    value: float
    bound: float

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise DomainError(f"value must be finite, got {self.value!r}")
        if not (self.bound >= 0.0):
            raise DomainError(f"bound must be >= 0, got {self.bound!r}")


def _check_positive(name: str, v) -> float:
    try:
        f = float(v)
    except (TypeError, ValueError):
        raise DomainError(f"{name} must be a real number, got {v!r}") from None
    if not math.isfinite(f) or f <= 0.0:
        raise DomainError(f"{name} must be finite and > 0, got {v!r}")
    return f


def _h_stirling(z: float) -> tuple[float, float]:
    """Asymptotic h(z) for z >= 4: value and certified bound.

    The series alternates and envelopes its limit for real z > 0, so
    truncating just before the smallest term leaves an error below that
    term's magnitude; a few ulps cover the summation rounding.
    """
    terms = []
    p = 1.0 / z
    inv_z2 = p * p
    for c in _STIRLING_C:
        terms.append(c * p)
        p *= inv_z2
    mags = [abs(u) for u in terms]
    stop = mags.index(min(mags))
    value = math.fsum(terms[:stop])
    return value, mags[stop] + 4.0 * _EPS * abs(value)


def _h_spouge(x: float) -> tuple[float, float]:
    """h(x) for 0 < x < 4 via a rearranged Spouge evaluation.

    Writing h = (x+1/2)(log1p(a/x) - a/x) + a/(2x) + log1p(S/c0) keeps
    every piece either small or explicitly paired with its cancelling
    partner, so the rounding allowance scales with the pieces actually
    summed instead of with ln Gamma.
    """
    u = _SPOUGE_A / x
    s = math.fsum(c / (x + k) for k, c in enumerate(_SPOUGE_C, start=1))
    lead = (x + 0.5) * (math.log1p(u) - u)
    half = _SPOUGE_A / (2.0 * x)
    value = lead + half + math.log1p(s / _SPOUGE_C0)
    allowance = 4.0 * _EPS * (abs(lead) + half + 1.0)
    return value, _SPOUGE_REL + allowance


def _h_ref(x: float) -> tuple[float, float]:
    if x >= _STIRLING_CUT:
        return _h_stirling(x)
    return _h_spouge(x)


def ln_gamma_ref(z) -> OracleValue:
    """ln Gamma(z) for z > 0 with a certified absolute bound."""
    zf = _check_positive("z", z)
    if zf < 1.0:
        up = ln_gamma_ref(zf + 1.0)
        shift = math.log(zf)
        return OracleValue(up.value - shift,
                           up.bound + 4.0 * _EPS * (abs(shift) + 1.0))
    if zf < _STIRLING_CUT:
        zs = zf - 1.0
        s = math.fsum(c / (zs + k) for k, c in enumerate(_SPOUGE_C, start=1))
        lead = (zf - 0.5) * math.log(zs + _SPOUGE_A)
        value = lead - (zs + _SPOUGE_A) + math.log(_SPOUGE_C0 + s)
        allowance = 4.0 * _EPS * (abs(lead) + zs + _SPOUGE_A + 1.0)
        return OracleValue(value, _SPOUGE_REL + allowance)
    h, hb = _h_stirling(zf)
    lead = (zf - 0.5) * math.log(zf)
    value = lead - zf + _LN_SQRT_2PI + h
    return OracleValue(value, hb + 4.0 * _EPS * (abs(lead) + zf + 1.0))


def sigma_ref(x) -> OracleValue:
    """Reference sigma(x) = 12 x h(x) with a certified bound."""
    xf = _check_positive("x", x)
    h, hb = _h_ref(xf)
    scale = 12.0 * xf
    return OracleValue(scale * h, scale * (hb + 2.0 * _EPS * abs(h)))


def lambda_ref(x) -> OracleValue:
    """Reference lambda(x) = expm1(h(x)) with a certified bound."""
    xf = _check_positive("x", x)
    h, hb = _h_ref(xf)
    lam = math.expm1(h)
    bound = (1.0 + lam) * hb + 4.0 * _EPS * abs(lam)
    return OracleValue(lam, bound)
