"""The four Kelvin functions of arbitrary real order.

For nu >= 0 the values come straight from the defining rotations

    ber_nu(x) + i bei_nu(x) = e^(i pi nu)    J_nu(e^(-i pi/4) x)
    ker_nu(x) + i kei_nu(x) = e^(-i pi nu/2) K_nu(e^(i pi/4)  x)

Negative orders always go through the reflection formulas, never through a
direct series at nu < 0, which keeps the J/K evaluation in its
well-conditioned regime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bessel import ORDER_EPS, bessel_j, bessel_k
from .errors import DomainError
from .hyper import DEFAULT_SERIES, SeriesConfig
from .scalars import PI

_HALF_SQRT2 = math.sqrt(0.5)
# e^(-i pi/4) and e^(i pi/4); built componentwise so conjugation tests are exact
ROT_J = complex(_HALF_SQRT2, -_HALF_SQRT2)
ROT_K = complex(_HALF_SQRT2, _HALF_SQRT2)


@dataclass(frozen=True)
class KelvinQuad:
    """All four Kelvin function values at one (nu, x)."""

    ber: float
    bei: float
    ker: float
    kei: float
    nu: float
    x: float


def _phase(angle: float) -> complex:
    return complex(math.cos(angle), math.sin(angle))


def _eval_ber_bei(nu: float, x: float,
                  cfg: SeriesConfig) -> tuple[float, float, float, str]:
    """(ber, bei, abs error estimate, method tag)."""
    if x < 0.0:
        raise DomainError("Kelvin functions defined for x >= 0")
    if nu >= 0.0:
        if x == 0.0:
            return (1.0 if nu == 0.0 else 0.0), 0.0, 0.0, "series"
        r = bessel_j(nu, ROT_J * x, cfg)
        w = _phase(PI * nu) * r.value
        est = r.abs_err_estimate + 2e-16 * r.max_abs_term
        return w.real, w.imag, est, "series"
    m = -nu
    if abs(m - round(m)) <= ORDER_EPS:
        n = int(round(m))
        ber, bei, est, _ = _eval_ber_bei(float(n), x, cfg)
        sgn = -1.0 if n % 2 else 1.0
        return sgn * ber, sgn * bei, est, "reflection"
    if x == 0.0:
        raise DomainError("reflection at non-integer order needs ker(0), undefined")
    ber, bei, est_b, _ = _eval_ber_bei(m, x, cfg)
    ker, kei, est_k, _ = _eval_ker_kei(m, x, cfg)
    c = math.cos(PI * m)
    s = math.sin(PI * m)
    est = est_b + abs(s) * (2.0 / PI) * est_k
    return (c * ber + s * bei + (2.0 / PI) * s * ker,
            -s * ber + c * bei + (2.0 / PI) * s * kei, est, "reflection")


def _eval_ker_kei(nu: float, x: float,
                  cfg: SeriesConfig) -> tuple[float, float, float, str]:
    """(ker, kei, abs error estimate, method tag)."""
    if x <= 0.0:
        raise DomainError("ker/kei defined for x > 0")
    if nu >= 0.0:
        r = bessel_k(nu, ROT_K * x, cfg)
        w = _phase(-PI * nu / 2.0) * r.value
        method = "series_averaged" if "near_integer_averaged" in r.flags else "series"
        return w.real, w.imag, r.abs_err_estimate, method
    m = -nu
    ker, kei, est, method = _eval_ker_kei(m, x, cfg)
    c = math.cos(PI * m)
    s = math.sin(PI * m)
    return c * ker - s * kei, s * ker + c * kei, est, "reflection"


def kelvin_ber_bei(nu: float, x: float,
                   cfg: SeriesConfig = DEFAULT_SERIES) -> tuple[float, float]:
    """(ber_nu(x), bei_nu(x)) for x >= 0.

    Raises
    ------
    DomainError
        If x < 0, or x = 0 at negative non-integer order (the reflection
        needs ker, which is singular at the origin).
    """
    ber, bei, _, _ = _eval_ber_bei(nu, x, cfg)
    return ber, bei


def kelvin_ker_kei(nu: float, x: float,
                   cfg: SeriesConfig = DEFAULT_SERIES) -> tuple[float, float]:
    """(ker_nu(x), kei_nu(x)) for x > 0; DomainError at x = 0 (log singularity)."""
    ker, kei, _, _ = _eval_ker_kei(nu, x, cfg)
    return ker, kei


def kelvin_all(nu: float, x: float, cfg: SeriesConfig = DEFAULT_SERIES) -> KelvinQuad:
    """All four Kelvin functions at (nu, x), x > 0."""
    if x <= 0.0:
        raise DomainError("kelvin_all requires x > 0 (ker/kei singular at 0)")
    ber, bei = kelvin_ber_bei(nu, x, cfg)
    ker, kei = kelvin_ker_kei(nu, x, cfg)
    return KelvinQuad(ber, bei, ker, kei, nu, x)
