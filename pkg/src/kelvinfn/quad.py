"""Adaptive quadrature engine and the integral representations / identities.

The engine is a globally adaptive Gauss-Kronrod 7-15 pair (open nodes, so
integrable endpoint singularities never get evaluated) with bisection of the
worst panel.  Each integral representation substitutes its known endpoint
singularity away before handing the integrand to the engine:

* log(1-u) endpoints use u = 1 - e^(-v), under which log(1-u) = -v exactly;
* u^((nu-1)/2) power endpoints use u = w^2;
* the 1/sqrt(tau (t-tau)) convolution kernel uses tau = t sin^2(theta).

Every identity check returns an :class:`IdentityReport` that serializes to
one CSV row: name,nu,x,lhs,rhs,abs_diff,tol,pass.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

from .bessel import dj_dnu_any
from .errors import DomainError
from .hyper import DEFAULT_SERIES, EvalResult, SeriesConfig
from .kelvin import ROT_J, kelvin_ber_bei
from .scalars import EULER_GAMMA, PI, SQRT2

_SEMIINF_RULES = ("log_transform", "panel_doubling")
_MAX_SPLITS = 4096


@dataclass(frozen=True)
class QuadConfig:
    """Tolerances and limits for adaptive quadrature."""

    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    max_depth: int = 30
    semiinf_cutoff_rule: str = "log_transform"

    def __post_init__(self):
        if self.abs_tol <= 0.0 or self.rel_tol <= 0.0:
            raise ValueError("tolerances must be positive")
        if self.semiinf_cutoff_rule not in _SEMIINF_RULES:
            raise ValueError(f"semiinf_cutoff_rule must be one of {_SEMIINF_RULES}")


DEFAULT_QUAD = QuadConfig()


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one identity check; ``passed`` iff abs_diff <= tol."""

    name: str
    nu: float
    x: float
    lhs: float
    rhs: float
    abs_diff: float
    tol: float
    passed: bool

    def csv_row(self) -> str:
        return (f"{self.name},{self.nu:.17g},{self.x:.17g},{self.lhs:.17g},"
                f"{self.rhs:.17g},{self.abs_diff:.17g},{self.tol:.17g},"
                f"{1 if self.passed else 0}")


def make_report(name: str, nu: float, x: float, lhs: float, rhs: float,
                tol: float) -> IdentityReport:
    d = abs(lhs - rhs)
    return IdentityReport(name, nu, x, lhs, rhs, d, tol, d <= tol)


# Gauss-Kronrod 7-15 nodes and weights on [-1, 1] (QUADPACK values).
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)


def _gk15(f, a: float, b: float) -> tuple[float, float]:
    """15-point Kronrod value and |K15 - G7| error estimate on [a, b]."""
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    fc = f(c)
    kron = _WGK[7] * fc
    gauss = _WG[3] * fc
    for i in range(7):
        x = h * _XGK[i]
        v = f(c - x) + f(c + x)
        kron += _WGK[i] * v
        if i % 2 == 1:  # odd Kronrod indices are the Gauss-7 nodes
            gauss += _WG[i // 2] * v
    return kron * h, abs(kron - gauss) * h


def integrate_finite(f, a: float, b: float,
                     cfg: QuadConfig = DEFAULT_QUAD) -> EvalResult:
    """Adaptive integral of f over [a, b] by worst-panel bisection.

    Returns converged=False (with the best estimate) if the error target
    max(abs_tol, rel_tol * |result|) is still unmet once every remaining
    panel has reached max_depth.
    """
    if not a < b:
        raise DomainError("integration interval must satisfy a < b")
    val, err = _gk15(f, a, b)
    # heap entries: (-err, seq, depth, a, b, val, err); panels at max_depth
    # are dropped from the heap but their contribution stays in the totals
    heap = [(-err, 0, 0, a, b, val, err)]
    total_val = val
    total_err = err
    stuck_err = 0.0
    seq = 1
    evals = 15
    splits = 0
    while heap:
        target = max(cfg.abs_tol, cfg.rel_tol * abs(total_val))
        if total_err <= target:
            break
        if stuck_err >= target or splits >= _MAX_SPLITS:
            break  # unreachable tolerance; stop refining, report honestly
        _, _, depth, pa, pb, pval, perr = heapq.heappop(heap)
        if depth >= cfg.max_depth:
            stuck_err += perr
            continue
        mid = 0.5 * (pa + pb)
        lv, le = _gk15(f, pa, mid)
        rv, re_ = _gk15(f, mid, pb)
        evals += 30
        splits += 1
        total_val += lv + rv - pval
        total_err += le + re_ - perr
        heapq.heappush(heap, (-le, seq, depth + 1, pa, mid, lv, le))
        heapq.heappush(heap, (-re_, seq + 1, depth + 1, mid, pb, rv, re_))
        seq += 2
    converged = total_err <= max(cfg.abs_tol, cfg.rel_tol * abs(total_val))
    flags = () if converged else ("max_depth_exceeded",)
    return EvalResult(total_val, total_err, evals, converged, flags)


def integrate_semiinf(f, cfg: QuadConfig = DEFAULT_QUAD) -> EvalResult:
    """Integral of f over [0, inf) for integrands decaying at least
    exponentially.

    'log_transform' maps t = -log(1-s) onto s in (0, 1); 'panel_doubling'
    sums [0,1], [1,2], [2,4], ... until a panel contributes below the
    absolute tolerance.
    """
    if cfg.semiinf_cutoff_rule == "log_transform":

        def g(s: float) -> float:
            t = -math.log1p(-s)
            return f(t) / (1.0 - s)

        return integrate_finite(g, 0.0, 1.0, cfg)

    total = integrate_finite(f, 0.0, 1.0, cfg)
    val, err, evals, conv = total.value, total.abs_err_estimate, total.terms_used, total.converged
    lo, hi = 1.0, 2.0
    while True:
        piece = integrate_finite(f, lo, hi, cfg)
        val += piece.value
        err += piece.abs_err_estimate
        evals += piece.terms_used
        conv = conv and piece.converged
        if abs(piece.value) < cfg.abs_tol and hi > 16.0:
            break
        if hi > 1e6:
            conv = False
            break
        lo, hi = hi, 2.0 * hi
    return EvalResult(val, err, evals, conv, () if conv else ("max_depth_exceeded",))


def _exp_decay(t: float, scale: float) -> float:
    """e^(-scale sinh t) guarded against sinh overflow (underflows to 0)."""
    if scale * math.sinh(min(t, 40.0)) > 745.0 or t > 40.0:
        return 0.0
    return math.exp(-scale * math.sinh(t))


def apelblat_ber_bei(nu: float, x: float,
                     cfg: QuadConfig = DEFAULT_QUAD) -> tuple[float, float]:
    """(ber_nu(x), bei_nu(x)) from the two-part integral representation.

    With X = x/sqrt(2):

      ber_nu(x) = (1/pi) int_0^pi [cos(pi nu) cos(X sin t - nu t) cosh(X sin t)
                                   - sin(pi nu) sin(X sin t - nu t) sinh(X sin t)] dt
                  - (sin(pi nu)/pi) int_0^inf e^(-nu t - X sinh t)
                                             cos(X sinh t + pi nu) dt

    and the bei companion swaps sin/sinh pairings and signs.  The oscillatory
    factor in the tail carries X sinh t (the derivation from the contour
    representation of J at argument e^(-i pi/4) x makes both the decay and
    the oscillation come from the same X sinh t term).
    """
    if x <= 0.0:
        raise DomainError("x must be positive")
    big_x = x / SQRT2
    cpn = math.cos(PI * nu)
    spn = math.sin(PI * nu)

    def fin_ber(t: float) -> float:
        s = big_x * math.sin(t)
        return (cpn * math.cos(s - nu * t) * math.cosh(s)
                - spn * math.sin(s - nu * t) * math.sinh(s))

    def fin_bei(t: float) -> float:
        s = big_x * math.sin(t)
        return (cpn * math.sin(s - nu * t) * math.sinh(s)
                + spn * math.cos(s - nu * t) * math.cosh(s))

    ber = integrate_finite(fin_ber, 0.0, PI, cfg).value / PI
    bei = integrate_finite(fin_bei, 0.0, PI, cfg).value / PI
    if abs(spn) > 1e-15:

        def tail(trig):
            def f(t: float) -> float:
                d = _exp_decay(t, big_x)
                if d == 0.0:
                    return 0.0
                return math.exp(-nu * t) * d * trig(big_x * math.sinh(t) + PI * nu)
            return integrate_semiinf(f, cfg).value

        ber -= spn / PI * tail(math.cos)
        bei -= spn / PI * tail(math.sin)
    return ber, bei


_BRACKET_VARIANTS = ("consistent", "printed_s1", "printed_s3")


def apelblat_dber_dbei(nu: float, x: float,
                       cfg: QuadConfig = DEFAULT_QUAD,
                       series_cfg: SeriesConfig = DEFAULT_SERIES,
                       bracket: str = "consistent") -> tuple[float, float]:
    """(d ber_nu/d nu, d bei_nu/d nu) from the log-weighted integral form:

      d ber_nu/d nu = log(x/2) ber_nu - (3 pi/4) bei_nu
          - (x/(2 sqrt 2)) int_0^1 u^((nu-1)/2) [gamma + log(1-u)] B(u) du

    ``bracket`` selects B(u).  The transcriptions in circulation disagree:

    * 'consistent'  B = ber_{nu-1}(x sqrt u) + bei_{nu-1}(x sqrt u)   (and
      ber_{nu-1} - bei_{nu-1} for the bei derivative) -- this is the variant
      the term-by-term differentiation of the defining series produces, and
      the only one that reproduces the closed forms numerically;
    * 'printed_s1'  mixed indices ber_{nu-1} +/- bei_nu;
    * 'printed_s3'  ber_{nu-1} + bei_{nu-1} for *both* derivatives.

    Integration substitutes u = w^p, removing the combined u^(nu-1) endpoint
    behaviour of the weight and the bracket (p grows as nu shrinks), and
    then w = 1 - e^(-v), which makes the log(1-u) factor exact.
    """
    if bracket not in _BRACKET_VARIANTS:
        raise ValueError(f"bracket must be one of {_BRACKET_VARIANTS}")
    if x <= 0.0 or nu < 0.0:
        raise DomainError("requires x > 0 and nu >= 0")
    ber, bei = kelvin_ber_bei(nu, x, series_cfg)

    def brackets(arg: float) -> tuple[float, float]:
        if bracket == "consistent":
            b, e = _ber_bei_any(nu - 1.0, arg, series_cfg)
            return b + e, b - e
        if bracket == "printed_s3":
            b, e = _ber_bei_any(nu - 1.0, arg, series_cfg)
            return b + e, b + e
        b, _ = _ber_bei_any(nu - 1.0, arg, series_cfg)
        _, e = kelvin_ber_bei(nu, arg, series_cfg)
        return b + e, b - e

    # integrand ~ u^(nu-1) near 0; u = w^p with p*nu >= 2 keeps it smooth
    # (at integer nu the bracket order is integer-reflected and harmless)
    p = 2 if nu >= 1.0 or abs(nu - round(nu)) <= 1e-9 else min(64, math.ceil(2.0 / nu))

    def integrand(v: float) -> complex:
        # both integrals in one adaptive pass, packed re/im
        w = -math.expm1(-v)
        if w <= 0.0 or w >= 1.0:
            return 0.0 + 0.0j
        u = w ** p
        geom = sum(w ** j for j in range(p))        # (1-u)/(1-w)
        log1mu = -v + math.log(geom)                # log(1-u), exact split
        weight = p * w ** (p * (nu + 1.0) / 2.0 - 1.0) \
            * (EULER_GAMMA + log1mu) * math.exp(-v)
        b_ber, b_bei = brackets(x * math.sqrt(u))
        return complex(weight * b_ber, weight * b_bei)

    packed = integrate_finite(integrand, 0.0, 45.0, cfg).value
    pref = x / (2.0 * SQRT2)
    return (math.log(x / 2.0) * ber - 0.75 * PI * bei - pref * packed.real,
            math.log(x / 2.0) * bei + 0.75 * PI * ber + pref * packed.imag)


def _ber_bei_any(nu: float, x: float, series_cfg: SeriesConfig) -> tuple[float, float]:
    """ber/bei at possibly negative order, tolerating x = 0."""
    if x == 0.0:
        if nu > 0.0:
            return 0.0, 0.0
        if nu == 0.0:
            return 1.0, 0.0
    return kelvin_ber_bei(nu, x, series_cfg)


def appendix_ber_bei(x: float, variant: str = "sin",
                     cfg: QuadConfig = DEFAULT_QUAD) -> tuple[float, float]:
    """Order-zero values from the quarter-period representations

      ber(x) = (2/pi) int_0^{pi/2} cosh(x sc(t)/sqrt 2) cos(x sc(t)/sqrt 2) dt
      bei(x) = (2/pi) int_0^{pi/2} sinh(x sc(t)/sqrt 2) sin(x sc(t)/sqrt 2) dt

    with sc = sin or cos selected by ``variant`` (the two are equal by the
    t -> pi/2 - t substitution).
    """
    if variant not in ("sin", "cos"):
        raise ValueError("variant must be 'sin' or 'cos'")
    if x < 0.0:
        raise DomainError("x must be nonnegative")
    sc = math.sin if variant == "sin" else math.cos

    def f_ber(t: float) -> float:
        s = x * sc(t) / SQRT2
        return math.cosh(s) * math.cos(s)

    def f_bei(t: float) -> float:
        s = x * sc(t) / SQRT2
        return math.sinh(s) * math.sin(s)

    ber = 2.0 / PI * integrate_finite(f_ber, 0.0, PI / 2.0, cfg).value
    bei = 2.0 / PI * integrate_finite(f_bei, 0.0, PI / 2.0, cfg).value
    return ber, bei


def convolution_identity(a: float, b: float, t: float,
                         cfg: QuadConfig = DEFAULT_QUAD,
                         series_cfg: SeriesConfig = DEFAULT_SERIES,
                         tol: float = 1e-7) -> IdentityReport:
    """Check ber(2 sqrt(a t)) + ber(2 sqrt(b t)) against its self-convolution:

      (2/pi) int_0^t cosh cos(sqrt((a+b)(t-tau))) cosh cos(sqrt((a-b) tau))
                     / sqrt(tau (t-tau)) dtau

    where 'cosh cos(s)' abbreviates cosh(s) cos(s).  The endpoint kernel is
    removed by tau = t sin^2(theta).
    """
    if not (a >= b > 0.0 and t > 0.0):
        raise DomainError("requires a >= b > 0 and t > 0")
    lhs = (_ber_bei_any(0.0, 2.0 * math.sqrt(a * t), series_cfg)[0]
           + _ber_bei_any(0.0, 2.0 * math.sqrt(b * t), series_cfg)[0])

    def f(theta: float) -> float:
        s2 = math.sin(theta) ** 2
        u1 = math.sqrt((a + b) * t * (1.0 - s2))
        u2 = math.sqrt((a - b) * t * s2)
        return (math.cosh(u1) * math.cos(u1)) * (math.cosh(u2) * math.cos(u2))

    rhs = 4.0 / PI * integrate_finite(f, 0.0, PI / 2.0, cfg).value
    return make_report(f"convolution_a{a:g}_b{b:g}", a, t, lhs, rhs, tol)


def theorem5_identity(nu: float, x: float, f: str,
                      cfg: QuadConfig = DEFAULT_QUAD,
                      series_cfg: SeriesConfig = DEFAULT_SERIES,
                      tol: float = 1e-7) -> IdentityReport:
    """Check the log-weighted moment integral of ber/bei against closed form:

      int_0^1 u^(nu+1) log(1-u^2) f_nu(x u) du
        = (1/(sqrt 2 x)) { [pi/4 + log(x/2) + gamma] f_{nu+1}(x)
                           +/- [pi/4 - log(x/2) - gamma] g_{nu+1}(x)
                           + sqrt 2 Re[e^(i pi (nu +/- 1/4))
                                       dJ/dmu|_{mu=nu+1}(e^(-i pi/4) x)] }

    with (f, g, upper signs) = (ber, bei, +) and (bei, ber, -).  The Bessel
    order derivative on the right sits at order nu + 1, one step above the
    order under the integral (the identity arises from the derivative of the
    order-(nu+1) function).
    """
    if f not in ("ber", "bei"):
        raise ValueError("f must be 'ber' or 'bei'")
    if x <= 0.0 or nu <= -1.0:
        raise DomainError("requires x > 0 and nu > -1")
    idx = 0 if f == "ber" else 1

    def g(v: float) -> float:
        u = -math.expm1(-v)
        if u <= 0.0 or u >= 1.0:
            return 0.0
        log1mu2 = -v + math.log1p(u)
        return u ** (nu + 1.0) * log1mu2 * _ber_bei_any(nu, x * u, series_cfg)[idx] * math.exp(-v)

    lhs = integrate_finite(g, 0.0, 45.0, cfg).value
    ber1, bei1 = kelvin_ber_bei(nu + 1.0, x, series_cfg)
    dj = dj_dnu_any(nu + 1.0, ROT_J * x, series_cfg).value
    alpha = EULER_GAMMA + math.log(x / 2.0)
    if f == "ber":
        ang = PI * (nu + 0.25)
        rhs = ((PI / 4.0 + alpha) * ber1 + (PI / 4.0 - alpha) * bei1
               + SQRT2 * (complex(math.cos(ang), math.sin(ang)) * dj).real)
    else:
        ang = PI * (nu - 0.25)
        rhs = ((PI / 4.0 + alpha) * bei1 - (PI / 4.0 - alpha) * ber1
               + SQRT2 * (complex(math.cos(ang), math.sin(ang)) * dj).real)
    rhs /= SQRT2 * x
    return make_report(f"theorem5_{f}", nu, x, lhs, rhs, tol)


def indefinite_integral_check(nu: float, x: float,
                              cfg: QuadConfig = DEFAULT_QUAD,
                              series_cfg: SeriesConfig = DEFAULT_SERIES,
                              tol: float = 1e-9) -> tuple[IdentityReport, IdentityReport]:
    """Check the antiderivatives of u^(nu+1) ber_nu / bei_nu as definite
    integrals from 0 (where the boundary term vanishes for nu > -1):

      int_0^x u^(nu+1) ber_nu(u) du =  (x^(nu+1)/sqrt 2) [bei_{nu+1}(x) - ber_{nu+1}(x)]
      int_0^x u^(nu+1) bei_nu(u) du = -(x^(nu+1)/sqrt 2) [bei_{nu+1}(x) + ber_{nu+1}(x)]
    """
    if nu < 0.0 or x <= 0.0:
        raise DomainError("requires nu >= 0 and x > 0")
    lhs_ber = integrate_finite(
        lambda u: u ** (nu + 1.0) * _ber_bei_any(nu, u, series_cfg)[0], 0.0, x, cfg).value
    lhs_bei = integrate_finite(
        lambda u: u ** (nu + 1.0) * _ber_bei_any(nu, u, series_cfg)[1], 0.0, x, cfg).value
    ber1, bei1 = kelvin_ber_bei(nu + 1.0, x, series_cfg)
    pref = x ** (nu + 1.0) / SQRT2
    return (make_report("indefinite_ber", nu, x, lhs_ber, pref * (bei1 - ber1), tol),
            make_report("indefinite_bei", nu, x, lhs_bei, -pref * (bei1 + ber1), tol))
