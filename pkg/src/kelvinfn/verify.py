"""Identity-verification suites over the frozen manifest grids.

Each suite returns a list of :class:`IdentityReport` rows; ``run_suites``
is what both the command-line ``verify`` command and the acceptance tests
drive.  Suite names: fd, reflection, ode, apelblat, theorem5, appendix,
brychkov, integer (plus 'all').
"""

from __future__ import annotations

from . import manifest as M
from .hyper import DEFAULT_SERIES, SeriesConfig
from .kelvin import kelvin_all, kelvin_ber_bei, kelvin_ker_kei
from .orderderiv import dkelvin, dkelvin_bb_brychkov, dkelvin_bb_pos, dkelvin_integer
from .quad import (DEFAULT_QUAD, IdentityReport, QuadConfig, apelblat_ber_bei,
                   apelblat_dber_dbei, appendix_ber_bei, convolution_identity,
                   indefinite_integral_check, make_report, theorem5_identity)

_COMPONENTS = ("dber", "dbei", "dker", "dkei")


def _fd_quad(nu: float, x: float, h: float, cfg: SeriesConfig) -> tuple[float, ...]:
    """Central finite difference of all four Kelvin functions over the order."""
    hi = kelvin_all(nu + h, x, cfg)
    lo = kelvin_all(nu - h, x, cfg)
    return tuple((a - b) / (2.0 * h) for a, b in
                 ((hi.ber, lo.ber), (hi.bei, lo.bei), (hi.ker, lo.ker), (hi.kei, lo.kei)))


def fd_oracle(nu: float, x: float, cfg: SeriesConfig = DEFAULT_SERIES) -> tuple[float, ...]:
    """Richardson-extrapolated finite-difference order derivatives."""
    h1, h2 = M.FD_STEPS
    g1 = _fd_quad(nu, x, h1, cfg)
    g2 = _fd_quad(nu, x, h2, cfg)
    return tuple((4.0 * b - a) / 3.0 for a, b in zip(g1, g2))


def suite_fd(cfg: SeriesConfig = DEFAULT_SERIES,
             quad_cfg: QuadConfig = DEFAULT_QUAD) -> list[IdentityReport]:
    """Dispatcher vs finite differences, positive and reflected grids."""
    out = []
    for sign in (1.0, -1.0):
        for nu in M.FD_NU:
            for x in M.FD_X:
                order = sign * nu
                got = dkelvin(order, x, cfg)
                ora = fd_oracle(order, x, cfg)
                vals = (got.dber, got.dbei, got.dker, got.dkei)
                for name, g, o in zip(_COMPONENTS, vals, ora):
                    tol = M.FD_SCALED_TOL * (1.0 + abs(o))
                    out.append(make_report(f"fd_{name}", order, x, g, o, tol))
    return out


def suite_integer(cfg: SeriesConfig = DEFAULT_SERIES,
                  quad_cfg: QuadConfig = DEFAULT_QUAD) -> list[IdentityReport]:
    """Integer-order finite sums vs the extrapolated closed-form path."""
    out = []
    for n in M.INTEGER_N:
        for x in M.INTEGER_X:
            sums = dkelvin_integer(n, x, cfg)
            extr = dkelvin(n + 2e-7, x, cfg)  # forces the extrapolated branch
            vals = (sums.dber, sums.dbei, sums.dker, sums.dkei)
            ext = (extr.dber, extr.dbei, extr.dker, extr.dkei)
            for name, g, o in zip(_COMPONENTS, vals, ext):
                tol = M.INTEGER_SCALED_TOL * (1.0 + abs(o))
                out.append(make_report(f"integer_{name}", float(n), x, g, o, tol))
    return out


def suite_brychkov(cfg: SeriesConfig = DEFAULT_SERIES,
                   quad_cfg: QuadConfig = DEFAULT_QUAD) -> list[IdentityReport]:
    """Rotation-form ber/bei derivatives vs the 3F6/4F7 reference forms."""
    out = []
    for nu in M.BRYCHKOV_NU:
        for x in M.BRYCHKOV_X:
            a = dkelvin_bb_pos(nu, x, cfg)
            b = dkelvin_bb_brychkov(nu, x, cfg)
            out.append(make_report("brychkov_dber", nu, x, a[0], b[0], M.BRYCHKOV_TOL))
            out.append(make_report("brychkov_dbei", nu, x, a[1], b[1], M.BRYCHKOV_TOL))
    return out


def suite_apelblat(cfg: SeriesConfig = DEFAULT_SERIES,
                   quad_cfg: QuadConfig = DEFAULT_QUAD) -> list[IdentityReport]:
    """Integral representations vs the series path, values and derivatives."""
    out = []
    for nu in M.APELBLAT_NU:
        for arg in M.APELBLAT_ARG:
            q = apelblat_ber_bei(nu, arg, quad_cfg)
            k = kelvin_ber_bei(nu, arg, cfg)
            out.append(make_report("apelblat_ber", nu, arg, q[0], k[0], M.APELBLAT_TOL))
            out.append(make_report("apelblat_bei", nu, arg, q[1], k[1], M.APELBLAT_TOL))
    for nu in M.APELBLAT_D_NU:
        for x in M.APELBLAT_D_X:
            q = apelblat_dber_dbei(nu, x, quad_cfg, cfg)
            d = dkelvin(nu, x, cfg)
            out.append(make_report("apelblat_dber", nu, x, q[0], d.dber, M.APELBLAT_D_TOL))
            out.append(make_report("apelblat_dbei", nu, x, q[1], d.dbei, M.APELBLAT_D_TOL))
    return out


def suite_theorem5(cfg: SeriesConfig = DEFAULT_SERIES,
                   quad_cfg: QuadConfig = DEFAULT_QUAD) -> list[IdentityReport]:
    """Log-weighted moment integrals plus the antiderivative checks."""
    out = []
    for nu in M.THEOREM5_NU:
        for x in M.THEOREM5_X:
            for f in ("ber", "bei"):
                out.append(theorem5_identity(nu, x, f, quad_cfg, cfg, M.THEOREM5_TOL))
    for nu, x, tol in M.INDEFINITE_POINTS:
        out.extend(indefinite_integral_check(nu, x, quad_cfg, cfg, tol))
    return out


def suite_appendix(cfg: SeriesConfig = DEFAULT_SERIES,
                   quad_cfg: QuadConfig = DEFAULT_QUAD) -> list[IdentityReport]:
    """Quarter-period representations and the self-convolution identity."""
    out = []
    for x in M.APPENDIX_X:
        s = appendix_ber_bei(x, "sin", quad_cfg)
        c = appendix_ber_bei(x, "cos", quad_cfg)
        k = kelvin_ber_bei(0.0, x, cfg)
        out.append(make_report("appendix_variants_ber", 0.0, x, s[0], c[0],
                               M.APPENDIX_VARIANT_TOL))
        out.append(make_report("appendix_variants_bei", 0.0, x, s[1], c[1],
                               M.APPENDIX_VARIANT_TOL))
        out.append(make_report("appendix_series_ber", 0.0, x, s[0], k[0],
                               M.APPENDIX_SERIES_TOL))
        out.append(make_report("appendix_series_bei", 0.0, x, s[1], k[1],
                               M.APPENDIX_SERIES_TOL))
    for a, b, t in M.CONVOLUTION_POINTS:
        out.append(convolution_identity(a, b, t, quad_cfg, cfg, M.CONVOLUTION_TOL))
    return out


def suite_reflection(cfg: SeriesConfig = DEFAULT_SERIES,
                     quad_cfg: QuadConfig = DEFAULT_QUAD) -> list[IdentityReport]:
    """Integer reflection: f_{-n} = (-1)^n f_n for all four functions."""
    out = []
    for n in M.REFLECTION_N:
        sgn = -1.0 if n % 2 else 1.0
        for x in M.REFLECTION_X:
            neg = kelvin_all(float(-n), x, cfg)
            pos = kelvin_all(float(n), x, cfg)
            pairs = (("ber", neg.ber, sgn * pos.ber), ("bei", neg.bei, sgn * pos.bei),
                     ("ker", neg.ker, sgn * pos.ker), ("kei", neg.kei, sgn * pos.kei))
            for name, lhs, rhs in pairs:
                tol = M.REFLECTION_REL_TOL * max(abs(rhs), 1e-30)
                out.append(make_report(f"reflection_{name}", float(-n), x, lhs, rhs, tol))
    return out


def _ode_residual(w_of_x, nu: float, x: float, h: float) -> float:
    """Scaled residual of x^2 w'' + x w' - (nu^2 + i x^2) w via 5-point stencils."""
    w = [w_of_x(x + k * h) for k in (-2, -1, 0, 1, 2)]
    d1 = (w[0] - 8.0 * w[1] + 8.0 * w[3] - w[4]) / (12.0 * h)
    d2 = (-w[0] + 16.0 * w[1] - 30.0 * w[2] + 16.0 * w[3] - w[4]) / (12.0 * h * h)
    residual = x * x * d2 + x * d1 - complex(nu * nu, x * x) * w[2]
    scale = abs(w[2]) + abs(x * d1) + abs(x * x * d2)
    return abs(residual) / scale


def suite_ode(cfg: SeriesConfig = DEFAULT_SERIES,
              quad_cfg: QuadConfig = DEFAULT_QUAD) -> list[IdentityReport]:
    """Both Kelvin pairs satisfy x^2 w'' + x w' - (nu^2 + i x^2) w = 0."""
    out = []
    for nu in M.ODE_BB_NU:
        for x in M.ODE_X:
            res = _ode_residual(
                lambda t: complex(*kelvin_ber_bei(nu, t, cfg)), nu, x, M.ODE_STEP)
            out.append(make_report("ode_ber_bei", nu, x, res, 0.0, M.ODE_SCALED_TOL))
    for nu in M.ODE_KK_NU:
        for x in M.ODE_X:
            res = _ode_residual(
                lambda t: complex(*kelvin_ker_kei(nu, t, cfg)), nu, x, M.ODE_STEP)
            out.append(make_report("ode_ker_kei", nu, x, res, 0.0, M.ODE_SCALED_TOL))
    return out


SUITES = {
    "fd": suite_fd,
    "reflection": suite_reflection,
    "ode": suite_ode,
    "apelblat": suite_apelblat,
    "theorem5": suite_theorem5,
    "appendix": suite_appendix,
    "brychkov": suite_brychkov,
    "integer": suite_integer,
}


def run_suites(name: str, cfg: SeriesConfig = DEFAULT_SERIES,
               quad_cfg: QuadConfig = DEFAULT_QUAD,
               tol_override: float | None = None) -> list[IdentityReport]:
    """Run one named suite (or 'all'), optionally overriding every tolerance."""
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise ValueError(f"unknown suite {name!r}; choose from "
                         f"{['all'] + sorted(SUITES)}")
    reports: list[IdentityReport] = []
    for n in names:
        reports.extend(SUITES[n](cfg, quad_cfg))
    if tol_override is not None:
        reports = [
            IdentityReport(r.name, r.nu, r.x, r.lhs, r.rhs, r.abs_diff,
                           tol_override, r.abs_diff <= tol_override)
            for r in reports
        ]
    return reports
