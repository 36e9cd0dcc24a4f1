"""Command-line front end: point evaluation, tables, verification, benchmark.

Subcommands
-----------
eval    one function at one (nu, x); prints value, error estimate, method
table   CSV sweep over nu/x ranges with all four values and derivatives
verify  run identity suites, emit the report CSV, exit 1 on any failure
bench   median per-point latency, closed forms vs quadrature

CSV output uses 17 significant digits, '\n' line endings and no quoting, so
two runs with identical flags are byte-identical.  The environment variable
KELVIN_MAX_TERMS overrides the series term cap.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from .errors import KelvinError
from .hyper import SeriesConfig
from .kelvin import _eval_ber_bei, _eval_ker_kei
from .orderderiv import dkelvin
from .quad import QuadConfig, apelblat_dber_dbei
from .verify import SUITES, run_suites

_VALUE_FNS = ("ber", "bei", "ker", "kei")
_DERIV_FNS = ("dber", "dbei", "dker", "dkei")
_TABLE_HEADER = "nu,x,ber,bei,ker,kei,dber,dbei,dker,dkei,method"
_REPORT_HEADER = "name,nu,x,lhs,rhs,abs_diff,tol,pass"


def _fmt(v: float) -> str:
    return f"{v:.17g}"


def _parse_range(spec: str, what: str) -> list[float]:
    """Parse 'a:b:step' (inclusive grid) or a single number."""
    parts = spec.split(":")
    if len(parts) == 1:
        return [float(parts[0])]
    if len(parts) != 3:
        raise ValueError(f"{what}: expected 'a:b:step', got {spec!r}")
    a, b, step = (float(p) for p in parts)
    if step <= 0.0 or b < a:
        raise ValueError(f"{what}: need step > 0 and b >= a in {spec!r}")
    n = int((b - a) / step + 1e-9) + 1
    return [a + k * step for k in range(n)]


def _series_cfg() -> SeriesConfig:
    raw = os.environ.get("KELVIN_MAX_TERMS")
    if raw is None:
        return SeriesConfig()
    return SeriesConfig(max_terms=int(raw))


def _emit(lines: list[str], out_path: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_eval(args: argparse.Namespace) -> int:
    fn = args.fn_pos or args.fn
    if fn is None:
        print("eval: missing function selector (positional or --fn)", file=sys.stderr)
        return 2
    if fn not in _VALUE_FNS + _DERIV_FNS:
        print(f"eval: unknown function {fn!r}", file=sys.stderr)
        return 2
    cfg = _series_cfg()
    try:
        if fn in _VALUE_FNS:
            if fn in ("ber", "bei"):
                ber, bei, est, method = _eval_ber_bei(args.nu, args.x, cfg)
                value = ber if fn == "ber" else bei
            else:
                ker, kei, est, method = _eval_ker_kei(args.nu, args.x, cfg)
                value = ker if fn == "ker" else kei
        else:
            quad = dkelvin(args.nu, args.x, cfg)
            value = getattr(quad, fn)
            est = quad.err_estimate
            method = quad.method
    except KelvinError as exc:
        print(f"eval: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    if args.format == "csv":
        _emit(["fn,nu,x,value,err_estimate,method",
               f"{fn},{_fmt(args.nu)},{_fmt(args.x)},{_fmt(value)},{_fmt(est)},{method}"],
              args.out)
    else:
        _emit([f"{fn}(nu={_fmt(args.nu)}, x={_fmt(args.x)}) = {_fmt(value)}",
               f"err_estimate = {_fmt(est)}",
               f"method = {method}"], args.out)
    return 0


def _table_row(nu: float, x: float, cfg: SeriesConfig) -> str:
    if x == 0.0:
        try:
            ber, bei, _, _ = _eval_ber_bei(nu, 0.0, cfg)
            cells = [_fmt(ber), _fmt(bei)]
            note = "undefined_at_x0"
        except KelvinError:
            cells = ["", ""]
            note = "undefined_at_x0"
        return ",".join([_fmt(nu), _fmt(x)] + cells + [""] * 6 + [note])
    quad = dkelvin(nu, x, cfg)
    ber, bei, _, _ = _eval_ber_bei(nu, x, cfg)
    ker, kei, _, _ = _eval_ker_kei(nu, x, cfg)
    vals = [ber, bei, ker, kei, quad.dber, quad.dbei, quad.dker, quad.dkei]
    return ",".join([_fmt(nu), _fmt(x)] + [_fmt(v) for v in vals] + [quad.method])


def cmd_table(args: argparse.Namespace) -> int:
    try:
        nus = _parse_range(args.nu_range, "--nu-range") if args.nu_range else [args.nu]
        xs = _parse_range(args.x_range, "--x-range") if args.x_range else [args.x]
        if nus == [None] or xs == [None]:
            raise ValueError("table needs --nu/--x or --nu-range/--x-range")
    except ValueError as exc:
        print(f"table: {exc}", file=sys.stderr)
        return 2
    cfg = _series_cfg()
    lines = [_TABLE_HEADER]
    try:
        for nu in nus:          # nu-major, then x: deterministic row order
            for x in xs:
                lines.append(_table_row(nu, x, cfg))
    except KelvinError as exc:
        print(f"table: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    _emit(lines, args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = _series_cfg()
    quad_cfg = QuadConfig()
    try:
        reports = run_suites(args.suite, cfg, quad_cfg, tol_override=args.tol)
    except ValueError as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return 2
    if args.format == "csv":
        lines = [_REPORT_HEADER] + [r.csv_row() for r in reports]
    else:
        lines = [f"{'PASS' if r.passed else 'FAIL'} {r.name} nu={_fmt(r.nu)} "
                 f"x={_fmt(r.x)} |diff|={_fmt(r.abs_diff)} tol={_fmt(r.tol)}"
                 for r in reports]
        n_fail = sum(not r.passed for r in reports)
        lines.append(f"{len(reports) - n_fail}/{len(reports)} identities passed")
    _emit(lines, args.out)
    return 0 if all(r.passed for r in reports) else 1


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        nus = _parse_range(args.nu_range, "--nu-range")
        xs = _parse_range(args.x_range, "--x-range")
    except ValueError as exc:
        print(f"bench: {exc}", file=sys.stderr)
        return 2
    points = [(nu, x) for nu in nus for x in xs if x > 0.0]
    if not points:
        print("bench: empty grid", file=sys.stderr)
        return 2
    cfg = _series_cfg()
    quad_cfg = QuadConfig()

    def median(vals: list[float]) -> float:
        vals = sorted(vals)
        mid = len(vals) // 2
        return vals[mid] if len(vals) % 2 else 0.5 * (vals[mid - 1] + vals[mid])

    closed_times = []
    quad_times = []
    for nu, x in points:
        t0 = time.perf_counter()
        dkelvin(nu, x, cfg)
        closed_times.append(time.perf_counter() - t0)
        t0 = time.perf_counter()
        apelblat_dber_dbei(nu, x, quad_cfg, cfg)
        quad_times.append(time.perf_counter() - t0)
    mc = median(closed_times)
    mq = median(quad_times)
    lines = [
        f"points = {len(points)}",
        f"closed_form_median_s = {mc:.6g}",
        f"quadrature_median_s = {mq:.6g}",
        f"speedup_ratio = {mq / mc:.6g}",
    ]
    _emit(lines, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="kelvinfn",
        description="Kelvin functions, their order derivatives, and identity checks")
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate one function at one point")
    pe.add_argument("fn_pos", nargs="?", metavar="FN",
                    help="one of ber bei ker kei dber dbei dker dkei")
    pe.add_argument("--fn", help="function selector (alternative to positional)")
    pe.add_argument("--nu", type=float, required=True)
    pe.add_argument("--x", type=float, required=True)
    pe.add_argument("--format", choices=("csv", "plain"), default="plain")
    pe.add_argument("--out", default=None)
    pe.set_defaults(func=cmd_eval)

    pt = sub.add_parser("table", help="CSV sweep over nu/x grids")
    pt.add_argument("--nu", type=float, default=None)
    pt.add_argument("--x", type=float, default=None)
    pt.add_argument("--nu-range", dest="nu_range", default=None, metavar="A:B:STEP")
    pt.add_argument("--x-range", dest="x_range", default=None, metavar="A:B:STEP")
    pt.add_argument("--format", choices=("csv", "plain"), default="csv")
    pt.add_argument("--out", default=None)
    pt.set_defaults(func=cmd_table)

    pv = sub.add_parser("verify", help="run identity suites")
    pv.add_argument("--suite", default="all",
                    choices=["all"] + sorted(SUITES))
    pv.add_argument("--tol", type=float, default=None,
                    help="override every per-row tolerance")
    pv.add_argument("--format", choices=("csv", "plain"), default="csv")
    pv.add_argument("--out", default=None)
    pv.set_defaults(func=cmd_verify)

    pb = sub.add_parser("bench", help="closed forms vs quadrature latency")
    pb.add_argument("--nu-range", dest="nu_range", default="0.3:2.7:0.8")
    pb.add_argument("--x-range", dest="x_range", default="0.5:5:1.5")
    pb.add_argument("--out", default=None)
    pb.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
