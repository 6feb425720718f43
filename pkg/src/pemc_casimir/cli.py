"""Command-line interface: ``pemc-casimir {force,sweep,crit,sumrule,verify}``.

Exit status: 0 success, 2 usage error, 3 accuracy failure, 4 verification
failure, 5 output could not be written.
"""

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import force as fm
from .errors import AccuracyError, DomainError
from .media import theta_from_m
from .verify import run_battery

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_ACCURACY = 3
EXIT_VERIFY = 4
EXIT_IO = 5

DEFAULT_POINTS = 181


class UsageError(Exception):
    pass


def _num(value, units):
    return {"value": float(value), "units": units}


def _parse_m(text):
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")


def _plate_args(p):
    g = p.add_argument_group("plates (radians or M-values, not both)")
    g.add_argument("--theta-plus", type=float, help="duality angle of the plate at z = L [rad]")
    g.add_argument("--theta-minus", type=float, help="duality angle of the plate at z = 0 [rad]")
    g.add_argument("--m-plus", type=_parse_m, help="PEMC parameter M of the plate at z = L (inf = PEC)")
    g.add_argument("--m-minus", type=_parse_m, help="PEMC parameter M of the plate at z = 0")


def _common_args(p, fmt_default="json"):
    p.add_argument("--L", type=float, default=1.0, dest="L", help="plate separation [m] (default 1)")
    p.add_argument("--units", choices=fm.UNIT_SYSTEMS, default="normalized")
    p.add_argument("--format", choices=("csv", "json"), default=fmt_default, dest="fmt")
    p.add_argument("--rel-tol", type=float, default=fm.QuadratureConfig.rel_tol)
    p.add_argument("--abs-tol", type=float, default=fm.QuadratureConfig.abs_tol)
    p.add_argument("--output", "-o", default="-", help="output file (default stdout)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pemc-casimir",
        description="Casimir pressure between two perfect electromagnetic conductor plates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("force", help="force for one plate pair, all three methods")
    _plate_args(p)
    _common_args(p)

    p = sub.add_parser("sweep", help="f(delta)/|f(0)| over a delta grid")
    _common_args(p, fmt_default="csv")
    p.add_argument("--points", type=int, default=DEFAULT_POINTS)
    p.add_argument("--delta-min", type=float, default=0.0)
    p.add_argument("--delta-max", type=float, default=0.5 * math.pi)
    p.add_argument("--method", choices=("analytic", "quartic", "quadrature"), default="analytic")

    p = sub.add_parser("crit", help="zero-force phase shift")
    _common_args(p)

    p = sub.add_parser("sumrule", help="integral of f over delta in [0, pi/2]")
    _common_args(p)

    p = sub.add_parser("verify", help="run the verification battery")
    _common_args(p, fmt_default="csv")
    p.add_argument("--json", action="store_true", help="same as --format json")
    p.add_argument("--inject-fault", type=float, default=0.0, help=argparse.SUPPRESS)
    return parser


def _config(args):
    try:
        cfg = fm.QuadratureConfig(rel_tol=args.rel_tol, abs_tol=args.abs_tol)
    except DomainError as exc:
        raise UsageError(str(exc))
    if not (args.L > 0 and math.isfinite(args.L)):
        raise UsageError("--L must be a positive finite separation in meters")
    return cfg


def plate_pair(args):
    """Build a PlatePair from the plate flags; an omitted plate is a PEC."""
    thetas = (args.theta_plus, args.theta_minus)
    ms = (args.m_plus, args.m_minus)
    if any(t is not None for t in thetas) and any(m is not None for m in ms):
        raise UsageError("give plates as --theta-* or as --m-*, not a mix")
    if any(m is not None for m in ms):
        mp = math.inf if args.m_plus is None else args.m_plus
        mm = math.inf if args.m_minus is None else args.m_minus
        if math.isnan(mp) or math.isnan(mm):
            raise UsageError("M must not be NaN")
        return fm.PlatePair(theta_from_m(mp), theta_from_m(mm), args.L)
    tp = 0.0 if args.theta_plus is None else args.theta_plus
    tm = 0.0 if args.theta_minus is None else args.theta_minus
    if not (math.isfinite(tp) and math.isfinite(tm)):
        raise UsageError("duality angles must be finite")
    return fm.PlatePair(tp, tm, args.L)


def _config_block(args, extra=()):
    out = [
        {"name": "command", "value": args.command},
        {"name": "L", **_num(args.L, "m")},
        {"name": "units", "value": args.units},
        {"name": "rel_tol", **_num(args.rel_tol, "dimensionless")},
        {"name": "abs_tol", **_num(args.abs_tol, "dimensionless")},
    ]
    out.extend(extra)
    return out


def cmd_force(args, cfg):
    pair = plate_pair(args)
    units = args.units
    analytic = fm.force_analytic(pair, units)
    quartic = fm.force(pair, "quartic", units=units)
    quad = fm.force_quadrature(pair, cfg, units)
    ref = fm.casimir_reference(pair.separation, units)
    results = [
        {"name": "force_analytic", **_num(analytic.value, units),
         "abs_error_estimate": _num(analytic.abs_error_estimate, units)},
        {"name": "force_quartic", **_num(quartic.value, units),
         "abs_error_estimate": _num(quartic.abs_error_estimate, units)},
        {"name": "force_quadrature", **_num(quad.value, units),
         "abs_error_estimate": _num(quad.abs_error_estimate, units)},
        {"name": "ratio_to_pec_pec", **_num(analytic.value / ref, "dimensionless")},
        {"name": "analytic_quadrature_discrepancy",
         **_num(abs(analytic.value - quad.value), units)},
        {"name": "delta", **_num(pair.delta, "rad")},
    ]
    extra = [
        {"name": "theta_plus", **_num(pair.theta_plus, "rad")},
        {"name": "theta_minus", **_num(pair.theta_minus, "rad")},
    ]
    return _config_block(args, extra), results, []


def sweep_rows(points, lo, hi, method="analytic", cfg=None):
    """(delta, f(delta)/|f(0)|) on a uniform grid."""
    if points < 2:
        raise UsageError("--points must be at least 2")
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise UsageError("need a finite range with --delta-min < --delta-max")
    ref = abs(fm.CASIMIR_NORMALIZED)
    rows = []
    for d in np.linspace(lo, hi, points):
        d = float(d)
        value = fm.force(fm.PlatePair(d, 0.0), method, cfg).value
        rows.append((d, value / ref))
    return rows


def cmd_sweep(args, cfg):
    rows = sweep_rows(args.points, args.delta_min, args.delta_max, args.method, cfg)
    results = [
        {"delta": _num(d, "rad"), "force_normalized": _num(f, "normalized")}
        for d, f in rows
    ]
    extra = [
        {"name": "points", "value": args.points},
        {"name": "delta_min", **_num(args.delta_min, "rad")},
        {"name": "delta_max", **_num(args.delta_max, "rad")},
        {"name": "method", "value": args.method},
    ]
    return _config_block(args, extra), results, []


def cmd_crit(args, cfg):
    closed = fm.delta_crit()
    root = fm.delta_crit_bisection()
    results = [
        {"name": "delta_crit_closed_form", **_num(closed, "rad")},
        {"name": "delta_crit_bisection", **_num(root, "rad")},
        {"name": "difference", **_num(abs(closed - root), "rad")},
        {"name": "ratio_to_quarter_pi", **_num(closed / (0.25 * math.pi), "dimensionless")},
    ]
    return _config_block(args), results, []


def cmd_sumrule(args, cfg):
    results = [
        {"name": "sum_rule_quadrature", **_num(fm.sum_rule(cfg), "normalized")},
        {"name": "sum_rule_antiderivative", **_num(fm.sum_rule_exact(), "normalized")},
    ]
    return _config_block(args), results, []


def cmd_verify(args, cfg):
    checks = []
    for c in run_battery(cfg, fault=args.inject_fault):
        checks.append({
            "name": c.name,
            "passed": c.passed,
            "error": _num(c.error, "dimensionless"),
            "tolerance": _num(c.tolerance, "dimensionless"),
            "detail": c.detail,
        })
    extra = [{"name": "inject_fault", **_num(args.inject_fault, "dimensionless")}]
    return _config_block(args, extra), [], checks


COMMANDS = {
    "force": cmd_force,
    "sweep": cmd_sweep,
    "crit": cmd_crit,
    "sumrule": cmd_sumrule,
    "verify": cmd_verify,
}


def _fmt(x):
    return "%.17g" % x


def render_csv(command, results, checks):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if command == "sweep":
        w.writerow(["delta_rad", "force_normalized"])
        for r in results:
            w.writerow([_fmt(r["delta"]["value"]), _fmt(r["force_normalized"]["value"])])
    elif command == "verify":
        w.writerow(["check", "passed", "error", "tolerance", "detail"])
        for c in checks:
            w.writerow([c["name"], "pass" if c["passed"] else "FAIL",
                        _fmt(c["error"]["value"]), _fmt(c["tolerance"]["value"]), c["detail"]])
    else:
        w.writerow(["quantity", "value", "units"])
        for r in results:
            w.writerow([r["name"], _fmt(r["value"]), r["units"]])
    return buf.getvalue()


def render_json(config, results, checks):
    doc = {"config": config, "results": results, "checks": checks}
    return json.dumps(doc, indent=2, allow_nan=True) + "\n"


def _write(text, target):
    if target == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(target, "w", newline="") as fh:
        fh.write(text)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "json", False):
        args.fmt = "json"
    try:
        cfg = _config(args)
        config, results, checks = COMMANDS[args.command](args, cfg)
    except (UsageError, DomainError) as exc:
        parser.error(str(exc))
    except AccuracyError as exc:
        print(f"pemc-casimir: accuracy failure: {exc} "
              f"(estimate {exc.estimate!r}, error {exc.abs_error!r})", file=sys.stderr)
        return EXIT_ACCURACY

    if args.fmt == "json":
        text = render_json(config, results, checks)
    else:
        text = render_csv(args.command, results, checks)
    try:
        _write(text, args.output)
    except OSError as exc:
        print(f"pemc-casimir: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO

    if checks and not all(c["passed"] for c in checks):
        return EXIT_VERIFY
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
