"""Command-line interface: ``minda-radii {catalog,radius,bohr,distort,curve,verify}``.

Every command prints a short human-readable summary, or with ``--json`` a
report that validates against ``report.schema.json``. Exit codes: 0 success
(including inconclusive verdicts), 2 invalid input, 3 solver failure, 4 I/O.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from importlib import resources

import numpy as np

from . import __version__
from .bohr import bohr_radius, janowski_bohr_special
from .catalog import (
    CATALOG_IDS,
    PARAMETER_RANGES,
    CatalogError,
    DomainError,
    catalog_get,
    constant_psi,
    normalize_id,
)
from .curves import MIN_POINTS, trace_curve
from .distortion import distortion_bounds, table1_reproduce
from .exprs import ExpressionError, compile_expression
from .extremal import synth_f0
from .radius import (
    ConditionError,
    RootNotFound,
    hallenbeck_radius,
    majorization_radius_convex,
    majorization_radius_starlike,
    product_mbeta_radius,
    product_order_radius,
    sqrt_variant_radius,
)
from .series import ConvergenceError, SeriesError
from .special import HypergeometricError
from .verify import (
    DEFAULT_SEED,
    bohr_coefficient_probe,
    bohr_coefficient_stress,
    bulboaca_condition_check,
    is_subordinate_numeric,
    majorization_sharpness_probe,
)

SCHEMA_VERSION = "1.0"
EXIT_OK, EXIT_USAGE, EXIT_SOLVER, EXIT_IO = 0, 2, 3, 4

RADIUS_KINDS = ("majorize-starlike", "majorize-convex", "hallenbeck", "sqrt-variant",
                "product-mbeta", "product-order", "booth")
PROBES = ("sharpness", "bohr-coeff", "bulboaca", "subordination")
# catalog parameter -> command-line option
PARAM_OPTIONS = {"D": "D", "E": "E", "alpha": "alpha", "eta": "eta", "a": "a", "b": "b", "beta": "beta"}

RADIUS_FORMULAS = {
    "majorize-starlike": "least positive root of (1-r^2) min|psi| - 2r",
    "majorize-convex": "least positive root of (1-r^2) min|psi| - 2r, psi the Briot-Bouquet solution of phi",
    "hallenbeck": "least positive root of (1-r^2) min Re psi - 2r, psi = (1/z) int_0^z phi",
    "sqrt-variant": "least positive root of (1-r^2) min|psi|^(1/2) - 2r, psi = (1/z) int_0^z phi",
    "product-mbeta": "least positive root of psi1(r) + psi2(r) - 1 - beta, capped at 1",
    "product-order": "least positive root of psi1(-r) + psi2(-r) - 1 - gamma, capped at 1",
    "booth": "min(r_alpha, least positive root of (1-r^2) min|psi| - 2r)",
}


class UsageError(ValueError):
    pass


def _clean(x):
    """Round floats to 12 significant digits; NaN/inf become None."""
    if isinstance(x, dict):
        return {str(k): _clean(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_clean(v) for v in x]
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        return float(f"{x:.12g}") if math.isfinite(x) else None
    if isinstance(x, complex):
        return [_clean(x.real), _clean(x.imag)]
    return x


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def _class_params(args, prefix: str = "") -> dict:
    if prefix:
        raw = getattr(args, "params2", None) or ""
        out = {}
        for item in filter(None, (p.strip() for p in raw.split(","))):
            if "=" not in item:
                raise UsageError(f"--params2 expects key=value pairs, got {item!r}")
            k, v = item.split("=", 1)
            out[k.strip()] = float(v)
        return out
    return {name: getattr(args, opt) for name, opt in PARAM_OPTIONS.items()
            if getattr(args, opt, None) is not None}


def _psi(name: str, params: dict):
    key = normalize_id(name)
    if key in ("identity", "constant"):
        if params:
            raise UsageError("the identity class takes no parameters")
        return constant_psi()
    allowed = set(PARAMETER_RANGES.get(key, {}))
    extra = set(params) - allowed
    if key in CATALOG_IDS and extra:
        raise UsageError(f"{key} does not take parameter(s) {', '.join(sorted(extra))}")
    return catalog_get(key, **params)


def _psi_from(args):
    if not args.cls:
        raise UsageError("--class is required")
    return _psi(args.cls, _class_params(args))


def _report(command: str, inputs: dict, results, provenance: list[str], status: str = "ok") -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "status": status,
        "inputs": inputs,
        "results": results,
        "provenance": provenance,
        "timing_ms": None,
    }


def cmd_catalog(args) -> dict:
    ids = [normalize_id(args.id)] if args.id else list(CATALOG_IDS)
    rows = []
    for key in ids:
        entry = catalog_get(key).describe()
        entry["parameter_ranges"] = PARAMETER_RANGES.get(key, {})
        rows.append(entry)
    return _report("catalog", {"id": args.id}, {"entries": rows}, ["catalog registry"])


def _radius_result(args):
    kind = args.kind
    if kind in ("product-mbeta", "product-order"):
        if args.target is None:
            raise UsageError(f"--target (beta or gamma) is required for {kind}")
        p1 = _psi_from(args)
        p2 = _psi(args.class2, _class_params(args, "2"))
        if kind == "product-mbeta":
            return product_mbeta_radius(p1, p2, args.target)
        return product_order_radius(p1, p2, args.target)
    psi = _psi_from(args)
    if kind == "booth":
        if psi.id != "booth":
            raise UsageError("--kind booth needs --class booth")
        res = majorization_radius_starlike(psi)
        res.problem["kind"] = "booth"
        return res
    if kind == "majorize-starlike":
        return majorization_radius_starlike(psi)
    if not psi.convex:
        raise ConditionError(f"{psi.id} is not flagged convex; {kind} needs a convex phi")
    return {"majorize-convex": majorization_radius_convex,
            "hallenbeck": hallenbeck_radius,
            "sqrt-variant": sqrt_variant_radius}[kind](psi)


def cmd_radius(args) -> dict:
    res = _radius_result(args)
    payload = res.as_dict()
    inputs = {"class": args.cls, "kind": args.kind, "params": _class_params(args),
              "class2": args.class2, "params2": _class_params(args, "2"), "target": args.target}
    return _report("radius", inputs, payload, [RADIUS_FORMULAS[args.kind]])


def cmd_bohr(args) -> dict:
    if args.janowski_special:
        if normalize_id(args.cls or "janowski") != "janowski":
            raise UsageError("--janowski-special applies to --class janowski")
        D = 1.0 if args.D is None else args.D
        E = -1.0 if args.E is None else args.E
        res = janowski_bohr_special(D, E)
        return _report("bohr", {"class": "janowski", "params": {"D": D, "E": E},
                                "janowski_special": True},
                       res.as_dict(), ["root of (1-E)^p - r(1+Er)^p, p=(D-E)/E; 1 - r e^{D(1+r)} when E=0"])
    psi = _psi_from(args)
    res = bohr_radius(psi)
    return _report("bohr", {"class": args.cls, "params": _class_params(args)}, res.as_dict(),
                   ["koebe radius r* = -f0(-1)", "r0: least root of sum |t_n| r^n = r*",
                    "bohr radius = min(r0, 1/3)"])


def cmd_distort(args) -> dict:
    psi = _psi_from(args)
    prov = ["lower = min|psi| (-f0(-r)/r), upper = (f0(r)/r) max|psi| on |z|=r"]
    if args.table1:
        if psi.id != "cardioid":
            raise UsageError("--table1 applies to --class cardioid")
        rows = table1_reproduce()
        return _report("distort", {"class": args.cls, "table1": True}, {"rows": rows,
                       "tolerance": 1e-12}, prov)
    if not args.r:
        raise UsageError("give --r values or --table1")
    e = synth_f0(psi)
    rows = [distortion_bounds(psi, r, e).as_dict() for r in args.r]
    return _report("distort", {"class": args.cls, "params": _class_params(args), "r": args.r},
                   {"rows": rows, "tolerance": 1e-12}, prov)


def cmd_curve(args) -> dict:
    if args.n < MIN_POINTS:
        raise UsageError(f"--n must be at least {MIN_POINTS}")
    if not 0.0 < args.r <= 1.0:
        raise UsageError(f"--r must lie in (0, 1], got {args.r}")
    psi = _psi_from(args)
    target = psi if args.object == "psi-boundary" else synth_f0(psi)
    curve = trace_curve(target, args.r, args.n, refine=False)
    if args.out:
        curve.write_csv(args.out)
    if args.svg:
        curve.write_svg(args.svg)
    k = int(np.argmin(np.abs(curve.samples)))
    results = {
        "object": args.object,
        "radius": curve.radius,
        "points": len(curve),
        "min_modulus": float(abs(curve.samples[k])),
        "theta_at_min_modulus": float(curve.theta[k]),
        "csv": args.out,
        "svg": args.svg,
        "tolerance": 0.0,
    }
    if args.json and not args.out:
        results["samples"] = [[float(t), float(z.real), float(z.imag)]
                              for t, z in zip(curve.theta, curve.samples)]
    elif not args.out and not args.json:
        results["csv"] = "-"
        print("theta,x,y")
        for t, z in zip(curve.theta, curve.samples):
            print(f"{t:.12g},{z.real:.12g},{z.imag:.12g}")
    return _report("curve", {"class": args.cls, "params": _class_params(args), "object": args.object,
                             "r": args.r, "n": args.n}, results, ["image of |z|=r sampled uniformly in theta"])


def cmd_verify(args) -> dict:
    psi = _psi_from(args)
    inputs = {"probe": args.probe, "class": args.cls, "params": _class_params(args)}
    if args.probe == "sharpness":
        r_psi = args.r_psi if args.r_psi is not None else majorization_radius_starlike(psi).root
        v = majorization_sharpness_probe(psi, r_psi, args.eps)
        inputs["eps"] = args.eps
        return _report("verify", inputs, {**v.as_dict(), "tolerance": 1e-9},
                       ["h(r,a) = (r+a)/(1+ar) + (1-a^2)/(1+ar)^2 r/m_r against 1"], v.status)
    if args.probe == "bohr-coeff":
        e = synth_f0(psi)
        r = args.r if args.r is not None else 1.0 / 3.0
        inputs.update(r=r, seed=args.seed)
        if args.omega_a is not None or args.omega_m is not None:
            omega = {"m": args.omega_m} if args.omega_m is not None else {"a": complex(args.omega_a)}
            p = bohr_coefficient_probe(e, omega, r)
            status = "true" if p.holds else "false"
            res = {"status": status, **p.as_dict(), "omega": {k: str(v) for k, v in omega.items()}}
        else:
            s = bohr_coefficient_stress(e, args.samples, r, args.seed)
            status = "true" if not s["violations"] else "false"
            res = {"status": status, **s}
        res["tolerance"] = 1e-12
        return _report("verify", inputs, res, ["sum |b_k| r^k <= sum |a_n| r^n for g = f0(omega)"], status)
    if args.probe == "subordination":
        if not args.g:
            raise UsageError("--g is required for the subordination probe")
        e = synth_f0(psi)
        against = psi.evaluator if args.against == "psi" else e
        g = compile_expression(args.g, {"f0": e, "psi": psi.evaluator})
        r = args.r if args.r is not None else 1.0
        inputs.update(g=args.g, against=args.against, r=r, grid=args.grid)
        v = is_subordinate_numeric(g, against, r, args.grid)
        return _report("verify", inputs, {**v.as_dict(), "tolerance": 1e-6},
                       ["even-odd containment of g(|z|=r) in the image of |z|=1"], v.status)
    if not args.h:
        raise UsageError("--h is required for the bulboaca probe")
    h = compile_expression(args.h)
    inputs.update(h=args.h, grid=args.grid)
    v = bulboaca_condition_check(h, psi, args.grid)
    return _report("verify", inputs, {**v.as_dict(), "tolerance": 1e-6},
                   ["(1/z) int_0^z h subordinate to (psi-1)/psi"], v.status)


def _add_class(p, required: bool = True):
    p.add_argument("--class", dest="cls", required=required, help="catalog id (hyphens allowed)")
    p.add_argument("--D", type=float)
    p.add_argument("--E", type=float)
    p.add_argument("--alpha", type=float)
    p.add_argument("--eta", type=float)
    p.add_argument("--a", type=float)
    p.add_argument("--b", type=float)
    p.add_argument("--beta", type=float, help="parameter of the linear class")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="minda-radii", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the JSON report")
    common.add_argument("--timing", action="store_true", help="record wall time in the report")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", parents=[common], help="list catalog entries")
    p.add_argument("--id")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("radius", parents=[common], help="solve a radius problem")
    _add_class(p)
    p.add_argument("--kind", required=True, choices=RADIUS_KINDS)
    p.add_argument("--class2", default="identity", help="second psi for product problems")
    p.add_argument("--params2", default="", help="key=value,... for --class2")
    p.add_argument("--target", type=float, help="beta (product-mbeta) or gamma (product-order)")
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("bohr", parents=[common], help="Koebe and Bohr radii")
    _add_class(p, required=False)
    p.add_argument("--janowski-special", action="store_true",
                   help="solve the explicit Janowski equation instead")
    p.set_defaults(func=cmd_bohr)

    p = sub.add_parser("distort", parents=[common], help="distortion bounds for |f'|")
    _add_class(p)
    p.add_argument("--r", type=float, nargs="+")
    p.add_argument("--table1", action="store_true", help="cardioid lower-bound table")
    p.set_defaults(func=cmd_distort)

    p = sub.add_parser("curve", parents=[common], help="sample an image curve")
    _add_class(p)
    p.add_argument("--object", choices=("psi-boundary", "f0-image"), default="psi-boundary")
    p.add_argument("--r", type=float, default=1.0)
    p.add_argument("--n", type=int, default=1024)
    p.add_argument("--out", help="CSV path (theta,x,y); stdout when omitted")
    p.add_argument("--svg", help="optional SVG polyline path")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("verify", parents=[common], help="numeric verification probes")
    _add_class(p)
    p.add_argument("--probe", required=True, choices=PROBES)
    p.add_argument("--eps", type=float, default=0.01)
    p.add_argument("--r-psi", type=float)
    p.add_argument("--r", type=float)
    p.add_argument("--g", help="expression in z, may call f0 and psi")
    p.add_argument("--h", help="expression in z")
    p.add_argument("--against", choices=("f0", "psi"), default="f0")
    p.add_argument("--grid", type=int, default=4096)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--omega-a", type=complex)
    p.add_argument("--omega-m", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def load_schema() -> dict:
    return json.loads(resources.files("minda_radii").joinpath("report.schema.json").read_text())


def _print_human(report: dict, out=None) -> None:
    out = out or sys.stdout
    print(f"{report['command']}: {report['status']}", file=out)
    res = report["results"]
    for key in ("entries", "rows"):
        if key in res:
            for row in res[key]:
                print("  " + "  ".join(f"{k}={_fmt(v)}" for k, v in row.items()), file=out)
    for k, v in res.items():
        if k not in ("entries", "rows", "samples"):
            print(f"  {k}: {_fmt(v)}", file=out)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        report = args.func(args)
    except (UsageError, CatalogError, DomainError, ConditionError, ExpressionError, SeriesError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (RootNotFound, ConvergenceError, HypergeometricError) as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    if args.timing:
        report["timing_ms"] = (time.perf_counter() - start) * 1e3
    report = _clean(report)
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        # keep stdout clean when it already carries CSV
        _print_human(report, sys.stderr if report["results"].get("csv") == "-" else sys.stdout)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
