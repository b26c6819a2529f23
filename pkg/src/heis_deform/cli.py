"""Command-line interface: ``heis-deform <command> [options] <input.json | - | inline JSON>``."""
from __future__ import annotations

import argparse
import csv
import json
import sys

from . import family as fam
from . import jsonio
from .homs import is_injective
from .linalg import SingularMatrixError
from .oracle import freeness_probe, properness_probe
from .parametrize import DegenerateStratumError, alpha, canonicalize, coords, omega
from .properness import NotProperError, geometry, is_proper
from .scalar import DEFAULT_TOL, ScalarModeError, to_json

EXIT_OK, EXIT_NOT_PROPER, EXIT_ERROR = 0, 1, 2


class CommandError(Exception):
    pass


def _fmt(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(_fmt(v) for v in x) + "]"
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


def _text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    for key, val in obj.items():
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_text(val, indent + 1))
        else:
            lines.append(f"{pad}{key}: {_fmt(val)}")
    return "\n".join(lines)


def _emit(obj, args) -> None:
    if args.format == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(_text(obj))


def _pair(args):
    if args.input is None:
        raise jsonio.InputError("missing input (file path, '-' or inline JSON)")
    return jsonio.pair_from_json(jsonio.load(args.input), require_exact=args.exact)


def cmd_check(args) -> int:
    p = _pair(args)
    v = is_proper(p, args.tol)
    out = jsonio.verdict_to_json(v)
    out["injective"] = {"rho": is_injective(p.rho, args.tol), "rho_prime": is_injective(p.rho_prime, args.tol)}
    _emit(out, args)
    if v.proper:
        return EXIT_OK
    return EXIT_NOT_PROPER if v.decided else EXIT_ERROR


def cmd_param(args) -> int:
    if args.input is None:
        raise jsonio.InputError("missing input")
    point = jsonio.param_from_json(jsonio.load(args.input), require_exact=args.exact)
    try:
        p = alpha(point, args.tol)
    except ValueError as exc:
        raise CommandError(str(exc)) from exc
    _emit(jsonio.pair_to_json(p), args)
    return EXIT_OK


def cmd_coords(args) -> int:
    p = _pair(args)
    point = coords(p, args.tol)
    out = jsonio.param_to_json(point)
    out.update(jsonio.uv_to_json(omega(p, args.tol)))
    _emit(out, args)
    return EXIT_OK


def cmd_canon(args) -> int:
    _emit(jsonio.canonical_to_json(canonicalize(_pair(args), args.tol)), args)
    return EXIT_OK


def cmd_geom(args) -> int:
    _emit(jsonio.geometry_to_json(geometry(_pair(args), args.tol)), args)
    return EXIT_OK


def cmd_probe(args) -> int:
    p = _pair(args)
    report = properness_probe(p, args.R, args.N)
    out = jsonio.report_to_json(report)
    fixed = freeness_probe(p, args.free_N, args.tol)
    out["fixed_point_words"] = {"N": args.free_N, "count": len(fixed), "sample": [list(w) for w in fixed[:32]]}
    _emit(out, args)
    return EXIT_OK


def cmd_family(args) -> int:
    if args.preset:
        obj = dict(fam.PRESETS[args.preset])
    elif args.input is not None:
        obj = jsonio.load(args.input)
    else:
        raise jsonio.InputError("family needs an input or --preset")
    f = fam.family_from_json(obj)
    if args.exact and not f.exact:
        raise ScalarModeError("exact mode requires rational inputs")
    lo, hi = args.range if args.range else obj.get("range", (0, 1))
    steps = args.steps if args.steps is not None else int(obj.get("steps", 5))
    if f.exact:
        lo, hi = jsonio._scalar(lo, "exact"), jsonio._scalar(hi, "exact")
    values = fam.sample_values(lo, hi, steps, f.exact)
    rows = fam.family_table(f, values, args.tol)
    cross = fam.crossings(f, min(lo, hi), max(lo, hi), args.tol)

    def conv(r):
        return {
            "param": to_json(r["param"]),
            "proper": r["proper"],
            "fiber_value": to_json(r["fiber_value"]),
            "fiber_length": None if r["fiber_length"] is None else to_json(r["fiber_length"]),
            "torus_matrix": jsonio.matrix_to_json(r["torus_matrix"]),
            "component": r["component"] if isinstance(r["component"], str) else list(r["component"]),
        }

    def conv_roots(v):
        return v if isinstance(v, str) else [to_json(x) if not isinstance(x, float) else x for x in v]

    out = {
        "param": f.param,
        "rows": [conv(r) for r in rows],
        "crossings": {k: conv_roots(v) for k, v in cross.items()},
    }
    if args.emit_plot:
        with open(args.emit_plot, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow([f.param, "fiber_length"])
            for r in rows:
                fl = r["fiber_length"]
                w.writerow([float(r["param"]), "" if fl is None else float(fl)])
    if args.format == "json":
        print(json.dumps(out, indent=2))
    else:
        print(f"{f.param:>10}  {'proper':>6}  {'fiber':>10}  {'component':>10}  torus")
        for r in out["rows"]:
            print(f"{_fmt(r['param']):>10}  {_fmt(r['proper']):>6}  {_fmt(r['fiber_length']):>10}  "
                  f"{_fmt(r['component']):>10}  {_fmt(r['torus_matrix'])}")
        for k, v in out["crossings"].items():
            print(f"{k} fails at: {_fmt(v) if v else 'none'}")
    return EXIT_OK


COMMANDS = {
    "check": cmd_check,
    "param": cmd_param,
    "coords": cmd_coords,
    "canon": cmd_canon,
    "probe": cmd_probe,
    "family": cmd_family,
    "geom": cmd_geom,
}


def _n_list(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad N list {text!r}") from exc


def _range(text: str) -> tuple:
    parts = [x.strip() for x in text.split(",")]
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("range must be lo,hi")
    return tuple(parts)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", help="JSON file, '-' for stdin, or inline JSON")
    common.add_argument("--exact", action="store_true", help="require rational inputs")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="float zero tolerance")
    common.add_argument("--R", type=str, default="2", help="probe box radius")
    common.add_argument("--N", type=_n_list, default=[8, 12, 16, 20], help="probe word-box sizes, e.g. 8,12,16,20")
    common.add_argument("--free-N", type=int, default=10, help="word-box size for the freeness probe")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--emit-plot", metavar="PATH", help="family: write (param, fiber_length) CSV")
    common.add_argument("--preset", choices=sorted(fam.PRESETS), help="family: built-in family")
    common.add_argument("--range", type=_range, help="family: lo,hi")
    common.add_argument("--steps", type=int, help="family: number of sample points")

    parser = argparse.ArgumentParser(
        prog="heis-deform",
        description="Deformations of the discrete Heisenberg group acting on G from both sides.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        args.R = jsonio._scalar(args.R, "exact")
    except jsonio.InputError as exc:
        print(f"heis-deform: {exc}", file=sys.stderr)
        return EXIT_ERROR
    try:
        return COMMANDS[args.command](args)
    except (jsonio.InputError, ScalarModeError, fam.FamilyError, NotProperError,
            DegenerateStratumError, SingularMatrixError, CommandError, OSError, ValueError) as exc:
        print(f"heis-deform {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
