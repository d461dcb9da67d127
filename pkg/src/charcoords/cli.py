"""Command-line front end.

Subcommands: classify, trace, reduce, certify, sample, orbit, markov,
dominance.  Coordinates travel as JSON documents with exact "p/q" strings;
tabular output is CSV on stdout.  Exit codes: 0 success / certified,
1 certified failure (a witness was found), 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from ._rat import parse_rat, rat_str, to_float
from .algorithms import (
    Certificate,
    certify_hyperbolic,
    markov_residual,
    reduction_monotonicity_audit,
    sample_counterexample,
    trace_reduction,
)
from .coords import LengthsCoord
from .dynamics import (
    ChartPointE0,
    ChartPointE1,
    conic_k_e0,
    conic_k_e1,
    dx_map_e0,
    dx_map_e1,
    _circle_angle_e0,
    _circle_angle_e1,
)
from .errors import CharcoordsError, NotTypePreserving
from .surface import AXES, Slope, slopes_to_depth
from .trace import Witness, dominance_check, slope_trace

EXIT_OK = 0
EXIT_WITNESS = 1
EXIT_INPUT = 2


def _load_coord(path) -> LengthsCoord:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    return LengthsCoord.from_json_dict(doc)


def _witness_dict(w: Witness) -> dict:
    return {
        "kind": w.kind,
        "color": w.color.upper() if w.color else None,
        "slope": str(w.slope) if w.slope else None,
        "abs_trace": rat_str(w.abs_trace),
    }


def _print(s=""):
    sys.stdout.write(s + "\n")


def cmd_classify(args) -> int:
    c = _load_coord(args.coord)
    label = c.classify_component()
    _print(json.dumps({
        "euler": label.euler,
        "signs": label.sign_string,
        "component": label.name,
    }))
    return EXIT_OK


def _trace_row(slope: Slope, result, want_float: bool) -> str:
    if isinstance(result, Witness):
        abs_trace, klass = result.abs_trace, result.kind
    else:
        abs_trace, klass = result.abs_trace, result.klass
    row = f"{slope},{rat_str(abs_trace)},{klass}"
    if want_float:
        row += f",{to_float(abs_trace)!r}"
    return row


def cmd_trace(args) -> int:
    c = _load_coord(args.coord)
    header = "slope,abs_trace,class" + (",abs_trace_float" if args.float else "")
    _print(header)
    if args.slope is not None:
        s = Slope.parse(args.slope)
        _print(_trace_row(s, slope_trace(c, s), args.float))
    else:
        for s in slopes_to_depth(args.depth):
            _print(_trace_row(s, slope_trace(c, s), args.float))
    return EXIT_OK


def cmd_reduce(args) -> int:
    c = _load_coord(args.coord)
    max_steps = None
    env = os.environ.get("CHARCOORDS_MAX_STEPS")
    if env:
        max_steps = int(env)
    witness, log = trace_reduction(c, max_steps)
    csv_lines = ["n,axis,a,b,c,k_float,case"]
    for e in log:
        csv_lines.append(
            f"{e.n},{e.axis or ''},{rat_str(e.simplex.a)},{rat_str(e.simplex.b)},"
            f"{rat_str(e.simplex.c)},{e.k!r},{e.case}"
        )
    if args.log_csv:
        with open(args.log_csv, "w", encoding="utf-8") as fh:
            fh.write("\n".join(csv_lines) + "\n")
    else:
        for line in csv_lines:
            _print(line)
    ok, bad = reduction_monotonicity_audit(log)
    doc = _witness_dict(witness)
    doc["steps"] = len(log) - 1
    doc["audit_ok"] = ok
    if not ok:
        doc["audit_failed_at"] = bad
    _print(json.dumps(doc))
    return EXIT_OK


def _certify_subtree(payload):
    doc, axis, depth = payload
    from .switches import simultaneous_switch
    from .errors import NotAdmissible
    from ._rat import TWO

    c = LengthsCoord.from_json_dict(doc)
    try:
        child = simultaneous_switch(c, axis)
    except NotAdmissible:
        bad = c.tri.neighbor(axis).slope(axis)
        return ("witness", {
            "kind": "Parabolic", "color": axis.upper(),
            "slope": str(bad), "abs_trace": rat_str(TWO),
        }, 0)
    result = certify_hyperbolic(child, depth - 1, banned_axis=axis)
    if isinstance(result, Certificate):
        return ("ok", rat_str(result.min_trace), result.visited)
    return ("witness", _witness_dict(result.witness), 0)


def cmd_certify(args) -> int:
    c = _load_coord(args.coord)
    if args.jobs > 1 and args.depth >= 1:
        # Root checks, then one certification task per depth-1 subtree,
        # merged in axis order for determinism.
        base = certify_hyperbolic(c, 0)
        if not base.ok:
            _print(json.dumps({
                "certified": False, "depth": args.depth,
                "witness": _witness_dict(base.witness),
            }))
            return EXIT_WITNESS
        doc = c.to_json_dict()
        payloads = [(doc, axis, args.depth) for axis in AXES]
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_certify_subtree, payloads))
        visited = base.visited
        min_trace = base.min_trace
        for status, data, n in results:
            if status == "witness":
                _print(json.dumps({
                    "certified": False, "depth": args.depth, "witness": data,
                }))
                return EXIT_WITNESS
            visited += n
            min_trace = min(min_trace, parse_rat(data))
        _print(json.dumps({
            "certified": True, "depth": args.depth,
            "visited": visited, "min_trace": rat_str(min_trace),
        }))
        return EXIT_OK
    result = certify_hyperbolic(c, args.depth)
    if isinstance(result, Certificate):
        _print(json.dumps({
            "certified": True, "depth": result.depth,
            "visited": result.visited, "min_trace": rat_str(result.min_trace),
        }))
        return EXIT_OK
    _print(json.dumps({
        "certified": False, "depth": args.depth,
        "witness": _witness_dict(result.witness),
    }))
    return EXIT_WITNESS


def _sample_one(payload):
    seed, depth = payload
    coord, _ = sample_counterexample(seed, depth)
    return json.dumps(coord.to_json_dict())


def cmd_sample(args) -> int:
    payloads = [(args.seed + i, args.depth) for i in range(args.count)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            lines = list(pool.map(_sample_one, payloads))
    else:
        lines = [_sample_one(p) for p in payloads]
    for line in lines:
        _print(line)
    return EXIT_OK


def cmd_orbit(args) -> int:
    b_str, c_str = args.start.split(",")
    b, c = parse_rat(b_str), parse_rat(c_str)
    if args.family == "e0":
        p = ChartPointE0(b, c)
        step, conic, angle = dx_map_e0, conic_k_e0, _circle_angle_e0
    else:
        p = ChartPointE1(b, c)
        step, conic, angle = dx_map_e1, conic_k_e1, _circle_angle_e1
    k = conic(p)
    _print("iter,b,c,k,angle_float")
    for i in range(args.iters + 1):
        _print(
            f"{i},{rat_str(p.b)},{rat_str(p.c)},{rat_str(conic(p))},"
            f"{angle(p, k)!r}"
        )
        if i < args.iters:
            p = step(p)
    return EXIT_OK


def cmd_markov(args) -> int:
    c = _load_coord(args.coord)
    r = markov_residual(c)
    _print(rat_str(r) + (f",{to_float(r)!r}" if args.float else ""))
    return EXIT_OK


def cmd_dominance(args) -> int:
    c = _load_coord(args.coord)
    report = dominance_check(c, slopes_to_depth(args.depth))
    header = "slope,abs_trace,fuchsian_abs_trace,strict"
    if args.float:
        header += ",abs_trace_float,fuchsian_abs_trace_float"
    _print(header)
    for row in report.rows:
        line = (f"{row.slope},{rat_str(row.abs_trace)},"
                f"{rat_str(row.fuchsian_abs_trace)},{row.strict}")
        if args.float:
            line += f",{to_float(row.abs_trace)!r},{to_float(row.fuchsian_abs_trace)!r}"
        _print(line)
    return EXIT_OK if report.all_hold else EXIT_WITNESS


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="charcoords",
        description="Exact lengths-coordinate computations for the four-punctured sphere",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="Euler class, puncture signs, component")
    p.add_argument("coord")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("trace", help="exact |trace| of simple closed curves")
    p.add_argument("coord")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--slope", help="single slope p/q")
    g.add_argument("--depth", type=int, help="all slopes of Farey depth <= d")
    p.add_argument("--float", action="store_true", help="add decimal columns")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("reduce", help="trace reduction for Euler class 0")
    p.add_argument("coord")
    p.add_argument("--log-csv", help="write the reduction log CSV here")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("certify", help="hyperbolicity certificate for Euler class +-1")
    p.add_argument("coord")
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("sample", help="emit certified coordinates as JSON lines")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("orbit", help="iterate a twist map in a chart")
    p.add_argument("--family", choices=("e0", "e1"), required=True)
    p.add_argument("--start", required=True, help='start point "b,c" (exact)')
    p.add_argument("--iters", type=int, default=10)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("markov", help="trace-identity residual (expected 0/1)")
    p.add_argument("coord")
    p.add_argument("--float", action="store_true", help="add a decimal column")
    p.set_defaults(func=cmd_markov)

    p = sub.add_parser("dominance", help="compare against the all-plus coordinate")
    p.add_argument("coord")
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--float", action="store_true", help="add decimal columns")
    p.set_defaults(func=cmd_dominance)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotTypePreserving as exc:
        print(f"error: not type-preserving: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (CharcoordsError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
