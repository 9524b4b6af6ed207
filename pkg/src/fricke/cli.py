"""Batch front door: verify suites, traces, reconstructions, orbits, swaps.

All randomness flows from --seed, all output is sorted-key JSON (or CSV for
orbit exports), so identical invocations produce byte-identical files.
Exit codes: 0 success, 1 property failure, 2 usage or input errors; every
error path emits one JSON object with a stable ``error`` code.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import orbit as orbit_mod
from . import tame, wild
from .errors import CharVarietyError, OffSurfaceError
from .scalars import BACKENDS
from .verify import SUITES, run_suites


def _dump(data):
    return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"


def _emit(data, path=None):
    text = _dump(data)
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    sys.stdout.write(text)


def _read_json(path):
    with open(path) as fh:
        return json.load(fh)


def _load_point(data):
    if "lambda" in data:
        return wild.WildPoint.from_json(data)
    if "a" in data:
        return tame.TamePoint.from_json(data)
    raise CharVarietyError("input is neither a wild nor a tame point")


def _cmd_verify(args):
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    report = run_suites(names, args.count, args.seed)
    report["backend"] = args.backend
    _emit(report, args.out)
    return 0 if report["ok"] else 1


def _cmd_traces(args):
    data = _read_json(args.infile)
    if "M0" in data:
        point = wild.wild_traces(wild.WildRep.from_json(data))
    elif "M1" in data:
        point = tame.tame_traces(tame.TameTriple.from_json(data))
    else:
        raise CharVarietyError("input is neither a wild tuple nor a triple")
    _emit(point.to_json(), args.out)
    return 0


def _cmd_reconstruct(args):
    data = _read_json(args.infile)
    point = _load_point(data)
    if isinstance(point, wild.WildPoint):
        rep = wild.wild_reconstruct(point)
        _emit(rep.to_json(), args.out)
    else:
        b = BACKENDS[point.backend_name]
        if args.alpha1 is not None:
            alpha1 = b.parse(args.alpha1)
        elif point.backend_name == "float":
            alpha1 = tame.tame_eigenvalue_float(point.a1)
        else:
            raise CharVarietyError(
                "tame reconstruction on the exact backend needs --alpha1")
        triple = tame.tame_reconstruct(point, alpha1)
        _emit(triple.to_json(), args.out)
    return 0


def _cmd_chart_swap(args):
    point = wild.WildPoint.from_json(_read_json(args.infile))
    _emit(wild.chart_swap(point).to_json(), args.out)
    return 0


def _cmd_orbit(args):
    point = _load_point(_read_json(args.infile))
    record = orbit_mod.iterate(point, args.word, args.steps, tol=args.tol)
    period = orbit_mod.detect_cycle(record, tol=args.tol)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(record.to_csv())
    summary = {
        "steps": args.steps,
        "word": record.word.as_text(),
        "period": period,
        "drift": BACKENDS[record.backend_name].format(
            orbit_mod.residual_drift(record)),
    }
    _emit(summary)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fricke",
        description="Exact trace-coordinate computations and braid dynamics "
                    "for SL(2) character varieties.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, infile=True):
        p.add_argument("--backend", choices=("exact", "float"),
                       default="exact")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--tol", type=float, default=None)
        p.add_argument("--out", default=None)
        if infile:
            p.add_argument("--in", dest="infile", required=True)

    p = sub.add_parser("verify", help="run seeded property suites")
    common(p, infile=False)
    p.add_argument("--suite", default="all",
                   choices=("all",) + tuple(sorted(SUITES)))
    p.add_argument("--count", type=int, default=200)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("traces", help="trace coordinates of a tuple/triple")
    common(p)
    p.set_defaults(func=_cmd_traces)

    p = sub.add_parser("reconstruct", help="matrices from a surface point")
    common(p)
    p.add_argument("--alpha1", default=None,
                   help="eigenvalue of M1 (tame, exact backend)")
    p.set_defaults(func=_cmd_reconstruct)

    p = sub.add_parser("orbit", help="iterate a braid word on a point")
    common(p)
    p.add_argument("--word", required=True)
    p.add_argument("--steps", type=int, required=True)
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("chart-swap", help="transition to the opposite chart")
    common(p)
    p.set_defaults(func=_cmd_chart_swap)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except OffSurfaceError as exc:
        payload = {"error": exc.code, "message": str(exc)}
        if exc.residual is not None:
            residual = exc.residual
            backend = ("exact" if hasattr(residual, "magnitude_squared")
                       else "float")
            payload["residual"] = BACKENDS[backend].format(residual)
        sys.stdout.write(_dump(payload))
        return 2
    except CharVarietyError as exc:
        sys.stdout.write(_dump({"error": exc.code, "message": str(exc)}))
        return 2
    except (OSError, ValueError, KeyError, ZeroDivisionError) as exc:
        sys.stdout.write(_dump({"error": "bad_input", "message": str(exc)}))
        return 2


if __name__ == "__main__":
    sys.exit(main())
