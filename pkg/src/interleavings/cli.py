"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 verification discrepancy.
"""
from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import serialize as ser
from .hom_analysis import hom_life
from .interval_classifier import classify, progression
from .interval_core import as_rational, hom_window, render_rational
from .matching_distance import match_distance
from .oracle import annotate_status
from .variety_builder import build_variety
from .verification import run_verify

EXIT_OK, EXIT_USAGE, EXIT_DISCREPANCY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational_arg(text: str):
    try:
        return as_rational(text)
    except (TypeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="interleavings", description="Varieties of interleavings between interval modules.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def pair(sp):
        sp.add_argument("--m", required=True, metavar="FILE", help="module file for M")
        sp.add_argument("--n", required=True, metavar="FILE", help="module file for N")

    pair(sub.add_parser("window", help="all pairwise hom windows"))
    pair(sub.add_parser("distance", help="interleaving distance"))

    sp = sub.add_parser("variety", help="presentation of the variety at epsilon")
    pair(sp)
    sp.add_argument("--epsilon", required=True, type=_rational_arg)
    sp.add_argument("--probe", type=int, metavar="BUDGET", default=None,
                    help="search for a witness with this many random trials")
    sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("classify", help="variety class of a pair of single intervals")
    pair(sp)
    sp.add_argument("--epsilon", required=True, type=_rational_arg)

    sp = sub.add_parser("progression", help="breakpoints and classes as epsilon grows")
    pair(sp)
    sp.add_argument("--format", choices=("json", "text"), default="json")

    sp = sub.add_parser("verify", help="randomised theorem and oracle sweeps")
    sp.add_argument("--samples", type=int, default=10000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--oracle-samples", type=int, default=1000)
    sp.add_argument("--matching-samples", type=int, default=500)
    sp.add_argument("--engine", choices=("exact", "lattice", "lattice-numpy"), default="exact")
    return p


def _load_pair(args):
    return ser.load_module(args.m), ser.load_module(args.n)


def _single(P, label: str):
    if len(P) != 1:
        raise UsageError(f"{label} has {len(P)} summands; this command needs exactly one interval")
    return P[0]


def cmd_window(args) -> dict:
    M, N = _load_pair(args)

    def table(src, dst, src_label, dst_label):
        rows = []
        for j, s in enumerate(src, start=1):
            for i, t in enumerate(dst, start=1):
                rows.append({"src": f"{src_label}{j}", "dst": f"{dst_label}{i}",
                             "window": ser.window_to_json(hom_window(s, t))})
        return rows

    return {
        "schema": ser.SCHEMA_WINDOWS,
        "M": ser.module_to_json(M),
        "N": ser.module_to_json(N),
        "M->N": table(M, N, "M", "N"),
        "N->M": table(N, M, "N", "M"),
        "M->M": table(M, M, "M", "M"),
        "N->N": table(N, N, "N", "N"),
    }


def cmd_distance(args) -> dict:
    M, N = _load_pair(args)
    r = render_rational
    if len(M) == 1 and len(N) == 1:
        h = hom_life(M[0], N[0])
        return {
            "schema": ser.SCHEMA_DISTANCE,
            "method": "interval",
            "distance": r(h.distance),
            "m1": r(h.m1),
            "m2": r(h.m2),
            "sigma": r(h.sigma),
            "sigma_prime": r(h.sigma_prime),
            "tau": r(h.tau),
            "tau_prime": r(h.tau_prime),
        }
    res = match_distance(M, N)
    return {
        "schema": ser.SCHEMA_DISTANCE,
        "method": "matching",
        "distance": r(res.distance),
        "matching": [list(x) for x in res.matching],
        "unmatched_M": list(res.unmatched_M),
        "unmatched_N": list(res.unmatched_N),
    }


def cmd_variety(args) -> dict:
    M, N = _load_pair(args)
    if len(M) == 0 or len(N) == 0:
        raise UsageError("variety needs at least one summand in each module")
    if args.epsilon < 0:
        raise UsageError("epsilon must be non-negative")
    pres = build_variety(M, N, args.epsilon)
    probe = None
    if args.probe is not None:
        if args.probe < 0:
            raise UsageError("--probe budget must be non-negative")
        pres, result = annotate_status(pres, args.probe, args.seed)
        probe = {"budget": args.probe, "seed": args.seed, "result": result.status}
        if result.found:
            probe["witness"] = ser.assignment_to_json(result.assignment)
    return ser.variety_to_json(pres, probe)


def cmd_classify(args) -> dict:
    M, N = _load_pair(args)
    a, b = _single(M, "M"), _single(N, "N")
    if args.epsilon < 0:
        raise UsageError("epsilon must be non-negative")
    return {
        "schema": ser.SCHEMA_CLASS,
        "M": str(a),
        "N": str(b),
        "epsilon": render_rational(args.epsilon),
        "class": classify(a, b, args.epsilon),
    }


def render_timeline(M, N, prog) -> str:
    """ASCII timeline: tick labels above the axis, class names beneath each segment."""
    labels = [render_rational(s) for s, _ in prog.segments]
    names = [c for _, c in prog.segments]
    cell = max(max(len(x) for x in labels + names) + 3, 10)
    ticks = "".join(lbl.ljust(cell) for lbl in labels)
    axis = "".join("|" + "-" * (cell - 1) for _ in labels)[:-1] + ">"
    under = "".join(("  " + nm).ljust(cell) for nm in names)
    head = f"M = {M}   N = {N}"
    return "\n".join([head, ticks.rstrip(), axis, under.rstrip(), ""])


def cmd_progression(args):
    M, N = _load_pair(args)
    a, b = _single(M, "M"), _single(N, "N")
    prog = progression(a, b)
    if args.format == "text":
        return render_timeline(a, b, prog)
    return ser.progression_to_json(a, b, prog)


def cmd_verify(args):
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    report = run_verify(args.samples, args.seed, args.oracle_samples,
                        args.matching_samples, args.engine)
    return {"schema": ser.SCHEMA_VERIFY, **report}


COMMANDS = {
    "window": cmd_window,
    "distance": cmd_distance,
    "variety": cmd_variety,
    "classify": cmd_classify,
    "progression": cmd_progression,
    "verify": cmd_verify,
}


def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        result = COMMANDS[args.command](args)
    except UsageError as exc:
        err.write(f"interleavings: error: {exc}\n")
        return EXIT_USAGE
    except ser.FormatError as exc:
        err.write(f"interleavings: input error: {exc}\n")
        return EXIT_USAGE
    if isinstance(result, str):
        out.write(result)
        return EXIT_OK
    out.write(ser.dumps(result))
    if args.command == "verify" and not result["ok"]:
        return EXIT_DISCREPANCY
    return EXIT_OK


def main():  # pragma: no cover
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()
