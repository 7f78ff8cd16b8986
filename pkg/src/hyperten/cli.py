"""Command-line interface.

Usage:
    hyperten report FILE [--format text|json] [--tol T] [--max-iters N] [--target a|q|both]
    hyperten tensor FILE [--which a|l|q] [--budget N]
    hyperten oddbip FILE [--format text|json]
    hyperten radius FILE [--target a|q|both]
    hyperten bounds FILE

Exit codes: 0 success (oddbip: feasible), 1 oddbip infeasible, 2 bad input,
3 spectral radius iteration did not converge (report still printed),
4 dense tensor over budget.
"""

from __future__ import annotations

import argparse
import sys

from .bounds import bounds_report
from .hypergraph import HypergraphError, read_hypergraph
from .oddbip import find_odd_bipartition
from .perron import DEFAULT_MAX_ITERATIONS, DEFAULT_TOL
from .report import (
    REPORT_DENSE_BUDGET,
    SCHEMA_VERSION,
    build_report,
    dumps_json,
    format_text,
    solve_targets,
)
from .tensor import DEFAULT_BUDGET, DenseBudgetError, dense_adjacency, dense_laplacian, dense_signless

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_INPUT = 2
EXIT_NOT_CONVERGED = 3
EXIT_BUDGET = 4


def _positive_float(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _load(args):
    return read_hypergraph(args.path, allow_singletons=getattr(args, "allow_singleton_edges", False))


def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_report(args) -> int:
    H = _load(args)
    rep = build_report(H, args.tol, args.max_iters, args.target, args.dense_budget)
    _emit(dumps_json(rep.to_dict()) if args.format == "json" else format_text(rep))
    return EXIT_OK if rep.converged else EXIT_NOT_CONVERGED


def cmd_tensor(args) -> int:
    H = _load(args)
    build = {"a": dense_adjacency, "l": dense_laplacian, "q": dense_signless}[args.which]
    T = build(H, budget=args.budget)
    sys.stdout.write(T.dump())
    return EXIT_OK


def cmd_oddbip(args) -> int:
    H = _load(args)
    bip = find_odd_bipartition(H)
    if args.format == "json":
        _emit(dumps_json({"schema_version": SCHEMA_VERSION, "odd_bipartite": bip.feasible,
                          "V1": None if bip.V1 is None else list(bip.V1),
                          "witness": bip.witness_dict()}))
    elif bip.feasible:
        _emit("odd-bipartite\nV1: " + " ".join(map(str, bip.V1)))
    else:
        _emit(f"not odd-bipartite\nwitness ({bip.witness_kind}):\n"
              + "\n".join(" ".join(map(str, e)) for e in bip.witness_edges))
    return EXIT_OK if bip.feasible else EXIT_INFEASIBLE


def cmd_radius(args) -> int:
    H = _load(args)
    targets = ["a", "q"] if args.target == "both" else [args.target]
    res = solve_targets(H, targets, args.tol, args.max_iters)
    if args.format == "json":
        _emit(dumps_json({"schema_version": SCHEMA_VERSION, **{t: r.to_dict() for t, r in res.items()}}))
    else:
        for t, r in res.items():
            _emit(f"{t}: [{r.rho_lower:.17g}, {r.rho_upper:.17g}] iterations={r.iterations} "
                  f"converged={r.converged}")
    return EXIT_OK if all(r.converged for r in res.values()) else EXIT_NOT_CONVERGED


def cmd_bounds(args) -> int:
    H = _load(args)
    rep = bounds_report(H)
    if args.format == "json":
        _emit(dumps_json({"schema_version": SCHEMA_VERSION, **rep.to_dict()}))
    else:
        for key, value in rep.to_dict().items():
            _emit(f"{key}: {value}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperten",
                                     description="Spectra of general hypergraphs via their tensors.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, solver=False, fmt=True):
        p.add_argument("path", help="edge-list file")
        p.add_argument("--allow-singleton-edges", action="store_true",
                       help="accept edges with a single vertex")
        if fmt:
            p.add_argument("--format", choices=["text", "json"], default="text")
        if solver:
            p.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL)
            p.add_argument("--max-iters", type=_positive_int, default=DEFAULT_MAX_ITERATIONS)
            p.add_argument("--target", choices=["a", "q", "both"], default="both")

    p = sub.add_parser("report", help="full spectral report")
    add_common(p, solver=True)
    p.add_argument("--dense-budget", type=_positive_int, default=REPORT_DENSE_BUDGET,
                   help="largest dense tensor built for the exact similarity check")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("tensor", help="dump the nonzero entries of a dense tensor")
    add_common(p, fmt=False)
    p.add_argument("--which", choices=["a", "l", "q"], default="a")
    p.add_argument("--budget", type=_positive_int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("oddbip", help="decide odd-bipartiteness (no spectral solve)")
    add_common(p)
    p.set_defaults(func=cmd_oddbip)

    p = sub.add_parser("radius", help="spectral radius enclosures only")
    add_common(p, solver=True)
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("bounds", help="degree bounds only")
    add_common(p)
    p.set_defaults(func=cmd_bounds)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DenseBudgetError as exc:
        print(f"hyperten: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (HypergraphError, OSError) as exc:
        print(f"hyperten: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
