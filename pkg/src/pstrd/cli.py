"""Command-line interface.

Every subcommand produces a structured payload; --json renders it as stable
(sorted-key) JSON and --stable additionally zeroes wall-clock fields so that
two runs with identical inputs emit identical bytes.

Exit codes: 0 success (including a timeout that still carries an incumbent,
flagged optimal=false), 1 computation error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass

from .bounds import bounds_report
from .families import complete_bipartite_value, double_star_value, universal_vertex_value
from .graphs import (
    Graph,
    GraphFormatError,
    generate,
    parse_graph,
    spec_from_string,
    to_edgelist,
)
from .heuristics import randomized_construction
from .labelings import parse_labels, validate_labeling
from .reduction import build_reduction, parse_x3c, verify_reduction_equivalence, x3c_has_exact_cover
from .solver import SolverConfig, solve_exact


@dataclass
class CommandResult:
    exit_code: int
    payload: dict

    def render(self, as_json: bool) -> str:
        if as_json:
            return json.dumps(self.payload, indent=2, sort_keys=True) + "\n"
        return _render_text(self.payload)


def _render_text(payload: dict) -> str:
    lines = []
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, (list, dict)):
            value = json.dumps(value, sort_keys=True)
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _load_graph(arg: str, fmt: str | None) -> Graph:
    """A --graph argument is a file path, or else a family spec keyword."""
    if os.path.exists(arg):
        if fmt is None:
            fmt = "dimacs" if arg.endswith((".col", ".dimacs")) else "edgelist"
        with open(arg) as fh:
            return parse_graph(fh.read(), fmt)
    try:
        return generate(spec_from_string(arg))
    except ValueError as exc:
        raise GraphFormatError(f"--graph {arg!r}: not a file and not a known family ({exc})")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON payload")
    common.add_argument("--stable", action="store_true",
                        help="zero wall-clock fields for byte-stable output")

    top = argparse.ArgumentParser(prog="pstrd", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="exact optimum for a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--format", choices=["dimacs", "edgelist"])
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--time-limit", type=float)
    p.add_argument("--algorithm", choices=["b0_enumeration", "naive"],
                   default="b0_enumeration")

    p = sub.add_parser("validate", parents=[common], help="check a labels file")
    p.add_argument("--graph", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--labels", required=True)
    p.add_argument("--format", choices=["dimacs", "edgelist"])

    p = sub.add_parser("bounds", parents=[common], help="evaluate every bound")
    p.add_argument("--graph", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--format", choices=["dimacs", "edgelist"])
    p.add_argument("--with-solver", action="store_true")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("heuristic", parents=[common], help="randomized construction trials")
    p.add_argument("--graph", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--format", choices=["dimacs", "edgelist"])
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--xi", type=float)

    p = sub.add_parser("family", parents=[common], help="closed-form family value")
    p.add_argument("--name", choices=["kbip", "bistar", "universal"], required=True)
    p.add_argument("--params", required=True, help="comma-separated integers")
    p.add_argument("--p", type=int, required=True)

    p = sub.add_parser("reduce", parents=[common], help="build a hardness gadget graph")
    p.add_argument("--x3c", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--variant", choices=["bipartite", "chordal"], default="bipartite")
    p.add_argument("--out", required=True)

    p = sub.add_parser("x3c-solve", parents=[common], help="find an exact cover")
    p.add_argument("--x3c", required=True)

    p = sub.add_parser("verify-reduction", parents=[common],
                       help="check the reduction equivalence on a small instance")
    p.add_argument("--x3c", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--variant", choices=["bipartite", "chordal"], default="bipartite")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("bench", parents=[common], help="run the acceptance suite")
    p.add_argument("--suite", choices=["paper"], default="paper")
    p.add_argument("--only", help="comma-separated criterion numbers")

    return top


def dispatch(argv: list[str]) -> CommandResult:
    """Run one CLI invocation and return its exit code and payload."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return CommandResult(2 if code != 0 else 0, {"error": "usage", "command": None})

    started = time.perf_counter()
    try:
        payload = _run(args)
    except (GraphFormatError, ValueError, OSError) as exc:
        payload = {"command": args.command, "error": str(exc)}
        return CommandResult(1, payload)
    payload["command"] = args.command
    payload["elapsed_ms"] = 0 if args.stable else round((time.perf_counter() - started) * 1000.0, 3)
    exit_code = int(payload.pop("_exit_code", 0))
    return CommandResult(exit_code, payload)


def _run(args: argparse.Namespace) -> dict:
    stable = args.stable
    if args.command == "solve":
        g = _load_graph(args.graph, args.format)
        cfg = SolverConfig(worker_count=args.workers, time_limit=args.time_limit,
                           algorithm=args.algorithm)
        result = solve_exact(g, args.p, cfg)
        return {
            "graph": args.graph,
            "p": args.p,
            "n": g.n,
            "value": result.value,
            "optimal": result.optimal,
            "witness": list(result.witness.labels),
            "stats": result.stats.to_dict(stable=stable),
        }

    if args.command == "validate":
        g = _load_graph(args.graph, args.format)
        with open(args.labels) as fh:
            f = parse_labels(fh.read())
        report = validate_labeling(g, args.p, f)
        return {"graph": args.graph, "p": args.p, **report.to_dict()}

    if args.command == "bounds":
        g = _load_graph(args.graph, args.format)
        cfg = SolverConfig(worker_count=args.workers)
        report = bounds_report(g, args.p, with_solver=args.with_solver, cfg=cfg)
        return {"graph": args.graph, "p": args.p, **report.to_dict()}

    if args.command == "heuristic":
        g = _load_graph(args.graph, args.format)
        stats = randomized_construction(g, args.p, args.trials, args.seed, xi=args.xi)
        return {"graph": args.graph, "p": args.p, **stats.to_dict()}

    if args.command == "family":
        params = tuple(int(x) for x in args.params.split(","))
        if args.name == "kbip":
            value = complete_bipartite_value(params[0], params[1], args.p)
        elif args.name == "bistar":
            value = double_star_value(params[0], params[1], args.p)
        else:
            value = universal_vertex_value(params[0], args.p)
        return value.to_dict()

    if args.command == "reduce":
        with open(args.x3c) as fh:
            inst = parse_x3c(fh.read())
        res = build_reduction(inst, args.p, args.variant)
        with open(args.out, "w") as fh:
            fh.write(to_edgelist(res.graph))
        return {
            "x3c": args.x3c,
            "p": args.p,
            "variant": args.variant,
            "n": res.graph.n,
            "m": res.graph.m,
            "r_threshold": res.r_threshold,
            "roles": list(res.roles),
            "out": args.out,
        }

    if args.command == "x3c-solve":
        with open(args.x3c) as fh:
            inst = parse_x3c(fh.read())
        cover = x3c_has_exact_cover(inst)
        return {
            "x3c": args.x3c,
            "q": inst.q,
            "t": inst.t,
            "cover": cover,
            "cover_exists": cover is not None,
        }

    if args.command == "verify-reduction":
        with open(args.x3c) as fh:
            inst = parse_x3c(fh.read())
        cfg = SolverConfig(worker_count=args.workers)
        report = verify_reduction_equivalence(inst, args.p, args.variant, cfg)
        return {"x3c": args.x3c, **report.to_dict()}

    # bench
    from .bench import run_suite
    only = None
    if args.only:
        only = sorted(int(x) for x in args.only.split(","))
    results = run_suite(only=only)
    ok = all(r.passed for r in results)
    return {
        "suite": args.suite,
        "criteria": [r.to_dict(stable=stable) for r in results],
        "passed": ok,
        "_exit_code": 0 if ok else 1,
    }


def main(argv: list[str] | None = None) -> None:
    result = dispatch(sys.argv[1:] if argv is None else argv)
    as_json = "--json" in (sys.argv[1:] if argv is None else argv)
    if result.payload.get("command") == "bench" and "criteria" in result.payload and not as_json:
        _print_bench_table(result.payload)
    else:
        sys.stdout.write(result.render(as_json))
    sys.exit(result.exit_code)


def _print_bench_table(payload: dict) -> None:
    for row in payload["criteria"]:
        status = "PASS" if row["passed"] else "FAIL"
        print(f"[{status}] criterion {row['number']:>2}  {row['name']:<28} "
              f"{row['detail']}")
    print(f"suite: {'PASS' if payload['passed'] else 'FAIL'}")


if __name__ == "__main__":
    main()
