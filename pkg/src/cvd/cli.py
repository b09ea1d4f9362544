"""Command-line front end.

Commands: solve (decision), min (optimum), verify, oracle, gen, analyze.
Machine-readable results go to stdout as single-line JSON; diagnostics go
to stderr.  Exit codes: 0 success / feasible / valid, 1 infeasible or
invalid, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .generate import GenSpec, gen_gnp, gen_planted
from .graph import Graph, format_graph, parse_graph
from .oracle import oracle_min
from .recurrence import analyze_cases
from .solver import PIVOT_RULES, SolveOutcome, solve_decision, solve_min


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cvd", description="exact cluster vertex deletion")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide whether k deletions suffice")
    p.add_argument("-i", "--input", required=True, help="graph file")
    p.add_argument("-k", type=int, required=True, help="deletion budget")
    p.add_argument("--full-tree", action="store_true", help="explore the whole tree instead of stopping at the first solution")
    p.add_argument("--pivot", choices=PIVOT_RULES, default="min-id", help="pivot selection heuristic")
    p.add_argument("--stats", action="store_true", help="print a search summary to stderr")
    p.set_defaults(run=_cmd_solve)

    p = sub.add_parser("min", help="find the minimum deletion count")
    p.add_argument("-i", "--input", required=True, help="graph file")
    p.add_argument("--stats", action="store_true", help="print a search summary to stderr")
    p.set_defaults(run=_cmd_min)

    p = sub.add_parser("verify", help="check a deletion set against a graph")
    p.add_argument("-i", "--input", required=True, help="graph file")
    p.add_argument("-s", "--solution", required=True, help="file with whitespace-separated vertex ids")
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("oracle", help="brute-force the minimum (small graphs only)")
    p.add_argument("-i", "--input", required=True, help="graph file")
    p.add_argument("--force", action="store_true", help="ignore the size guard")
    p.set_defaults(run=_cmd_oracle)

    p = sub.add_parser("gen", help="generate a seeded instance")
    p.add_argument("--model", choices=("planted", "gnp"), required=True)
    p.add_argument("--clusters", type=int, default=0, help="planted: number of cliques")
    p.add_argument("--size", type=int, default=0, help="planted: vertices per clique")
    p.add_argument("--noise", type=int, default=0, help="planted: number of noise vertices")
    p.add_argument("--n", type=int, default=0, help="gnp: number of vertices")
    p.add_argument("-p", type=float, default=0.0, help="edge probability")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--output", required=True, help="where to write the graph file")
    p.set_defaults(run=_cmd_gen)

    p = sub.add_parser("analyze", help="report the solver's branching vectors and roots")
    p.add_argument("--json", action="store_true", dest="as_json")
    p.set_defaults(run=_cmd_analyze)

    return parser


def _load_graph(path: str) -> Graph:
    return parse_graph(Path(path).read_text())


def _result_json(outcome: SolveOutcome, k: int) -> str:
    solution = sorted(outcome.modulator) if outcome.feasible else []
    payload = {
        "feasible": outcome.feasible,
        "k": k,
        "solution": solution,
        "nodes": outcome.stats.nodes,
        "leaves": outcome.stats.leaves,
        "max_depth": outcome.stats.max_depth,
    }
    return json.dumps(payload)


def _print_stats(outcome: SolveOutcome) -> None:
    s = outcome.stats
    print(f"nodes={s.nodes} leaves={s.leaves} max_depth={s.max_depth}", file=sys.stderr)


def _cmd_solve(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    outcome = solve_decision(g, args.k, full_tree=args.full_tree, pivot_rule=args.pivot)
    print(_result_json(outcome, args.k))
    if args.stats:
        _print_stats(outcome)
    return 0 if outcome.feasible else 1


def _cmd_min(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    outcome = solve_min(g)
    print(_result_json(outcome, len(outcome.modulator)))
    if args.stats:
        _print_stats(outcome)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    text = Path(args.solution).read_text()
    try:
        ids = [int(tok) for tok in text.split()]
    except ValueError:
        raise ValueError(f"solution file {args.solution} must contain integers") from None
    chosen = set(ids)
    outside = sorted(x for x in chosen if x not in g)
    if outside:
        raise ValueError(f"solution names vertices not in the graph: {outside}")
    valid = g.is_cluster_graph(within=g.vertices - chosen)
    print(json.dumps({"valid": valid}))
    return 0 if valid else 1


def _cmd_oracle(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    size, witness = oracle_min(g, force=args.force)
    print(json.dumps({"size": size, "solution": sorted(witness)}))
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.model == "planted":
        spec = GenSpec(
            model="planted",
            seed=args.seed,
            clusters=args.clusters,
            size=args.size,
            noise=args.noise,
            p=args.p,
        )
        g = gen_planted(spec)
    else:
        spec = GenSpec(model="gnp", seed=args.seed, n=args.n, p=args.p)
        g = gen_gnp(spec)
    Path(args.output).write_text(format_graph(g))
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    report = analyze_cases()
    if args.as_json:
        payload = {
            "sections": {
                name: [{"vector": list(vec), "root": round(root, 10)} for vec, root in entries]
                for name, entries in report.sections
            },
            "worst": {"vector": list(report.worst_vector), "root": round(report.worst_root, 10)},
        }
        print(json.dumps(payload))
    else:
        for name, entries in report.sections:
            print(f"{name}:")
            for vec, root in entries:
                print(f"  ({','.join(map(str, vec))})  root={root:.10f}")
        print(f"worst: ({','.join(map(str, report.worst_vector))})  root={report.worst_root:.10f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
