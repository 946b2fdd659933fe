"""Command-line interface.

Exit codes: 0 on success, 2 for anything wrong with the input (malformed
files, bad flags, infeasible bounds, oversized budgets), 1 for internal
errors.  Dataset arguments accept ``-`` for stdin.  All document output
goes through the same serialization as the HTTP service.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import traceback
from pathlib import Path

from bisplit.bench import (
    emit_benchmark_csv,
    emit_curve_csv,
    run_benchmark,
    run_heuristic_curve,
)
from bisplit.generators import gen_caterpillar, gen_random_bipartite, gen_subdivision
from bisplit.minimize import BudgetError, InfeasibleError
from bisplit.model import (
    DatasetError,
    OrderError,
    RunConfig,
    SplitError,
    dataset_to_json,
    dumps_document,
    graph_stats,
    load_dataset,
    parse_document,
)
from bisplit.pipeline import (
    compute_order,
    initial_layout,
    split_layout,
    verify_document,
)
from bisplit.render import render_svg

_ORDER_METHODS = {"alphabetical": "alphabetical", "barycenter": "barycenter",
                  "as-input": "asInput"}


def _read_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    return json.loads(Path(path).read_text())


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _add_order_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--fixed", choices=["top", "bottom"], default="top",
                   help="which layer keeps its order (default: top)")
    p.add_argument("--order", choices=sorted(_ORDER_METHODS), default="alphabetical",
                   help="initial ordering method (default: alphabetical)")
    p.add_argument("--sweeps", type=int, default=1,
                   help="barycenter sweeps when --order barycenter (default: 1)")


def _config(args: argparse.Namespace, objective: str, method: str = "exact") -> RunConfig:
    cfg = RunConfig(
        fixed_side=args.fixed,
        order_method=_ORDER_METHODS[args.order],
        barycenter_sweeps=args.sweeps,
        objective=objective,
        split_budget=getattr(args, "k", 0) or 0,
        crossing_bound=getattr(args, "max_crossings", None),
        method=method,
    )
    cfg.validate()
    return cfg


def _emit_document(args: argparse.Namespace, doc) -> None:
    if getattr(args, "format", "json") == "svg":
        _write(render_svg(doc), args.out)
    else:
        _write(dumps_document(doc), args.out)


# ---------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------

def cmd_stats(args: argparse.Namespace) -> int:
    graph = load_dataset(_read_json(args.dataset))
    _write(json.dumps(graph_stats(graph), indent=2) + "\n", args.out)
    return 0


def cmd_order(args: argparse.Namespace) -> int:
    graph = load_dataset(_read_json(args.dataset))
    doc = initial_layout(graph, _config(args, "minSplits"))
    _emit_document(args, doc)
    return 0


def cmd_remove(args: argparse.Namespace) -> int:
    graph = load_dataset(_read_json(args.dataset))
    objective = "minSplits" if args.objective == "splits" else "minSplitVertices"
    config = _config(args, objective)
    doc = split_layout(graph, compute_order(graph, config), config)
    _emit_document(args, doc)
    return 0


def cmd_minimize(args: argparse.Namespace) -> int:
    graph = load_dataset(_read_json(args.dataset))
    config = _config(args, "minCrossings")
    doc = split_layout(graph, compute_order(graph, config), config,
                       allow_large_k=args.allow_large_k)
    _emit_document(args, doc)
    return 0


def cmd_heuristic(args: argparse.Namespace) -> int:
    graph = load_dataset(_read_json(args.dataset))
    config = _config(args, "minCrossings", method=args.method)
    doc = split_layout(graph, compute_order(graph, config), config)
    _emit_document(args, doc)
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "subdivision":
        graph = gen_subdivision(args.base)
    elif args.family == "random":
        graph = gen_random_bipartite(args.nt, args.nb, args.prob, seed=args.seed)
    else:
        try:
            legs = [int(x) for x in args.legs.split(",")]
        except ValueError:
            raise DatasetError(f"--legs must be comma-separated integers, got {args.legs!r}")
        if len(legs) == 1:  # a single number repeats for the whole spine
            legs = legs * args.spine
        graph = gen_caterpillar(args.spine, legs)
    _write(json.dumps(dataset_to_json(graph), indent=2) + "\n", args.out)
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    if args.curve:
        graph = load_dataset(_read_json(args.target))
        config = _config(args, "minCrossings", method=args.method)
        points = run_heuristic_curve(graph, compute_order(graph, config),
                                     args.method, args.k)
        _write(emit_curve_csv(points), args.out)
    else:
        if not Path(args.target).is_dir():
            raise DatasetError(f"{args.target} is not a dataset directory")
        _write(emit_benchmark_csv(run_benchmark(args.target)), args.out)
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    obj = _read_json(args.input)
    if isinstance(obj, dict) and "order" in obj and "graph" in obj:
        doc = parse_document(obj)
        verify_document(doc)
    else:
        graph = load_dataset(obj)
        doc = initial_layout(graph, _config(args, "minSplits"))
    _write(render_svg(doc, width=args.width), args.out)
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    from bisplit.service import serve

    port = args.port
    if port is None:
        raw = os.environ.get("BISPLIT_PORT", "8000")
        try:
            port = int(raw)
        except ValueError:
            raise DatasetError(f"BISPLIT_PORT must be an integer, got {raw!r}")
    serve(host=args.host, port=port)
    return 0


# ---------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bisplit",
        description="Crossing removal and minimization in 2-layer drawings "
                    "by vertex splitting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="dataset statistics")
    p.add_argument("dataset")
    p.add_argument("--out")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("order", help="order the layers and count crossings")
    p.add_argument("dataset")
    _add_order_flags(p)
    p.add_argument("--format", choices=["json", "svg"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("remove", help="split until the drawing has no crossings")
    p.add_argument("dataset")
    p.add_argument("--objective", choices=["splits", "vertices"], default="splits",
                   help="minimize total splits or split vertices")
    _add_order_flags(p)
    p.add_argument("--format", choices=["json", "svg"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_remove)

    p = sub.add_parser("minimize", help="fewest crossings under a split budget")
    p.add_argument("dataset")
    p.add_argument("--k", type=int, required=True, help="split budget")
    p.add_argument("--max-crossings", type=int, default=None,
                   help="fail unless this crossing count is reachable")
    p.add_argument("--allow-large-k", action="store_true",
                   help="run the exponential search for budgets above 4")
    _add_order_flags(p)
    p.add_argument("--format", choices=["json", "svg"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("heuristic", help="iterative splitting heuristics")
    p.add_argument("dataset")
    p.add_argument("--method", choices=["max-span", "cr-count"], required=True)
    p.add_argument("--k", type=int, required=True, help="maximum number of steps")
    _add_order_flags(p)
    p.add_argument("--format", choices=["json", "svg"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_heuristic)

    p = sub.add_parser("gen", help="generate datasets")
    gen_sub = p.add_subparsers(dest="family", required=True)
    g = gen_sub.add_parser("subdivision", help="subdivision of a classic graph")
    g.add_argument("base", help="K<n>, C<n>, P<n> or K<a>,<b>")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)
    g = gen_sub.add_parser("random", help="random bipartite graph")
    g.add_argument("--nt", type=int, required=True)
    g.add_argument("--nb", type=int, required=True)
    g.add_argument("--prob", type=float, required=True,
                   help="independent probability of each possible edge")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)
    g = gen_sub.add_parser("caterpillar", help="crossing-free-drawable tree")
    g.add_argument("--spine", type=int, required=True)
    g.add_argument("--legs", default="0",
                   help="comma-separated legs per spine vertex, or one number for all")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="benchmark table or heuristic curve (CSV)")
    p.add_argument("target", help="dataset directory, or a dataset file with --curve")
    p.add_argument("--curve", action="store_true",
                   help="emit a per-step crossing curve instead of the table")
    p.add_argument("--method", choices=["max-span", "cr-count"], default="cr-count")
    p.add_argument("--k", type=int, default=50, help="curve steps (default: 50)")
    _add_order_flags(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("render", help="render a dataset or layout document as SVG")
    p.add_argument("input")
    _add_order_flags(p)
    p.add_argument("--width", type=int, default=900)
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=None,
                   help="default: $BISPLIT_PORT or 8000")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DatasetError, OrderError, SplitError, BudgetError, InfeasibleError,
            json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception:  # anything else is a bug, not an input problem
        traceback.print_exc()
        return 1


if __name__ == "__main__":
    sys.exit(main())
