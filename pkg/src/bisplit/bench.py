"""Benchmark tables and heuristic curves, serialized as CSV.

``run_benchmark`` replays the exact removal algorithms over a directory of
datasets under the standard configurations and reports split metrics plus
wall-clock time; ``run_heuristic_curve`` tracks the crossing count of a
heuristic after every step.  Timing columns are informational only — tests
must never assert on them.  Both CSV shapes round-trip exactly through
their parse/emit pairs.
"""

from __future__ import annotations

import csv
import io
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from bisplit.crossings import count_crossings
from bisplit.heuristics import (
    barycenter_order,
    iterate_splits,
    _reduction_chooser,
    _span_chooser,
)
from bisplit.model import (
    BipartiteGraph,
    LayerOrder,
    RunConfig,
    alphabetical_order,
    load_dataset,
)
from bisplit.pipeline import split_layout

BenchEntry = tuple[str, RunConfig, Callable[[BipartiteGraph], LayerOrder]]

BENCH_COLUMNS = (
    "dataset", "config", "crossings", "nt", "nb",
    "splits", "split_vertices", "max_splits", "time_ms",
)
CURVE_COLUMNS = ("k", "crossings", "cum_time_ms")


@dataclass(frozen=True)
class BenchRow:
    dataset: str
    config: str
    crossings: int
    nt: int
    nb: int
    splits: int
    split_vertices: int
    max_splits: int
    time_ms: float


@dataclass(frozen=True)
class CurvePoint:
    k: int
    crossings: int
    cum_time_ms: float


def _barycentric_both(graph: BipartiteGraph) -> LayerOrder:
    # Repeated both-side sweeps from the alphabetical order; stops at a
    # fixpoint or after 10 sweeps, whichever comes first.
    return barycenter_order(graph, alphabetical_order(graph), side="both", sweeps=10)


def default_configs() -> list[BenchEntry]:
    """The standard benchmark grid: both objectives, both fixed sides,
    alphabetical and converged both-side barycentric initial orders."""
    out: list[BenchEntry] = []
    for order_tag, order_fn in (
        ("alphabetical", alphabetical_order),
        ("barycentric-both-10", _barycentric_both),
    ):
        for objective, tag in (("minSplits", "splits"),
                               ("minSplitVertices", "vertices")):
            for side in ("top", "bottom"):
                out.append((
                    f"min-{tag}|fixed={side}|order={order_tag}",
                    RunConfig(fixed_side=side, objective=objective),
                    order_fn,
                ))
    return out


def run_benchmark(
    dataset_dir: str | Path,
    configs: list[BenchEntry] | None = None,
) -> list[BenchRow]:
    """Run every config over every ``*.json`` dataset in a directory.

    Unreadable files are skipped with a note on stderr.  Rows come out
    sorted by dataset name, then in config order.
    """
    configs = configs if configs is not None else default_configs()
    rows: list[BenchRow] = []
    for path in sorted(Path(dataset_dir).glob("*.json")):
        try:
            graph = load_dataset(json.loads(path.read_text()))
        except (OSError, ValueError) as exc:
            print(f"skipping {path.name}: {exc}", file=sys.stderr)
            continue
        for name, config, order_fn in configs:
            start = time.perf_counter()
            order = order_fn(graph)
            doc = split_layout(graph, order, config)
            elapsed_ms = round((time.perf_counter() - start) * 1000.0, 3)
            rows.append(BenchRow(
                dataset=path.stem,
                config=name,
                crossings=count_crossings(graph, order),
                nt=len(graph.top),
                nb=len(graph.bottom),
                splits=doc.splits.total_splits,
                split_vertices=doc.splits.split_vertices,
                max_splits=doc.splits.max_splits,
                time_ms=elapsed_ms,
            ))
    rows.sort(key=lambda r: r.dataset)
    return rows


def emit_benchmark_csv(rows: list[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(BENCH_COLUMNS)
    for r in rows:
        writer.writerow([
            r.dataset, r.config, r.crossings, r.nt, r.nb,
            r.splits, r.split_vertices, r.max_splits, f"{r.time_ms:.3f}",
        ])
    return buf.getvalue()


def parse_benchmark_csv(text: str) -> list[BenchRow]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header) != BENCH_COLUMNS:
        raise ValueError(f"unexpected benchmark CSV header: {header}")
    return [
        BenchRow(
            dataset=row[0], config=row[1], crossings=int(row[2]),
            nt=int(row[3]), nb=int(row[4]), splits=int(row[5]),
            split_vertices=int(row[6]), max_splits=int(row[7]),
            time_ms=float(row[8]),
        )
        for row in reader if row
    ]


def run_heuristic_curve(
    graph: BipartiteGraph,
    order: LayerOrder,
    method: str,
    max_steps: int,
) -> list[CurvePoint]:
    """Crossings after each heuristic step, with cumulative time.

    The k=0 point is the unsplit drawing.  The curve may stop early when
    the heuristic runs out of useful splits.
    """
    if method == "max-span":
        chooser = _span_chooser
    elif method == "cr-count":
        chooser = _reduction_chooser
    else:
        raise ValueError("method must be 'max-span' or 'cr-count'")
    points = [CurvePoint(k=0, crossings=count_crossings(graph, order), cum_time_ms=0.0)]
    start = time.perf_counter()
    for i, (_step, _ids, g, o) in enumerate(
        iterate_splits(graph, order, max_steps, chooser), start=1
    ):
        elapsed_ms = round((time.perf_counter() - start) * 1000.0, 3)
        points.append(CurvePoint(k=i, crossings=count_crossings(g, o),
                                 cum_time_ms=elapsed_ms))
    return points


def emit_curve_csv(points: list[CurvePoint]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CURVE_COLUMNS)
    for p in points:
        writer.writerow([p.k, p.crossings, f"{p.cum_time_ms:.3f}"])
    return buf.getvalue()


def parse_curve_csv(text: str) -> list[CurvePoint]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header) != CURVE_COLUMNS:
        raise ValueError(f"unexpected curve CSV header: {header}")
    return [
        CurvePoint(k=int(r[0]), crossings=int(r[1]), cum_time_ms=float(r[2]))
        for r in reader if r
    ]
