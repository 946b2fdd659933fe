"""Splitting heuristics and barycenter ordering.

The two heuristics trade optimality for speed: each step cuts one bottom
vertex's neighborhood in two, the vertex keeps the left part and a fresh
copy receives the right part, and both are re-placed at the barycenter of
their neighbor positions; this repeats for at most a given number of steps.

* The span heuristic always splits a vertex whose neighbors stretch
  furthest along the top order (ties to the smallest id) and cuts where the
  sum of squared spans of the two parts is smallest.  It ignores crossings
  entirely and stops only when every span is zero.

* The crossing-reduction heuristic scores every (vertex, cut) candidate by
  the estimate of :func:`bisplit.crossings.count_crossings_in_range` — the
  crossings the two copies would shed while sliding from the vertex's
  barycenter to their own — and performs the best strictly positive one,
  stopping when no candidate scores above zero.  The estimate is
  deliberately one-sided; the measured crossing count after each step is
  recomputed and logged, not asserted.

Both parts are placed back into the bottom order immediately before the
first vertex with a strictly larger barycenter (equal barycenters: before
the first larger id); isolated vertices sit at infinity and therefore stay
at the end.  Copy ids extend the root vertex's id with a running ``#n``
counter, so re-splitting a copy keeps ids unique and runs reproducible.
"""

from __future__ import annotations

import logging
import re
from typing import Callable, Iterator, Sequence

from bisplit.crossings import (
    bottom_barycenters,
    count_crossings,
    count_crossings_in_range,
)
from bisplit.model import (
    BipartiteGraph,
    LayerOrder,
    LayoutDocument,
    RunConfig,
    SplitCopy,
    SplitResult,
    SplitStep,
    apply_splits,
    check_order,
)

log = logging.getLogger(__name__)

_COPY_SUFFIX = re.compile(r"^(?P<root>.+)#(?P<num>\d+)$")

# A chooser inspects the current state and proposes
# (vertex, left part, right part, step metadata) or None to stop.
_Chooser = Callable[
    [BipartiteGraph, LayerOrder],
    "tuple[str, tuple[str, ...], tuple[str, ...], dict] | None",
]


# ---------------------------------------------------------------------
# Barycenter ordering
# ---------------------------------------------------------------------

def barycenter_order(
    graph: BipartiteGraph, order: LayerOrder, side: str = "bottom", sweeps: int = 1
) -> LayerOrder:
    """Reorder one or both layers by neighbor barycenters.

    One sweep sorts the chosen side by the mean position of its neighbors
    on the opposite side (stable, so ties keep their relative order);
    ``side="both"`` reorders bottom first, then top, per sweep.  Isolated
    vertices go to the end in id order.  Stops early once a sweep changes
    nothing.
    """
    if side not in ("top", "bottom", "both"):
        raise ValueError("side must be 'top', 'bottom' or 'both'")
    check_order(graph, order)
    top, bottom = list(order.top), list(order.bottom)
    for _ in range(max(sweeps, 0)):
        before = (tuple(top), tuple(bottom))
        if side in ("bottom", "both"):
            pos = {t: i for i, t in enumerate(top)}
            bottom = _sweep(graph.bottom_neighbors, pos, bottom)
        if side in ("top", "both"):
            pos = {b: i for i, b in enumerate(bottom)}
            top = _sweep(graph.top_neighbors, pos, top)
        if (tuple(top), tuple(bottom)) == before:
            break
    return LayerOrder(top=tuple(top), bottom=tuple(bottom))


def _sweep(
    neighbors: dict[str, tuple[str, ...]],
    opposite_pos: dict[str, int],
    current: list[str],
) -> list[str]:
    connected = [v for v in current if neighbors[v]]
    connected.sort(
        key=lambda v: sum(opposite_pos[x] for x in neighbors[v]) / len(neighbors[v])
    )
    isolated = sorted(v for v in current if not neighbors[v])
    return connected + isolated


# ---------------------------------------------------------------------
# Step machinery shared by both heuristics
# ---------------------------------------------------------------------

def _existing_copy_counters(graph: BipartiteGraph) -> dict[str, int]:
    """Highest ``#n`` suffix already used per root, so new ids never clash."""
    counters: dict[str, int] = {}
    for v in graph.bottom:
        m = _COPY_SUFFIX.match(v.id)
        if m:
            root = m.group("root")
            counters[root] = max(counters.get(root, 0), int(m.group("num")))
    return counters


def _insert_at_barycenter(
    bottom: list[str], new_id: str, positions: dict[str, float]
) -> None:
    p = positions[new_id]
    for i, w in enumerate(bottom):
        q = positions[w]
        if q > p or (q == p and w > new_id):
            bottom.insert(i, new_id)
            return
    bottom.append(new_id)


def iterate_splits(
    graph: BipartiteGraph,
    order: LayerOrder,
    budget: int,
    chooser: _Chooser,
) -> Iterator[tuple[SplitStep, str, BipartiteGraph, LayerOrder]]:
    """Drive a chooser for up to ``budget`` steps.

    After each split the vertex keeps its id and the left part; the right
    part goes to a fresh copy.  Yields the step record, the new copy id and
    the updated graph and order.
    """
    check_order(graph, order)
    counters = _existing_copy_counters(graph)
    g, o = graph, order
    for _ in range(budget):
        choice = chooser(g, o)
        if choice is None:
            return
        vid, left, right, meta = choice
        root = g.vertex_by_id[vid].root()
        counters[root] = counters.get(root, 0) + 1
        copy_id = f"{root}#{counters[root]}"
        one_step = SplitResult.from_copies(
            {vid: [SplitCopy(vid, left), SplitCopy(copy_id, right)]}
        )
        g = apply_splits(g, one_step)
        bottom = [b for b in o.bottom if b != vid]
        # Barycenters depend only on the (unchanged) top order and the new
        # adjacency: the split vertex lands at its left part's mean, the
        # copy at its right part's, and everyone else is unaffected.
        positions = bottom_barycenters(g, o)
        _insert_at_barycenter(bottom, vid, positions)
        _insert_at_barycenter(bottom, copy_id, positions)
        o = LayerOrder(top=o.top, bottom=tuple(bottom))
        step = SplitStep(split_vertex=vid, left=left, right=right, **meta)
        yield step, copy_id, g, o


def _finish(
    input_graph: BipartiteGraph,
    config: RunConfig | None,
    default_method: str,
    budget: int,
    steps: list[SplitStep],
    lineage: dict[str, str],
    g: BipartiteGraph,
    o: LayerOrder,
) -> LayoutDocument:
    """Assemble the final document: group surviving copies by the input
    vertex they came from and order each group by first neighbor."""
    tp = o.top_position
    grouped: dict[str, list[SplitCopy]] = {}
    for v in g.bottom:
        origin = lineage[v.id]
        nbrs = tuple(sorted(g.bottom_neighbors[v.id], key=tp.__getitem__))
        grouped.setdefault(origin, []).append(SplitCopy(v.id, nbrs))
    for origin, copies in grouped.items():
        copies.sort(key=lambda c: tp[c.neighbors[0]] if c.neighbors else -1)
    splits = SplitResult.from_copies(
        {origin: copies for origin, copies in grouped.items() if len(copies) > 1}
    )
    if config is None:
        config = RunConfig(
            objective="minCrossings", method=default_method, split_budget=budget
        )
    return LayoutDocument(
        graph=g,
        order=o,
        splits=splits,
        crossings=count_crossings(g, o),
        config=config,
        steps=tuple(steps),
    )


def _run(
    graph: BipartiteGraph,
    order: LayerOrder,
    budget: int,
    chooser: _Chooser,
    config: RunConfig | None,
    method: str,
) -> LayoutDocument:
    steps: list[SplitStep] = []
    lineage = {b: b for b in graph.bottom_ids}
    g, o = graph, order
    for step, copy_id, g, o in iterate_splits(graph, order, budget, chooser):
        lineage[copy_id] = lineage[step.split_vertex]
        steps.append(step)
        if log.isEnabledFor(logging.DEBUG):
            log.debug(
                "step %d: split %s -> (%s | %s), crossings now %d",
                len(steps), step.split_vertex, ",".join(step.left),
                ",".join(step.right), count_crossings(g, o),
            )
    return _finish(graph, config, method, budget, steps, lineage, g, o)


# ---------------------------------------------------------------------
# The two heuristics
# ---------------------------------------------------------------------

def _span_chooser(
    g: BipartiteGraph, o: LayerOrder
) -> tuple[str, tuple[str, ...], tuple[str, ...], dict] | None:
    tp = o.top_position
    best_v: str | None = None
    best_span = 0
    for v in sorted(g.bottom_ids):
        nbrs = g.bottom_neighbors[v]
        if len(nbrs) < 2:
            continue
        ps = sorted(tp[t] for t in nbrs)
        span = ps[-1] - ps[0]
        if span > best_span:
            best_v, best_span = v, span
    if best_v is None:
        return None
    nbrs = sorted(g.bottom_neighbors[best_v], key=tp.__getitem__)
    ps = [tp[t] for t in nbrs]
    best_score = best_span * best_span
    best_j = None
    for j in range(1, len(nbrs)):
        score = (ps[j - 1] - ps[0]) ** 2 + (ps[-1] - ps[j]) ** 2
        if score < best_score:
            best_score, best_j = score, j
    assert best_j is not None  # cutting off one end always beats the whole span
    return (
        best_v,
        tuple(nbrs[:best_j]),
        tuple(nbrs[best_j:]),
        {"objective_value": best_score},
    )


def split_by_max_span(
    graph: BipartiteGraph,
    order: LayerOrder,
    budget: int,
    config: RunConfig | None = None,
) -> LayoutDocument:
    """Repeatedly split the widest-spanning bottom vertex, up to ``budget``
    steps; stops early when every vertex has degree <= 1."""
    return _run(graph, order, budget, _span_chooser, config, "max-span")


def _reduction_chooser(
    g: BipartiteGraph, o: LayerOrder
) -> tuple[str, tuple[str, ...], tuple[str, ...], dict] | None:
    tp = o.top_position
    positions = bottom_barycenters(g, o)
    best_gain = 0
    best: tuple[str, tuple[str, ...], tuple[str, ...]] | None = None
    for v in sorted(g.bottom_ids):
        nbrs = sorted(g.bottom_neighbors[v], key=tp.__getitem__)
        if len(nbrs) < 2:
            continue
        ps = [tp[t] for t in nbrs]
        pv = positions[v]
        for j in range(1, len(nbrs)):
            pl = sum(ps[:j]) / j
            pr = sum(ps[j:]) / (len(ps) - j)
            gain = count_crossings_in_range(
                g, o, pl, pv, nbrs[:j], moving="left", positions=positions
            ) + count_crossings_in_range(
                g, o, pv, pr, nbrs[j:], moving="right", positions=positions
            )
            if gain > best_gain:
                best_gain = gain
                best = (v, tuple(nbrs[:j]), tuple(nbrs[j:]))
    if best is None:
        return None
    return (*best, {"predicted_gain": best_gain})


def split_by_crossing_reduction(
    graph: BipartiteGraph,
    order: LayerOrder,
    budget: int,
    config: RunConfig | None = None,
) -> LayoutDocument:
    """Repeatedly perform the split with the highest estimated crossing
    reduction, up to ``budget`` steps; stops once no candidate's estimate
    is strictly positive."""
    return _run(graph, order, budget, _reduction_chooser, config, "cr-count")
