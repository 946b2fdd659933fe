"""Optimal crossing removal by splitting one layer while the other is fixed.

Both algorithms work on the same picture.  Fix the top order and walk it
left to right.  A planar drawing forces the copies of the bottom layer into
*blocks*: block i holds the copies whose last neighbor is the i-th
positive-degree top vertex, and blocks appear in walk order.  Within a
block, at most one copy may reach back to earlier top vertices and it must
come first; the remaining copies see only the current top vertex.  A bottom
vertex u survives a boundary (t_i, t_{i+1}) unsplit only if it is adjacent
to both and is *kept* there: u's copy then becomes the last neighbor of t_i
and the first neighbor of t_{i+1}.  Keeping the same vertex across two
consecutive boundaries is possible only when the middle top vertex has
degree 1.

Minimizing total splits reduces to keeping a vertex at as many boundaries
as possible subject to those constraints; the keep decisions are computed
in two passes (left to right for the forced structure, right to left to
resolve the free choices without blocking a neighbor boundary).  Minimizing
the number of *split vertices* instead first splits every vertex that can
never survive unsplit (some top vertex strictly inside its span has another
neighbor or another edge) fully apart, and then keeps, per boundary, the
smallest-id vertex that is still unconstrained.

Both run in O(|V| + |E|) and return a drawing with zero crossings.
Isolated bottom vertices are never split and are appended to the computed
order by id; isolated top vertices keep their place in the fixed order.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from typing import Sequence

from bisplit.model import (
    BipartiteGraph,
    LayerOrder,
    OrderError,
    SplitCopy,
    SplitResult,
)

_PENDING = object()  # placeholder for keep decisions resolved right-to-left


def _check_top_order(graph: BipartiteGraph, top_order: Sequence[str]) -> None:
    if Counter(top_order) != Counter(graph.top_ids):
        raise OrderError("top order is not a permutation of the top layer")


def _active_tops(graph: BipartiteGraph, top_order: Sequence[str]) -> list[str]:
    return [t for t in top_order if graph.top_neighbors[t]]


def _common_neighbors(graph: BipartiteGraph, tops: list[str]) -> list[set[str]]:
    """commons[i] = bottom vertices adjacent to both tops[i] and tops[i+1]."""
    pos = {t: i for i, t in enumerate(tops)}
    commons: list[set[str]] = [set() for _ in range(max(len(tops) - 1, 0))]
    for u, nbrs in graph.bottom_neighbors.items():
        ps = sorted(pos[t] for t in nbrs)
        for a, b in zip(ps, ps[1:]):
            if b == a + 1:
                commons[a].add(u)
    return commons


def _min_splits_keeps(graph: BipartiteGraph, tops: list[str]) -> list:
    """Keep decisions minimizing the total number of splits.

    ``keeps[i]`` is the vertex surviving boundary (tops[i], tops[i+1]), or
    None.  The left pass settles boundaries whose choice is forced by the
    incoming kept vertex (the prescribed first neighbor of tops[i]); the
    right pass fills the free choices, never picking the vertex the next
    boundary already keeps, so a free choice never costs a keep elsewhere.
    Free choices take the smallest eligible id.
    """
    n = len(tops)
    keeps: list = [None] * n
    if n <= 1:
        return keeps
    commons = _common_neighbors(graph, tops)
    deg = {t: len(graph.top_neighbors[t]) for t in tops}

    free: list[int] = []
    prescribed: list = [None] * n
    p = None
    for i in range(n - 1):
        prescribed[i] = p
        c = commons[i]
        if not c:
            p = None
        elif len(c) == 1:
            (u,) = c
            if u == p and deg[tops[i]] > 1:
                # u entered tops[i] first; it cannot also leave it last.
                p = None
            else:
                keeps[i] = u
                p = u
        elif len(c) == 2 and p in c:
            (u,) = c - {p}
            keeps[i] = u
            p = u
        else:
            keeps[i] = _PENDING
            free.append(i)
            p = None

    for i in reversed(free):
        eligible = sorted(commons[i] - {prescribed[i], keeps[i + 1]})
        keeps[i] = eligible[0]
    return keeps


def _unavoidable_splits(graph: BipartiteGraph, tops: list[str]) -> set[str]:
    """Bottom vertices that cannot stay whole under this top order.

    u can stay whole only if its neighbors occupy consecutive positions and
    every strictly interior one has degree 1 (i.e. is adjacent to u alone).
    """
    pos = {t: i for i, t in enumerate(tops)}
    out: set[str] = set()
    for u, nbrs in graph.bottom_neighbors.items():
        if len(nbrs) <= 1:
            continue
        ps = sorted(pos[t] for t in nbrs)
        if ps[-1] - ps[0] + 1 != len(ps):
            out.add(u)
        elif any(len(graph.top_neighbors[tops[p]]) > 1
                 for p in range(ps[0] + 1, ps[-1])):
            out.add(u)
    return out


def _min_split_vertices_keeps(
    graph: BipartiteGraph, tops: list[str], unavoidable: set[str]
) -> list:
    """Keep decisions minimizing the number of split vertices.

    Vertices with an unavoidable split are split fully apart and never
    kept.  At each boundary the remaining candidates are either a single
    vertex or several degree-2 vertices sharing both endpoints, of which at
    most one can survive; take the smallest id.
    """
    n = len(tops)
    keeps: list = [None] * n
    if n <= 1:
        return keeps
    for i, c in enumerate(_common_neighbors(graph, tops)):
        eligible = sorted(u for u in c if u not in unavoidable)
        if eligible:
            keeps[i] = eligible[0]
    return keeps


def _assemble(
    graph: BipartiteGraph,
    top_order: Sequence[str],
    tops: list[str],
    keeps: list,
    shatter: set[str] | None = None,
) -> tuple[SplitResult, LayerOrder]:
    """Materialize parts and the planar bottom order from keep decisions.

    Vertices in ``shatter`` get one single-edge part per neighbor.  Block i
    receives every part finishing at tops[i]; the part carried over the
    previous boundary (if it finishes here) comes first, the rest are
    single-top parts ordered by id.
    """
    shatter = shatter or set()
    n = len(tops)
    owned: dict[str, list[str]] = {}
    parts: dict[str, list[tuple[str, ...]]] = defaultdict(list)
    blocks: list[list[tuple[str, int]]] = []

    for i, t in enumerate(tops):
        kept = keeps[i] if i < n - 1 else None
        entries: list[tuple[str, int]] = []
        for u in sorted(graph.top_neighbors[t]):
            if u == kept and u not in shatter:
                owned.setdefault(u, []).append(t)
                continue
            part = tuple(owned.pop(u, [])) + (t,)
            parts[u].append(part)
            entries.append((u, len(parts[u]) - 1))
        first = keeps[i - 1] if i > 0 else None
        entries.sort(key=lambda e: (e[0] != first, e[0]))
        blocks.append(entries)
    assert not owned, "kept part never materialized"

    copy_ids: dict[tuple[str, int], str] = {}
    copies: dict[str, list[SplitCopy]] = {}
    for u, plist in parts.items():
        # The leftmost part keeps the vertex's own id; the rest are copies.
        names = [u] + [f"{u}#{j}" for j in range(1, len(plist))]
        copies[u] = [SplitCopy(name, p) for name, p in zip(names, plist)]
        for j, name in enumerate(names):
            copy_ids[(u, j)] = name

    bottom = [copy_ids[e] for block in blocks for e in block]
    bottom += sorted(u for u, nbrs in graph.bottom_neighbors.items() if not nbrs)
    return SplitResult.from_copies(copies), LayerOrder(
        top=tuple(top_order), bottom=tuple(bottom)
    )


def min_splits_fixed_order(
    graph: BipartiteGraph, top_order: Sequence[str]
) -> tuple[SplitResult, LayerOrder]:
    """Split bottom vertices so the drawing has no crossings, minimizing the
    total number of splits; the top order stays as given.

    Returns the split bookkeeping and the full layer order of the resulting
    drawing (bottom order over copy ids)."""
    _check_top_order(graph, top_order)
    tops = _active_tops(graph, top_order)
    keeps = _min_splits_keeps(graph, tops)
    return _assemble(graph, top_order, tops, keeps)


def min_split_vertices_fixed_order(
    graph: BipartiteGraph, top_order: Sequence[str]
) -> tuple[SplitResult, LayerOrder]:
    """Split bottom vertices so the drawing has no crossings, minimizing the
    number of distinct vertices that get split; the top order stays as given.

    Vertices that cannot survive whole are split into single-edge parts (the
    extra splits are free under this objective); every other vertex is kept
    whole whenever the boundary competition allows."""
    _check_top_order(graph, top_order)
    tops = _active_tops(graph, top_order)
    unavoidable = _unavoidable_splits(graph, tops)
    keeps = _min_split_vertices_keeps(graph, tops, unavoidable)
    return _assemble(graph, top_order, tops, keeps, shatter=unavoidable)
