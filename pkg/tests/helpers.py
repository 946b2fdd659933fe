"""Literal reference implementations the fast code is measured against.

Everything here trades speed for obviousness: crossings are counted by
comparing every pair of edges, orderability is decided by trying bottom
permutations one by one, and the split minimizers enumerate every way of
partitioning every neighborhood (arbitrary set partitions, not just
contiguous ones, so no structural assumption of the real algorithms is
baked into the oracle).
"""

from __future__ import annotations

import itertools
import random

from bisplit.model import BipartiteGraph, LayerOrder, build_graph

# ---------------------------------------------------------------------
# Graph construction
# ---------------------------------------------------------------------

TOP_POOL = ("t1", "t2", "t3", "t4", "t5", "t6")
BOTTOM_POOL = ("b1", "b2", "b3", "b4", "b5", "b6")


def quick_graph(nt: int, nb: int, edges) -> BipartiteGraph:
    return build_graph(TOP_POOL[:nt], BOTTOM_POOL[:nb], edges)


def iter_small_graphs(max_top: int = 3, max_bottom: int = 3):
    """Every bipartite graph with 1..max_top tops and 1..max_bottom bottoms,
    over every subset of the possible edges.  For the default bounds that is
    sum(2^(nt*nb)) = 682 graphs."""
    for nt in range(1, max_top + 1):
        for nb in range(1, max_bottom + 1):
            cells = [(t, b) for t in TOP_POOL[:nt] for b in BOTTOM_POOL[:nb]]
            for size in range(len(cells) + 1):
                for chosen in itertools.combinations(cells, size):
                    yield quick_graph(nt, nb, chosen)


def random_graphs(count: int, *, max_top: int, max_bottom: int, max_edges: int,
                  seed: int):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        nt = rng.randint(1, max_top)
        nb = rng.randint(1, max_bottom)
        cells = [(t, b) for t in TOP_POOL[:nt] for b in BOTTOM_POOL[:nb]]
        rng.shuffle(cells)
        m = rng.randint(0, min(max_edges, len(cells)))
        out.append(quick_graph(nt, nb, sorted(cells[:m])))
    return out


# ---------------------------------------------------------------------
# Crossings, the slow way
# ---------------------------------------------------------------------

def pairwise_crossings(graph: BipartiteGraph, order: LayerOrder) -> int:
    """Compare every pair of edges; two edges cross iff their endpoints
    appear in opposite relative orders on the two layers."""
    tp, bp = order.top_position, order.bottom_position
    total = 0
    for (t1, b1), (t2, b2) in itertools.combinations(graph.edges, 2):
        if (tp[t1] - tp[t2]) * (bp[b1] - bp[b2]) < 0:
            total += 1
    return total


def exists_planar_bottom_order(graph: BipartiteGraph, top_order) -> bool:
    """Try every bottom permutation.  Exponential; keep the inputs tiny."""
    for perm in itertools.permutations(graph.bottom_ids):
        order = LayerOrder(top=tuple(top_order), bottom=perm)
        if pairwise_crossings(graph, order) == 0:
            return True
    return len(graph.bottom_ids) == 0


# ---------------------------------------------------------------------
# Split minimization, the slow way
# ---------------------------------------------------------------------

def set_partitions(items: list):
    """Every partition of ``items`` into nonempty blocks (Bell-number many)."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] + [first]] + part[i + 1:]
        yield [[first]] + part


def spans_admit_planar_order(spans) -> bool:
    """Whether copies with these (leftmost, rightmost) neighbor positions can
    be ordered without crossings: sort the spans and require each one to end
    no later than the next begins.  Validated against literal permutation
    search in the test suite."""
    spans = sorted(spans)
    return all(spans[i][1] <= spans[i + 1][0] for i in range(len(spans) - 1))


def oracle_min_removal(graph: BipartiteGraph, top_order, objective: str) -> int:
    """Minimum cost of a crossing-free split of the bottom layer, by trying
    every combination of neighborhood partitions.

    ``objective`` is ``"splits"`` (sum of copies-1) or ``"vertices"``
    (number of vertices with 2+ copies).
    """
    assert objective in ("splits", "vertices")
    pos = {t: i for i, t in enumerate(top_order)}
    per_vertex = []
    for b in graph.bottom_ids:
        nbrs = graph.bottom_neighbors[b]
        if not nbrs:
            continue  # isolated vertices are never split
        options = []
        for parts in set_partitions(list(nbrs)):
            spans = [
                (min(pos[t] for t in p), max(pos[t] for t in p)) for p in parts
            ]
            options.append((len(parts), spans))
        per_vertex.append(options)

    best = None
    for combo in itertools.product(*per_vertex):
        spans = [s for _, part_spans in combo for s in part_spans]
        if not spans_admit_planar_order(spans):
            continue
        if objective == "splits":
            cost = sum(k - 1 for k, _ in combo)
        else:
            cost = sum(1 for k, _ in combo if k > 1)
        if best is None or cost < best:
            best = cost
            if best == 0:
                break
    assert best is not None, "singleton parts always admit a planar order"
    return best


def single_split_layouts(graph: BipartiteGraph, order: LayerOrder):
    """Every drawing reachable with exactly one split of one bottom vertex:
    all 2-way neighborhood partitions times all placements of the two copies,
    plus every relocation of a single unsplit vertex (an empty part).  Yields
    (graph, order) pairs; copy naming mirrors the library's convention.
    """
    from bisplit.model import SplitCopy, SplitResult, apply_splits

    for v in graph.bottom_ids:
        nbrs = list(graph.bottom_neighbors[v])
        rest = [b for b in order.bottom if b != v]
        # relocation: no new vertex, v just moves anywhere else
        for i in range(len(rest) + 1):
            bottom = rest[:i] + [v] + rest[i:]
            yield graph, LayerOrder(order.top, tuple(bottom))
        if len(nbrs) < 2:
            continue
        groups = set()
        for mask in range(1, 2 ** len(nbrs) - 1):
            left = frozenset(n for i, n in enumerate(nbrs) if mask >> i & 1)
            groups.add(left)
        for left in groups:
            right = tuple(n for n in nbrs if n not in left)
            split = SplitResult.from_copies(
                {v: [SplitCopy(v, tuple(sorted(left))), SplitCopy(f"{v}#1", right)]}
            )
            g2 = apply_splits(graph, split)
            for i in range(len(rest) + 1):
                with_v = rest[:i] + [v] + rest[i:]
                for j in range(len(with_v) + 1):
                    bottom = with_v[:j] + [f"{v}#1"] + with_v[j:]
                    yield g2, LayerOrder(order.top, tuple(bottom))
