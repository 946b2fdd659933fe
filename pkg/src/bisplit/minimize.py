"""Exact crossing minimization under a split budget, plus brute-force oracles.

Deciding whether k splits suffice to reach a given crossing count is
NP-hard in general but solvable by exhaustive search for fixed k: enumerate
which bottom vertices receive how many extra copies, how each affected
neighborhood is partitioned into consecutive (possibly empty) groups, and
where the resulting copies land in the bottom order.  The search below is
therefore exponential in the budget and guarded by ``DEFAULT_MAX_BUDGET``.

``brute_force_min_splits`` is an independent reference for the linear-time
removal algorithms: it enumerates every way of partitioning each bottom
neighborhood into consecutive nonempty parts and tests feasibility with an
interval argument — a set of copies admits a crossing-free bottom order
exactly when their neighbor spans [min, max] (in top positions) can be
arranged in a chain with each span ending no later than the next begins.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from bisplit.crossings import count_crossings
from bisplit.model import (
    BipartiteGraph,
    LayerOrder,
    SplitCopy,
    SplitResult,
    apply_splits,
    check_order,
)

DEFAULT_MAX_BUDGET = 4


class BudgetError(ValueError):
    """Split budget too large for the exhaustive search (override explicitly)."""


class InfeasibleError(ValueError):
    """No layout within the requested crossing bound exists for this budget."""


def _consecutive_partitions(
    items: Sequence[str], cuts: int, allow_empty: bool
) -> Iterator[tuple[tuple[str, ...], ...]]:
    """All ways to cut ``items`` into cuts+1 consecutive parts.

    With ``allow_empty`` the cut positions may repeat or sit at the ends,
    producing empty parts (used by the budgeted search, where an empty part
    spends a split to merely relocate the remaining copy).
    """
    n = len(items)
    positions = (
        itertools.combinations_with_replacement(range(n + 1), cuts)
        if allow_empty
        else itertools.combinations(range(1, n), cuts)
    )
    for cut in positions:
        bounds = (0,) + cut + (n,)
        yield tuple(
            tuple(items[a:b]) for a, b in zip(bounds, bounds[1:])
        )


def _spans_chainable(spans: list[tuple[int, int]]) -> bool:
    """Whether the neighbor spans admit a crossing-free bottom order.

    Copies u before w cross exactly when some neighbor of w precedes some
    neighbor of u, i.e. unless max-span(u) <= min-span(w); a global order
    avoiding that exists iff sorting by span yields a chain.
    """
    spans = sorted(spans)
    return all(hi <= spans[i + 1][0] for i, (_, hi) in enumerate(spans[:-1]))


def brute_force_min_splits(
    graph: BipartiteGraph, top_order: Sequence[str], objective: str = "splits"
) -> int:
    """Reference optimum for crossing removal with the top order fixed.

    ``objective`` is ``"splits"`` (total split count) or ``"vertices"``
    (number of split vertices).  Exhaustive over all partition combinations;
    refuses inputs with more than 12 edges.
    """
    if objective not in ("splits", "vertices"):
        raise ValueError("objective must be 'splits' or 'vertices'")
    if len(graph.edges) > 12:
        raise ValueError("brute-force oracle limited to 12 edges")
    pos = {t: i for i, t in enumerate(top_order)}
    per_vertex: list[list[list[tuple[int, int]]]] = []
    for u, nbrs in graph.bottom_neighbors.items():
        if not nbrs:
            continue
        ordered = sorted(nbrs, key=pos.__getitem__)
        options = []
        for cuts in range(len(ordered)):
            for parts in _consecutive_partitions(ordered, cuts, allow_empty=False):
                options.append(
                    [(pos[p[0]], pos[p[-1]]) for p in parts]
                )
        per_vertex.append(options)

    best: int | None = None
    for combo in itertools.product(*per_vertex):
        spans = [s for vertex_spans in combo for s in vertex_spans]
        if not _spans_chainable(spans):
            continue
        if objective == "splits":
            cost = sum(len(v) - 1 for v in combo)
        else:
            cost = sum(1 for v in combo if len(v) > 1)
        if best is None or cost < best:
            best = cost
            if best == 0:
                break
    assert best is not None  # the all-singletons combination is always chainable
    return best


def min_crossings_with_budget(
    graph: BipartiteGraph,
    order: LayerOrder,
    budget: int,
    *,
    max_crossings: int | None = None,
    allow_large_k: bool = False,
) -> tuple[SplitResult, LayerOrder, int]:
    """Fewest crossings reachable with at most ``budget`` splits of bottom
    vertices, the top order fixed and unsplit bottoms keeping their order.

    Enumerates split distributions in increasing total, so among optima the
    one using fewest splits is returned; within equal split counts the
    first candidate in enumeration order (vertices, cut positions and copy
    placements all ascending) wins.  Empty neighborhood groups are allowed
    during enumeration — they spend budget to relocate a vertex — and are
    dropped from the output, so reported splits may be lower than the
    budget consumed.  Raises :class:`BudgetError` for budgets above
    ``DEFAULT_MAX_BUDGET`` unless ``allow_large_k`` is set, and
    :class:`InfeasibleError` when ``max_crossings`` cannot be met.
    """
    check_order(graph, order)
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    if budget > DEFAULT_MAX_BUDGET and not allow_large_k:
        raise BudgetError(
            f"split budget {budget} exceeds the cap of {DEFAULT_MAX_BUDGET}; "
            f"the exact search is exponential in the budget")

    splittable = [b for b in order.bottom if graph.bottom_neighbors[b]]
    nbrs_sorted = {
        b: sorted(graph.bottom_neighbors[b], key=order.top_position.__getitem__)
        for b in splittable
    }

    best: tuple[SplitResult, LayerOrder, int] | None = None
    for total in range(budget + 1):
        if best is not None and best[2] == 0:
            break
        for chosen in itertools.combinations_with_replacement(sorted(splittable), total):
            counts: dict[str, int] = {}
            for v in chosen:
                counts[v] = counts.get(v, 0) + 1
            # More parts than deg(v)+1 cannot produce a new drawing: at most
            # deg(v) parts are nonempty and one empty part already allows
            # relocation.
            if any(c > len(nbrs_sorted[v]) for c in counts.values()):
                continue
            split_ids = sorted(counts)
            base = [b for b in order.bottom if b not in counts]
            partition_choices = [
                list(_consecutive_partitions(nbrs_sorted[v], counts[v], allow_empty=True))
                for v in split_ids
            ]
            for assignment in itertools.product(*partition_choices):
                copies: dict[str, list[SplitCopy]] = {}
                pool: list[str] = []
                for v, parts in zip(split_ids, assignment):
                    nonempty = [p for p in parts if p]
                    # First surviving part keeps the vertex's id.
                    names = [v] + [f"{v}#{j}" for j in range(1, len(nonempty))]
                    copies[v] = [SplitCopy(n, p) for n, p in zip(names, nonempty)]
                    pool.extend(names)
                split_result = SplitResult.from_copies(copies)
                new_graph = apply_splits(graph, split_result)
                for perm in itertools.permutations(pool):
                    for gaps in itertools.combinations_with_replacement(
                        range(len(base) + 1), len(pool)
                    ):
                        slots: list[list[str]] = [[] for _ in range(len(base) + 1)]
                        for name, g in zip(perm, gaps):
                            slots[g].append(name)
                        bottom: list[str] = []
                        for i, b in enumerate(base):
                            bottom.extend(slots[i])
                            bottom.append(b)
                        bottom.extend(slots[len(base)])
                        candidate = LayerOrder(order.top, tuple(bottom))
                        crossings = count_crossings(new_graph, candidate)
                        if best is None or crossings < best[2]:
                            best = (split_result, candidate, crossings)
                    if best is not None and best[2] == 0:
                        break
                if best is not None and best[2] == 0:
                    break
            if best is not None and best[2] == 0:
                break

    assert best is not None  # total=0 always yields the unsplit drawing
    if max_crossings is not None and best[2] > max_crossings:
        raise InfeasibleError(
            f"minimum reachable crossings with {budget} splits is {best[2]}, "
            f"above the requested bound {max_crossings}")
    return best


def crossings_within_budget(
    graph: BipartiteGraph,
    order: LayerOrder,
    budget: int,
    bound: int,
    *,
    allow_large_k: bool = False,
) -> bool:
    """Decision form: can ``budget`` splits reach at most ``bound`` crossings?"""
    try:
        min_crossings_with_budget(
            graph, order, budget, max_crossings=bound, allow_large_k=allow_large_k
        )
        return True
    except InfeasibleError:
        return False
