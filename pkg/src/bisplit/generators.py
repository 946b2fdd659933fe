"""Dataset generators: subdivisions, random bipartite graphs, caterpillars.

The subdivision generator turns a classic base graph into a 2-layer
instance: the base vertices form the top layer, every base edge becomes a
degree-2 bottom vertex joined to its endpoints.  When the base has a
Hamiltonian path and the top layer is listed along it, the minimum number
of splits removing all crossings is |E| - |V| + 1 (every bottom vertex
whose endpoints are nonconsecutive on the path must split exactly once),
which makes these graphs handy calibration instances.
"""

from __future__ import annotations

import random
import re
from typing import Sequence

from bisplit.model import BipartiteGraph, DatasetError, VertexRecord

_BASE = re.compile(r"^(?P<kind>[KCP])(?P<a>\d+)(?:,(?P<b>\d+))?$")


def _base_edges(spec: str) -> tuple[int, list[tuple[int, int]]]:
    m = _BASE.match(spec.strip())
    if not m:
        raise DatasetError(
            f"unknown base graph {spec!r}: use K<n>, C<n>, P<n> or K<a>,<b>")
    kind = m.group("kind")
    a = int(m.group("a"))
    b = m.group("b")
    if b is not None:
        if kind != "K":
            raise DatasetError(f"unknown base graph {spec!r}")
        nb = int(b)
        return a + nb, [(i, a + j) for i in range(a) for j in range(nb)]
    if kind == "K":
        if a < 2:
            raise DatasetError("complete base graph needs at least 2 vertices")
        return a, [(i, j) for i in range(a) for j in range(i + 1, a)]
    if kind == "C":
        if a < 3:
            raise DatasetError("cycle base graph needs at least 3 vertices")
        return a, [(i, (i + 1) % a) for i in range(a)]
    if a < 2:
        raise DatasetError("path base graph needs at least 2 vertices")
    return a, [(i, i + 1) for i in range(a - 1)]


def gen_subdivision(base: str) -> BipartiteGraph:
    """Subdivision of a base graph ('K4', 'C5', 'P6', 'K3,3', ...).

    Top vertices v1..vn are listed in natural order — for K<n>, C<n> and
    P<n> that is a Hamiltonian path of the base.  Each bottom vertex is
    named ``e:`` plus its endpoint ids in sorted order, stable across runs.
    """
    n, edges = _base_edges(base)
    width = len(str(n))
    names = [f"v{i + 1:0{width}d}" for i in range(n)]
    top = [VertexRecord(id=name, label=name) for name in names]
    bottom = []
    links: list[tuple[str, str]] = []
    for i, j in sorted(tuple(sorted(e)) for e in edges):
        eid = f"e:{names[i]}-{names[j]}"
        bottom.append(VertexRecord(id=eid, label=eid))
        links.append((names[i], eid))
        links.append((names[j], eid))
    return BipartiteGraph(top=tuple(top), bottom=tuple(bottom), edges=tuple(links))


def gen_random_bipartite(
    n_top: int, n_bottom: int, edge_prob: float, seed: int = 0
) -> BipartiteGraph:
    """Random bipartite graph: each of the n_top * n_bottom possible edges is
    present independently with probability ``edge_prob``.

    Reproducible for a fixed seed; probability 1 gives the complete graph.
    """
    if n_top < 0 or n_bottom < 0:
        raise DatasetError("layer sizes must be nonnegative")
    if not 0.0 <= edge_prob <= 1.0:
        raise DatasetError("edge probability must be within [0, 1]")
    rng = random.Random(seed)
    wt, wb = len(str(max(n_top, 1))), len(str(max(n_bottom, 1)))
    tops = [f"t{i + 1:0{wt}d}" for i in range(n_top)]
    bottoms = [f"b{i + 1:0{wb}d}" for i in range(n_bottom)]
    chosen = [
        (t, b) for t in tops for b in bottoms if rng.random() < edge_prob
    ]
    return BipartiteGraph(
        top=tuple(VertexRecord(id=t, label=t) for t in tops),
        bottom=tuple(VertexRecord(id=b, label=b) for b in bottoms),
        edges=tuple(chosen),
    )


def gen_caterpillar(spine_len: int, leg_counts: Sequence[int]) -> BipartiteGraph:
    """A caterpillar with the given legs per spine vertex (always drawable
    without crossings).

    The spine is a path of ``spine_len`` vertices alternating between the
    layers; spine vertex i additionally carries ``leg_counts[i]`` leaves on
    the opposite layer.
    """
    if spine_len < 1:
        raise DatasetError("need a spine of at least one vertex")
    if len(leg_counts) != spine_len:
        raise DatasetError(
            f"need one leg count per spine vertex ({spine_len}), "
            f"got {len(leg_counts)}")
    if any(c < 0 for c in leg_counts):
        raise DatasetError("leg counts must be nonnegative")
    top: list[VertexRecord] = []
    bottom: list[VertexRecord] = []
    edges: list[tuple[str, str]] = []
    prev: str | None = None
    for i, legs in enumerate(leg_counts):
        vid = f"s{i + 1}"
        is_top = i % 2 == 0
        (top if is_top else bottom).append(VertexRecord(id=vid, label=vid))
        if prev is not None:
            edges.append((vid, prev) if is_top else (prev, vid))
        for j in range(legs):
            leg = f"l{i + 1}_{j + 1}"
            (bottom if is_top else top).append(VertexRecord(id=leg, label=leg))
            edges.append((vid, leg) if is_top else (leg, vid))
        prev = vid
    return BipartiteGraph(top=tuple(top), bottom=tuple(bottom), edges=tuple(edges))
