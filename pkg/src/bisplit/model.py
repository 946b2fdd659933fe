"""Core data model for 2-layer bipartite graph layouts.

A graph lives on two layers (``top`` and ``bottom``); every edge connects a
top vertex to a bottom vertex.  A drawing is determined entirely by the two
layer orders, so the model keeps graphs and orders separate: the graph is
immutable structure, an order is a pair of permutations over the layer ids.

Vertex splitting replaces a vertex ``v`` by several copies and distributes
``N(v)`` among them.  Copies are named ``<originalId>#<index>`` with a
1-based index so that repeated runs produce diffable output; a copy records
the id of its pre-split original in ``original_id``.

This module holds:

* the frozen dataclasses (`VertexRecord`, `BipartiteGraph`, `LayerOrder`,
  `RunConfig`, `SplitResult`, `SplitStep`, `LayoutDocument`),
* JSON (de)serialization for the canonical dataset format and for layout
  documents,
* a best-effort adapter for node-link datasets (e.g. exports of anatomical
  structure / cell-type tables),
* basic statistics and the two trivial layer orders.

Everything is immutable after construction; algorithms return new objects.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable, Mapping, Sequence


class DatasetError(ValueError):
    """Raised for malformed or inconsistent input data (datasets, configs)."""


class OrderError(ValueError):
    """Raised when a layer order does not match the graph it is applied to."""


class SplitError(ValueError):
    """Raised when a split description does not partition a neighborhood."""


# =====================================================================
# Vertices and graphs
# =====================================================================

@dataclass(frozen=True)
class VertexRecord:
    """A vertex with a display label.

    ``original_id`` is set on copies produced by splitting and names the
    root vertex of the unsplit graph (copies of copies keep pointing at the
    root).  It is ``None`` for vertices of an input dataset.
    """

    id: str
    label: str
    original_id: str | None = None

    def root(self) -> str:
        return self.original_id if self.original_id is not None else self.id


@dataclass(frozen=True)
class BipartiteGraph:
    """An immutable 2-layered graph.

    Invariants (checked at construction):

    * vertex ids are unique across both layers,
    * every edge joins an existing top vertex to an existing bottom vertex,
    * there are no duplicate edges.
    """

    top: tuple[VertexRecord, ...]
    bottom: tuple[VertexRecord, ...]
    edges: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for v in self.top + self.bottom:
            if not v.id:
                raise DatasetError("vertex with empty id")
            if v.id in seen:
                raise DatasetError(f"duplicate vertex id {v.id!r}")
            seen.add(v.id)
        top_ids = {v.id for v in self.top}
        bottom_ids = {v.id for v in self.bottom}
        edge_seen: set[tuple[str, str]] = set()
        for i, (t, b) in enumerate(self.edges):
            if t not in top_ids:
                raise DatasetError(f"edges[{i}]: unknown top vertex {t!r}")
            if b not in bottom_ids:
                raise DatasetError(f"edges[{i}]: unknown bottom vertex {b!r}")
            if (t, b) in edge_seen:
                raise DatasetError(f"edges[{i}]: duplicate edge ({t!r}, {b!r})")
            edge_seen.add((t, b))

    # -- derived lookups (cached; the graph is immutable) --------------

    @cached_property
    def top_ids(self) -> tuple[str, ...]:
        return tuple(v.id for v in self.top)

    @cached_property
    def bottom_ids(self) -> tuple[str, ...]:
        return tuple(v.id for v in self.bottom)

    @cached_property
    def vertex_by_id(self) -> dict[str, VertexRecord]:
        return {v.id: v for v in self.top + self.bottom}

    @cached_property
    def top_neighbors(self) -> dict[str, tuple[str, ...]]:
        """top id -> bottom neighbor ids, in edge-list order."""
        nbrs: dict[str, list[str]] = {v.id: [] for v in self.top}
        for t, b in self.edges:
            nbrs[t].append(b)
        return {k: tuple(v) for k, v in nbrs.items()}

    @cached_property
    def bottom_neighbors(self) -> dict[str, tuple[str, ...]]:
        """bottom id -> top neighbor ids, in edge-list order."""
        nbrs: dict[str, list[str]] = {v.id: [] for v in self.bottom}
        for t, b in self.edges:
            nbrs[b].append(t)
        return {k: tuple(v) for k, v in nbrs.items()}

    def degree(self, vertex_id: str) -> int:
        if vertex_id in self.top_neighbors:
            return len(self.top_neighbors[vertex_id])
        if vertex_id in self.bottom_neighbors:
            return len(self.bottom_neighbors[vertex_id])
        raise KeyError(vertex_id)

    def transpose(self) -> "BipartiteGraph":
        """Swap the two layers (edges are reversed accordingly)."""
        return BipartiteGraph(
            top=self.bottom,
            bottom=self.top,
            edges=tuple((b, t) for t, b in self.edges),
        )


def build_graph(
    top: Iterable[str | tuple[str, str]],
    bottom: Iterable[str | tuple[str, str]],
    edges: Iterable[tuple[str, str]],
) -> BipartiteGraph:
    """Convenience constructor; layer entries are ids or (id, label) pairs."""

    def records(entries: Iterable[str | tuple[str, str]]) -> tuple[VertexRecord, ...]:
        out = []
        for e in entries:
            if isinstance(e, str):
                out.append(VertexRecord(id=e, label=e))
            else:
                out.append(VertexRecord(id=e[0], label=e[1]))
        return tuple(out)

    return BipartiteGraph(records(top), records(bottom), tuple((t, b) for t, b in edges))


# =====================================================================
# Layer orders
# =====================================================================

@dataclass(frozen=True)
class LayerOrder:
    """A pair of permutations over the two layers' vertex ids."""

    top: tuple[str, ...]
    bottom: tuple[str, ...]

    @cached_property
    def top_position(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.top)}

    @cached_property
    def bottom_position(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.bottom)}

    def transpose(self) -> "LayerOrder":
        return LayerOrder(top=self.bottom, bottom=self.top)


def check_order(graph: BipartiteGraph, order: LayerOrder) -> None:
    """Raise OrderError unless both sequences are permutations of the layers."""
    for name, got, want in (
        ("top", order.top, graph.top_ids),
        ("bottom", order.bottom, graph.bottom_ids),
    ):
        if Counter(got) != Counter(want):
            missing = sorted(set(want) - set(got))
            extra = sorted(set(got) - set(want))
            detail = []
            if missing:
                detail.append(f"missing {missing}")
            if extra:
                detail.append(f"unknown or repeated {extra}")
            raise OrderError(f"{name} order is not a permutation of the layer: "
                             + "; ".join(detail))


def as_input_order(graph: BipartiteGraph) -> LayerOrder:
    """The order in which vertices are listed in the dataset."""
    return LayerOrder(top=graph.top_ids, bottom=graph.bottom_ids)


def alphabetical_order(graph: BipartiteGraph) -> LayerOrder:
    """Sort each layer by (label, id).  A pure sort: isolated vertices are
    ranked like any other vertex here."""
    def key(v: VertexRecord) -> tuple[str, str]:
        return (v.label, v.id)

    return LayerOrder(
        top=tuple(v.id for v in sorted(graph.top, key=key)),
        bottom=tuple(v.id for v in sorted(graph.bottom, key=key)),
    )


# =====================================================================
# Run configuration
# =====================================================================

FIXED_SIDES = ("top", "bottom")
ORDER_METHODS = ("alphabetical", "barycenter", "asInput")
OBJECTIVES = ("minSplits", "minSplitVertices", "minCrossings")
METHODS = ("exact", "max-span", "cr-count")
TIE_BREAKS = ("byId",)


@dataclass(frozen=True)
class RunConfig:
    """Parameters of a layout / split run.

    ``split_budget`` (k) and ``crossing_bound`` (M) only matter for the
    objective ``minCrossings``; ``method`` selects the exact search or one
    of the two heuristics for that objective.
    """

    fixed_side: str = "top"
    order_method: str = "alphabetical"
    barycenter_sweeps: int = 1
    objective: str = "minSplits"
    split_budget: int = 0
    crossing_bound: int | None = None
    tie_break: str = "byId"
    method: str = "exact"

    def validate(self) -> None:
        if self.fixed_side not in FIXED_SIDES:
            raise DatasetError(f"config.fixedSide must be one of {FIXED_SIDES}")
        if self.order_method not in ORDER_METHODS:
            raise DatasetError(f"config.orderMethod must be one of {ORDER_METHODS}")
        if not isinstance(self.barycenter_sweeps, int) or self.barycenter_sweeps < 0:
            raise DatasetError("config.barycenterSweeps must be a nonnegative integer")
        if self.objective not in OBJECTIVES:
            raise DatasetError(f"config.objective must be one of {OBJECTIVES}")
        if not isinstance(self.split_budget, int) or self.split_budget < 0:
            raise DatasetError("config.splitBudget must be a nonnegative integer")
        if self.crossing_bound is not None and (
            not isinstance(self.crossing_bound, int) or self.crossing_bound < 0
        ):
            raise DatasetError("config.crossingBound must be a nonnegative integer")
        if self.tie_break not in TIE_BREAKS:
            raise DatasetError(f"config.tieBreak must be one of {TIE_BREAKS}")
        if self.method not in METHODS:
            raise DatasetError(f"config.method must be one of {METHODS}")

    def to_json(self) -> dict[str, Any]:
        return {
            "fixedSide": self.fixed_side,
            "orderMethod": self.order_method,
            "barycenterSweeps": self.barycenter_sweeps,
            "objective": self.objective,
            "splitBudget": self.split_budget,
            "crossingBound": self.crossing_bound,
            "tieBreak": self.tie_break,
            "method": self.method,
        }

    @staticmethod
    def from_json(obj: Mapping[str, Any]) -> "RunConfig":
        if not isinstance(obj, Mapping):
            raise DatasetError("config must be a JSON object")
        known = {"fixedSide", "orderMethod", "barycenterSweeps", "objective",
                 "splitBudget", "crossingBound", "tieBreak", "method"}
        unknown = set(obj) - known
        if unknown:
            raise DatasetError(f"config has unknown keys {sorted(unknown)}")
        cfg = RunConfig(
            fixed_side=obj.get("fixedSide", "top"),
            order_method=obj.get("orderMethod", "alphabetical"),
            barycenter_sweeps=obj.get("barycenterSweeps", 1),
            objective=obj.get("objective", "minSplits"),
            split_budget=obj.get("splitBudget", 0),
            crossing_bound=obj.get("crossingBound", None),
            tie_break=obj.get("tieBreak", "byId"),
            method=obj.get("method", "exact"),
        )
        cfg.validate()
        return cfg


# =====================================================================
# Split results and layout documents
# =====================================================================

@dataclass(frozen=True)
class SplitCopy:
    copy_id: str
    neighbors: tuple[str, ...]


@dataclass(frozen=True)
class SplitResult:
    """Outcome of a splitting run.

    ``per_original`` maps each split vertex (2 or more copies) to its copies
    in layer order; each copy's neighbor list is nonempty and the lists of
    one vertex partition its original neighborhood.
    """

    per_original: dict[str, tuple[SplitCopy, ...]]
    total_splits: int
    split_vertices: int
    max_splits: int

    @staticmethod
    def from_copies(copies: Mapping[str, Sequence[SplitCopy]]) -> "SplitResult":
        per_original: dict[str, tuple[SplitCopy, ...]] = {}
        total = 0
        max_splits = 0
        for original in sorted(copies):
            parts = tuple(copies[original])
            for c in parts:
                if not c.neighbors:
                    raise SplitError(f"copy {c.copy_id!r} of {original!r} has no neighbors")
            if len(parts) >= 2:
                per_original[original] = parts
                total += len(parts) - 1
                max_splits = max(max_splits, len(parts) - 1)
        return SplitResult(
            per_original=per_original,
            total_splits=total,
            split_vertices=len(per_original),
            max_splits=max_splits,
        )

    @staticmethod
    def empty() -> "SplitResult":
        return SplitResult({}, 0, 0, 0)

    def to_json(self) -> dict[str, Any]:
        return {
            "perOriginal": {
                original: [
                    {"copyId": c.copy_id, "neighbors": list(c.neighbors)}
                    for c in parts
                ]
                for original, parts in self.per_original.items()
            },
            "totalSplits": self.total_splits,
            "splitVertices": self.split_vertices,
            "maxSplits": self.max_splits,
        }

    @staticmethod
    def from_json(obj: Mapping[str, Any]) -> "SplitResult":
        per = obj.get("perOriginal", {})
        if not isinstance(per, Mapping):
            raise DatasetError("splits.perOriginal must be an object")
        copies = {
            original: [
                SplitCopy(copy_id=c["copyId"], neighbors=tuple(c["neighbors"]))
                for c in parts
            ]
            for original, parts in per.items()
        }
        return SplitResult.from_copies(copies)


@dataclass(frozen=True)
class SplitStep:
    """One step of an iterative splitting heuristic.

    ``predicted_gain`` is filled by the crossing-reduction heuristic (its
    estimate, not the measured change); ``objective_value`` by the span
    heuristic (the minimized squared-span sum).
    """

    split_vertex: str
    left: tuple[str, ...]
    right: tuple[str, ...]
    predicted_gain: int | None = None
    objective_value: int | None = None

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "splitVertex": self.split_vertex,
            "left": list(self.left),
            "right": list(self.right),
        }
        if self.predicted_gain is not None:
            out["predictedGain"] = self.predicted_gain
        if self.objective_value is not None:
            out["objectiveValue"] = self.objective_value
        return out

    @staticmethod
    def from_json(obj: Mapping[str, Any]) -> "SplitStep":
        return SplitStep(
            split_vertex=obj["splitVertex"],
            left=tuple(obj["left"]),
            right=tuple(obj["right"]),
            predicted_gain=obj.get("predictedGain"),
            objective_value=obj.get("objectiveValue"),
        )


@dataclass(frozen=True)
class LayoutDocument:
    """A complete drawing state: graph, both layer orders, split bookkeeping,
    the crossing count of this drawing, and the config that produced it.

    ``steps`` is filled by heuristic runs so a viewer can replay them.
    """

    graph: BipartiteGraph
    order: LayerOrder
    splits: SplitResult
    crossings: int
    config: RunConfig
    steps: tuple[SplitStep, ...] = ()

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "graph": dataset_to_json(self.graph),
            "order": {"top": list(self.order.top), "bottom": list(self.order.bottom)},
            "splits": self.splits.to_json(),
            "crossings": self.crossings,
            "config": self.config.to_json(),
        }
        if self.steps:
            out["steps"] = [s.to_json() for s in self.steps]
        return out


def dumps_document(doc: LayoutDocument) -> str:
    """Canonical serialization shared by the CLI and the HTTP service."""
    return json.dumps(doc.to_json(), indent=2) + "\n"


def parse_document(obj: Any) -> LayoutDocument:
    if not isinstance(obj, Mapping):
        raise DatasetError("layout document must be a JSON object")
    for key in ("graph", "order", "splits", "crossings", "config"):
        if key not in obj:
            raise DatasetError(f"layout document is missing {key!r}")
    graph = parse_dataset(obj["graph"])
    order_obj = obj["order"]
    if not isinstance(order_obj, Mapping) or "top" not in order_obj or "bottom" not in order_obj:
        raise DatasetError("order must be an object with 'top' and 'bottom' lists")
    order = LayerOrder(top=tuple(order_obj["top"]), bottom=tuple(order_obj["bottom"]))
    check_order(graph, order)
    try:
        splits = SplitResult.from_json(obj["splits"])
    except (KeyError, TypeError) as exc:
        raise DatasetError(f"malformed splits section: {exc}") from exc
    crossings = obj["crossings"]
    if not isinstance(crossings, int) or crossings < 0:
        raise DatasetError("crossings must be a nonnegative integer")
    config = RunConfig.from_json(obj["config"])
    try:
        steps = tuple(SplitStep.from_json(s) for s in obj.get("steps", ()))
    except (KeyError, TypeError) as exc:
        raise DatasetError(f"malformed steps section: {exc}") from exc
    return LayoutDocument(graph=graph, order=order, splits=splits,
                          crossings=crossings, config=config, steps=steps)


# =====================================================================
# Dataset JSON
# =====================================================================

def parse_dataset(obj: Any) -> BipartiteGraph:
    """Parse the canonical dataset format:

        {"top": [{"id": ..., "label": ...}, ...],
         "bottom": [...],
         "edges": [[topId, bottomId], ...]}

    A vertex's ``label`` defaults to its id; copies carry ``originalId``.
    """
    if not isinstance(obj, Mapping):
        raise DatasetError("dataset must be a JSON object")
    for key in ("top", "bottom", "edges"):
        if key not in obj:
            raise DatasetError(f"dataset is missing key {key!r}")
        if not isinstance(obj[key], list):
            raise DatasetError(f"dataset key {key!r} must be a list")

    def vertex(entry: Any, where: str) -> VertexRecord:
        if not isinstance(entry, Mapping) or "id" not in entry:
            raise DatasetError(f"{where}: vertex entries must be objects with an 'id'")
        vid = entry["id"]
        if not isinstance(vid, str) or not vid:
            raise DatasetError(f"{where}: 'id' must be a nonempty string")
        label = entry.get("label", vid)
        if not isinstance(label, str):
            raise DatasetError(f"{where}: 'label' must be a string")
        original = entry.get("originalId")
        if original is not None and not isinstance(original, str):
            raise DatasetError(f"{where}: 'originalId' must be a string")
        return VertexRecord(id=vid, label=label, original_id=original)

    top = tuple(vertex(e, f"top[{i}]") for i, e in enumerate(obj["top"]))
    bottom = tuple(vertex(e, f"bottom[{i}]") for i, e in enumerate(obj["bottom"]))

    edges = []
    for i, e in enumerate(obj["edges"]):
        if (not isinstance(e, Sequence)) or isinstance(e, (str, bytes)) or len(e) != 2:
            raise DatasetError(f"edges[{i}]: must be a [topId, bottomId] pair")
        t, b = e
        if not isinstance(t, str) or not isinstance(b, str):
            raise DatasetError(f"edges[{i}]: endpoints must be strings")
        edges.append((t, b))

    try:
        return BipartiteGraph(top=top, bottom=bottom, edges=tuple(edges))
    except DatasetError:
        raise
    except ValueError as exc:  # pragma: no cover - defensive
        raise DatasetError(str(exc)) from exc


def dataset_to_json(graph: BipartiteGraph) -> dict[str, Any]:
    def vertex(v: VertexRecord) -> dict[str, str]:
        out = {"id": v.id, "label": v.label}
        if v.original_id is not None:
            out["originalId"] = v.original_id
        return out

    return {
        "top": [vertex(v) for v in graph.top],
        "bottom": [vertex(v) for v in graph.bottom],
        "edges": [[t, b] for t, b in graph.edges],
    }


def parse_node_link(obj: Mapping[str, Any]) -> BipartiteGraph:
    """Best-effort adapter for node-link JSON (as exported by common graph
    tools and by anatomical-structure/cell-type table pipelines).

    Assumptions, applied in this order:

    * nodes live under ``nodes``, edges under ``links`` or ``edges``;
    * a node's layer comes from its ``layer`` field when it is literally
      ``"top"``/``"bottom"``; otherwise from its ``group`` or ``type``
      field, which must take exactly two distinct values — the
      alphabetically smaller value becomes the top layer;
    * a node's id comes from ``id``, its label from ``label`` or ``name``
      (default: the id);
    * an edge's endpoints come from ``source``/``target`` in either
      orientation (they are flipped to top->bottom as needed).
    """
    nodes = obj.get("nodes")
    links = obj.get("links", obj.get("edges"))
    if not isinstance(nodes, list) or not isinstance(links, list):
        raise DatasetError("node-link input needs 'nodes' and 'links' (or 'edges') lists")

    def node_layer(n: Mapping[str, Any]) -> str | None:
        layer = n.get("layer")
        if layer in ("top", "bottom"):
            return layer
        return None

    explicit = [node_layer(n) for n in nodes if isinstance(n, Mapping)]
    if len(explicit) != len(nodes):
        raise DatasetError("node-link input: nodes must be objects")

    groups: dict[Any, str] = {}
    if any(l is None for l in explicit):
        raw_groups = []
        for n in nodes:
            g = n.get("group", n.get("type"))
            if g is None:
                raise DatasetError(
                    "node-link input: nodes need a 'layer' of top/bottom or a "
                    "'group'/'type' field")
            raw_groups.append(g)
        distinct = sorted({str(g) for g in raw_groups})
        if len(distinct) != 2:
            raise DatasetError(
                f"node-link input: expected exactly 2 node groups, found {distinct}")
        groups = {distinct[0]: "top", distinct[1]: "bottom"}

    top: list[VertexRecord] = []
    bottom: list[VertexRecord] = []
    for n in nodes:
        vid = n.get("id")
        if not isinstance(vid, str) or not vid:
            raise DatasetError("node-link input: every node needs a string 'id'")
        label = n.get("label", n.get("name", vid))
        layer = node_layer(n) or groups[str(n.get("group", n.get("type")))]
        rec = VertexRecord(id=vid, label=str(label))
        (top if layer == "top" else bottom).append(rec)

    top_ids = {v.id for v in top}
    edges: list[tuple[str, str]] = []
    for i, l in enumerate(links):
        if not isinstance(l, Mapping) or "source" not in l or "target" not in l:
            raise DatasetError(f"links[{i}]: must be objects with 'source' and 'target'")
        s, t = l["source"], l["target"]
        if s in top_ids:
            edges.append((s, t))
        else:
            edges.append((t, s))
    return BipartiteGraph(top=tuple(top), bottom=tuple(bottom), edges=tuple(edges))


def load_dataset(obj: Any) -> BipartiteGraph:
    """Parse a dataset, auto-detecting canonical vs node-link shape."""
    if isinstance(obj, Mapping) and "nodes" in obj and "top" not in obj:
        return parse_node_link(obj)
    return parse_dataset(obj)


# =====================================================================
# Statistics and split application
# =====================================================================

def graph_stats(graph: BipartiteGraph) -> dict[str, Any]:
    """Vertex/edge counts, density 2|E| / (|V| (|V|-1)) and maximum degree.

    Density is defined as 0.0 for graphs with fewer than two vertices.
    """
    n = len(graph.top) + len(graph.bottom)
    m = len(graph.edges)
    degrees = [len(v) for v in graph.top_neighbors.values()]
    degrees += [len(v) for v in graph.bottom_neighbors.values()]
    return {
        "topCount": len(graph.top),
        "bottomCount": len(graph.bottom),
        "vertexCount": n,
        "edgeCount": m,
        "density": (2.0 * m / (n * (n - 1))) if n > 1 else 0.0,
        "maxDegree": max(degrees, default=0),
    }


def apply_splits(graph: BipartiteGraph, splits: SplitResult) -> BipartiteGraph:
    """Replace each split vertex by its copies and rewire the edges.

    Copies take the original's position in the layer list (in their listed
    order); each original edge is rewritten to the unique copy whose
    neighbor list contains its other endpoint, preserving edge-list order.
    """
    if not splits.per_original:
        return graph

    # For every split vertex: other-endpoint -> copy id.
    edge_target: dict[str, dict[str, str]] = {}
    for original, parts in splits.per_original.items():
        if original not in graph.vertex_by_id:
            raise SplitError(f"split of unknown vertex {original!r}")
        seen: dict[str, str] = {}
        for c in parts:
            for nb in c.neighbors:
                if nb in seen:
                    raise SplitError(
                        f"neighbor {nb!r} of {original!r} assigned to two copies")
                seen[nb] = c.copy_id
        want = graph.top_neighbors.get(original) or graph.bottom_neighbors.get(original)
        if set(seen) != set(want or ()):
            raise SplitError(
                f"copies of {original!r} do not partition its neighborhood")
        edge_target[original] = seen

    def expand(layer: tuple[VertexRecord, ...]) -> tuple[VertexRecord, ...]:
        out: list[VertexRecord] = []
        for v in layer:
            parts = splits.per_original.get(v.id)
            if parts is None:
                out.append(v)
            else:
                # The first part keeps the vertex's own id and stays "the
                # original"; genuinely new copies point back at the root.
                out.extend(
                    VertexRecord(
                        id=c.copy_id,
                        label=v.label,
                        original_id=v.original_id if c.copy_id == v.id else v.root(),
                    )
                    for c in parts
                )
        return tuple(out)

    new_edges: list[tuple[str, str]] = []
    for t, b in graph.edges:
        nt = edge_target[t][b] if t in edge_target else t
        nb = edge_target[b][t] if b in edge_target else b
        new_edges.append((nt, nb))

    return BipartiteGraph(top=expand(graph.top), bottom=expand(graph.bottom),
                          edges=tuple(new_edges))
