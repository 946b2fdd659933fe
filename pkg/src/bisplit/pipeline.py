"""Shared run pipeline: dataset + config -> layout, layout + config -> split.

The command line and the HTTP service both go through these functions so a
given (dataset, config) pair produces byte-identical documents either way.
When ``fixedSide`` is ``bottom`` the graph is transposed, solved with the
top side fixed, and transposed back; split bookkeeping then refers to top
vertices of the original orientation.
"""

from __future__ import annotations

from bisplit.crossings import count_crossings
from bisplit.heuristics import (
    barycenter_order,
    split_by_crossing_reduction,
    split_by_max_span,
)
from bisplit.minimize import min_crossings_with_budget
from bisplit.model import (
    BipartiteGraph,
    DatasetError,
    LayerOrder,
    LayoutDocument,
    RunConfig,
    SplitResult,
    alphabetical_order,
    apply_splits,
    as_input_order,
    check_order,
)
from bisplit.removal import min_split_vertices_fixed_order, min_splits_fixed_order


def compute_order(graph: BipartiteGraph, config: RunConfig) -> LayerOrder:
    """Initial layer orders per ``orderMethod``.

    ``barycenter`` starts from the alphabetical order and sweeps the free
    side ``barycenterSweeps`` times; the fixed side stays alphabetical.
    """
    config.validate()
    if config.order_method == "asInput":
        return as_input_order(graph)
    order = alphabetical_order(graph)
    if config.order_method == "barycenter":
        free = "bottom" if config.fixed_side == "top" else "top"
        order = barycenter_order(graph, order, side=free, sweeps=config.barycenter_sweeps)
    return order


def initial_layout(graph: BipartiteGraph, config: RunConfig) -> LayoutDocument:
    """Order the layers and count crossings; no splitting yet."""
    order = compute_order(graph, config)
    return LayoutDocument(
        graph=graph,
        order=order,
        splits=SplitResult.empty(),
        crossings=count_crossings(graph, order),
        config=config,
    )


def split_layout(
    graph: BipartiteGraph,
    order: LayerOrder,
    config: RunConfig,
    *,
    allow_large_k: bool = False,
) -> LayoutDocument:
    """Split the free side of the current drawing according to the config."""
    config.validate()
    check_order(graph, order)
    flipped = config.fixed_side == "bottom"
    g = graph.transpose() if flipped else graph
    o = order.transpose() if flipped else order

    steps: tuple = ()
    if config.objective == "minSplits":
        splits, new_order = min_splits_fixed_order(g, o.top)
    elif config.objective == "minSplitVertices":
        splits, new_order = min_split_vertices_fixed_order(g, o.top)
    else:  # minCrossings
        if config.method == "exact":
            splits, new_order, _ = min_crossings_with_budget(
                g, o, config.split_budget,
                max_crossings=config.crossing_bound,
                allow_large_k=allow_large_k,
            )
        else:
            run = (split_by_max_span if config.method == "max-span"
                   else split_by_crossing_reduction)
            doc = run(g, o, config.split_budget, config)
            splits, new_order, steps = doc.splits, doc.order, doc.steps

    new_graph = apply_splits(graph, splits)
    final_order = new_order.transpose() if flipped else new_order
    crossings = count_crossings(new_graph, final_order)
    if config.objective in ("minSplits", "minSplitVertices") and crossings != 0:
        raise AssertionError(
            f"crossing removal left {crossings} crossings; this is a bug")
    return LayoutDocument(
        graph=new_graph,
        order=final_order,
        splits=splits,
        crossings=crossings,
        config=config,
        steps=steps,
    )


def verify_document(doc: LayoutDocument) -> None:
    """Check the document invariant that ``crossings`` matches the drawing."""
    actual = count_crossings(doc.graph, doc.order)
    if actual != doc.crossings:
        raise DatasetError(
            f"document says {doc.crossings} crossings but the drawing has {actual}")


def split_document(
    doc: LayoutDocument,
    config: RunConfig | None = None,
    *,
    allow_large_k: bool = False,
) -> LayoutDocument:
    """Split an existing layout document (defaults to its own config)."""
    verify_document(doc)
    return split_layout(
        doc.graph, doc.order, config or doc.config, allow_large_k=allow_large_k
    )
