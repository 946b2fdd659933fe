"""bisplit: crossing removal and minimization in 2-layer graph drawings by
vertex splitting.

The drawing model is a bipartite graph on two parallel layers whose
crossings are fully determined by the two layer orders.  One layer is held
fixed; vertices of the other may be split into copies that divide the
original neighborhood.  The package provides exact linear-time algorithms
for the two removal objectives (fewest total splits, fewest split
vertices), an exhaustive search for crossing minimization under a split
budget, two splitting heuristics, generators, benchmarks, an SVG renderer,
a command line and an HTTP service.
"""

from bisplit._kernels import BACKEND as KERNEL_BACKEND
from bisplit.crossings import (
    count_crossings,
    count_crossings_in_range,
    count_crossings_naive,
    is_two_layer_planar,
)
from bisplit.heuristics import (
    barycenter_order,
    split_by_crossing_reduction,
    split_by_max_span,
)
from bisplit.minimize import (
    BudgetError,
    InfeasibleError,
    brute_force_min_splits,
    crossings_within_budget,
    min_crossings_with_budget,
)
from bisplit.model import (
    BipartiteGraph,
    DatasetError,
    LayerOrder,
    LayoutDocument,
    OrderError,
    RunConfig,
    SplitCopy,
    SplitError,
    SplitResult,
    SplitStep,
    VertexRecord,
    alphabetical_order,
    apply_splits,
    as_input_order,
    build_graph,
    dataset_to_json,
    dumps_document,
    graph_stats,
    load_dataset,
    parse_dataset,
    parse_document,
)
from bisplit.pipeline import (
    compute_order,
    initial_layout,
    split_document,
    split_layout,
    verify_document,
)
from bisplit.removal import min_split_vertices_fixed_order, min_splits_fixed_order
from bisplit.render import render_svg

__version__ = "0.1.0"

__all__ = [
    "BipartiteGraph",
    "BudgetError",
    "DatasetError",
    "InfeasibleError",
    "KERNEL_BACKEND",
    "LayerOrder",
    "LayoutDocument",
    "OrderError",
    "RunConfig",
    "SplitCopy",
    "SplitError",
    "SplitResult",
    "SplitStep",
    "VertexRecord",
    "alphabetical_order",
    "apply_splits",
    "as_input_order",
    "barycenter_order",
    "brute_force_min_splits",
    "build_graph",
    "compute_order",
    "count_crossings",
    "count_crossings_in_range",
    "count_crossings_naive",
    "crossings_within_budget",
    "dataset_to_json",
    "dumps_document",
    "graph_stats",
    "initial_layout",
    "is_two_layer_planar",
    "load_dataset",
    "min_crossings_with_budget",
    "min_split_vertices_fixed_order",
    "min_splits_fixed_order",
    "parse_dataset",
    "parse_document",
    "render_svg",
    "split_by_crossing_reduction",
    "split_by_max_span",
    "split_document",
    "split_layout",
    "verify_document",
]
