"""Data model: validation, (de)serialization round trips, split application."""

import json

import pytest

from bisplit.model import (
    BipartiteGraph,
    DatasetError,
    LayerOrder,
    OrderError,
    RunConfig,
    SplitCopy,
    SplitError,
    SplitResult,
    VertexRecord,
    alphabetical_order,
    apply_splits,
    as_input_order,
    build_graph,
    check_order,
    dataset_to_json,
    dumps_document,
    graph_stats,
    load_dataset,
    parse_dataset,
    parse_document,
    parse_node_link,
)
from bisplit.pipeline import initial_layout

from helpers import quick_graph


def test_graph_rejects_duplicate_vertex_ids():
    with pytest.raises(DatasetError, match="duplicate vertex id"):
        build_graph(["a", "a"], ["b"], [])
    with pytest.raises(DatasetError, match="duplicate vertex id"):
        build_graph(["a"], ["a"], [])


def test_graph_rejects_unknown_endpoints_and_duplicate_edges():
    with pytest.raises(DatasetError, match="unknown top vertex"):
        build_graph(["t"], ["b"], [("x", "b")])
    with pytest.raises(DatasetError, match="unknown bottom vertex"):
        build_graph(["t"], ["b"], [("t", "x")])
    with pytest.raises(DatasetError, match="duplicate edge"):
        build_graph(["t"], ["b"], [("t", "b"), ("t", "b")])


def test_neighbor_maps_keep_edge_list_order():
    g = build_graph(["t1", "t2"], ["b1", "b2"],
                    [("t2", "b1"), ("t1", "b1"), ("t1", "b2")])
    assert g.top_neighbors["t1"] == ("b1", "b2")
    assert g.bottom_neighbors["b1"] == ("t2", "t1")
    assert g.degree("b2") == 1
    with pytest.raises(KeyError):
        g.degree("nope")


def test_transpose_is_an_involution():
    g = quick_graph(2, 3, [("t1", "b2"), ("t2", "b3")])
    assert g.transpose().transpose() == g
    assert g.transpose().top_ids == g.bottom_ids


def test_check_order_reports_missing_and_unknown():
    g = quick_graph(2, 2, [])
    check_order(g, LayerOrder(("t2", "t1"), ("b1", "b2")))
    with pytest.raises(OrderError, match="missing.*t2"):
        check_order(g, LayerOrder(("t1",), ("b1", "b2")))
    with pytest.raises(OrderError, match="unknown or repeated"):
        check_order(g, LayerOrder(("t1", "tX"), ("b1", "b2")))


def test_alphabetical_order_sorts_by_label_then_id():
    g = build_graph(
        [("t1", "zz"), ("t2", "aa")],
        [("b1", "same"), ("b2", "same")],
        [],
    )
    order = alphabetical_order(g)
    assert order.top == ("t2", "t1")  # label wins
    assert order.bottom == ("b1", "b2")  # id breaks the tie


def test_as_input_order_preserves_listing():
    g = quick_graph(3, 2, [])
    assert as_input_order(g) == LayerOrder(("t1", "t2", "t3"), ("b1", "b2"))


def test_dataset_roundtrip_preserves_everything():
    g = BipartiteGraph(
        top=(VertexRecord("t1", "Top One"),),
        bottom=(VertexRecord("b1", "b1"), VertexRecord("b1#1", "b1", "b1")),
        edges=(("t1", "b1"), ("t1", "b1#1")),
    )
    assert parse_dataset(dataset_to_json(g)) == g


def test_parse_dataset_error_messages():
    with pytest.raises(DatasetError, match="missing key 'edges'"):
        parse_dataset({"top": [], "bottom": []})
    with pytest.raises(DatasetError, match="must be a list"):
        parse_dataset({"top": {}, "bottom": [], "edges": []})
    with pytest.raises(DatasetError, match="nonempty string"):
        parse_dataset({"top": [{"id": ""}], "bottom": [], "edges": []})
    with pytest.raises(DatasetError, match=r"edges\[0\]"):
        parse_dataset({"top": [], "bottom": [], "edges": [["a"]]})
    with pytest.raises(DatasetError):
        parse_dataset(["not", "an", "object"])


def test_node_link_adapter_with_layer_fields():
    g = load_dataset({
        "nodes": [
            {"id": "c1", "layer": "top", "name": "Cell"},
            {"id": "g1", "layer": "bottom"},
        ],
        "links": [{"source": "g1", "target": "c1"}],
    })
    assert g.top_ids == ("c1",)
    assert g.edges == (("c1", "g1"),)  # flipped to top->bottom
    assert g.vertex_by_id["c1"].label == "Cell"


def test_node_link_adapter_with_two_groups():
    g = parse_node_link({
        "nodes": [
            {"id": "x", "group": "cell"},
            {"id": "y", "group": "gene"},
        ],
        "links": [{"source": "x", "target": "y"}],
    })
    # alphabetically smaller group name becomes the top layer
    assert g.top_ids == ("x",)
    assert g.bottom_ids == ("y",)


def test_node_link_adapter_rejects_three_groups():
    with pytest.raises(DatasetError, match="exactly 2 node groups"):
        parse_node_link({
            "nodes": [{"id": "a", "group": "1"}, {"id": "b", "group": "2"},
                      {"id": "c", "group": "3"}],
            "links": [],
        })


def test_config_roundtrip_and_unknown_key():
    cfg = RunConfig.from_json({"objective": "minCrossings", "splitBudget": 2,
                               "method": "max-span"})
    assert cfg.split_budget == 2
    assert RunConfig.from_json(cfg.to_json()) == cfg
    with pytest.raises(DatasetError, match="unknown keys"):
        RunConfig.from_json({"objectiv": "minSplits"})
    with pytest.raises(DatasetError, match="fixedSide"):
        RunConfig.from_json({"fixedSide": "left"})
    with pytest.raises(DatasetError, match="splitBudget"):
        RunConfig.from_json({"splitBudget": -1})


def test_split_result_metrics():
    res = SplitResult.from_copies({
        "a": [SplitCopy("a", ("t1",)), SplitCopy("a#1", ("t2",)),
              SplitCopy("a#2", ("t3",))],
        "b": [SplitCopy("b", ("t1", "t2"))],  # single part: not a split
        "c": [SplitCopy("c", ("t1",)), SplitCopy("c#1", ("t2",))],
    })
    assert res.total_splits == 3
    assert res.split_vertices == 2
    assert res.max_splits == 2
    assert set(res.per_original) == {"a", "c"}
    assert SplitResult.from_json(res.to_json()) == res


def test_split_result_rejects_empty_parts():
    with pytest.raises(SplitError, match="no neighbors"):
        SplitResult.from_copies({"a": [SplitCopy("a", ()), SplitCopy("a#1", ("t",))]})


def test_apply_splits_first_part_keeps_the_id():
    g = quick_graph(3, 2, [("t1", "b1"), ("t2", "b1"), ("t3", "b1"), ("t2", "b2")])
    res = SplitResult.from_copies({
        "b1": [SplitCopy("b1", ("t1",)), SplitCopy("b1#1", ("t2", "t3"))],
    })
    g2 = apply_splits(g, res)
    assert g2.bottom_ids == ("b1", "b1#1", "b2")
    by_id = g2.vertex_by_id
    assert by_id["b1"].original_id is None  # still "the original"
    assert by_id["b1#1"].original_id == "b1"
    assert by_id["b1#1"].label == by_id["b1"].label
    assert g2.edges == (("t1", "b1"), ("t2", "b1#1"), ("t3", "b1#1"), ("t2", "b2"))


def test_apply_splits_of_a_copy_points_at_the_root():
    g = quick_graph(3, 1, [("t1", "b1"), ("t2", "b1"), ("t3", "b1")])
    step1 = SplitResult.from_copies(
        {"b1": [SplitCopy("b1", ("t1", "t2")), SplitCopy("b1#1", ("t3",))]})
    g2 = apply_splits(g, step1)
    step2 = SplitResult.from_copies(
        {"b1#1": [SplitCopy("b1#1", ("t3",))]})  # single part: no-op
    assert apply_splits(g2, step2) == g2
    step3 = SplitResult.from_copies(
        {"b1": [SplitCopy("b1", ("t1",)), SplitCopy("b1#2", ("t2",))]})
    g3 = apply_splits(g2, step3)
    assert g3.vertex_by_id["b1#2"].original_id == "b1"


def test_apply_splits_validates_the_partition():
    g = quick_graph(2, 1, [("t1", "b1"), ("t2", "b1")])
    with pytest.raises(SplitError, match="assigned to two copies"):
        apply_splits(g, SplitResult.from_copies(
            {"b1": [SplitCopy("b1", ("t1",)), SplitCopy("b1#1", ("t1",))]}))
    with pytest.raises(SplitError, match="do not partition"):
        apply_splits(g, SplitResult.from_copies(
            {"b1": [SplitCopy("b1", ("t1",)), SplitCopy("b1#1", ("t9",))]}))
    with pytest.raises(SplitError, match="unknown vertex"):
        apply_splits(g, SplitResult.from_copies(
            {"zz": [SplitCopy("zz", ("t1",)), SplitCopy("zz#1", ("t2",))]}))


def test_apply_splits_works_on_the_top_layer_too():
    g = quick_graph(1, 2, [("t1", "b1"), ("t1", "b2")])
    res = SplitResult.from_copies(
        {"t1": [SplitCopy("t1", ("b1",)), SplitCopy("t1#1", ("b2",))]})
    g2 = apply_splits(g, res)
    assert g2.top_ids == ("t1", "t1#1")
    assert g2.edges == (("t1", "b1"), ("t1#1", "b2"))


def test_graph_stats_density_and_max_degree():
    g = quick_graph(2, 3, [("t1", "b1"), ("t1", "b2"), ("t1", "b3"), ("t2", "b1")])
    s = graph_stats(g)
    assert s["vertexCount"] == 5 and s["edgeCount"] == 4
    assert s["maxDegree"] == 3
    assert s["density"] == pytest.approx(2 * 4 / (5 * 4))
    assert graph_stats(quick_graph(1, 0, []))["density"] == 0.0


def test_document_roundtrip_and_validation():
    g = quick_graph(2, 2, [("t1", "b2"), ("t2", "b1")])
    doc = initial_layout(g, RunConfig())
    text = dumps_document(doc)
    parsed = parse_document(json.loads(text))
    assert parsed == doc
    assert dumps_document(parsed) == text

    broken = json.loads(text)
    broken["crossings"] = -1
    with pytest.raises(DatasetError, match="crossings"):
        parse_document(broken)
    missing = json.loads(text)
    del missing["order"]
    with pytest.raises(DatasetError, match="missing 'order'"):
        parse_document(missing)
