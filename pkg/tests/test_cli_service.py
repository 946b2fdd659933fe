"""Command-line interface and HTTP service tests.

The CLI is exercised in-process through ``main(argv)`` so exit codes and
stream output can be asserted directly.  The service is driven through
FastAPI's TestClient.  One test pins the contract that both front ends
share a serializer: the same dataset and config must produce
byte-identical documents over either path.
"""

from __future__ import annotations

import io
import json

import pytest
from fastapi.testclient import TestClient

import bisplit.service as service_module
from bisplit.cli import main
from bisplit.generators import gen_subdivision
from bisplit.model import dataset_to_json, parse_document
from bisplit.service import create_app

from helpers import quick_graph


@pytest.fixture()
def k4_file(tmp_path):
    path = tmp_path / "k4.json"
    path.write_text(json.dumps(dataset_to_json(gen_subdivision("K4"))))
    return str(path)


@pytest.fixture()
def spread_file(tmp_path):
    # One bottom vertex spans the whole top row; the others sit between
    # its endpoints.  A single split resolves every crossing.
    graph = quick_graph(4, 0, [])
    data = dataset_to_json(graph)
    data["bottom"] = [{"id": n, "label": n} for n in ("v", "w", "u")]
    data["edges"] = [["t1", "v"], ["t4", "v"], ["t2", "w"], ["t3", "u"]]
    path = tmp_path / "spread.json"
    path.write_text(json.dumps(data))
    return str(path)


@pytest.fixture()
def client(monkeypatch, tmp_path):
    # Point the static root somewhere empty so the API behaves the same
    # whether or not a viewer bundle has been built.
    monkeypatch.setenv("BISPLIT_STATIC", str(tmp_path / "nowhere"))
    return TestClient(create_app(), raise_server_exceptions=False)


# ---------------------------------------------------------------------
# CLI: happy paths
# ---------------------------------------------------------------------

def test_gen_stats_pipeline(tmp_path, capsys):
    out = tmp_path / "ds.json"
    assert main(["gen", "subdivision", "K4", "--out", str(out)]) == 0
    assert main(["stats", str(out)]) == 0
    stats = json.loads(capsys.readouterr().out)
    assert stats == {
        "topCount": 4,
        "bottomCount": 6,
        "vertexCount": 10,
        "edgeCount": 12,
        "density": pytest.approx(2.0 * 12 / (10 * 9)),
        "maxDegree": 3,
    }


def test_gen_caterpillar_single_leg_count_repeats(tmp_path, capsys):
    out = tmp_path / "cat.json"
    assert main(["gen", "caterpillar", "--spine", "3", "--legs", "2",
                 "--out", str(out)]) == 0
    assert main(["stats", str(out)]) == 0
    stats = json.loads(capsys.readouterr().out)
    # 2 spine edges plus 2 legs per spine vertex.
    assert stats["edgeCount"] == 2 + 6
    assert stats["vertexCount"] == 9


def test_order_svg_format(k4_file, capsys):
    assert main(["order", k4_file, "--format", "svg"]) == 0
    svg = capsys.readouterr().out
    assert svg.startswith("<svg")
    assert "crossings:" in svg


def test_remove_writes_planar_document(k4_file, tmp_path):
    out = tmp_path / "doc.json"
    assert main(["remove", k4_file, "--objective", "splits",
                 "--out", str(out)]) == 0
    doc = parse_document(json.loads(out.read_text()))
    assert doc.crossings == 0
    assert doc.splits.total_splits == 3
    assert doc.config.objective == "minSplits"


def test_remove_vertices_objective(k4_file, capsys):
    assert main(["remove", k4_file, "--objective", "vertices"]) == 0
    doc = parse_document(json.loads(capsys.readouterr().out))
    assert doc.crossings == 0
    assert doc.config.objective == "minSplitVertices"


def test_minimize_can_relocate(tmp_path, capsys):
    # Two crossing edges; moving one bottom vertex (a "split" into one
    # part) already yields a planar drawing.
    data = dataset_to_json(quick_graph(2, 2, [("t1", "b2"), ("t2", "b1")]))
    path = tmp_path / "x.json"
    path.write_text(json.dumps(data))
    assert main(["minimize", str(path), "--k", "1", "--order", "as-input"]) == 0
    doc = parse_document(json.loads(capsys.readouterr().out))
    assert doc.crossings == 0
    assert doc.order.bottom == ("b2", "b1")
    assert doc.config.order_method == "asInput"


def test_heuristic_splits_spread_vertex(spread_file, capsys):
    assert main(["heuristic", spread_file, "--method", "max-span", "--k", "5",
                 "--order", "as-input"]) == 0
    doc = parse_document(json.loads(capsys.readouterr().out))
    assert doc.crossings == 0
    assert [s.split_vertex for s in doc.steps] == ["v"]


def test_stdin_dash(monkeypatch, capsys):
    data = dataset_to_json(gen_subdivision("C4"))
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(data)))
    assert main(["stats", "-"]) == 0
    assert json.loads(capsys.readouterr().out)["edgeCount"] == 8


def test_render_accepts_dataset_and_document(k4_file, tmp_path, capsys):
    doc_path = tmp_path / "doc.json"
    assert main(["order", k4_file, "--out", str(doc_path)]) == 0
    assert main(["render", str(doc_path)]) == 0
    from_document = capsys.readouterr().out
    assert main(["render", k4_file]) == 0
    from_dataset = capsys.readouterr().out
    assert from_document == from_dataset
    assert main(["render", k4_file, "--width", "400"]) == 0
    assert 'width="400"' in capsys.readouterr().out


def test_render_rejects_inconsistent_document(k4_file, tmp_path, capsys):
    doc_path = tmp_path / "doc.json"
    main(["order", k4_file, "--out", str(doc_path)])
    tampered = json.loads(doc_path.read_text())
    tampered["crossings"] += 1
    doc_path.write_text(json.dumps(tampered))
    assert main(["render", str(doc_path)]) == 2
    assert "but the drawing has" in capsys.readouterr().err


def test_bench_curve_cli(k4_file, capsys):
    assert main(["bench", k4_file, "--curve", "--method", "cr-count",
                 "--k", "2"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "k,crossings,cum_time_ms"
    assert lines[1].startswith("0,")


def test_bench_directory_cli(k4_file, tmp_path, capsys):
    assert main(["bench", str(tmp_path)]) == 0
    header = capsys.readouterr().out.splitlines()[0]
    assert header.split(",")[:3] == ["dataset", "config", "crossings"]


# ---------------------------------------------------------------------
# CLI: failure modes
# ---------------------------------------------------------------------

def test_missing_file_is_an_input_error(tmp_path, capsys):
    assert main(["stats", str(tmp_path / "absent.json")]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_unparseable_file_is_an_input_error(tmp_path, capsys):
    path = tmp_path / "junk.json"
    path.write_text("{nope")
    assert main(["stats", str(path)]) == 2
    assert "error:" in capsys.readouterr().err


def test_oversized_budget_is_an_input_error(k4_file, capsys):
    assert main(["minimize", k4_file, "--k", "9"]) == 2
    assert "exponential in the budget" in capsys.readouterr().err


def test_unreachable_bound_is_an_input_error(tmp_path, capsys):
    data = dataset_to_json(quick_graph(2, 2, [("t1", "b1"), ("t1", "b2"),
                                              ("t2", "b1"), ("t2", "b2")]))
    path = tmp_path / "k22.json"
    path.write_text(json.dumps(data))
    assert main(["minimize", str(path), "--k", "0", "--max-crossings", "0",
                 "--order", "as-input"]) == 2
    assert "above the requested bound" in capsys.readouterr().err


def test_bad_generator_arguments(tmp_path, capsys):
    assert main(["gen", "subdivision", "K1"]) == 2
    assert main(["gen", "caterpillar", "--spine", "2", "--legs", "a,b"]) == 2
    err = capsys.readouterr().err
    assert "comma-separated integers" in err


def test_bench_rejects_plain_file(k4_file, capsys):
    assert main(["bench", k4_file]) == 2
    assert "not a dataset directory" in capsys.readouterr().err


def test_internal_failure_exits_one(k4_file, monkeypatch, capsys):
    def boom(*args, **kwargs):
        raise RuntimeError("wired to fail")

    monkeypatch.setattr("bisplit.cli.initial_layout", boom)
    assert main(["order", k4_file]) == 1
    assert "RuntimeError" in capsys.readouterr().err


def test_serve_rejects_bad_port_env(monkeypatch, capsys):
    monkeypatch.setenv("BISPLIT_PORT", "eighty")
    assert main(["serve"]) == 2
    assert "BISPLIT_PORT must be an integer" in capsys.readouterr().err


def test_serve_resolves_port(monkeypatch):
    seen = {}
    monkeypatch.setenv("BISPLIT_PORT", "8123")
    monkeypatch.setattr("bisplit.service.serve",
                        lambda host, port: seen.update(host=host, port=port))
    assert main(["serve", "--host", "0.0.0.0"]) == 0
    assert seen == {"host": "0.0.0.0", "port": 8123}
    monkeypatch.setattr("bisplit.service.serve",
                        lambda host, port: seen.update(host=host, port=port))
    assert main(["serve", "--port", "9001"]) == 0
    assert seen["port"] == 9001


# ---------------------------------------------------------------------
# Service
# ---------------------------------------------------------------------

def test_health(client):
    response = client.get("/api/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_layout_then_split_flow(client):
    dataset = dataset_to_json(gen_subdivision("K4"))
    drawn = client.post("/api/layout",
                        json={"dataset": dataset,
                              "config": {"objective": "minSplits"}})
    assert drawn.status_code == 200
    document = drawn.json()
    assert document["crossings"] > 0
    assert document["splits"]["totalSplits"] == 0

    split = client.post("/api/split", json={"document": document})
    assert split.status_code == 200
    after = split.json()
    assert after["crossings"] == 0
    assert after["splits"]["totalSplits"] == 3


def test_split_config_override(client):
    dataset = dataset_to_json(gen_subdivision("K4"))
    document = client.post("/api/layout", json={"dataset": dataset}).json()
    response = client.post(
        "/api/split",
        json={"document": document,
              "config": {"objective": "minSplitVertices"}})
    assert response.status_code == 200
    assert response.json()["config"]["objective"] == "minSplitVertices"


def test_layout_requires_dataset(client):
    response = client.post("/api/layout", json={"config": {}})
    assert response.status_code == 400
    assert "dataset" in response.json()["error"]


def test_split_requires_document(client):
    response = client.post("/api/split", json={})
    assert response.status_code == 400
    assert "document" in response.json()["error"]


def test_malformed_body_is_400(client):
    response = client.post("/api/layout", content="{nope",
                           headers={"content-type": "application/json"})
    assert response.status_code == 400
    assert "not valid JSON" in response.json()["error"]

    response = client.post("/api/layout", json=[1, 2, 3])
    assert response.status_code == 400
    assert "JSON object" in response.json()["error"]


def test_bad_dataset_is_400(client):
    response = client.post("/api/layout", json={"dataset": {"top": []}})
    assert response.status_code == 400
    assert "error" in response.json()


def test_budget_guard_is_422(client):
    dataset = dataset_to_json(gen_subdivision("K4"))
    document = client.post("/api/layout", json={"dataset": dataset}).json()
    response = client.post(
        "/api/split",
        json={"document": document,
              "config": {"objective": "minCrossings", "splitBudget": 9}})
    assert response.status_code == 422
    assert "exponential in the budget" in response.json()["error"]


def test_unreachable_bound_is_422(client):
    dataset = dataset_to_json(
        quick_graph(2, 2, [("t1", "b1"), ("t1", "b2"),
                           ("t2", "b1"), ("t2", "b2")]))
    document = client.post("/api/layout", json={"dataset": dataset}).json()
    response = client.post(
        "/api/split",
        json={"document": document,
              "config": {"objective": "minCrossings", "splitBudget": 0,
                         "crossingBound": 0}})
    assert response.status_code == 422
    assert "above the requested bound" in response.json()["error"]


def test_unexpected_failure_is_500(client, monkeypatch):
    def boom(*args, **kwargs):
        raise RuntimeError("wired to fail")

    monkeypatch.setattr(service_module, "initial_layout", boom)
    response = client.post(
        "/api/layout",
        json={"dataset": dataset_to_json(gen_subdivision("C4"))})
    assert response.status_code == 500
    assert response.json()["error"].startswith("internal error:")


def test_api_works_without_viewer_bundle(client):
    # No static files mounted: the root path 404s but the API is up.
    assert client.get("/").status_code == 404
    assert client.get("/api/health").status_code == 200


def test_static_mount_serves_viewer(monkeypatch, tmp_path):
    (tmp_path / "index.html").write_text("<!doctype html><p>viewer</p>")
    monkeypatch.setenv("BISPLIT_STATIC", str(tmp_path))
    with TestClient(create_app()) as mounted:
        response = mounted.get("/")
        assert response.status_code == 200
        assert "viewer" in response.text


def test_cli_and_service_emit_identical_documents(k4_file, tmp_path, client):
    out = tmp_path / "cli.json"
    assert main(["remove", k4_file, "--objective", "splits",
                 "--out", str(out)]) == 0

    dataset = json.loads(open(k4_file).read())
    document = client.post(
        "/api/layout",
        json={"dataset": dataset, "config": {"objective": "minSplits"}}).json()
    response = client.post("/api/split", json={"document": document})
    assert response.content.decode() == out.read_text()
