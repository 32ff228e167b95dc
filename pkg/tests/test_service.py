"""HTTP service endpoints, driven through the ASGI transport."""

from __future__ import annotations

import json

import pytest
from fastapi.testclient import TestClient

from colq.cli import main
from colq.quiver import standard_d_quiver, to_json_dict, to_text
from colq.service import create_app


@pytest.fixture()
def client():
    app = create_app(enumeration_cap=100, session_ttl=60)
    with TestClient(app) as c:
        yield c


D4 = {"n": 4, "m": 2, "arrows": [[1, 2, 0], [2, 3, 0], [2, 4, 0]]}


def test_standard_endpoint(client):
    r = client.get("/standard/d/4/2")
    assert r.status_code == 200
    assert r.json() == D4


def test_standard_endpoint_bad_size(client):
    r = client.get("/standard/d/3/2")
    assert r.status_code == 400
    assert r.json()["error"] == "BadSize"


def test_validate_endpoint(client):
    r = client.post("/quiver/validate", json={"quiver": D4})
    assert r.status_code == 200 and r.json()["ok"] is True
    bad = {"n": 2, "m": 1, "arrows": [[1, 1, 0]]}
    r = client.post("/quiver/validate", json={"quiver": bad})
    assert r.status_code == 400
    assert r.json()["error"] == "LoopArrow"


def test_validate_names_the_violated_axiom(client):
    two_colours = {"n": 2, "m": 1, "arrows": [[1, 2, 0], [1, 2, 1]]}
    r = client.post("/quiver/validate", json={"quiver": two_colours})
    assert r.json()["error"] == "MonochromaticityViolation"
    conflict = {"n": 2, "m": 2, "arrows": [[1, 2, 0], [2, 1, 1]]}
    r = client.post("/quiver/validate", json={"quiver": conflict})
    assert r.json()["error"] == "SkewConflict"


def test_mutate_endpoint(client):
    r = client.post("/quiver/mutate", json={"quiver": D4, "vertex": 1})
    assert r.status_code == 200
    assert r.json()["arrows"] == [[2, 1, 0], [2, 3, 0], [2, 4, 0]]


def test_classify_matches_cli_bytes(client, tmp_path, capsys):
    path = tmp_path / "d4.cq"
    path.write_text(to_text(standard_d_quiver(4, 2)), encoding="utf-8")
    assert main(["classify", str(path)]) == 0
    cli_line = capsys.readouterr().out.rstrip("\n")
    r = client.post("/quiver/classify", json={"quiver": D4})
    assert r.content.decode() == cli_line


def test_mutate_matches_cli_bytes(client, tmp_path, capsys):
    path = tmp_path / "d4.cq"
    path.write_text(to_text(standard_d_quiver(4, 2)), encoding="utf-8")
    assert main(["mutate", str(path), "1", "--json"]) == 0
    cli_line = capsys.readouterr().out.rstrip("\n")
    r = client.post("/quiver/mutate", json={"quiver": D4, "vertex": 1})
    assert r.content.decode() == cli_line


def test_zero_part_endpoint(client):
    r = client.post("/quiver/zero-part", json={"quiver": D4, "verify": True})
    body = r.json()
    assert body["arrows"] == [[1, 2], [2, 3], [2, 4]]
    assert body["components"] == [[1, 2, 3, 4]]
    assert body["report"]["degree_ok"] is True


def test_enumerate_endpoint_streams_ndjson(client):
    r = client.post("/orbit/enumerate", json={"quiver": D4, "cap": 100})
    assert r.status_code == 200
    lines = [json.loads(line) for line in r.text.strip().splitlines()]
    assert len(lines) == 15
    assert all({"key", "quiver"} <= set(entry) for entry in lines)


def test_enumerate_endpoint_cap_conflict(client):
    r = client.post("/orbit/enumerate", json={"quiver": D4, "cap": 3})
    assert r.status_code == 409
    assert r.json()["error"] == "CapExceeded"


def test_session_lifecycle(client):
    created = client.post("/session", json={"quiver": D4}).json()
    sid = created["id"]

    state = client.get(f"/session/{sid}").json()
    assert state["quiver"] == D4 and state["depth"] == 0

    mutated = client.post(f"/session/{sid}/mutate", json={"vertex": 2}).json()
    assert mutated["depth"] == 1
    assert mutated["classification"]["verdict"] == "TypeI"

    undone = client.post(f"/session/{sid}/undo", json={}).json()
    assert undone["quiver"] == D4 and undone["depth"] == 0

    r = client.post(f"/session/{sid}/undo", json={})
    assert r.status_code == 409


def test_session_periodicity_round_trip(client):
    sid = client.post("/session", json={"quiver": D4}).json()["id"]
    last = None
    for _ in range(3):  # m + 1 mutations at one vertex return to the seed
        last = client.post(f"/session/{sid}/mutate", json={"vertex": 2}).json()
    assert last["quiver"] == D4


def test_unknown_session_404(client):
    assert client.get("/session/nope").status_code == 404
    assert client.post("/session/nope/mutate", json={"vertex": 1}).status_code == 404


def test_session_expiry():
    app = create_app(session_ttl=0.0)
    with TestClient(app) as c:
        sid = c.post("/session", json={"quiver": D4}).json()["id"]
        assert c.get(f"/session/{sid}").status_code == 404


def test_mutate_vertex_validation(client):
    r = client.post("/quiver/mutate", json={"quiver": D4, "vertex": "two"})
    assert r.status_code == 400
    r = client.post("/quiver/mutate", json={"quiver": D4, "vertex": 9})
    assert r.status_code == 400
    assert r.json()["error"] == "VertexOutOfRange"
