# tests/test_api.py

import pytest
from fastapi.testclient import TestClient

from gacalc.main import app
from gacalc.verification import SUITES


@pytest.fixture
def client():
    """HTTP client bound to the in-process app."""
    return TestClient(app)


def test_health(client):
    response = client.get("/api/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok", "suites": len(SUITES)}


def test_eval(client):
    response = client.post("/api/eval", json={"expr": "e1*e2 + 3"})
    assert response.status_code == 200
    assert response.json() == {"terms": {"1": "3", "e12": "1"}, "algebra": "pga3", "text": "3 + e12"}


def test_eval_in_another_algebra(client):
    response = client.post("/api/eval", json={"expr": "e0*e0", "algebra": "1,0,1"})
    assert response.json()["text"] == "0"
    assert response.json()["algebra"] == "1,0,1"


def test_bad_requests(client):
    assert client.post("/api/eval", json={"expr": "e4"}).status_code == 400
    assert client.post("/api/eval", json={"expr": "e1 +"}).status_code == 400
    assert client.post("/api/eval", json={}).status_code == 422


def test_algebra_cannot_name_a_server_file(client, tmp_path):
    secret = tmp_path / "settings.env"
    secret.write_text("API_KEY=hunter2\n", encoding="utf-8")
    response = client.post("/api/eval", json={"expr": "1", "algebra": str(secret)})
    assert response.status_code == 422
    assert "hunter2" not in response.text


def test_eval_with_an_inline_gram(client):
    gram = [["0", "0", "0", "0"], ["0", "0", "1", "0"], ["0", "1", "0", "0"], ["0", "0", "0", "1"]]
    response = client.post("/api/eval", json={"expr": "e1*e2 + e2*e1", "gram": gram})
    assert response.status_code == 200
    assert response.json()["text"] == "2"
    assert response.json()["algebra"] == "2,1,1"
    ragged = client.post("/api/eval", json={"expr": "1", "gram": [["1", "0"], ["0"]]})
    assert ragged.status_code == 400


def test_inv_and_cmt(client):
    assert client.post("/api/inv", json={"expr": "1 + e0"}).json()["text"] == "1 - e0"
    assert client.post("/api/inv", json={"expr": "e0"}).status_code == 400
    assert client.post("/api/cmt", json={"b": "e12", "x": "e23"}).json()["text"] == "e13"


def test_decompose(client):
    response = client.post("/api/decompose", json={"expr": "2*e0 + e1 + 3*e01", "point": "0,0,0"})
    body = response.json()
    assert body["at_point"]["text"] == "e1"
    assert body["at_infinity"]["text"] == "2*e0 + 3*e01"
    assert body["cofactor"]["text"] == "2 - 3*e1"


def test_units(client):
    body = client.post("/api/units", json={"expr": "e1 + e0"}).json()
    assert body["r"]["text"] == "e1"
    assert body["tail"]["text"] == "e1"
    response = client.post("/api/units", json={"expr": "e0"})
    assert response.status_code == 400
    assert "r-component 0 not a unit" in response.json()["detail"]


def test_lie_table(client):
    body = client.post("/api/lie-table", json={}).json()
    assert body["basis"] == ["e23", "e31", "e12", "e01", "e02", "e03"]
    assert body["matches_se3"] is True
    assert body["brackets"]["[e01, e02]"] == "0"


def test_parallel_and_angle(client):
    body = client.post("/api/parallel", json={"point": "1,0,0", "plane": "0,1,0,0"}).json()
    assert body == {"coords": ["-1", "1", "0", "0"], "text": "-e0 + e1"}
    assert client.post("/api/parallel", json={"point": "1,0,0", "plane": "3,0,0,0"}).status_code == 400
    body = client.post("/api/angle", json={"plane1": "0,1,0,0", "plane2": "0,1,1,0"}).json()
    assert body["degrees"] == pytest.approx(45.0)


def test_check(client):
    response = client.post("/api/check", json={"suite": "commuting-e0", "seed": 1})
    [report] = response.json()
    assert report["suite"] == "commuting-e0"
    assert report["passed"] is True


def test_check_unknown_suite(client):
    response = client.post("/api/check", json={"suite": "comuting-e0"})
    assert response.status_code == 404
    assert "commuting-e0" in response.json()["detail"]
