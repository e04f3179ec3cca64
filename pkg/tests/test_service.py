import pytest
from fastapi.testclient import TestClient

from ptsep.formats import automaton_to_document
from ptsep.families import FamilySpec, build_family
from ptsep.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


@pytest.fixture(scope="module")
def expo0_request():
    first, second = build_family(FamilySpec("exponential", 0))
    return {
        "first": automaton_to_document(first),
        "second": automaton_to_document(second),
    }


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_decide(client, expo0_request):
    response = client.post("/decide", json=expo0_request)
    assert response.status_code == 200
    body = response.json()
    assert body["verdict"] == "separable"
    assert body["stabilized_at"] == 2
    assert body["levels"][0]["level"] == 0


def test_tower_length_with_oracle(client, expo0_request):
    response = client.post("/tower-length", json={**expo0_request, "oracle_bound": 4})
    assert response.status_code == 200
    body = response.json()
    assert body == {
        "infinite": False,
        "length": 4,
        "oracle_bound": 4,
        "oracle_length": 4,
    }


def test_witness(client, expo0_request):
    response = client.post("/witness", json=expo0_request)
    assert response.status_code == 200
    tower = response.json()["tower"]
    assert tower == [
        {"word": [], "side": "second"},
        {"word": ["b"], "side": "first"},
        {"word": ["b", "c"], "side": "second"},
        {"word": ["b", "c", "b"], "side": "first"},
    ]


def test_separator(client, expo0_request):
    response = client.post("/separator", json=expo0_request)
    assert response.status_code == 200
    body = response.json()
    assert body["verified"] is True
    assert len(body["levels"]) >= 1


def test_family_with_witness(client):
    response = client.post(
        "/family", json={"kind": "exponential", "parameter": 1, "include_witness": True}
    )
    assert response.status_code == 200
    body = response.json()
    assert body["witness_word"] == ["b", "c", "b", "a1", "b", "c", "b"]
    assert len(body["witness_tower"]) == 8


def test_audit(client, expo0_request):
    tower = client.post("/witness", json=expo0_request).json()["tower"]
    response = client.post("/audit", json={"tower": tower, **expo0_request})
    assert response.status_code == 200
    body = response.json()
    assert body["violation"] is False
    assert body["within_bound"] is True
    assert body["tower_length"] == 4
    weights = [level["weight"] for level in body["levels"]]
    assert weights == sorted(weights)


def test_convert_both_ways(client, expo0_request):
    as_dot = client.post(
        "/convert", json={"automaton": expo0_request["first"], "to": "dot"}
    )
    assert as_dot.status_code == 200
    back = client.post("/convert", json={"dot": as_dot.json()["dot"], "to": "json"})
    assert back.status_code == 200
    assert back.json()["automaton"] == expo0_request["first"]


def test_convert_requires_exactly_one_input(client, expo0_request):
    response = client.post("/convert", json={"to": "dot"})
    assert response.status_code == 400
    assert response.json()["code"] == "invalid-document"


def test_not_separable_maps_to_conflict(client):
    even = {
        "alphabet": ["a"], "states": ["e", "o"], "initial": ["e"], "accepting": ["e"],
        "transitions": [
            {"from": "e", "symbol": "a", "to": "o"},
            {"from": "o", "symbol": "a", "to": "e"},
        ],
    }
    odd = dict(even, accepting=["o"])
    response = client.post("/separator", json={"first": even, "second": odd})
    assert response.status_code == 409
    assert response.json()["code"] == "not-separable"


def test_invalid_document_maps_to_bad_request(client, expo0_request):
    broken = {**expo0_request["first"], "initial": ["missing"]}
    response = client.post(
        "/decide", json={"first": broken, "second": expo0_request["second"]}
    )
    assert response.status_code == 400
    assert response.json()["code"] == "invalid-document"


def test_unknown_fields_rejected_by_schema(client, expo0_request):
    broken = {**expo0_request["first"], "surprise": 1}
    response = client.post(
        "/decide", json={"first": broken, "second": expo0_request["second"]}
    )
    assert response.status_code == 422


def test_resource_limit_maps_to_413(client, expo0_request):
    response = client.post("/decide", json={**expo0_request, "state_budget": 1})
    assert response.status_code == 413
    assert response.json()["code"] == "resource-limit"
