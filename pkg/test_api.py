"""Tests for the HTTP service."""

from app.algebra import classify as classify_module
from app.core.config import settings


def test_health(api_client):
    response = api_client.get("/health")
    assert response.status_code == 200
    data = response.json()
    assert data["status"] == "healthy"
    assert set(data["methods"]) == {"general", "hilbert-burch", "eagon-northcott"}


class TestInvariants:
    def test_points(self, api_client):
        response = api_client.get("/api/invariants", params={"p": 7, "b": 3})
        assert response.status_code == 200
        assert response.json()["points"] == [[7, 0], [4, 1], [1, 2], [0, 7]]

    def test_witness(self, api_client):
        data = api_client.get("/api/invariants", params={"p": 13, "b": 9}).json()
        assert data["witness"] == [10, 9]

    def test_bad_prime(self, api_client):
        response = api_client.get("/api/invariants", params={"p": 4, "b": 1})
        assert response.status_code == 400
        assert "detail" in response.json()

    def test_missing_parameter(self, api_client):
        assert api_client.get("/api/invariants", params={"p": 7}).status_code == 422


def test_reduced_kernel(api_client):
    data = api_client.get("/api/kernel", params={"p": 7, "b": 3, "reduced": True}).json()
    assert len(data["generators"]) == 3
    assert len(data["reduced_basis"]) == 3


class TestResolution:
    def test_auto(self, api_client):
        data = api_client.get("/api/resolution", params={"p": 7, "b": 3}).json()
        assert data["method"] == "hilbert-burch"
        assert data["ranks"] == [1, 3, 2]
        assert data["matrices"] is None

    def test_matrices(self, api_client):
        data = api_client.get("/api/resolution", params={"p": 13, "b": 4, "matrices": True}).json()
        assert data["method"] == "eagon-northcott"
        assert [len(m) for m in data["matrices"]] == [1, 6, 8]

    def test_not_applicable(self, api_client):
        response = api_client.get(
            "/api/resolution", params={"p": 7, "b": 3, "method": "eagon-northcott"}
        )
        assert response.status_code == 400
        assert "class is Codim2" in response.json()["detail"]


def test_verify(api_client):
    data = api_client.get("/api/verify", params={"p": 13, "b": 5}).json()
    assert data["passed"]
    assert set(data["checks"]) == {"complex", "minimality", "generates", "homogeneity", "length", "hilbert"}


class TestClassification:
    def test_two_slope(self, api_client):
        data = api_client.get("/api/classify", params={"p": 11, "b": 3}).json()
        assert data["label"] == "TwoSlope"
        assert data["evidence"]["two_slope_condition"] is True

    def test_violation(self, api_client, monkeypatch):
        monkeypatch.setattr(classify_module, "theorem_checks", lambda evidence, inv: ["broken"])
        response = api_client.get("/api/classify", params={"p": 7, "b": 3})
        assert response.status_code == 500
        assert response.json()["evidence"]["product"] == 8

    def test_sweep(self, api_client):
        data = api_client.get("/api/sweep", params={"p_max": 13}).json()
        assert data["violations"] == 0
        assert len(data["rows"]) == 23

    def test_sweep_limit(self, api_client, monkeypatch):
        monkeypatch.setattr(settings, "pmax_limit", 50)
        assert api_client.get("/api/sweep", params={"p_max": 60}).status_code == 400
