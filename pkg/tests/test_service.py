import json

import numpy as np
import pytest
from fastapi.testclient import TestClient

from tangentspline.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


class TestHealth:
    def test_ok(self, client):
        r = client.get("/healthz")
        assert r.status_code == 200
        assert r.text == "ok"

    def test_repeatable(self, client):
        assert client.get("/healthz").content == client.get("/healthz").content

    def test_post_not_allowed(self, client):
        assert client.post("/healthz").status_code == 405


class TestExamples:
    def test_example_1(self, client):
        r = client.get("/api/v1/examples/1")
        assert r.status_code == 200
        data = r.json()
        assert len(data["tau"]) == 11
        assert data["F"] == [1, 3, 3, 1, 2, 7, 1.5, 1, 10, 2, 1.5]

    def test_example_2_on_half_circle(self, client):
        data = client.get("/api/v1/examples/2").json()
        tau = np.array(data["tau"])
        values = np.array(data["F"])
        assert len(tau) == 11
        # interior ordinates match sqrt(x - x^2) to the printed precision
        interior = slice(1, -1)
        assert np.max(
            np.abs(values[interior] - np.sqrt(tau[interior] - tau[interior] ** 2))
        ) < 1e-9

    def test_unknown_id_404(self, client):
        assert client.get("/api/v1/examples/3").status_code == 404

    def test_non_integer_id_404(self, client):
        assert client.get("/api/v1/examples/first").status_code == 404


class TestSpline:
    def test_example1_request(self, client):
        data = client.get("/api/v1/examples/1").json()
        r = client.post(
            "/api/v1/spline", json={"tau": data["tau"], "F": data["F"], "samples": 500}
        )
        assert r.status_code == 200
        body = r.json()
        assert body["phi"][0] == 1.0
        assert body["phi"][10] == 1.5
        assert max(body["diagnostics"]["c1_residuals"]) <= 1e-9
        assert len(body["samples"]) == 500
        assert body["alpha"] == [0.5] * 10

    def test_tent_request(self, client):
        r = client.post("/api/v1/spline", json={"tau": [0, 1, 2], "F": [0, 1, 0]})
        assert r.status_code == 200
        assert r.json()["phi"] == pytest.approx([0.0, 0.8, 0.0], abs=1e-15)

    def test_strict_alpha_422_names_range(self, client):
        r = client.post(
            "/api/v1/spline", json={"tau": [0, 1, 2], "F": [0, 1, 0], "alpha": 0.9}
        )
        assert r.status_code == 422
        errors = r.json()["errors"]
        assert any("[1/3, 2/3]" in e["message"] for e in errors)
        assert any(e["pointer"].startswith("/alpha") for e in errors)

    def test_422_lists_every_violation(self, client):
        r = client.post(
            "/api/v1/spline",
            json={"tau": [0, 0], "F": [0.0], "alpha": [5.0], "samples": -1},
        )
        assert r.status_code == 422
        pointers = {e["pointer"] for e in r.json()["errors"]}
        assert len(pointers) >= 3

    def test_malformed_json_400(self, client):
        r = client.post(
            "/api/v1/spline", content=b"{nope", headers={"content-type": "application/json"}
        )
        assert r.status_code == 400
        assert r.json()["errors"][0]["code"] == "syntax"

    def test_size_cap_413(self, client):
        n = 100001
        r = client.post(
            "/api/v1/spline",
            json={"tau": list(range(n)), "F": [0] * n},
        )
        assert r.status_code == 413

    def test_parametric_request(self, client):
        r = client.post(
            "/api/v1/spline",
            json={"mode": "parametric", "points": [[0, 0], [1, 2], [3, 1]], "samples": 100},
        )
        assert r.status_code == 200
        body = r.json()
        assert body["mode"] == "parametric"
        assert body["samples"][0] == [0.0, 0.0, 0.0]
        assert len(body["phi"]["x"]) == 3
        assert len(body["diagnostics"]["dominance_margins"]) == 1

    def test_mode_mismatch_422(self, client):
        r = client.post(
            "/api/v1/spline", json={"mode": "scalar", "points": [[0, 0], [1, 1]]}
        )
        assert r.status_code == 422

    def test_single_sample_allowed(self, client):
        r = client.post(
            "/api/v1/spline", json={"tau": [0, 1], "F": [5, 6], "samples": 1}
        )
        assert r.status_code == 200
        assert r.json()["samples"] == [[0.0, 5.0]]

    def test_identical_requests_identical_bytes(self, client):
        payload = {"tau": [0, 1, 2, 3], "F": [0, 2, -1, 3], "alpha": 0.4, "samples": 64}
        r1 = client.post("/api/v1/spline", json=payload)
        r2 = client.post("/api/v1/spline", json=payload)
        assert r1.content == r2.content

    def test_non_strict_wide_alpha_solves(self, client):
        r = client.post(
            "/api/v1/spline",
            json={"tau": [0, 1, 2], "F": [0, 1, 0], "alpha": 0.9, "strict": False},
        )
        assert r.status_code == 200

    def test_concurrent_identical_requests_identical_bodies(self, client):
        import concurrent.futures

        payload = {"tau": [0, 1, 2, 3], "F": [1, 4, 0, 2], "samples": 256}
        with concurrent.futures.ThreadPoolExecutor(max_workers=8) as pool:
            bodies = list(
                pool.map(
                    lambda _: client.post("/api/v1/spline", json=payload).content,
                    range(16),
                )
            )
        assert len(set(bodies)) == 1


class TestSchema:
    def test_schema_published(self, client):
        r = client.get("/api/v1/schema")
        assert r.status_code == 200
        body = r.json()
        assert "request" in body and "response" in body
        assert body["request"]["oneOf"][0]["required"] == ["tau", "F"]


class TestLatency:
    def test_desk_scale_under_50ms(self, client):
        import time

        tau = list(range(100))
        values = list(np.sin(np.linspace(0, 7, 100)))
        payload = {"tau": tau, "F": values, "samples": 2000}
        client.post("/api/v1/spline", json=payload)  # warm up
        t0 = time.perf_counter()
        r = client.post("/api/v1/spline", json=payload)
        elapsed = time.perf_counter() - t0
        assert r.status_code == 200
        assert elapsed < 0.05
