"""Stateless HTTP facade for the curve builder.

Endpoints (JSON bodies, UTF-8):

* ``POST /api/v1/spline`` — solve a scalar or planar curve; 422 lists
  every violated input rule with a JSON-pointer path.
* ``GET /api/v1/examples/{id}`` — built-in datasets.
* ``GET /api/v1/schema`` — request/response schemas.
* ``GET /healthz`` — liveness probe.

Listen address and allowed CORS origin come from the environment
(``TANGENTSPLINE_HOST``, ``TANGENTSPLINE_PORT``,
``TANGENTSPLINE_CORS_ORIGIN``).
"""

from __future__ import annotations

import json
import os

import numpy as np
from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import PlainTextResponse

from .core import (
    DomainError,
    SingularSystemError,
    build_spline,
    compute_diagnostics,
    evaluate,
    sample_curve,
)
from .datasets import EXAMPLE_IDS, example_data
from .io_formats import (
    DEFAULT_SAMPLES,
    MAX_SAMPLES,
    PARAMETRIC_INPUT_SCHEMA,
    SCALAR_INPUT_SCHEMA,
    ParametricInputDocument,
    ScalarInputDocument,
    _document_from_dict,
    parametric_document_violations,
    scalar_document_violations,
    write_json,
)
from .parametric import (
    build_parametric,
    compute_parametric_diagnostics,
    sample_parametric,
)

MAX_CONTROL_POINTS = 100000

SPLINE_REQUEST_SCHEMA = {
    "oneOf": [
        {
            **SCALAR_INPUT_SCHEMA,
            "properties": {
                **SCALAR_INPUT_SCHEMA["properties"],
                "mode": {"const": "scalar"},
            },
        },
        {
            **PARAMETRIC_INPUT_SCHEMA,
            "properties": {
                **PARAMETRIC_INPUT_SCHEMA["properties"],
                "mode": {"const": "parametric"},
            },
        },
    ]
}

SPLINE_RESPONSE_SCHEMA = {
    "type": "object",
    "required": ["mode", "alpha", "phi", "q", "samples", "diagnostics"],
    "properties": {
        "mode": {"enum": ["scalar", "parametric"]},
        "alpha": {"type": "array", "items": {"type": "number"}},
        "strict": {"type": "boolean"},
        "phi": {},
        "q": {},
        "samples": {"type": "array"},
        "diagnostics": {
            "type": "object",
            "properties": {
                "dominance_margins": {"type": "array"},
                "c1_residuals": {"type": "array"},
                "interp_value_residuals": {"type": "array"},
                "interp_slope_residuals": {"type": "array"},
                "hull_margin": {"type": "number"},
            },
        },
    },
}


def _json_response(payload, status_code: int = 200) -> Response:
    return Response(
        content=write_json(payload),
        status_code=status_code,
        media_type="application/json",
    )


def _error_response(status_code: int, errors: list[dict]) -> Response:
    return _json_response({"errors": errors}, status_code=status_code)


def _scalar_samples(curve, count: int) -> np.ndarray:
    if count == 1:
        a, _ = curve.domain
        return np.array([[a, evaluate(curve, a)]])
    return sample_curve(curve, count)


def _parametric_samples(curve, count: int) -> np.ndarray:
    if count == 1:
        a, _ = curve.domain
        x, y = curve(a)
        return np.array([[a, x, y]])
    return sample_parametric(curve, count)


def _diag_payload(diag) -> dict:
    return {
        "dominance_margins": list(diag.dominance_margins),
        "c1_residuals": list(diag.c1_residuals),
        "interp_value_residuals": list(diag.interp_value_residuals),
        "interp_slope_residuals": list(diag.interp_slope_residuals),
        "hull_margin": diag.hull_margin,
    }


def _solve_request(doc) -> dict:
    count = doc.samples if doc.samples is not None else DEFAULT_SAMPLES
    if isinstance(doc, ScalarInputDocument):
        placement = doc.placement()
        curve = build_spline(doc.control(), placement)
        diag = compute_diagnostics(curve, sample_count=max(count, 2))
        return {
            "mode": "scalar",
            "alpha": list(placement.alpha),
            "strict": doc.strict,
            "phi": list(curve.knot_values),
            "q": list(curve.leading_coeffs),
            "domain": list(curve.domain),
            "samples": _scalar_samples(curve, count),
            "diagnostics": _diag_payload(diag),
        }
    placement = doc.placement()
    curve = build_parametric(doc.control(), placement, doc.parameterization)
    diag = compute_parametric_diagnostics(curve, sample_count=max(count, 2))
    return {
        "mode": "parametric",
        "parameterization": doc.parameterization,
        "alpha": list(placement.alpha),
        "strict": doc.strict,
        "t": list(curve.t),
        "phi": {"x": list(curve.sx.knot_values), "y": list(curve.sy.knot_values)},
        "q": {"x": list(curve.sx.leading_coeffs), "y": list(curve.sy.leading_coeffs)},
        "domain": list(curve.domain),
        "samples": _parametric_samples(curve, count),
        "diagnostics": _diag_payload(diag),
    }


def create_app() -> FastAPI:
    app = FastAPI(title="tangentspline", docs_url=None, redoc_url=None)
    origin = os.environ.get("TANGENTSPLINE_CORS_ORIGIN", "*")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[origin],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/healthz", response_class=PlainTextResponse)
    def healthz() -> str:
        return "ok"

    @app.get("/api/v1/schema")
    def schema() -> Response:
        return _json_response(
            {"request": SPLINE_REQUEST_SCHEMA, "response": SPLINE_RESPONSE_SCHEMA}
        )

    @app.get("/api/v1/examples/{example_id}")
    def example(example_id: str) -> Response:
        # anything that is not a known id is a 404, including non-integers
        try:
            eid = int(example_id)
        except ValueError:
            eid = -1
        if eid not in EXAMPLE_IDS:
            return _error_response(
                404,
                [{"pointer": "", "code": "not_found", "message": f"no example {example_id}"}],
            )
        return _json_response({"id": eid, **example_data(eid)})

    @app.post("/api/v1/spline")
    async def spline(request: Request) -> Response:
        body = await request.body()
        try:
            raw = json.loads(body)
        except json.JSONDecodeError as e:
            return _error_response(
                400, [{"pointer": "", "code": "syntax", "message": f"malformed JSON: {e.msg}"}]
            )
        if not isinstance(raw, dict):
            return _error_response(
                400, [{"pointer": "", "code": "schema", "message": "body must be a JSON object"}]
            )

        mode = raw.get("mode")
        has_points = "points" in raw
        if mode is None:
            mode = "parametric" if has_points else "scalar"
        if mode not in ("scalar", "parametric"):
            return _error_response(
                422,
                [{"pointer": "/mode", "code": "range",
                  "message": f"mode must be 'scalar' or 'parametric', got {mode!r}"}],
            )
        if mode == "scalar" and has_points:
            return _error_response(
                422,
                [{"pointer": "/mode", "code": "schema",
                  "message": "scalar mode expects tau/F arrays, not points"}],
            )
        if mode == "parametric" and not has_points:
            return _error_response(
                422,
                [{"pointer": "/points", "code": "schema",
                  "message": "parametric mode requires a points array"}],
            )

        n = len(raw.get("points") or raw.get("tau") or [])
        if n > MAX_CONTROL_POINTS:
            return _error_response(
                413,
                [{"pointer": "/points" if has_points else "/tau", "code": "size",
                  "message": f"{n} control points exceed the cap of {MAX_CONTROL_POINTS}"}],
            )

        if mode == "scalar":
            violations = scalar_document_violations(raw)
        else:
            violations = parametric_document_violations(raw)
        if violations:
            return _error_response(422, [v.__dict__ for v in violations])

        doc = _document_from_dict(raw)
        try:
            payload = _solve_request(doc)
        except (DomainError, SingularSystemError) as e:
            code = "singular" if isinstance(e, SingularSystemError) else "domain"
            return _error_response(422, [{"pointer": "", "code": code, "message": str(e)}])
        return _json_response(payload)

    return app


app = create_app()


def run() -> None:
    import uvicorn

    uvicorn.run(
        app,
        host=os.environ.get("TANGENTSPLINE_HOST", "127.0.0.1"),
        port=int(os.environ.get("TANGENTSPLINE_PORT", "8602")),
        log_level="warning",
    )


if __name__ == "__main__":
    run()
