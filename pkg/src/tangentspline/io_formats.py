"""Parsing and serialization: input documents, sample tables, SVG figures.

Wire conventions: JSON documents use the keys ``tau``/``F`` for scalar
data and ``points`` for planar data; CSV is comma-separated with ``.``
decimals, LF line endings, and a mandatory header row on output (an
optional one on input).  All writers are deterministic byte-for-byte
and serialize numbers with the shortest representation that round-trips
a 64-bit float.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Any, Union

import numpy as np

from .core import (
    ALPHA_MAX,
    ALPHA_MIN,
    ControlPolygon,
    NodePlacement,
)
from .parametric import PlanarControlPoints

DEFAULT_ALPHA = 0.5
DEFAULT_SAMPLES = 1000
MAX_SAMPLES = 100000


class ParseError(ValueError):
    """Structured input error with a machine-readable code and location."""

    def __init__(
        self,
        code: str,
        message: str,
        line: int | None = None,
        pointer: str | None = None,
    ):
        self.code = code
        self.line = line
        self.pointer = pointer
        where = ""
        if line is not None:
            where = f" (line {line})"
        elif pointer:
            where = f" (at {pointer})"
        super().__init__(f"{message}{where}")


@dataclass(frozen=True)
class Violation:
    """One violated input rule, addressed by a JSON pointer."""

    pointer: str
    code: str
    message: str


@dataclass(frozen=True)
class ScalarInputDocument:
    tau: tuple
    F: tuple
    alpha: Union[tuple, float, None] = None
    strict: bool = True
    samples: int | None = None

    def control(self) -> ControlPolygon:
        return ControlPolygon(np.array(self.tau), np.array(self.F))

    def placement(self) -> NodePlacement:
        return _placement(self.alpha, len(self.tau) - 1, self.strict)


@dataclass(frozen=True)
class ParametricInputDocument:
    points: tuple
    alpha: Union[tuple, float, None] = None
    parameterization: str = "chord"
    strict: bool = True
    samples: int | None = None

    def control(self) -> PlanarControlPoints:
        return PlanarControlPoints(np.array(self.points))

    def placement(self) -> NodePlacement:
        return _placement(self.alpha, len(self.points) - 1, self.strict)


InputDocument = Union[ScalarInputDocument, ParametricInputDocument]


def _placement(alpha, intervals: int, strict: bool) -> NodePlacement:
    if alpha is None:
        return NodePlacement.constant(DEFAULT_ALPHA, intervals, strict=strict)
    if isinstance(alpha, (int, float)):
        return NodePlacement.constant(float(alpha), intervals, strict=strict)
    return NodePlacement(np.array(alpha, dtype=float), strict=strict)


def format_number(v: float) -> str:
    """Shortest decimal that parses back to the same 64-bit float."""
    v = float(v)
    if v == 0.0:
        return "-0.0" if math.copysign(1.0, v) < 0 else "0"
    if v == int(v) and abs(v) < 1e16:
        return str(int(v))
    return repr(v)


# ---------------------------------------------------------------------------
# validation shared by parse_input (fail-fast) and the HTTP layer (collect-all)

def _is_number(v) -> bool:
    return isinstance(v, (int, float)) and not isinstance(v, bool)


def _number_list_violations(values, pointer: str) -> list[Violation]:
    out = []
    if not isinstance(values, (list, tuple)):
        return [Violation(pointer, "type", f"{pointer or '/'} must be an array of numbers")]
    for i, v in enumerate(values):
        if not _is_number(v):
            out.append(Violation(f"{pointer}/{i}", "type", f"{pointer}/{i} is not a number"))
        elif not math.isfinite(v):
            out.append(Violation(f"{pointer}/{i}", "non_finite", f"{pointer}/{i} is not finite"))
    return out


def _alpha_violations(alpha, intervals: int, strict: bool) -> list[Violation]:
    if alpha is None:
        return []
    if _is_number(alpha):
        entries = [(None, float(alpha))]
        if not math.isfinite(alpha):
            return [Violation("/alpha", "non_finite", "/alpha is not finite")]
    else:
        bad = _number_list_violations(alpha, "/alpha")
        if bad:
            return bad
        if len(alpha) != intervals:
            return [
                Violation(
                    "/alpha",
                    "arity",
                    f"/alpha has {len(alpha)} entries, expected {intervals}",
                )
            ]
        entries = list(enumerate(alpha))
    out = []
    for i, v in entries:
        ptr = "/alpha" if i is None else f"/alpha/{i}"
        label = "alpha" if i is None else f"alpha[{i}]"
        if not 0.0 < v < 1.0:
            out.append(Violation(ptr, "range", f"{label}={v:g} outside (0, 1)"))
        elif strict and not ALPHA_MIN <= v <= ALPHA_MAX:
            out.append(
                Violation(ptr, "strict_range", f"{label}={v:g} outside [1/3, 2/3]")
            )
    return out


def _samples_violations(samples) -> list[Violation]:
    if samples is None:
        return []
    if not isinstance(samples, int) or isinstance(samples, bool):
        return [Violation("/samples", "type", "/samples must be an integer")]
    if not 1 <= samples <= MAX_SAMPLES:
        return [
            Violation(
                "/samples", "range", f"samples={samples} outside [1, {MAX_SAMPLES}]"
            )
        ]
    return []


def scalar_document_violations(raw: dict) -> list[Violation]:
    """Every violated rule for a scalar input document."""
    out = []
    tau, values = raw.get("tau"), raw.get("F")
    for key, arr in (("tau", tau), ("F", values)):
        if arr is None:
            out.append(Violation(f"/{key}", "schema", f"missing required field {key}"))
        else:
            out.extend(_number_list_violations(arr, f"/{key}"))
    if out:
        return out
    if len(tau) != len(values):
        out.append(
            Violation("/F", "arity", f"tau and F lengths differ: {len(tau)} vs {len(values)}")
        )
    if len(tau) < 2:
        out.append(Violation("/tau", "arity", "need at least 2 control points"))
    for i in range(1, len(tau)):
        if tau[i] <= tau[i - 1]:
            out.append(
                Violation(
                    f"/tau/{i}",
                    "non_increasing",
                    f"tau must be strictly increasing (tau[{i}] <= tau[{i - 1}])",
                )
            )
    strict = raw.get("strict", True)
    if not isinstance(strict, bool):
        out.append(Violation("/strict", "type", "/strict must be a boolean"))
        strict = True
    out.extend(_alpha_violations(raw.get("alpha"), max(len(tau) - 1, 0), strict))
    out.extend(_samples_violations(raw.get("samples")))
    return out


def parametric_document_violations(raw: dict) -> list[Violation]:
    """Every violated rule for a planar input document."""
    out = []
    points = raw.get("points")
    if points is None:
        return [Violation("/points", "schema", "missing required field points")]
    if not isinstance(points, (list, tuple)):
        return [Violation("/points", "type", "/points must be an array of [x, y] pairs")]
    for i, p in enumerate(points):
        if (
            not isinstance(p, (list, tuple))
            or len(p) != 2
            or not all(_is_number(v) for v in p)
        ):
            out.append(
                Violation(f"/points/{i}", "type", f"points[{i}] is not an [x, y] number pair")
            )
        elif not all(math.isfinite(v) for v in p):
            out.append(Violation(f"/points/{i}", "non_finite", f"points[{i}] is not finite"))
    if out:
        return out
    if len(points) < 2:
        out.append(Violation("/points", "arity", "need at least 2 control points"))
    for i in range(1, len(points)):
        if points[i][0] == points[i - 1][0] and points[i][1] == points[i - 1][1]:
            out.append(
                Violation(
                    f"/points/{i}",
                    "coincident",
                    f"points {i - 1} and {i} coincide",
                )
            )
    kind = raw.get("parameterization", "chord")
    if kind not in ("chord", "uniform"):
        out.append(
            Violation(
                "/parameterization",
                "range",
                f"parameterization must be 'chord' or 'uniform', got {kind!r}",
            )
        )
    strict = raw.get("strict", True)
    if not isinstance(strict, bool):
        out.append(Violation("/strict", "type", "/strict must be a boolean"))
        strict = True
    out.extend(_alpha_violations(raw.get("alpha"), max(len(points) - 1, 0), strict))
    out.extend(_samples_violations(raw.get("samples")))
    return out


def _document_from_dict(raw: Any) -> InputDocument:
    if not isinstance(raw, dict):
        raise ParseError("schema", "document must be a JSON object")
    if "points" in raw:
        violations = parametric_document_violations(raw)
        if violations:
            v = violations[0]
            raise ParseError(v.code, v.message, pointer=v.pointer)
        return ParametricInputDocument(
            points=tuple(tuple(float(c) for c in p) for p in raw["points"]),
            alpha=_freeze_alpha(raw.get("alpha")),
            parameterization=raw.get("parameterization", "chord"),
            strict=raw.get("strict", True),
            samples=raw.get("samples"),
        )
    if "tau" in raw or "F" in raw:
        violations = scalar_document_violations(raw)
        if violations:
            v = violations[0]
            raise ParseError(v.code, v.message, pointer=v.pointer)
        return ScalarInputDocument(
            tau=tuple(float(v) for v in raw["tau"]),
            F=tuple(float(v) for v in raw["F"]),
            alpha=_freeze_alpha(raw.get("alpha")),
            strict=raw.get("strict", True),
            samples=raw.get("samples"),
        )
    raise ParseError("schema", "document needs either tau/F arrays or a points array")


def _freeze_alpha(alpha):
    if alpha is None or _is_number(alpha):
        return None if alpha is None else float(alpha)
    return tuple(float(v) for v in alpha)


def parse_input(data: bytes | str, fmt: str = "json") -> InputDocument:
    """Parse an input document; raises :class:`ParseError` on the first problem."""
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError("syntax", f"input is not valid UTF-8: {e}") from e
    else:
        text = data
    if fmt == "json":
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError("syntax", f"malformed JSON: {e.msg}", line=e.lineno) from e
        return _document_from_dict(raw)
    if fmt == "csv":
        return _parse_csv(text)
    raise ParseError("schema", f"unknown input format {fmt!r}")


def _parse_csv(text: str) -> ScalarInputDocument:
    rows = []
    lines = text.split("\n")
    for lineno, line in enumerate(lines, start=1):
        line = line.rstrip("\r")
        if not line:
            continue
        fields = line.split(",")
        values = []
        numeric = True
        for f in fields:
            try:
                values.append(float(f))
            except ValueError:
                numeric = False
                break
        if not numeric:
            if lineno == 1:
                continue  # header row
            raise ParseError("syntax", f"cannot parse number {f!r}", line=lineno)
        if len(fields) != 2:
            raise ParseError(
                "arity", f"expected 2 columns, found {len(fields)}", line=lineno
            )
        rows.append((lineno, values))
    if len(rows) < 2:
        raise ParseError("arity", "need at least 2 control points")
    tau = [v[0] for _, v in rows]
    values = [v[1] for _, v in rows]
    for k, (lineno, _) in enumerate(rows):
        if not (math.isfinite(tau[k]) and math.isfinite(values[k])):
            raise ParseError("non_finite", "control points must be finite", line=lineno)
        if k > 0 and tau[k] <= tau[k - 1]:
            raise ParseError(
                "non_increasing",
                f"tau must be strictly increasing (tau[{k}] <= tau[{k - 1}])",
                line=lineno,
            )
    return ScalarInputDocument(tau=tuple(tau), F=tuple(values))


def write_input(doc: InputDocument, fmt: str = "json") -> bytes:
    """Serialize a document so that ``parse_input`` reproduces it."""
    if fmt == "json":
        if isinstance(doc, ScalarInputDocument):
            payload: dict[str, Any] = {"tau": list(doc.tau), "F": list(doc.F)}
        else:
            payload = {
                "points": [list(p) for p in doc.points],
                "parameterization": doc.parameterization,
            }
        if doc.alpha is not None:
            payload["alpha"] = list(doc.alpha) if isinstance(doc.alpha, tuple) else doc.alpha
        if not doc.strict:
            payload["strict"] = False
        if doc.samples is not None:
            payload["samples"] = doc.samples
        return write_json(payload)
    if fmt == "csv":
        if not isinstance(doc, ScalarInputDocument):
            raise ParseError("schema", "CSV documents are scalar only")
        lines = ["tau,F"]
        lines += [
            f"{format_number(t)},{format_number(v)}" for t, v in zip(doc.tau, doc.F)
        ]
        return ("\n".join(lines) + "\n").encode()
    raise ParseError("schema", f"unknown output format {fmt!r}")


def write_json(payload: Any) -> bytes:
    """Deterministic JSON bytes with round-trip number formatting."""
    return _json_render(payload).encode()


def _json_render(v: Any) -> str:
    if isinstance(v, dict):
        items = (f"{json.dumps(k)}:{_json_render(x)}" for k, x in v.items())
        return "{" + ",".join(items) + "}"
    if isinstance(v, (list, tuple)) or isinstance(v, np.ndarray):
        return "[" + ",".join(_json_render(x) for x in v) + "]"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format_number(float(v))
    return json.dumps(v)


def write_samples(samples: np.ndarray, fmt: str = "csv") -> bytes:
    """Serialize a sample table; columns are ``x,y`` or ``t,x,y``."""
    samples = np.atleast_2d(np.asarray(samples, dtype=float))
    if samples.size == 0:
        raise ParseError("arity", "samples must be non-empty")
    if samples.shape[1] not in (2, 3):
        raise ParseError("arity", f"samples must have 2 or 3 columns, got {samples.shape[1]}")
    if fmt == "csv":
        header = "x,y" if samples.shape[1] == 2 else "t,x,y"
        lines = [header]
        lines += [",".join(format_number(v) for v in row) for row in samples]
        return ("\n".join(lines) + "\n").encode()
    if fmt == "json":
        return write_json(samples)
    raise ParseError("schema", f"unknown output format {fmt!r}")


def parse_samples(data: bytes | str, fmt: str = "csv") -> np.ndarray:
    """Inverse of :func:`write_samples`."""
    text = data.decode() if isinstance(data, bytes) else data
    if fmt == "json":
        return np.asarray(json.loads(text), dtype=float)
    rows = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        line = line.rstrip("\r")
        if not line:
            continue
        fields = line.split(",")
        try:
            rows.append([float(f) for f in fields])
        except ValueError:
            if lineno == 1:
                continue
            raise ParseError("syntax", f"cannot parse row {line!r}", line=lineno)
    return np.asarray(rows, dtype=float)


# ---------------------------------------------------------------------------
# SVG

@dataclass(frozen=True)
class SvgOptions:
    """Relative styling knobs for the figure writer."""

    margin: float = 0.05
    curve_width: float = 1 / 200
    polygon_width: float = 1 / 300
    dot_radius: float = 1 / 100


def write_svg(
    control_points: np.ndarray,
    samples: np.ndarray,
    options: SvgOptions = SvgOptions(),
) -> bytes:
    """Figure bytes: control dots, dashed control polygon, solid curve.

    The view box fits the data with a proportional margin; ordinates are
    negated on output so that mathematically up is rendered up.
    """
    control_points = np.atleast_2d(np.asarray(control_points, dtype=float))
    samples = np.atleast_2d(np.asarray(samples, dtype=float))
    if control_points.shape[0] < 2 or samples.shape[0] < 2:
        raise ParseError("arity", "need at least 2 control points and 2 samples")
    if samples.shape[1] == 3:  # (t, x, y) rows from a planar curve
        samples = samples[:, 1:]

    pts = np.vstack([control_points, samples])
    xmin, ymin = pts.min(axis=0)
    xmax, ymax = pts.max(axis=0)
    span_x, span_y = xmax - xmin, ymax - ymin
    size = max(span_x, span_y, 1e-9)
    pad_x = options.margin * (span_x if span_x > 0 else size)
    pad_y = options.margin * (span_y if span_y > 0 else size)

    f = format_number
    view = (
        f"{f(xmin - pad_x)} {f(-(ymax + pad_y))} "
        f"{f(span_x + 2 * pad_x)} {f(span_y + 2 * pad_y)}"
    )
    curve_w = f(size * options.curve_width)
    poly_w = f(size * options.polygon_width)
    dot_r = f(size * options.dot_radius)
    dash = f"{f(size / 50)} {f(size / 100)}"

    poly_pts = " ".join(f"{f(x)},{f(-y)}" for x, y in control_points)
    path = "M" + " L".join(f"{f(x)} {f(-y)}" for x, y in samples)
    dots = "".join(
        f'<circle cx="{f(x)}" cy="{f(-y)}" r="{dot_r}" fill="black"/>'
        for x, y in control_points
    )

    body = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{view}">\n'
        f'<polyline points="{poly_pts}" fill="none" stroke="black" '
        f'stroke-width="{poly_w}" stroke-dasharray="{dash}"/>\n'
        f'<path d="{path}" fill="none" stroke="black" stroke-width="{curve_w}"/>\n'
        f"{dots}\n"
        "</svg>\n"
    )
    return body.encode()


# ---------------------------------------------------------------------------
# published JSON schemas

SCALAR_INPUT_SCHEMA = {
    "type": "object",
    "required": ["tau", "F"],
    "properties": {
        "tau": {"type": "array", "items": {"type": "number"}, "minItems": 2},
        "F": {"type": "array", "items": {"type": "number"}, "minItems": 2},
        "alpha": {
            "oneOf": [
                {"type": "number", "exclusiveMinimum": 0, "exclusiveMaximum": 1},
                {"type": "array", "items": {"type": "number"}},
            ]
        },
        "strict": {"type": "boolean", "default": True},
        "samples": {"type": "integer", "minimum": 1, "maximum": MAX_SAMPLES},
    },
}

PARAMETRIC_INPUT_SCHEMA = {
    "type": "object",
    "required": ["points"],
    "properties": {
        "points": {
            "type": "array",
            "minItems": 2,
            "items": {
                "type": "array",
                "items": {"type": "number"},
                "minItems": 2,
                "maxItems": 2,
            },
        },
        "alpha": SCALAR_INPUT_SCHEMA["properties"]["alpha"],
        "parameterization": {"enum": ["chord", "uniform"], "default": "chord"},
        "strict": {"type": "boolean", "default": True},
        "samples": {"type": "integer", "minimum": 1, "maximum": MAX_SAMPLES},
    },
}
