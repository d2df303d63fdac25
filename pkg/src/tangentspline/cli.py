"""Command-line front end: build curves, emit samples, figures, diagnostics.

Exit codes: 0 success, 2 invalid input or arguments, 3 I/O failure.
``-`` stands for stdin on ``--input`` and stdout on ``--output``.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .core import (
    DomainError,
    SingularSystemError,
    build_spline,
    compute_diagnostics,
    sample_curve,
)
from .datasets import EXAMPLE_IDS, example_data
from .io_formats import (
    DEFAULT_SAMPLES,
    InputDocument,
    ParametricInputDocument,
    ParseError,
    ScalarInputDocument,
    format_number,
    parse_input,
    write_json,
    write_samples,
    write_svg,
)
from .parametric import (
    build_parametric,
    compute_parametric_diagnostics,
    sample_parametric,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tangentspline",
        description="C1 cubic spline curves tangent to their control polygon.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_source(p):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--input", metavar="PATH", help="input document ('-' = stdin)")
        src.add_argument(
            "--example", type=int, metavar="ID", choices=EXAMPLE_IDS,
            help="built-in dataset id (1 or 2)",
        )
        p.add_argument(
            "--input-format", choices=("json", "csv"),
            help="input format (default: by file extension, else json)",
        )
        p.add_argument(
            "--alpha", metavar="A[,A...]",
            help="node ratio override: one value or a per-interval list",
        )
        p.add_argument(
            "--no-strict", action="store_true",
            help="allow ratios outside [1/3, 2/3] (no solvability guarantee)",
        )

    def add_output(p):
        p.add_argument("--output", metavar="PATH", default="-", help="output ('-' = stdout)")

    p_build = sub.add_parser("build", help="solve the curve and emit its data as JSON")
    add_source(p_build)
    add_output(p_build)

    p_sample = sub.add_parser("sample", help="emit curve samples")
    add_source(p_sample)
    add_output(p_sample)
    p_sample.add_argument("--count", type=int, default=DEFAULT_SAMPLES)
    p_sample.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sample.add_argument(
        "--include-nodes", action="store_true",
        help="merge knots and interior nodes into the sample grid (scalar only)",
    )

    p_svg = sub.add_parser("svg", help="emit an SVG figure")
    add_source(p_svg)
    add_output(p_svg)
    p_svg.add_argument("--count", type=int, default=DEFAULT_SAMPLES)

    p_check = sub.add_parser("check", help="print numerical diagnostics")
    add_source(p_check)
    p_check.add_argument("--count", type=int, default=DEFAULT_SAMPLES)

    p_ex = sub.add_parser("example", help="work with a built-in dataset")
    p_ex.add_argument("id", type=int, choices=EXAMPLE_IDS)
    what = p_ex.add_mutually_exclusive_group()
    what.add_argument("--svg", metavar="PATH", help="write the dataset's figure")
    what.add_argument("--samples", metavar="PATH", help="write the dataset's samples (CSV)")
    what.add_argument("--check", action="store_true", help="print diagnostics")
    p_ex.add_argument("--count", type=int, default=DEFAULT_SAMPLES)

    return parser


def _parse_alpha(text: str | None):
    if text is None:
        return None
    parts = [p for p in text.split(",") if p]
    try:
        values = [float(p) for p in parts]
    except ValueError:
        raise ParseError("syntax", f"cannot parse --alpha value {text!r}")
    if not values:
        raise ParseError("syntax", "--alpha needs at least one value")
    return values[0] if len(values) == 1 else tuple(values)


def _load_document(args) -> InputDocument:
    if args.example is not None:
        d = example_data(args.example)
        doc = ScalarInputDocument(tau=tuple(d["tau"]), F=tuple(d["F"]))
    else:
        fmt = args.input_format
        if fmt is None:
            fmt = "csv" if args.input.endswith(".csv") else "json"
        if args.input == "-":
            data = sys.stdin.buffer.read()
        else:
            data = Path(args.input).read_bytes()
        doc = parse_input(data, fmt)
    alpha = _parse_alpha(args.alpha)
    if alpha is not None or args.no_strict:
        kwargs = {
            "alpha": alpha if alpha is not None else doc.alpha,
            "strict": doc.strict and not args.no_strict,
        }
        if isinstance(doc, ScalarInputDocument):
            doc = ScalarInputDocument(tau=doc.tau, F=doc.F, samples=doc.samples, **kwargs)
        else:
            doc = ParametricInputDocument(
                points=doc.points,
                parameterization=doc.parameterization,
                samples=doc.samples,
                **kwargs,
            )
    return doc


def _emit(args, data: bytes) -> None:
    if args.output == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(args.output).write_bytes(data)


def _curve_and_samples(doc: InputDocument, count: int, include_nodes: bool = False):
    if isinstance(doc, ScalarInputDocument):
        curve = build_spline(doc.control(), doc.placement())
        samples = sample_curve(curve, count, include_nodes=include_nodes)
        control_xy = np.column_stack([curve.grids.tau, curve.grids.values])
        return curve, samples, control_xy
    curve = build_parametric(doc.control(), doc.placement(), doc.parameterization)
    samples = sample_parametric(curve, count)
    return curve, samples, doc.control().points


def _build_payload(doc: InputDocument) -> dict:
    if isinstance(doc, ScalarInputDocument):
        curve = build_spline(doc.control(), doc.placement())
        diag = compute_diagnostics(curve)
        return {
            "mode": "scalar",
            "tau": list(curve.grids.tau),
            "F": list(curve.grids.values),
            "alpha": list(doc.placement().alpha),
            "strict": doc.strict,
            "phi": list(curve.knot_values),
            "q": list(curve.leading_coeffs),
            "domain": list(curve.domain),
            "diagnostics": _diag_payload(diag),
        }
    curve = build_parametric(doc.control(), doc.placement(), doc.parameterization)
    diag = compute_parametric_diagnostics(curve)
    return {
        "mode": "parametric",
        "points": [list(p) for p in doc.points],
        "parameterization": doc.parameterization,
        "t": list(curve.t),
        "alpha": list(doc.placement().alpha),
        "strict": doc.strict,
        "phi": {"x": list(curve.sx.knot_values), "y": list(curve.sy.knot_values)},
        "q": {"x": list(curve.sx.leading_coeffs), "y": list(curve.sy.leading_coeffs)},
        "domain": list(curve.domain),
        "diagnostics": _diag_payload(diag),
    }


def _diag_payload(diag) -> dict:
    return {
        "dominance_margins": list(diag.dominance_margins),
        "c1_residuals": list(diag.c1_residuals),
        "interp_value_residuals": list(diag.interp_value_residuals),
        "interp_slope_residuals": list(diag.interp_slope_residuals),
        "hull_margin": diag.hull_margin,
    }


def _print_check(doc: InputDocument, count: int) -> None:
    if isinstance(doc, ScalarInputDocument):
        curve = build_spline(doc.control(), doc.placement())
        diag = compute_diagnostics(curve, sample_count=max(count, 2))
    else:
        curve = build_parametric(doc.control(), doc.placement(), doc.parameterization)
        diag = compute_parametric_diagnostics(curve, sample_count=max(count, 2))
    f = format_number
    margins = diag.dominance_margins
    out = [
        f"interior rows: {margins.size}",
        "dominance margin min: "
        + (f(np.min(margins)) if margins.size else "n/a (no interior rows)"),
        "c1 residual max: " + (f(np.max(diag.c1_residuals)) if diag.c1_residuals.size else "0"),
        "interp value residual max: " + f(np.max(diag.interp_value_residuals)),
        "interp slope residual max: " + f(np.max(diag.interp_slope_residuals)),
        "hull margin: " + f(diag.hull_margin),
    ]
    sys.stdout.write("\n".join(out) + "\n")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "example":
            d = example_data(args.id)
            doc = ScalarInputDocument(tau=tuple(d["tau"]), F=tuple(d["F"]))
            if args.svg:
                _, samples, control_xy = _curve_and_samples(doc, args.count)
                args.output = args.svg
                _emit(args, write_svg(control_xy, samples))
            elif args.samples:
                _, samples, _ = _curve_and_samples(doc, args.count)
                args.output = args.samples
                _emit(args, write_samples(samples, "csv"))
            elif args.check:
                _print_check(doc, args.count)
            else:
                args.output = "-"
                _emit(args, write_json(d))
            return 0

        doc = _load_document(args)
        if args.command == "build":
            _emit(args, write_json(_build_payload(doc)))
        elif args.command == "sample":
            include = getattr(args, "include_nodes", False)
            if include and not isinstance(doc, ScalarInputDocument):
                raise DomainError("--include-nodes applies to scalar input only")
            _, samples, _ = _curve_and_samples(doc, args.count, include_nodes=include)
            _emit(args, write_samples(samples, args.format))
        elif args.command == "svg":
            _, samples, control_xy = _curve_and_samples(doc, args.count)
            _emit(args, write_svg(control_xy, samples))
        elif args.command == "check":
            _print_check(doc, args.count)
        return 0
    except (ParseError, DomainError, SingularSystemError, KeyError) as e:
        msg = str(e.args[0]) if isinstance(e, KeyError) else str(e)
        sys.stderr.write(f"error: {msg}\n")
        return 2
    except OSError as e:
        sys.stderr.write(f"i/o error: {e}\n")
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
