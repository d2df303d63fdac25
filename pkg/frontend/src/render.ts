import type { EditorState } from "./state.js";
import { chordTangencyPoints, nodePositions } from "./state.js";
import { worldToScreen, type ViewTransform } from "./transform.js";
import type { Point, SplineResponse } from "./types.js";

/** The slice of CanvasRenderingContext2D the scene painter needs. */
export interface Scene2D {
  clearRect(x: number, y: number, w: number, h: number): void;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  closePath(): void;
  arc(x: number, y: number, r: number, a0: number, a1: number): void;
  stroke(): void;
  fill(): void;
  setLineDash(segments: number[]): void;
  strokeStyle: string | CanvasGradient | CanvasPattern;
  fillStyle: string | CanvasGradient | CanvasPattern;
  lineWidth: number;
}

export const DOT_RADIUS = 6;

export function curvePoints(response: SplineResponse): Point[] {
  if (response.mode === "scalar") {
    return response.samples.map(([x, y]) => ({ x, y }));
  }
  return response.samples.map(([, x, y]) => ({ x, y }));
}

/** Counter-clockwise hull of the control points (monotone chain). */
export function convexHull(points: Point[]): Point[] {
  const pts = [...points].sort((a, b) => a.x - b.x || a.y - b.y);
  if (pts.length < 3) return pts;
  const cross = (o: Point, a: Point, b: Point) =>
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  const half = (input: Point[]) => {
    const chain: Point[] = [];
    for (const p of input) {
      while (chain.length >= 2 && cross(chain[chain.length - 2], chain[chain.length - 1], p) <= 0)
        chain.pop();
      chain.push(p);
    }
    chain.pop();
    return chain;
  };
  return [...half(pts), ...half(pts.reverse())];
}

function polyline(ctx: Scene2D, pts: Point[], view: ViewTransform, close = false): void {
  ctx.beginPath();
  pts.forEach((p, i) => {
    const s = worldToScreen(p, view);
    if (i === 0) ctx.moveTo(s.x, s.y);
    else ctx.lineTo(s.x, s.y);
  });
  if (close) ctx.closePath();
}

function dot(ctx: Scene2D, p: Point, view: ViewTransform, r: number): void {
  const s = worldToScreen(p, view);
  ctx.beginPath();
  ctx.arc(s.x, s.y, r, 0, Math.PI * 2);
}

/**
 * Paint the whole scene: optional hull shading, dashed control polygon,
 * solid curve from the latest response, node/tangency markers, and the
 * draggable control dots on top.
 */
export function renderScene(
  ctx: Scene2D,
  state: EditorState,
  view: ViewTransform,
  width: number,
  height: number,
): void {
  ctx.clearRect(0, 0, width, height);
  const pts = state.points;
  if (pts.length === 0) return;

  if (state.overlays.hull && pts.length >= 3) {
    const hull = convexHull(pts);
    if (hull.length >= 3) {
      polyline(ctx, hull, view, true);
      ctx.fillStyle = "rgba(37, 99, 235, 0.08)";
      ctx.fill();
      ctx.setLineDash([]);
      ctx.strokeStyle = "rgba(37, 99, 235, 0.35)";
      ctx.lineWidth = 1;
      ctx.stroke();
    }
  }

  if (state.overlays.polygon && pts.length >= 2) {
    polyline(ctx, pts, view);
    ctx.setLineDash([6, 4]);
    ctx.strokeStyle = "#9ca3af";
    ctx.lineWidth = 1.5;
    ctx.stroke();
    ctx.setLineDash([]);
  }

  if (state.response) {
    const curve = curvePoints(state.response);
    if (curve.length >= 2) {
      polyline(ctx, curve, view);
      ctx.setLineDash([]);
      ctx.strokeStyle = "#111827";
      ctx.lineWidth = 2.25;
      ctx.stroke();
    }
  }

  const markers = state.mode === "scalar" ? nodePositions(state) : chordTangencyPoints(state);
  if (state.overlays.nodes) {
    ctx.strokeStyle = "#b45309";
    ctx.lineWidth = 1.25;
    for (const m of markers) {
      dot(ctx, m, view, 3.5);
      ctx.stroke();
    }
  }
  if (state.overlays.tangency) {
    // short stroke along the chord: the curve is tangent to it here
    ctx.strokeStyle = "#b45309";
    ctx.lineWidth = 1.25;
    markers.forEach((m, j) => {
      const a = pts[j];
      const b = pts[j + 1];
      const len = Math.hypot(b.x - a.x, b.y - a.y) || 1;
      const ux = (b.x - a.x) / len;
      const uy = (b.y - a.y) / len;
      const reach = 14 / view.scale;
      polyline(
        ctx,
        [
          { x: m.x - ux * reach, y: m.y - uy * reach },
          { x: m.x + ux * reach, y: m.y + uy * reach },
        ],
        view,
      );
      ctx.stroke();
    });
  }

  ctx.fillStyle = "#1d4ed8";
  for (const p of pts) {
    dot(ctx, p, view, DOT_RADIUS);
    ctx.fill();
  }
}

/** One-line health summary for the diagnostics panel. */
export function diagnosticsSummary(response: SplineResponse | null): string {
  if (!response) return "no curve yet";
  const d = response.diagnostics;
  const margin = d.dominance_margins.length ? Math.min(...d.dominance_margins) : NaN;
  const c1 = d.c1_residuals.length ? Math.max(...d.c1_residuals) : 0;
  const parts = [
    Number.isNaN(margin) ? "no interior rows" : `dominance margin min ${margin.toPrecision(3)}`,
    `max C1 residual ${c1.toExponential(2)}`,
    `hull margin ${d.hull_margin.toExponential(2)}`,
  ];
  return parts.join("  |  ");
}
