import type {
  Mode,
  Parameterization,
  Point,
  ScalarRequest,
  ParametricRequest,
  SplineRequest,
  SplineResponse,
} from "./types.js";

export const ALPHA_MIN = 1 / 3;
export const ALPHA_MAX = 2 / 3;

/** Fraction of the abscissa span kept between neighbours while dragging. */
const MIN_SEPARATION_FRACTION = 1e-6;

export interface Overlays {
  hull: boolean;
  polygon: boolean;
  tangency: boolean;
  nodes: boolean;
}

export interface EditorState {
  mode: Mode;
  parameterization: Parameterization;
  points: Point[];
  alpha: number[]; // one ratio per interval
  strict: boolean;
  lockAbscissae: boolean;
  overlays: Overlays;
  sampleCount: number;
  response: SplineResponse | null;
  /** id of the newest request sent; only its response may be applied */
  latestRequestId: number;
  pending: boolean;
  error: string | null;
}

export function initialState(): EditorState {
  return {
    mode: "scalar",
    parameterization: "chord",
    points: [],
    alpha: [],
    strict: true,
    lockAbscissae: false,
    overlays: { hull: true, polygon: true, tangency: true, nodes: true },
    sampleCount: 600,
    response: null,
    latestRequestId: 0,
    pending: false,
    error: null,
  };
}

export function clampAlpha(value: number, strict: boolean): number {
  const lo = strict ? ALPHA_MIN : 0.01;
  const hi = strict ? ALPHA_MAX : 0.99;
  return Math.min(hi, Math.max(lo, value));
}

export function loadPoints(state: EditorState, points: Point[], mode: Mode): EditorState {
  const alpha = new Array(Math.max(points.length - 1, 0)).fill(0.5);
  return { ...state, mode, points, alpha, response: null, error: null };
}

/**
 * Clamp a dragged position so the control list stays valid: scalar
 * abscissae remain strictly increasing (pinned between the neighbours),
 * parametric points never coincide with a neighbour.
 */
export function clampDrag(state: EditorState, index: number, pos: Point): Point {
  const pts = state.points;
  if (index < 0 || index >= pts.length) throw new Error(`no control point ${index}`);
  if (state.mode === "scalar") {
    const span = pts.length > 1 ? pts[pts.length - 1].x - pts[0].x : 1;
    const eps = Math.max(span * MIN_SEPARATION_FRACTION, Number.EPSILON);
    let x = state.lockAbscissae ? pts[index].x : pos.x;
    if (index > 0) x = Math.max(x, pts[index - 1].x + eps);
    if (index < pts.length - 1) x = Math.min(x, pts[index + 1].x - eps);
    return { x, y: pos.y };
  }
  let { x, y } = pos;
  for (const nb of [pts[index - 1], pts[index + 1]]) {
    if (nb && nb.x === x && nb.y === y) x += Math.max(Math.abs(x), 1) * 1e-9;
  }
  return { x, y };
}

export function applyDrag(state: EditorState, index: number, pos: Point): EditorState {
  const clamped = clampDrag(state, index, pos);
  const points = state.points.slice();
  points[index] = clamped;
  return { ...state, points };
}

export function setGlobalAlpha(state: EditorState, value: number): EditorState {
  const a = clampAlpha(value, state.strict);
  return { ...state, alpha: state.alpha.map(() => a) };
}

export function setIntervalAlpha(state: EditorState, index: number, value: number): EditorState {
  const alpha = state.alpha.slice();
  alpha[index] = clampAlpha(value, state.strict);
  return { ...state, alpha };
}

export function setStrict(state: EditorState, strict: boolean): EditorState {
  const alpha = strict ? state.alpha.map((a) => clampAlpha(a, true)) : state.alpha.slice();
  return { ...state, strict, alpha };
}

export function toggleOverlay(state: EditorState, key: keyof Overlays): EditorState {
  return { ...state, overlays: { ...state.overlays, [key]: !state.overlays[key] } };
}

/**
 * The request for the exact current state.  With strict mode on every
 * ratio is clamped into [1/3, 2/3] first, so an out-of-range request
 * can never leave the editor.
 */
export function buildRequest(state: EditorState): SplineRequest {
  const alpha = state.alpha.map((a) => clampAlpha(a, state.strict));
  if (state.mode === "scalar") {
    const req: ScalarRequest = {
      mode: "scalar",
      tau: state.points.map((p) => p.x),
      F: state.points.map((p) => p.y),
      alpha,
      strict: state.strict,
      samples: state.sampleCount,
    };
    return req;
  }
  const req: ParametricRequest = {
    mode: "parametric",
    points: state.points.map((p) => [p.x, p.y] as [number, number]),
    parameterization: state.parameterization,
    alpha,
    strict: state.strict,
    samples: state.sampleCount,
  };
  return req;
}

export function beginRequest(state: EditorState): { state: EditorState; id: number } {
  const id = state.latestRequestId + 1;
  return { state: { ...state, latestRequestId: id, pending: true }, id };
}

/** Apply a response only if it answers the newest request; drop stale ones. */
export function applyResponse(
  state: EditorState,
  id: number,
  response: SplineResponse,
): EditorState {
  if (id !== state.latestRequestId) return state;
  return { ...state, response, pending: false, error: null };
}

/** A failed recompute shows a banner but keeps the last good curve. */
export function applyFailure(state: EditorState, id: number, message: string): EditorState {
  if (id !== state.latestRequestId) return state;
  return { ...state, pending: false, error: message };
}

/** Interior node abscissae implied by the current alphas (scalar mode). */
export function nodePositions(state: EditorState): Point[] {
  const pts = state.points;
  const out: Point[] = [];
  for (let j = 0; j + 1 < pts.length; j++) {
    const a = state.alpha[j] ?? 0.5;
    const x = pts[j + 1].x - a * (pts[j + 1].x - pts[j].x);
    const t = (x - pts[j].x) / (pts[j + 1].x - pts[j].x);
    out.push({ x, y: pts[j].y + t * (pts[j + 1].y - pts[j].y) });
  }
  return out;
}

/** Tangency points on the 2D control chords (parametric mode). */
export function chordTangencyPoints(state: EditorState): Point[] {
  const pts = state.points;
  const out: Point[] = [];
  for (let j = 0; j + 1 < pts.length; j++) {
    const a = state.alpha[j] ?? 0.5;
    const t = 1 - a; // node sits at parameter offset (1 - alpha) into the chord
    out.push({
      x: pts[j].x + t * (pts[j + 1].x - pts[j].x),
      y: pts[j].y + t * (pts[j + 1].y - pts[j].y),
    });
  }
  return out;
}
