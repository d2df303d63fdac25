import { describe, expect, it } from "vitest";

import {
  ALPHA_MAX,
  ALPHA_MIN,
  applyDrag,
  applyFailure,
  applyResponse,
  beginRequest,
  buildRequest,
  clampDrag,
  initialState,
  loadPoints,
  nodePositions,
  setGlobalAlpha,
  setStrict,
  toggleOverlay,
  type EditorState,
} from "../src/state.js";
import type { ScalarResponse } from "../src/types.js";

function scalarState(xs: number[], ys: number[]): EditorState {
  return loadPoints(
    initialState(),
    xs.map((x, i) => ({ x, y: ys[i] })),
    "scalar",
  );
}

const RESPONSE: ScalarResponse = {
  mode: "scalar",
  alpha: [0.5, 0.5],
  strict: true,
  phi: [0, 0.8, 0],
  q: [-0.8, 0.8],
  domain: [0, 2],
  samples: [
    [0, 0],
    [1, 0.8],
    [2, 0],
  ],
  diagnostics: {
    dominance_margins: [8],
    c1_residuals: [0],
    interp_value_residuals: [0, 0],
    interp_slope_residuals: [0, 0],
    hull_margin: 0,
  },
};

describe("drag clamping", () => {
  it("keeps scalar abscissae strictly increasing", () => {
    const s = scalarState([0, 1, 2], [0, 1, 0]);
    const p = clampDrag(s, 1, { x: 5, y: 2 });
    expect(p.x).toBeLessThan(2);
    expect(p.x).toBeGreaterThan(1.99);
    expect(p.y).toBe(2);
    const q = clampDrag(s, 1, { x: -3, y: 0 });
    expect(q.x).toBeGreaterThan(0);
  });

  it("endpoints clamp on one side only", () => {
    const s = scalarState([0, 1, 2], [0, 1, 0]);
    expect(clampDrag(s, 0, { x: -10, y: 0 }).x).toBe(-10);
    expect(clampDrag(s, 0, { x: 10, y: 0 }).x).toBeLessThan(1);
    expect(clampDrag(s, 2, { x: 30, y: 0 }).x).toBe(30);
  });

  it("lock-abscissae pins x during drags", () => {
    const s = { ...scalarState([0, 1, 2], [0, 1, 0]), lockAbscissae: true };
    const p = clampDrag(s, 1, { x: 1.7, y: 9 });
    expect(p.x).toBe(1);
    expect(p.y).toBe(9);
  });

  it("applyDrag keeps the control list valid", () => {
    let s = scalarState([0, 1, 2], [0, 1, 0]);
    s = applyDrag(s, 1, { x: 100, y: 5 });
    const xs = s.points.map((p) => p.x);
    expect(xs[0] < xs[1] && xs[1] < xs[2]).toBe(true);
  });

  it("parametric drags never coincide with a neighbour", () => {
    const s = loadPoints(
      initialState(),
      [
        { x: 0, y: 0 },
        { x: 1, y: 1 },
        { x: 2, y: 0 },
      ],
      "parametric",
    );
    const p = clampDrag(s, 1, { x: 0, y: 0 });
    expect(p.x === 0 && p.y === 0).toBe(false);
  });
});

describe("alpha handling", () => {
  it("global slider clamps into the strict range", () => {
    let s = scalarState([0, 1, 2], [0, 1, 0]);
    s = setGlobalAlpha(s, 0.9);
    expect(s.alpha).toEqual([ALPHA_MAX, ALPHA_MAX]);
    s = setGlobalAlpha(s, 0.1);
    expect(s.alpha).toEqual([ALPHA_MIN, ALPHA_MIN]);
  });

  it("turning strict on clamps existing ratios", () => {
    let s = scalarState([0, 1, 2], [0, 1, 0]);
    s = setStrict(s, false);
    s = setGlobalAlpha(s, 0.9);
    expect(s.alpha[0]).toBeCloseTo(0.9);
    s = setStrict(s, true);
    expect(s.alpha).toEqual([ALPHA_MAX, ALPHA_MAX]);
  });

  it("requests never violate the strict range", () => {
    let s = scalarState([0, 1, 2], [0, 1, 0]);
    s.alpha = [0.9, 0.2]; // simulate stale state from elsewhere
    const req = buildRequest(s);
    expect(req.alpha.every((a) => a >= ALPHA_MIN && a <= ALPHA_MAX)).toBe(true);
  });

  it("node markers move with alpha", () => {
    let s = scalarState([0, 3], [0, 6]);
    s = setGlobalAlpha(s, 1 / 3);
    expect(nodePositions(s)[0].x).toBeCloseTo(2, 12);
    expect(nodePositions(s)[0].y).toBeCloseTo(4, 12);
    s = setGlobalAlpha(s, 0.5);
    expect(nodePositions(s)[0].x).toBeCloseTo(1.5, 12);
  });
});

describe("request lifecycle", () => {
  it("applies only the newest response", () => {
    let s = scalarState([0, 1, 2], [0, 1, 0]);
    const first = beginRequest(s);
    const second = beginRequest(first.state);
    s = second.state;
    const stale = { ...RESPONSE, phi: [9, 9, 9] };
    s = applyResponse(s, first.id, stale); // stale: dropped
    expect(s.response).toBeNull();
    s = applyResponse(s, second.id, RESPONSE);
    expect(s.response).toBe(RESPONSE);
    expect(s.pending).toBe(false);
  });

  it("failure keeps the last good curve and raises a banner", () => {
    let s = scalarState([0, 1, 2], [0, 1, 0]);
    const a = beginRequest(s);
    s = applyResponse(a.state, a.id, RESPONSE);
    const b = beginRequest(s);
    s = applyFailure(b.state, b.id, "service down");
    expect(s.response).toBe(RESPONSE);
    expect(s.error).toBe("service down");
    expect(s.pending).toBe(false);
  });

  it("scalar request carries tau/F and sample count", () => {
    const s = scalarState([0, 1, 2], [0, 1, 0]);
    const req = buildRequest(s);
    expect(req.mode).toBe("scalar");
    if (req.mode === "scalar") {
      expect(req.tau).toEqual([0, 1, 2]);
      expect(req.F).toEqual([0, 1, 0]);
      expect(req.samples).toBeGreaterThan(1);
    }
  });
});

describe("overlays", () => {
  it("toggles flip individual layers", () => {
    let s = initialState();
    expect(s.overlays.hull).toBe(true);
    s = toggleOverlay(s, "hull");
    expect(s.overlays.hull).toBe(false);
    expect(s.overlays.polygon).toBe(true);
  });
});
