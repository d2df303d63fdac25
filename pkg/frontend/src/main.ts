import { SplineClient } from "./api.js";
import { renderScene, diagnosticsSummary, DOT_RADIUS } from "./render.js";
import { RecomputeScheduler } from "./scheduler.js";
import {
  applyDrag,
  applyFailure,
  applyResponse,
  beginRequest,
  buildRequest,
  initialState,
  loadPoints,
  setGlobalAlpha,
  setStrict,
  toggleOverlay,
  type EditorState,
  type Overlays,
} from "./state.js";
import { fitView, screenToWorld, worldToScreen } from "./transform.js";
import type { Point, SplineRequest } from "./types.js";

const canvas = document.getElementById("scene") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const banner = document.getElementById("banner")!;
const panel = document.getElementById("diagnostics")!;
const alphaSlider = document.getElementById("alpha") as HTMLInputElement;
const alphaLabel = document.getElementById("alpha-label")!;
const strictBox = document.getElementById("strict") as HTMLInputElement;
const modeSelect = document.getElementById("mode") as HTMLSelectElement;
const paramSelect = document.getElementById("parameterization") as HTMLSelectElement;
const lockBox = document.getElementById("lock-abscissae") as HTMLInputElement;
const downloadButton = document.getElementById("download")!;

const params = new URLSearchParams(location.search);
const client = new SplineClient(params.get("service") ?? undefined);

let state: EditorState = initialState();
let view = fitView([], canvas.width, canvas.height);
let dragIndex: number | null = null;

function redraw(): void {
  view = fitView(state.points, canvas.width, canvas.height);
  renderScene(ctx, state, view, canvas.width, canvas.height);
  panel.textContent = diagnosticsSummary(state.response) + (state.pending ? "  (recomputing)" : "");
  banner.textContent = state.error ?? "";
  banner.style.display = state.error ? "block" : "none";
}

const scheduler = new RecomputeScheduler<{ id: number; request: SplineRequest }>(
  async ({ id, request }) => {
    try {
      const response = await client.solve(request);
      state = applyResponse(state, id, response);
    } catch (err) {
      state = applyFailure(state, id, err instanceof Error ? err.message : String(err));
    }
    redraw();
  },
  50,
);

function recompute(immediate = false): void {
  if (state.points.length < 2) return;
  const begun = beginRequest(state);
  state = begun.state;
  scheduler.update({ id: begun.id, request: buildRequest(state) });
  if (immediate) scheduler.flush();
  redraw();
}

function hitTest(screen: Point): number | null {
  for (let i = state.points.length - 1; i >= 0; i--) {
    const s = worldToScreen(state.points[i], view);
    if (Math.hypot(s.x - screen.x, s.y - screen.y) <= DOT_RADIUS + 4) return i;
  }
  return null;
}

function canvasPoint(ev: PointerEvent): Point {
  const rect = canvas.getBoundingClientRect();
  return { x: ev.clientX - rect.left, y: ev.clientY - rect.top };
}

canvas.addEventListener("pointerdown", (ev) => {
  dragIndex = hitTest(canvasPoint(ev));
  if (dragIndex !== null) canvas.setPointerCapture(ev.pointerId);
});

canvas.addEventListener("pointermove", (ev) => {
  if (dragIndex === null) return;
  state = applyDrag(state, dragIndex, screenToWorld(canvasPoint(ev), view));
  recompute();
});

canvas.addEventListener("pointerup", (ev) => {
  if (dragIndex === null) return;
  state = applyDrag(state, dragIndex, screenToWorld(canvasPoint(ev), view));
  dragIndex = null;
  canvas.releasePointerCapture(ev.pointerId);
  recompute(true); // the release position always goes out
});

alphaSlider.addEventListener("input", () => {
  const value = Number(alphaSlider.value);
  alphaLabel.textContent = value.toFixed(3);
  state = setGlobalAlpha(state, value);
  recompute();
});

strictBox.addEventListener("change", () => {
  state = setStrict(state, strictBox.checked);
  recompute(true);
});

lockBox.addEventListener("change", () => {
  state = { ...state, lockAbscissae: lockBox.checked };
});

modeSelect.addEventListener("change", async () => {
  if (modeSelect.value === "parametric") {
    const pts: Point[] = [
      { x: 0, y: 0 },
      { x: 2, y: 3 },
      { x: 5, y: 2.5 },
      { x: 6.5, y: 0.5 },
      { x: 9, y: 1.5 },
    ];
    state = loadPoints(state, pts, "parametric");
  } else {
    await loadExample(1);
    return;
  }
  recompute(true);
});

paramSelect.addEventListener("change", () => {
  state = { ...state, parameterization: paramSelect.value as "chord" | "uniform" };
  recompute(true);
});

for (const key of ["hull", "polygon", "tangency", "nodes"] as (keyof Overlays)[]) {
  const box = document.getElementById(`overlay-${key}`) as HTMLInputElement;
  box.addEventListener("change", () => {
    state = toggleOverlay(state, key);
    redraw();
  });
}

downloadButton.addEventListener("click", () => {
  const payload =
    state.mode === "scalar"
      ? { tau: state.points.map((p) => p.x), F: state.points.map((p) => p.y), alpha: state.alpha }
      : { points: state.points.map((p) => [p.x, p.y]), alpha: state.alpha };
  const blob = new Blob([JSON.stringify(payload, null, 2)], { type: "application/json" });
  const a = document.createElement("a");
  a.href = URL.createObjectURL(blob);
  a.download = "control-points.json";
  a.click();
  URL.revokeObjectURL(a.href);
});

async function loadExample(id: number): Promise<void> {
  try {
    const data = await client.example(id);
    const pts = data.tau.map((x, i) => ({ x, y: data.F[i] }));
    state = loadPoints(state, pts, "scalar");
    recompute(true);
  } catch (err) {
    state = { ...state, error: `cannot reach service: ${String(err)}` };
    redraw();
  }
}

void loadExample(1);
