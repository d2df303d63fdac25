import type { Point } from "./types.js";

/** World-to-screen mapping with a flipped y axis (math up = screen up). */
export interface ViewTransform {
  scale: number;
  offsetX: number;
  offsetY: number;
}

export function fitView(
  points: Point[],
  width: number,
  height: number,
  padding = 40,
): ViewTransform {
  if (points.length === 0) return { scale: 1, offsetX: width / 2, offsetY: height / 2 };
  let xmin = Infinity,
    xmax = -Infinity,
    ymin = Infinity,
    ymax = -Infinity;
  for (const p of points) {
    xmin = Math.min(xmin, p.x);
    xmax = Math.max(xmax, p.x);
    ymin = Math.min(ymin, p.y);
    ymax = Math.max(ymax, p.y);
  }
  const spanX = Math.max(xmax - xmin, 1e-9);
  const spanY = Math.max(ymax - ymin, 1e-9);
  const scale = Math.min((width - 2 * padding) / spanX, (height - 2 * padding) / spanY);
  return {
    scale,
    offsetX: width / 2 - scale * (xmin + xmax) / 2,
    offsetY: height / 2 + scale * (ymin + ymax) / 2,
  };
}

export function worldToScreen(p: Point, view: ViewTransform): Point {
  return { x: view.offsetX + view.scale * p.x, y: view.offsetY - view.scale * p.y };
}

export function screenToWorld(p: Point, view: ViewTransform): Point {
  return { x: (p.x - view.offsetX) / view.scale, y: (view.offsetY - p.y) / view.scale };
}
