// Cell-grid geometry: snapping, compass directions, rasterization.
//
// The whole pipeline is cell-quantized, so sketches snap to cell centers.
// Directions use the compass convention of the backend: bin 0 is east,
// counting counter-clockwise (E, NE, N, NW, W, SW, S, SE). Screen y grows
// downward, so a segment delta (dx, dy) converts with fy = -dy.

import type { Cell } from "./types.js";

export const DIRECTION_NAMES = ["E", "NE", "N", "NW", "W", "SW", "S", "SE"] as const;

export const DIRECTION_ARROWS = ["→", "↗", "↑", "↖", "←", "↙", "↓", "↘"] as const;

export function quantizeDirection(dx: number, dy: number): number | null {
  // dx/dy in cell coordinates (y down); null when there is no movement
  if (dx === 0 && dy === 0) return null;
  const angle = (Math.atan2(-dy, dx) * 180) / Math.PI;
  return Math.floor((((angle + 22.5) % 360) + 360) % 360 / 45);
}

export function snapToCell(px: number, py: number, cellPx: number): Cell {
  return [Math.floor(px / cellPx), Math.floor(py / cellPx)];
}

export interface ClampResult {
  cell: Cell;
  clamped: boolean;
}

export function clampCell([x, y]: Cell, gridW: number, gridH: number): ClampResult {
  const cx = Math.min(Math.max(x, 0), gridW - 1);
  const cy = Math.min(Math.max(y, 0), gridH - 1);
  return { cell: [cx, cy], clamped: cx !== x || cy !== y };
}

export function cellsEqual(a: Cell, b: Cell): boolean {
  return a[0] === b[0] && a[1] === b[1];
}

export function segmentCells(a: Cell, b: Cell): Cell[] {
  // same interpolation as the backend rasterizer
  const steps = Math.max(Math.abs(b[0] - a[0]), Math.abs(b[1] - a[1]));
  if (steps === 0) return [[a[0], a[1]]];
  const out: Cell[] = [];
  for (let s = 0; s <= steps; s++) {
    out.push([
      Math.round(a[0] + ((b[0] - a[0]) * s) / steps),
      Math.round(a[1] + ((b[1] - a[1]) * s) / steps),
    ]);
  }
  return out;
}

export interface StrokeRun {
  direction: number;
  cells: Cell[];
}

export function strokeRuns(points: Cell[]): StrokeRun[] {
  // consecutive same-direction segments merge into one run (mirrors the
  // server's resolution; displayed arrows must match what gets resolved)
  const runs: StrokeRun[] = [];
  for (let i = 0; i + 1 < points.length; i++) {
    const [ax, ay] = points[i];
    const [bx, by] = points[i + 1];
    const direction = quantizeDirection(bx - ax, by - ay);
    if (direction === null) continue;
    const cells = segmentCells(points[i], points[i + 1]);
    const last = runs[runs.length - 1];
    if (last !== undefined && last.direction === direction) {
      for (const c of cells) {
        if (!last.cells.some((d) => cellsEqual(c, d))) last.cells.push(c);
      }
    } else {
      const dedup: Cell[] = [];
      for (const c of cells) {
        if (!dedup.some((d) => cellsEqual(c, d))) dedup.push(c);
      }
      runs.push({ direction, cells: dedup });
    }
  }
  return runs;
}

export function dedupeConsecutive(cells: Cell[]): Cell[] {
  const out: Cell[] = [];
  for (const c of cells) {
    if (out.length === 0 || !cellsEqual(out[out.length - 1], c)) out.push(c);
  }
  return out;
}

export function lassoCells(points: Cell[], gridW: number, gridH: number): Cell[] {
  // closed-lasso fill: outline cells plus every cell whose center falls
  // inside the polygon (ray casting)
  if (points.length < 3) return dedupeConsecutive(points);
  const chosen = new Set<string>();
  const out: Cell[] = [];
  const push = (c: Cell) => {
    const key = `${c[0]},${c[1]}`;
    if (!chosen.has(key)) {
      chosen.add(key);
      out.push(c);
    }
  };
  for (let i = 0; i < points.length; i++) {
    for (const c of segmentCells(points[i], points[(i + 1) % points.length])) {
      push(c);
    }
  }
  const xs = points.map((p) => p[0]);
  const ys = points.map((p) => p[1]);
  const minX = Math.max(0, Math.min(...xs));
  const maxX = Math.min(gridW - 1, Math.max(...xs));
  const minY = Math.max(0, Math.min(...ys));
  const maxY = Math.min(gridH - 1, Math.max(...ys));
  for (let y = minY; y <= maxY; y++) {
    for (let x = minX; x <= maxX; x++) {
      if (pointInPolygon(x, y, points)) push([x, y]);
    }
  }
  return out;
}

function pointInPolygon(x: number, y: number, polygon: Cell[]): boolean {
  let inside = false;
  for (let i = 0, j = polygon.length - 1; i < polygon.length; j = i++) {
    const [xi, yi] = polygon[i];
    const [xj, yj] = polygon[j];
    if (yi > y !== yj > y && x < ((xj - xi) * (y - yi)) / (yj - yi) + xi) {
      inside = !inside;
    }
  }
  return inside;
}
