// Canvas rendering: the cell grid, topic-support overlays, the sketch in
// progress, and clip playback frames.

import type { Cell, ClipResponse, TopicInfo } from "./types.js";
import { DIRECTION_ARROWS, snapToCell, strokeRuns } from "./geometry.js";
import type { SketchElement } from "./state.js";

const OVERLAY_COLORS = [
  "#e6550d", "#3182bd", "#31a354", "#756bb1", "#d6616b", "#8c6d31",
  "#17becf", "#bd9e39", "#ce6dbd", "#6b6ecf",
];

export interface OverlayTopic {
  space: string;
  topic: TopicInfo;
  color: string;
}

export function overlayColor(ordinal: number): string {
  return OVERLAY_COLORS[ordinal % OVERLAY_COLORS.length];
}

export class GridView {
  canvas: HTMLCanvasElement;
  gridW: number;
  gridH: number;
  cellPx: number;
  overlays: OverlayTopic[] = [];
  sketch: SketchElement[] = [];
  draft: Cell[] | null = null;  // pointer points while drawing
  draftKind: "stroke" | "region" = "stroke";
  playbackFrame: ClipResponse["frames"][number] | null = null;

  constructor(canvas: HTMLCanvasElement, gridW: number, gridH: number,
              cellPx = 28) {
    this.canvas = canvas;
    this.gridW = gridW;
    this.gridH = gridH;
    this.cellPx = cellPx;
    canvas.width = gridW * cellPx;
    canvas.height = gridH * cellPx;
  }

  eventCell(ev: PointerEvent): Cell {
    const rect = this.canvas.getBoundingClientRect();
    const sx = this.canvas.width / rect.width;
    const sy = this.canvas.height / rect.height;
    return snapToCell((ev.clientX - rect.left) * sx,
                      (ev.clientY - rect.top) * sy, this.cellPx);
  }

  render(): void {
    const ctx = this.canvas.getContext("2d");
    if (!ctx) return;
    const { cellPx } = this;
    ctx.fillStyle = "#14161a";
    ctx.fillRect(0, 0, this.canvas.width, this.canvas.height);

    // playback layer first so grid lines stay visible above it
    if (this.playbackFrame) {
      for (const cell of this.playbackFrame.cells) {
        ctx.fillStyle = cell.f[0] === 0 && cell.f[1] === 0
          ? "rgba(214, 158, 46, 0.85)"   // parked
          : "rgba(56, 161, 105, 0.85)";  // moving
        ctx.fillRect(cell.x * cellPx, cell.y * cellPx, cellPx, cellPx);
      }
    }

    for (const overlay of this.overlays) {
      ctx.fillStyle = overlay.color + "55";
      for (const [x, y] of overlay.topic.support) {
        ctx.fillRect(x * cellPx, y * cellPx, cellPx, cellPx);
      }
      if (overlay.topic.direction !== null && overlay.topic.support.length) {
        ctx.fillStyle = overlay.color;
        ctx.font = `${Math.round(cellPx * 0.8)}px sans-serif`;
        ctx.textAlign = "center";
        ctx.textBaseline = "middle";
        const mid = overlay.topic.support[
          Math.floor(overlay.topic.support.length / 2)];
        ctx.fillText(DIRECTION_ARROWS[overlay.topic.direction],
                     (mid[0] + 0.5) * cellPx, (mid[1] + 0.5) * cellPx);
      }
    }

    ctx.strokeStyle = "rgba(255,255,255,0.08)";
    ctx.lineWidth = 1;
    for (let x = 0; x <= this.gridW; x++) {
      ctx.beginPath();
      ctx.moveTo(x * cellPx + 0.5, 0);
      ctx.lineTo(x * cellPx + 0.5, this.canvas.height);
      ctx.stroke();
    }
    for (let y = 0; y <= this.gridH; y++) {
      ctx.beginPath();
      ctx.moveTo(0, y * cellPx + 0.5);
      ctx.lineTo(this.canvas.width, y * cellPx + 0.5);
      ctx.stroke();
    }

    for (const element of this.sketch) {
      this.renderElement(ctx, element, false);
    }
    if (this.draft && this.draft.length > 0) {
      this.renderElement(ctx, {
        kind: this.draftKind,
        space: this.draftKind === "stroke" ? "motion" : "persistence",
        cells: this.draft,
      }, true);
    }
  }

  private renderElement(ctx: CanvasRenderingContext2D, element: SketchElement,
                        draft: boolean): void {
    const { cellPx } = this;
    if (element.kind === "region") {
      ctx.fillStyle = draft ? "rgba(99, 179, 237, 0.35)"
        : "rgba(99, 179, 237, 0.5)";
      for (const [x, y] of element.cells) {
        ctx.fillRect(x * cellPx, y * cellPx, cellPx, cellPx);
      }
      return;
    }
    ctx.strokeStyle = draft ? "rgba(246, 173, 85, 0.6)" : "#f6ad55";
    ctx.lineWidth = Math.max(2, cellPx * 0.18);
    ctx.lineJoin = "round";
    ctx.lineCap = "round";
    ctx.beginPath();
    element.cells.forEach(([x, y], i) => {
      const px = (x + 0.5) * cellPx;
      const py = (y + 0.5) * cellPx;
      if (i === 0) ctx.moveTo(px, py);
      else ctx.lineTo(px, py);
    });
    ctx.stroke();
    // per-run direction arrows so the user sees what will be resolved
    ctx.fillStyle = "#f6ad55";
    ctx.font = `${Math.round(cellPx * 0.7)}px sans-serif`;
    ctx.textAlign = "center";
    ctx.textBaseline = "middle";
    for (const run of strokeRuns(element.cells)) {
      const mid = run.cells[Math.floor(run.cells.length / 2)];
      ctx.fillText(DIRECTION_ARROWS[run.direction],
                   (mid[0] + 0.5) * cellPx, (mid[1] - 0.4) * cellPx);
    }
  }
}

export class ClipPlayer {
  private view: GridView;
  private timer: ReturnType<typeof setInterval> | null = null;

  constructor(view: GridView) {
    this.view = view;
  }

  play(clip: ClipResponse, fps: number): void {
    this.stop();
    if (clip.frames.length === 0) return;
    let i = 0;
    this.view.playbackFrame = clip.frames[0];
    this.view.render();
    this.timer = setInterval(() => {
      i = (i + 1) % clip.frames.length;
      this.view.playbackFrame = clip.frames[i];
      this.view.render();
    }, 1000 / Math.max(1, fps));
  }

  stop(): void {
    if (this.timer !== null) clearInterval(this.timer);
    this.timer = null;
    this.view.playbackFrame = null;
    this.view.render();
  }
}
