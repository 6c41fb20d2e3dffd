// Results timeline: intervals with scores, clickable for clip playback.

import type { SearchResultJson } from "./types.js";

export interface TimelineEvents {
  onPlay: (clipId: number) => void;
}

export function renderResults(container: HTMLElement,
                              results: SearchResultJson[],
                              totalFrames: number,
                              elapsedMs: number,
                              events: TimelineEvents): void {
  container.textContent = "";
  const summary = document.createElement("div");
  summary.className = "results-summary";
  summary.textContent =
    `${results.length} result${results.length === 1 ? "" : "s"} in ` +
    `${elapsedMs.toFixed(1)} ms`;
  container.appendChild(summary);

  if (results.length === 0) return;

  const bar = document.createElement("div");
  bar.className = "timeline-bar";
  for (const r of results) {
    const seg = document.createElement("div");
    seg.className = "timeline-segment";
    const left = (100 * r.start_frame) / Math.max(1, totalFrames);
    const width = (100 * (r.end_frame - r.start_frame)) / Math.max(1, totalFrames);
    seg.style.left = `${left}%`;
    seg.style.width = `${Math.max(width, 0.6)}%`;
    seg.title = `clips ${r.start_clip}..${r.end_clip} score ${r.score.toFixed(3)}`;
    seg.addEventListener("click", () => events.onPlay(r.start_clip));
    bar.appendChild(seg);
  }
  container.appendChild(bar);

  const list = document.createElement("ol");
  list.className = "results-list";
  results.forEach((r) => {
    const item = document.createElement("li");
    const label = document.createElement("span");
    label.textContent =
      `clips ${r.start_clip}–${r.end_clip} ` +
      `(frames ${r.start_frame}–${r.end_frame}) ` +
      `score ${r.score.toFixed(3)}`;
    const play = document.createElement("button");
    play.textContent = "play";
    play.addEventListener("click", () => events.onPlay(r.start_clip));
    item.appendChild(label);
    item.appendChild(play);
    list.appendChild(item);
  });
  container.appendChild(list);
}
