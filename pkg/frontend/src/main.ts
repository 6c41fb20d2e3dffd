// Wiring: sketch on the grid, resolve to topics, compose and run queries,
// browse results with playback. All scores come from the service.

import { ApiError, Client } from "./api.js";
import { describeDiagnostic } from "./dsl.js";
import { DIRECTION_NAMES } from "./geometry.js";
import { ClipPlayer, GridView, overlayColor } from "./grid.js";
import {
  addRegion, addStroke, applyResolution, clearSketch, currentDraft,
  draftProblem, editDsl, initialState, pickCandidate, setSection, setStrategy,
  sketchPayload, UiState,
} from "./state.js";
import { renderResults } from "./timeline.js";
import type { Cell, SectionInfo, Space, TopicInfo } from "./types.js";

const client = new Client("");

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

async function boot(): Promise<void> {
  let scene;
  try {
    scene = await client.scene();
  } catch (err) {
    el("banner").textContent =
      "service unreachable — start it with: sceneseek serve --artifacts <dir>";
    el("banner").classList.add("error");
    return;
  }
  const sections = await client.sections();
  const view = new GridView(el<HTMLCanvasElement>("grid"),
                            scene.grid.w, scene.grid.h);
  const player = new ClipPlayer(view);
  let state: UiState = initialState(scene.grid.w, scene.grid.h,
                                    sections[0]?.scene_id ?? "scene1");
  let totalFrames = sections[0]?.end_frame ?? 1;

  el("scene-label").textContent =
    `${scene.grid.w}×${scene.grid.h} cells, ` +
    `${scene.config.frames_per_clip} frames/clip @ ${scene.config.fps} fps`;

  const sectionSelect = el<HTMLSelectElement>("section");
  sections.forEach((s: SectionInfo) => {
    const opt = document.createElement("option");
    opt.value = s.scene_id;
    opt.textContent = `${s.scene_id} (${s.clips} clips)`;
    sectionSelect.appendChild(opt);
  });
  sectionSelect.addEventListener("change", () => {
    state = setSection(state, sectionSelect.value);
    const info = sections.find((s) => s.scene_id === sectionSelect.value);
    totalFrames = info?.end_frame ?? totalFrames;
    sync();
  });

  const strategySelect = el<HTMLSelectElement>("strategy");
  strategySelect.addEventListener("change", () => {
    state = setStrategy(state, strategySelect.value as never);
    sync();
  });

  const spaceSelect = el<HTMLSelectElement>("sketch-space");
  const modeSelect = el<HTMLSelectElement>("sketch-mode");

  // topic overlays
  const overlayList = el("overlays");
  const allTopics: { space: Space; topic: TopicInfo }[] = [];
  for (const space of ["motion", "persistence", "size"] as Space[]) {
    try {
      const response = await client.topics(space);
      for (const topic of response.topics) allTopics.push({ space, topic });
    } catch {
      // space not loaded on the server: skip
    }
  }
  allTopics.forEach(({ space, topic }, ordinal) => {
    const row = document.createElement("label");
    row.className = "overlay-row";
    const box = document.createElement("input");
    box.type = "checkbox";
    const swatch = document.createElement("span");
    swatch.className = "swatch";
    swatch.style.background = overlayColor(ordinal);
    const name = document.createElement("span");
    const dir = topic.direction_name ? ` ${topic.direction_name}` : "";
    name.textContent = `${space} t${topic.index}${dir}`;
    box.addEventListener("change", () => {
      if (box.checked) {
        view.overlays.push({ space, topic, color: overlayColor(ordinal) });
      } else {
        view.overlays = view.overlays.filter((o) => o.topic !== topic);
      }
      view.render();
    });
    row.append(box, swatch, name);
    overlayList.appendChild(row);
  });

  // sketch capture
  let drafting: Cell[] | null = null;
  view.canvas.addEventListener("pointerdown", (ev) => {
    view.canvas.setPointerCapture(ev.pointerId);
    drafting = [view.eventCell(ev)];
    view.draft = drafting;
    view.draftKind = modeSelect.value === "region" ? "region" : "stroke";
    view.render();
  });
  view.canvas.addEventListener("pointermove", (ev) => {
    if (!drafting) return;
    const cell = view.eventCell(ev);
    const last = drafting[drafting.length - 1];
    if (last[0] !== cell[0] || last[1] !== cell[1]) {
      drafting.push(cell);
      view.render();
    }
  });
  view.canvas.addEventListener("pointerup", () => {
    if (!drafting) return;
    const points = drafting;
    drafting = null;
    view.draft = null;
    const space = spaceSelect.value as Space;
    const outcome = modeSelect.value === "region"
      ? addRegion(state, points, space)
      : addStroke(state, points, space);
    if (outcome.rejected) {
      showBanner(outcome.rejected, false);
    } else {
      state = outcome.state;
      if (state.warning) showBanner(state.warning, false);
      else clearBanner();
    }
    sync();
  });

  el("clear").addEventListener("click", () => {
    player.stop();
    state = clearSketch(state);
    clearBanner();
    sync();
  });

  el("resolve").addEventListener("click", async () => {
    if (state.elements.length === 0) {
      showBanner("sketch a path or region first", false);
      return;
    }
    try {
      const response = await client.resolveSketch(sketchPayload(state, 3));
      state = applyResolution(state, response.elements);
      clearBanner();
    } catch (err) {
      showBanner(err instanceof Error ? err.message : String(err), true);
    }
    sync();
  });

  const dslBox = el<HTMLTextAreaElement>("dsl");
  dslBox.addEventListener("input", () => {
    state = editDsl(state, dslBox.value);
  });

  el("run").addEventListener("click", async () => {
    const problem = draftProblem(state);
    if (problem) {
      showBanner(problem, false);
      return;
    }
    const text = state.dsl;
    el("diagnostic").textContent = "";
    try {
      const response = await client.queryText(text);
      state = { ...state, results: response.results };
      // the server echoes the canonical form; show it so the displayed DSL
      // and the executed query stay identical
      if (!state.dslEdited) state = { ...state, dsl: response.query };
      renderResults(el("results"), response.results, totalFrames,
                    response.elapsed_ms, {
                      onPlay: async (clipId) => {
                        const clip = await client.clip(
                          clipId, currentDraft(state).sectionId);
                        player.play(clip, scene.config.fps);
                      },
                    });
      clearBanner();
    } catch (err) {
      if (err instanceof ApiError && err.detail) {
        const diag = describeDiagnostic(text, err.detail.error,
                                        err.detail.position);
        el("diagnostic").textContent =
          `${diag.message}\n${diag.line}\n${diag.pointer}`;
      } else {
        showBanner(err instanceof Error ? err.message : String(err), true);
      }
    }
    sync();
  });

  el("stop").addEventListener("click", () => player.stop());

  function renderRuns(): void {
    const holder = el("runs");
    holder.textContent = "";
    if (!state.resolved) return;
    let ordinal = 0;
    state.resolved.forEach((element, ei) => {
      element.runs.forEach((run, ri) => {
        const row = document.createElement("div");
        row.className = "run-row";
        const dir = run.direction !== null
          ? `${DIRECTION_NAMES[run.direction]} ` : "";
        const label = document.createElement("span");
        label.textContent =
          `#${ei + 1}.${ri + 1} ${element.kind} ${dir}(${run.cells.length} cells): `;
        row.appendChild(label);
        if (run.candidates.length === 0) {
          const none = document.createElement("em");
          none.textContent = "no matching topic";
          row.appendChild(none);
        } else {
          const select = document.createElement("select");
          run.candidates.forEach((c, ci) => {
            const opt = document.createElement("option");
            opt.value = String(ci);
            opt.textContent =
              `${c.space} t${c.index} (overlap ${c.score.toFixed(2)})`;
            select.appendChild(opt);
          });
          const myOrdinal = ordinal;
          select.addEventListener("change", () => {
            const c = run.candidates[Number(select.value)];
            state = pickCandidate(state, myOrdinal,
                                  { space: c.space, index: c.index });
            sync();
          });
          row.appendChild(select);
          ordinal += 1;
        }
        holder.appendChild(row);
      });
    });
  }

  function showBanner(message: string, isError: boolean): void {
    const banner = el("banner");
    banner.textContent = message;
    banner.classList.toggle("error", isError);
  }

  function clearBanner(): void {
    const banner = el("banner");
    banner.textContent = "";
    banner.classList.remove("error");
  }

  function sync(): void {
    view.sketch = state.elements;
    view.render();
    renderRuns();
    if (!state.dslEdited) dslBox.value = state.dsl;
  }

  sync();
}

boot();
