// Sketch/session state and the pure transitions the UI calls into.
// Everything here is DOM-free so it can be unit tested.

import type {
  Cell, ResolvedElementJson, SearchResultJson, SketchElementPayload, Space,
} from "./types.js";
import { clampCell, dedupeConsecutive, lassoCells } from "./geometry.js";
import type { QueryDraft, Strategy, TopicPick } from "./dsl.js";
import { composeDsl, validateDraft } from "./dsl.js";

export interface SketchElement {
  kind: "stroke" | "region";
  space: Space;
  cells: Cell[];     // region cells, or the stroke's snapped anchor points
}

export interface UiState {
  gridW: number;
  gridH: number;
  sectionId: string;
  strategy: Strategy;
  elements: SketchElement[];
  resolved: ResolvedElementJson[] | null;
  picks: TopicPick[];        // chosen topic per resolved run, in order
  params: Record<string, number>;
  clips: [number, number] | null;
  dsl: string;               // composed (or hand-edited) query text
  dslEdited: boolean;        // a manual edit stops auto-composition
  warning: string | null;
  results: SearchResultJson[] | null;
}

export function initialState(gridW: number, gridH: number,
                             sectionId: string): UiState {
  return {
    gridW, gridH, sectionId,
    strategy: "single-topic",
    elements: [], resolved: null, picks: [], params: {},
    clips: null, dsl: "", dslEdited: false, warning: null, results: null,
  };
}

export interface StrokeOutcome {
  state: UiState;
  rejected: string | null;
}

export function addStroke(state: UiState, rawPoints: Cell[],
                          space: Space = "motion"): StrokeOutcome {
  let clampedAny = false;
  const snapped: Cell[] = [];
  for (const p of rawPoints) {
    const { cell, clamped } = clampCell(p, state.gridW, state.gridH);
    clampedAny = clampedAny || clamped;
    snapped.push(cell);
  }
  const points = dedupeConsecutive(snapped);
  if (points.length < 2) {
    return {
      state,
      rejected: "a path needs at least two cells: drag across the grid",
    };
  }
  const element: SketchElement = { kind: "stroke", space, cells: points };
  return {
    state: {
      ...state,
      elements: [...state.elements, element],
      resolved: null,
      picks: [],
      warning: clampedAny ? "stroke reached outside the grid and was clamped" : null,
    },
    rejected: null,
  };
}

export function addRegion(state: UiState, rawPoints: Cell[],
                          space: Space): StrokeOutcome {
  let clampedAny = false;
  const snapped: Cell[] = [];
  for (const p of rawPoints) {
    const { cell, clamped } = clampCell(p, state.gridW, state.gridH);
    clampedAny = clampedAny || clamped;
    snapped.push(cell);
  }
  const cells = lassoCells(dedupeConsecutive(snapped), state.gridW, state.gridH);
  if (cells.length === 0) {
    return { state, rejected: "the lasso enclosed no cells" };
  }
  const element: SketchElement = { kind: "region", space, cells };
  return {
    state: {
      ...state,
      elements: [...state.elements, element],
      resolved: null,
      picks: [],
      warning: clampedAny ? "region reached outside the grid and was clamped" : null,
    },
    rejected: null,
  };
}

export function clearSketch(state: UiState): UiState {
  return {
    ...state, elements: [], resolved: null, picks: [], dsl: "",
    dslEdited: false, warning: null, results: null,
  };
}

export function sketchPayload(state: UiState, topN: number): {
  elements: SketchElementPayload[];
  top_n: number;
} {
  return {
    elements: state.elements.map((el) =>
      el.kind === "stroke"
        ? { kind: "stroke", space: el.space, points: el.cells }
        : { kind: "region", space: el.space, cells: el.cells }),
    top_n: topN,
  };
}

export function applyResolution(state: UiState,
                                resolved: ResolvedElementJson[]): UiState {
  // default pick: the top candidate of every run that has one
  const picks: TopicPick[] = [];
  for (const el of resolved) {
    for (const run of el.runs) {
      if (run.candidates.length > 0) {
        const c = run.candidates[0];
        picks.push({ space: c.space, index: c.index });
      }
    }
  }
  const next = { ...state, resolved, picks };
  return recompose(next);
}

export function pickCandidate(state: UiState, runOrdinal: number,
                              pick: TopicPick): UiState {
  const picks = state.picks.slice();
  picks[runOrdinal] = pick;
  return recompose({ ...state, picks });
}

export function setStrategy(state: UiState, strategy: Strategy): UiState {
  return recompose({ ...state, strategy });
}

export function setSection(state: UiState, sectionId: string): UiState {
  return recompose({ ...state, sectionId });
}

export function setClips(state: UiState, clips: [number, number] | null): UiState {
  return recompose({ ...state, clips });
}

export function editDsl(state: UiState, text: string): UiState {
  return { ...state, dsl: text, dslEdited: true };
}

export function currentDraft(state: UiState): QueryDraft {
  const spaces: Space[] = [];
  for (const pick of state.picks) {
    if (!spaces.includes(pick.space)) spaces.push(pick.space);
  }
  if (spaces.length === 0) spaces.push("motion");
  return {
    spaces,
    sectionId: state.sectionId,
    frameRange: null,
    strategy: state.strategy,
    topics: state.picks,
    params: state.params,
    clips: state.clips,
  };
}

export function recompose(state: UiState): UiState {
  if (state.dslEdited) return state;
  const draft = currentDraft(state);
  if (validateDraft(draft) !== null) {
    return { ...state, dsl: "" };
  }
  return { ...state, dsl: composeDsl(draft) };
}

export function draftProblem(state: UiState): string | null {
  if (state.dslEdited) return state.dsl.trim() ? null : "query is empty";
  return validateDraft(currentDraft(state));
}
