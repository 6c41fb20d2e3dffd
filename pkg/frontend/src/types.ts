// JSON shapes exchanged with the service (see docs/file-formats.md and
// docs/query-grammar.md in the repo root).

export type Space = "motion" | "persistence" | "size";

export type Cell = [number, number]; // [x, y], y grows downward

export interface SceneInfo {
  config: {
    frame_width_px: number;
    frame_height_px: number;
    cell_size_px: number;
    frames_per_clip: number;
    fps: number;
    flow_threshold: number;
    size_threshold_cells: number;
    grid_w: number;
    grid_h: number;
  };
  grid: { w: number; h: number };
}

export interface SectionInfo {
  scene_id: string;
  start_frame: number;
  end_frame: number;
  clips: number;
  store_threshold: number;
}

export interface TopicInfo {
  index: number;
  direction: number | null;
  direction_name: string | null;
  support: Cell[];
  total_mass: number;
}

export interface TopicsResponse {
  space: Space;
  num_topics: number;
  topics: TopicInfo[];
}

export interface SketchElementPayload {
  kind: "stroke" | "region";
  space: Space;
  points?: Cell[];
  cells?: Cell[];
}

export interface SketchResolvePayload {
  elements: SketchElementPayload[];
  top_n?: number;
}

export interface CandidateJson {
  space: Space;
  index: number;
  score: number;
}

export interface ResolvedRunJson {
  cells: Cell[];
  direction: number | null;
  direction_name: string | null;
  candidates: CandidateJson[];
}

export interface ResolvedElementJson {
  kind: "stroke" | "region";
  space: Space;
  runs: ResolvedRunJson[];
}

export interface SketchResolveResponse {
  elements: ResolvedElementJson[];
}

export interface MatchedClipJson {
  clip: number;
  topics: { space: Space; index: number }[];
}

export interface SearchResultJson {
  start_clip: number;
  end_clip: number;
  start_frame: number;
  end_frame: number;
  score: number;
  strategy: string;
  matched: MatchedClipJson[];
}

export interface QueryResponse {
  query: string;
  results: SearchResultJson[];
  elapsed_ms: number;
}

export interface QueryErrorDetail {
  error: string;
  position?: number;
}

export interface ClipFrameCell {
  x: number;
  y: number;
  f: [number, number];
  bid: number;
  bsz: number;
}

export interface ClipResponse {
  clip_id: number;
  section: string;
  start_frame: number;
  end_frame: number;
  topics: Record<string, [number, number][]>;
  frames: { frame: number; cells: ClipFrameCell[] }[];
}
