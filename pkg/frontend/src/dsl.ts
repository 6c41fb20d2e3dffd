// Query composition: turn the UI's picked topics into DSL text and the
// equivalent structured JSON body. The composed text must reparse on the
// server to exactly the structured query we would submit, so the formats
// here mirror the server's canonical unparse.

import type { Space } from "./types.js";

export type Strategy = "single-topic" | "co-occurrence" | "topic-sequence" | "similar-clips";

export const STRATEGIES: Strategy[] = [
  "single-topic", "co-occurrence", "topic-sequence", "similar-clips",
];

export interface TopicPick {
  space: Space;
  index: number;
}

export interface QueryDraft {
  spaces: Space[];
  sectionId: string;
  frameRange?: [number, number] | null;
  strategy: Strategy;
  topics: TopicPick[];
  params: Record<string, number>;
  clips?: [number, number] | null; // similar-clips only
}

const SPACE_PREFIX: Record<Space, string> = {
  motion: "m",
  persistence: "p",
  size: "s",
};

function formatNumber(value: number): string {
  // match the server's %g style: no trailing zeros, plain integers
  return Number(value).toString();
}

export function refText(ref: TopicPick): string {
  // always prefixed: matches the server's canonical echo byte for byte
  return `${SPACE_PREFIX[ref.space]}:t${ref.index}`;
}

export function composeDsl(draft: QueryDraft): string {
  const spaces = draft.spaces.join(",");
  let section = draft.sectionId;
  if (draft.frameRange) {
    section += `[${draft.frameRange[0]}:${draft.frameRange[1]}]`;
  }
  const args: string[] = [];
  if (draft.strategy === "similar-clips") {
    const [lo, hi] = draft.clips ?? [0, 0];
    args.push(lo === hi ? `clip:${lo}` : `clip:${lo}-${hi}`);
    args.push(`k=${formatNumber(draft.params.k ?? 3)}`);
  } else {
    for (const ref of draft.topics) args.push(refText(ref));
    const order = draft.strategy === "topic-sequence"
      ? ["match", "mismatch", "gap", "threshold", "tau"]
      : ["tau"];
    for (const key of order) {
      const value = draft.params[key];
      if (value !== undefined) args.push(`${key}=${formatNumber(value)}`);
    }
  }
  return `QUERY DOMAIN ${spaces} SECTION ${section} ` +
    `SEARCH TYPE ${draft.strategy}(${args.join(",")})`;
}

export function buildStructuredSpec(draft: QueryDraft): Record<string, unknown> {
  const strategy: Record<string, unknown> = { type: draft.strategy };
  if (draft.strategy === "similar-clips") {
    strategy.clips = draft.clips ?? [0, 0];
    strategy.params = { k: draft.params.k ?? 3 };
  } else {
    strategy.topics = draft.topics.map((t) => ({ space: t.space, index: t.index }));
    strategy.params = { ...draft.params };
  }
  return {
    domain: draft.spaces,
    section: {
      scene_id: draft.sectionId,
      frame_range: draft.frameRange ?? null,
    },
    strategy,
  };
}

export interface DiagnosticView {
  message: string;
  line: string;    // the query text
  pointer: string; // caret line aligned under the offending position
}

export function describeDiagnostic(text: string, error: string,
                                   position?: number): DiagnosticView {
  const pos = Math.min(Math.max(position ?? 0, 0), text.length);
  return {
    message: error,
    line: text,
    pointer: " ".repeat(pos) + "^",
  };
}

export function validateDraft(draft: QueryDraft): string | null {
  if (draft.spaces.length === 0) return "pick at least one feature space";
  if (!draft.sectionId) return "pick a database section";
  if (draft.strategy === "similar-clips") {
    if (!draft.clips) return "pick a clip interval to search by example";
    return null;
  }
  if (draft.topics.length === 0) return "resolve the sketch to topics first";
  if (draft.strategy === "single-topic" && draft.topics.length !== 1) {
    return "single-topic takes exactly one topic";
  }
  if (draft.strategy === "co-occurrence" && draft.topics.length < 2) {
    return "co-occurrence needs at least two topics";
  }
  for (const t of draft.topics) {
    if (!draft.spaces.includes(t.space)) {
      return `topic ${refText(t)} is outside the query domain`;
    }
  }
  return null;
}
