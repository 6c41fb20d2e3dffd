// Thin fetch client for the service API. All retrieval math happens on the
// server; the client only ships payloads back and forth.

import type {
  ClipResponse, QueryErrorDetail, QueryResponse, SceneInfo, SectionInfo,
  SketchResolvePayload, SketchResolveResponse, TopicsResponse, Space,
} from "./types.js";

export class ApiError extends Error {
  status: number;
  detail: QueryErrorDetail | null;

  constructor(status: number, detail: QueryErrorDetail | null, message: string) {
    super(message);
    this.status = status;
    this.detail = detail;
  }
}

export class Client {
  base: string;

  constructor(base = "") {
    this.base = base;
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let response: Response;
    try {
      response = await fetch(this.base + path, init);
    } catch (err) {
      throw new ApiError(0, null, `service unreachable: ${String(err)}`);
    }
    if (!response.ok) {
      let detail: QueryErrorDetail | null = null;
      let message = `${response.status} ${response.statusText}`;
      try {
        const body = await response.json();
        if (typeof body.detail === "string") {
          message = body.detail;
        } else if (body.detail) {
          detail = body.detail as QueryErrorDetail;
          message = detail.error;
        }
      } catch {
        // non-JSON error body: keep the status text
      }
      throw new ApiError(response.status, detail, message);
    }
    return response.json() as Promise<T>;
  }

  scene(): Promise<SceneInfo> {
    return this.request("/api/scene");
  }

  sections(): Promise<SectionInfo[]> {
    return this.request("/api/sections");
  }

  topics(space: Space): Promise<TopicsResponse> {
    return this.request(`/api/topics?space=${space}`);
  }

  queryText(text: string): Promise<QueryResponse> {
    return this.request("/api/query", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ text }),
    });
  }

  querySpec(spec: Record<string, unknown>): Promise<QueryResponse> {
    return this.request("/api/query", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ spec }),
    });
  }

  resolveSketch(payload: SketchResolvePayload): Promise<SketchResolveResponse> {
    return this.request("/api/sketch/resolve", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  clip(clipId: number, section?: string): Promise<ClipResponse> {
    const qs = section ? `?section=${encodeURIComponent(section)}` : "";
    return this.request(`/api/clips/${clipId}${qs}`);
  }

  stats(): Promise<Record<string, unknown>> {
    return this.request("/api/stats");
  }
}
