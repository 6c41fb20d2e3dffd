// End-to-end: the sketch -> resolve -> query loop against the real service,
// checked for byte-identical results with the command line.
//
// Builds the junction artifacts once (python pipeline CLI) and serves them
// on a local port for the duration of the suite.

import { execFile, spawn, type ChildProcess } from "node:child_process";
import { existsSync } from "node:fs";
import { mkdir } from "node:fs/promises";
import path from "node:path";
import { fileURLToPath } from "node:url";
import { promisify } from "node:util";

import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { Client, ApiError } from "../../src/api.js";
import { composeDsl, buildStructuredSpec, describeDiagnostic } from "../../src/dsl.js";
import type { QueryDraft } from "../../src/dsl.js";
import { sketchPayload, addRegion, addStroke, initialState } from "../../src/state.js";

const execFileP = promisify(execFile);

const HERE = path.dirname(fileURLToPath(import.meta.url));
const FIXTURES = path.join(HERE, "..", "fixtures", "artifacts");
const PORT = 8719;
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess | null = null;
const client = new Client(BASE);

async function ensureFixtures(): Promise<void> {
  if (existsSync(path.join(FIXTURES, "database.jsonl"))) return;
  await mkdir(path.dirname(FIXTURES), { recursive: true });
  await execFileP("python3",
    ["-m", "sceneseek.cli", "pipeline", "--scenario", "junction",
     "--outdir", FIXTURES],
    { timeout: 240_000 });
}

async function waitForServer(): Promise<void> {
  for (let i = 0; i < 120; i++) {
    try {
      const r = await fetch(`${BASE}/api/scene`);
      if (r.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 500));
  }
  throw new Error("service did not come up");
}

async function cliSearch(query: string): Promise<{
  query: string; results: unknown[];
}> {
  const { stdout } = await execFileP("python3",
    ["-m", "sceneseek.cli", "search", "--artifacts", FIXTURES,
     "--json", "--query", query],
    { timeout: 120_000 });
  return JSON.parse(stdout);
}

beforeAll(async () => {
  await ensureFixtures();
  server = spawn("python3",
    ["-m", "sceneseek.cli", "serve", "--artifacts", FIXTURES,
     "--port", String(PORT), "--no-frames"],
    { stdio: "ignore" });
  await waitForServer();
}, 300_000);

afterAll(() => {
  server?.kill();
});

describe("sketch -> resolve -> query parity with the CLI", () => {
  it("region sketch resolves and returns byte-identical results", async () => {
    const scene = await client.scene();
    let state = initialState(scene.grid.w, scene.grid.h, "scene1");
    // lasso around the parked-vehicle zone of the junction scene
    state = addRegion(state, [[2, 6], [4, 6], [4, 8], [2, 8]],
                      "persistence").state;
    const resolved = await client.resolveSketch(sketchPayload(state, 3));
    const candidates = resolved.elements[0].runs[0].candidates;
    expect(candidates.length).toBeGreaterThan(0);

    const draft: QueryDraft = {
      spaces: ["persistence"],
      sectionId: "scene1",
      frameRange: null,
      strategy: "single-topic",
      topics: [{ space: candidates[0].space, index: candidates[0].index }],
      params: {},
      clips: null,
    };
    const dsl = composeDsl(draft);

    const viaService = await client.queryText(dsl);
    const viaCli = await cliSearch(dsl);

    expect(viaService.results.length).toBeGreaterThan(0);
    expect(JSON.stringify(viaService.results))
      .toBe(JSON.stringify(viaCli.results));
    expect(viaService.query).toBe(viaCli.query);
    // the service echo proves the displayed DSL is the executed query
    expect(viaService.query).toBe(dsl);
  }, 120_000);

  it("path sketch resolves to a direction-matched motion topic", async () => {
    const scene = await client.scene();
    let state = initialState(scene.grid.w, scene.grid.h, "scene1");
    // eastbound lane of the junction scene
    state = addStroke(state, [[0, 4], [10, 4]]).state;
    const resolved = await client.resolveSketch(sketchPayload(state, 3));
    const run = resolved.elements[0].runs[0];
    expect(run.direction_name).toBe("E");
    expect(run.candidates.length).toBeGreaterThan(0);

    const dsl = composeDsl({
      spaces: ["motion"], sectionId: "scene1", frameRange: null,
      strategy: "single-topic",
      topics: [{ space: "motion", index: run.candidates[0].index }],
      params: {}, clips: null,
    });
    const viaService = await client.queryText(dsl);
    const viaCli = await cliSearch(dsl);
    expect(JSON.stringify(viaService.results))
      .toBe(JSON.stringify(viaCli.results));
  }, 120_000);

  it("structured submissions match their DSL text exactly", async () => {
    const draft: QueryDraft = {
      spaces: ["motion", "persistence"],
      sectionId: "scene1",
      frameRange: null,
      strategy: "co-occurrence",
      topics: [{ space: "motion", index: 0 },
               { space: "persistence", index: 0 }],
      params: {},
      clips: null,
    };
    const viaText = await client.queryText(composeDsl(draft));
    const viaSpec = await client.querySpec(buildStructuredSpec(draft));
    expect(JSON.stringify(viaText.results))
      .toBe(JSON.stringify(viaSpec.results));
    expect(viaSpec.query).toBe(composeDsl(draft));
  }, 120_000);

  it("invalid DSL surfaces the server diagnostic inline", async () => {
    const text = "QUERY DOMAIN motion SEARCH TYPE single-topic(t2)";
    let caught: ApiError | null = null;
    try {
      await client.queryText(text);
    } catch (err) {
      caught = err as ApiError;
    }
    expect(caught).not.toBeNull();
    expect(caught!.status).toBe(400);
    expect(caught!.detail?.error).toContain("SECTION");
    const diag = describeDiagnostic(text, caught!.detail!.error,
                                    caught!.detail!.position);
    expect(diag.pointer.indexOf("^")).toBe(caught!.detail!.position);
    expect(diag.message).toContain("missing mandatory keyword SECTION");
  }, 120_000);

  it("similar clips and clip playback endpoints cooperate", async () => {
    const dsl = composeDsl({
      spaces: ["motion"], sectionId: "scene1", frameRange: null,
      strategy: "similar-clips", topics: [], params: { k: 3 },
      clips: [5, 5],
    });
    const viaService = await client.queryText(dsl);
    const viaCli = await cliSearch(dsl);
    expect(JSON.stringify(viaService.results))
      .toBe(JSON.stringify(viaCli.results));
    expect(viaService.results[0].start_clip).toBe(5); // self-distance 0
    const clip = await client.clip(viaService.results[0].start_clip, "scene1");
    expect(clip.clip_id).toBe(5);
    expect(clip.topics).toBeDefined();
  }, 120_000);
});
