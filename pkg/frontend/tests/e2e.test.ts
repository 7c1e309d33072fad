// End-to-end against the real solver service: the board state after applying
// a full streamed solve must equal the CLI's trace replay and final grid for
// the same (grid, seed, config).

import { spawn, spawnSync, type ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { boardFromRows, boardToGridString, replayTrace } from "../src/board.js";
import { parseEventLine, streamEvents } from "../src/events.js";
import type { TraceEvent } from "../src/types.js";

const PYTHON = process.env.PYTHON ?? "python3";
const PORT = 8841;
const BASE = `http://127.0.0.1:${PORT}`;
const SEED = 5;

let server: ChildProcess;

function cli(args: string[], stdin?: string): string {
  const result = spawnSync(PYTHON, ["-m", "sudokit.cli", ...args], {
    input: stdin,
    encoding: "utf8",
    timeout: 60_000,
  });
  if (result.status !== 0) {
    throw new Error(`cli ${args.join(" ")} exited ${result.status}: ${result.stderr}`);
  }
  return result.stdout;
}

async function waitForHealth(): Promise<void> {
  for (let attempt = 0; attempt < 100; attempt++) {
    try {
      const resp = await fetch(`${BASE}/health`);
      if (resp.ok) return;
    } catch {
      // server not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 100));
  }
  throw new Error("service did not become healthy");
}

beforeAll(async () => {
  server = spawn(PYTHON, ["-m", "sudokit.cli", "serve", "--port", String(PORT)], {
    stdio: "ignore",
  });
  await waitForHealth();
}, 30_000);

afterAll(() => {
  server?.kill();
});

describe("stream parity with the CLI", () => {
  it("replaying the service stream reproduces the CLI solve", async () => {
    const model = await (await fetch(`${BASE}/api/model`)).json();
    const initial = boardFromRows(model.rows);

    const solveResp = await fetch(`${BASE}/api/solve`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ grid: model.grid, seed: SEED, paceMs: 0 }),
    });
    expect(solveResp.status).toBe(200);
    const { sessionId } = await solveResp.json();

    const eventsResp = await fetch(`${BASE}/api/sessions/${sessionId}/events`);
    expect(eventsResp.status).toBe(200);
    const streamed: TraceEvent[] = [];
    for await (const event of streamEvents(eventsResp.body!)) {
      streamed.push(event);
    }
    expect(streamed.at(-1)?.event).toBe("completed");

    // identical event sequence offline
    const traceOut = cli(["trace", "--seed", String(SEED), "-"], model.rows.join("\n"));
    const cliEvents = traceOut
      .trim()
      .split("\n")
      .map((line) => parseEventLine(line));
    expect(streamed).toEqual(cliEvents);

    // identical final board, digit for digit
    const streamedBoard = replayTrace(initial, streamed);
    const replayedBoard = replayTrace(initial, cliEvents);
    expect(streamedBoard).toEqual(replayedBoard);

    const solveOut = cli(
      ["solve", "--seed", String(SEED), "--format", "inline", "-"],
      model.rows.join("\n"),
    );
    const finalGrid = solveOut.trim().split("\n")[0];
    expect(boardToGridString(streamedBoard)).toBe(finalGrid);

    // givens survive the whole animation
    initial.forEach((cell, i) => {
      if (cell.kind === "given") {
        expect(streamedBoard[i]).toEqual(cell);
      }
    });
  }, 60_000);

  it("validation reports conflicts before solving", async () => {
    const resp = await fetch(`${BASE}/api/validate`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ grid: "55" + "-".repeat(79) }),
    });
    const body = await resp.json();
    expect(body.conflicts).toEqual([
      { formation: 0, digit: 5 },
      { formation: 18, digit: 5 },
    ]);
  });
});
