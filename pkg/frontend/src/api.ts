// Thin client for the solver service.

import { streamEvents } from "./events.js";
import type { ConflictEntry, GeneratePayload, GridPayload, TraceEvent } from "./types.js";

export interface SolveOptions {
  seed: number;
  paceMs?: number;
  stallFactor?: number;
  maxAttempts?: number;
}

export class ApiClient {
  constructor(private readonly baseUrl: string = "") {}

  private async json<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(this.baseUrl + path, init);
    if (!response.ok) {
      throw new Error(`${path} failed: ${response.status} ${await response.text()}`);
    }
    return (await response.json()) as T;
  }

  async startSolve(grid: string, options: SolveOptions): Promise<string> {
    const body = { grid, paceMs: 10, ...options };
    const data = await this.json<{ sessionId: string }>("/api/solve", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    return data.sessionId;
  }

  async *events(sessionId: string): AsyncGenerator<TraceEvent> {
    const response = await fetch(`${this.baseUrl}/api/sessions/${sessionId}/events`);
    if (!response.ok || !response.body) {
      throw new Error(`event stream failed: ${response.status}`);
    }
    yield* streamEvents(response.body);
  }

  async validate(grid: string): Promise<ConflictEntry[]> {
    const data = await this.json<{ conflicts: ConflictEntry[] }>("/api/validate", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ grid }),
    });
    return data.conflicts;
  }

  modelBoard(): Promise<GridPayload> {
    return this.json<GridPayload>("/api/model");
  }

  generate(band: string, seed: number): Promise<GeneratePayload> {
    return this.json<GeneratePayload>(`/api/generate?band=${band}&seed=${seed}`);
  }
}
