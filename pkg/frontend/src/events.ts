// NDJSON event stream handling: split a byte stream into lines and parse
// each line into a TraceEvent.

import type { TraceEvent } from "./types.js";

const EVENT_NAMES = new Set([
  "tick", "placed", "tolerance_raised", "cleared", "stats", "completed", "failed",
]);

export function parseEventLine(line: string): TraceEvent {
  const data = JSON.parse(line) as { event?: string };
  if (typeof data.event !== "string" || !EVENT_NAMES.has(data.event)) {
    throw new Error(`not a trace event: ${line}`);
  }
  return data as TraceEvent;
}

/** Yield complete lines from a byte stream, buffering across chunk splits. */
export async function* streamLines(
  body: ReadableStream<Uint8Array>,
): AsyncGenerator<string> {
  const reader = body.getReader();
  const decoder = new TextDecoder();
  let buffer = "";
  try {
    for (;;) {
      const { done, value } = await reader.read();
      if (done) break;
      buffer += decoder.decode(value, { stream: true });
      let newline;
      while ((newline = buffer.indexOf("\n")) >= 0) {
        const line = buffer.slice(0, newline).trim();
        buffer = buffer.slice(newline + 1);
        if (line) yield line;
      }
    }
    buffer += decoder.decode();
    const tail = buffer.trim();
    if (tail) yield tail;
  } finally {
    reader.releaseLock();
  }
}

export async function* streamEvents(
  body: ReadableStream<Uint8Array>,
): AsyncGenerator<TraceEvent> {
  for await (const line of streamLines(body)) {
    yield parseEventLine(line);
  }
}
