import { describe, expect, it } from "vitest";

import { parseEventLine, streamEvents, streamLines } from "../src/events.js";

function bytesStream(chunks: string[]): ReadableStream<Uint8Array> {
  const encoder = new TextEncoder();
  return new ReadableStream({
    start(controller) {
      for (const chunk of chunks) controller.enqueue(encoder.encode(chunk));
      controller.close();
    },
  });
}

async function collect<T>(gen: AsyncGenerator<T>): Promise<T[]> {
  const out: T[] = [];
  for await (const item of gen) out.push(item);
  return out;
}

describe("parseEventLine", () => {
  it("parses known events", () => {
    expect(parseEventLine('{"event":"tick","counter":3,"formation":3}')).toEqual({
      event: "tick",
      counter: 3,
      formation: 3,
    });
    expect(parseEventLine('{"event":"placed","cell":8,"digit":5,"kind":"guess"}')).toEqual({
      event: "placed",
      cell: 8,
      digit: 5,
      kind: "guess",
    });
  });

  it("rejects junk", () => {
    expect(() => parseEventLine('{"event":"mystery"}')).toThrow();
    expect(() => parseEventLine("not json")).toThrow();
  });
});

describe("streamLines", () => {
  it("splits lines regardless of chunk boundaries", async () => {
    const lines = await collect(
      streamLines(bytesStream(['{"a"', ':1}\n{"b":2}\n{"c"', ":3}\n"])),
    );
    expect(lines).toEqual(['{"a":1}', '{"b":2}', '{"c":3}']);
  });

  it("yields a trailing line without a newline", async () => {
    const lines = await collect(streamLines(bytesStream(['{"a":1}\n{"b":2}'])));
    expect(lines).toEqual(['{"a":1}', '{"b":2}']);
  });

  it("skips blank lines", async () => {
    const lines = await collect(streamLines(bytesStream(["\n\n{\"a\":1}\n\n"])));
    expect(lines).toEqual(['{"a":1}']);
  });

  it("handles multi-byte characters split across chunks", async () => {
    const encoded = new TextEncoder().encode('{"s":"é"}\n');
    const stream = new ReadableStream<Uint8Array>({
      start(controller) {
        controller.enqueue(encoded.slice(0, 7)); // splits the é bytes
        controller.enqueue(encoded.slice(7));
        controller.close();
      },
    });
    expect(await collect(streamLines(stream))).toEqual(['{"s":"é"}']);
  });
});

describe("streamEvents", () => {
  it("parses a full event stream", async () => {
    const events = await collect(
      streamEvents(
        bytesStream([
          '{"event":"tick","counter":0,"formation":0}\n',
          '{"event":"placed","cell":1,"digit":2,"kind":"certain"}\n',
          '{"event":"completed","tries":5}\n',
        ]),
      ),
    );
    expect(events.map((e) => e.event)).toEqual(["tick", "placed", "completed"]);
  });
});
