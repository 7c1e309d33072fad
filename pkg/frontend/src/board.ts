// Pure board state and the trace-event reducer that animates it.
// Keeping this DOM-free makes stream replay directly testable.

import type { PlacementKind, TraceEvent } from "./types.js";

export interface CellState {
  digit: number; // 0 = empty
  kind: PlacementKind | null; // null iff empty
}

export type BoardState = CellState[]; // 81 cells, row-major

export interface SolveStats {
  tries: number;
  freeSquares: number;
  successRate: number;
}

export const COLOR_CLASS: Record<PlacementKind, string> = {
  given: "given-darkblue",
  certain: "certain-lightblue",
  uncertain: "uncertain-grey",
  guess: "guess-red",
};

export function emptyBoard(): BoardState {
  return Array.from({ length: 81 }, () => ({ digit: 0, kind: null }));
}

/** Board from the service's 9 row strings ('-' or '.' = empty, digits given). */
export function boardFromRows(rows: string[]): BoardState {
  if (rows.length !== 9 || rows.some((r) => r.length !== 9)) {
    throw new Error("expected 9 rows of 9 characters");
  }
  return rows
    .join("")
    .split("")
    .map((ch) =>
      ch === "-" || ch === "."
        ? { digit: 0, kind: null }
        : { digit: Number(ch), kind: "given" as PlacementKind },
    );
}

/** 81-character string for the solve endpoint. */
export function boardToGridString(board: BoardState): string {
  return board.map((c) => (c.digit ? String(c.digit) : "-")).join("");
}

/**
 * Apply one trace event, returning the next board state.
 *
 * A given must never change during animation; the solver never overwrites
 * occupied cells, so hitting one means the stream and board diverged.
 */
export function applyEvent(board: BoardState, event: TraceEvent): BoardState {
  switch (event.event) {
    case "placed": {
      const current = board[event.cell];
      if (!current || current.digit !== 0) {
        throw new Error(`placement into occupied cell ${event.cell}`);
      }
      const next = board.slice();
      next[event.cell] = { digit: event.digit, kind: event.kind };
      return next;
    }
    case "cleared": {
      const next = board.slice();
      for (const cell of event.cells) {
        const state = next[cell];
        if (state?.kind === "given") {
          throw new Error(`stream tried to clear given cell ${cell}`);
        }
        next[cell] = { digit: 0, kind: null };
      }
      return next;
    }
    default:
      return board;
  }
}

export function statsFromEvent(event: TraceEvent): SolveStats | null {
  if (event.event !== "stats") return null;
  return {
    tries: event.tries,
    freeSquares: event.free_squares,
    successRate: event.success_rate,
  };
}

export function statsLine(stats: SolveStats): string {
  return `Attempts: ${stats.tries}, success rate: ${stats.successRate}%`;
}

export function replayTrace(initial: BoardState, events: Iterable<TraceEvent>): BoardState {
  let board = initial;
  for (const event of events) {
    board = applyEvent(board, event);
  }
  return board;
}

/**
 * Cells of constraint group 0..26: rows 0-8, columns 9-17, boxes 18-26
 * (row-major box order). Matches the service's conflict formation indices.
 */
export function formationCells(index: number): number[] {
  if (index < 0 || index > 26) throw new Error(`formation index out of range: ${index}`);
  if (index < 9) {
    return Array.from({ length: 9 }, (_, c) => index * 9 + c);
  }
  if (index < 18) {
    const col = index - 9;
    return Array.from({ length: 9 }, (_, r) => r * 9 + col);
  }
  const box = index - 18;
  const r0 = Math.floor(box / 3) * 3;
  const c0 = (box % 3) * 3;
  return Array.from({ length: 9 }, (_, k) => (r0 + Math.floor(k / 3)) * 9 + c0 + (k % 3));
}
