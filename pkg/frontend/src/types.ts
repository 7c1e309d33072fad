// Wire types shared with the solver service.

/** How a digit got onto the board; also selects its display color. */
export type PlacementKind = "given" | "certain" | "uncertain" | "guess";

export type TraceEvent =
  | { event: "tick"; counter: number; formation: number }
  | { event: "placed"; cell: number; digit: number; kind: PlacementKind }
  | { event: "tolerance_raised"; tolerance: number }
  | { event: "cleared"; cells: number[] }
  | { event: "stats"; tries: number; free_squares: number; success_rate: number }
  | { event: "completed"; tries: number }
  | { event: "failed"; reason: string };

export interface GridPayload {
  grid: string;
  rows: string[];
}

export interface GeneratePayload extends GridPayload {
  band: string;
  givens: number;
}

export interface ConflictEntry {
  formation: number;
  digit: number;
}
