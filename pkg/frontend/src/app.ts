// Application wiring: board state, solve/clear/restore controls, validation
// highlighting, and live animation of the solver's event stream.

import { ApiClient } from "./api.js";
import {
  applyEvent,
  boardFromRows,
  boardToGridString,
  emptyBoard,
  formationCells,
  statsFromEvent,
  statsLine,
  type BoardState,
} from "./board.js";
import { GridView } from "./grid-view.js";

type Phase = "editing" | "solving";

export class App {
  private board: BoardState = emptyBoard();
  private phase: Phase = "editing";
  private readonly grid: GridView;
  private readonly statsEl: HTMLElement;
  private readonly statusEl: HTMLElement;
  private readonly buttons: Record<"solve" | "clear" | "restore", HTMLButtonElement>;

  constructor(root: HTMLElement, private readonly api: ApiClient, private readonly seed = 0) {
    this.grid = new GridView(root.querySelector(".grid-slot")!, (cell, digit) => {
      this.board = this.board.slice();
      this.board[cell] = digit ? { digit, kind: "given" } : { digit: 0, kind: null };
      this.grid.render(this.board);
      this.grid.clearConflicts();
    });
    this.statsEl = root.querySelector(".stats")!;
    this.statusEl = root.querySelector(".status")!;
    this.buttons = {
      solve: root.querySelector(".solve-btn")!,
      clear: root.querySelector(".clear-btn")!,
      restore: root.querySelector(".restore-btn")!,
    };
    this.buttons.solve.addEventListener("click", () => void this.solve());
    this.buttons.clear.addEventListener("click", () => this.clearBoard());
    this.buttons.restore.addEventListener("click", () => void this.restore());
    this.grid.render(this.board);
  }

  private setPhase(phase: Phase): void {
    this.phase = phase;
    const solving = phase === "solving";
    this.grid.setLocked(solving);
    Object.values(this.buttons).forEach((b) => (b.disabled = solving));
  }

  private setStatus(text: string, isError = false): void {
    this.statusEl.textContent = text;
    this.statusEl.classList.toggle("error", isError);
  }

  clearBoard(): void {
    if (this.phase === "solving") return;
    this.board = emptyBoard();
    this.grid.render(this.board);
    this.grid.clearConflicts();
    this.statsEl.textContent = "";
    this.setStatus("");
  }

  async restore(): Promise<void> {
    if (this.phase === "solving") return;
    const model = await this.api.modelBoard();
    this.board = boardFromRows(model.rows);
    this.grid.render(this.board);
    this.grid.clearConflicts();
    this.statsEl.textContent = "";
    this.setStatus("model board restored");
  }

  async solve(): Promise<void> {
    if (this.phase === "solving") return;
    const gridString = boardToGridString(this.board);
    const conflicts = await this.api.validate(gridString);
    if (conflicts.length > 0) {
      const cells = conflicts.flatMap((c) => formationCells(c.formation));
      this.grid.highlightConflicts(cells);
      this.setStatus(
        `conflicts: ${conflicts.map((c) => `digit ${c.digit} repeats`).join(", ")}`,
        true,
      );
      return;
    }
    this.grid.clearConflicts();
    this.setPhase("solving");
    this.setStatus("solving…");
    try {
      const sessionId = await this.api.startSolve(gridString, { seed: this.seed, paceMs: 10 });
      for await (const event of this.api.events(sessionId)) {
        this.board = applyEvent(this.board, event);
        if (event.event === "placed" || event.event === "cleared") {
          this.grid.render(this.board);
        }
        const stats = statsFromEvent(event);
        if (stats) this.statsEl.textContent = statsLine(stats);
        if (event.event === "completed") {
          this.setStatus(`solved in ${event.tries} attempts`);
        } else if (event.event === "failed") {
          this.setStatus(`failed: ${event.reason}`, true);
        }
      }
    } catch (error) {
      // stream broke: keep the board as of the last applied event
      this.setStatus(`stream error: ${String(error)}`, true);
    } finally {
      this.setPhase("editing");
    }
  }
}

export function mount(root: HTMLElement, baseUrl = ""): App {
  return new App(root, new ApiClient(baseUrl));
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  mount(document.getElementById("app")!);
}
