// The 9x9 grid component: one <input> per cell, digit entry restricted to
// 1-9, click-to-clear, and row-major keyboard tab order.

import { COLOR_CLASS, type BoardState } from "./board.js";

const KIND_CLASSES = Object.values(COLOR_CLASS);

export class GridView {
  readonly root: HTMLElement;
  private readonly inputs: HTMLInputElement[] = [];
  private locked = false;

  /** onEdit fires after the user types a digit or clicks a cell clear. */
  constructor(container: HTMLElement, private readonly onEdit: (cell: number, digit: number) => void) {
    this.root = document.createElement("div");
    this.root.className = "sudoku-grid";
    for (let cell = 0; cell < 81; cell++) {
      this.root.appendChild(this.buildCell(cell));
    }
    container.appendChild(this.root);
  }

  private buildCell(cell: number): HTMLInputElement {
    const row = Math.floor(cell / 9);
    const col = cell % 9;
    const input = document.createElement("input");
    input.type = "text";
    input.inputMode = "numeric";
    input.maxLength = 1;
    input.autocomplete = "off";
    // explicit tab order must start at 1; 0 would mean "document order"
    input.tabIndex = row * 9 + col + 1;
    input.dataset.cell = String(cell);
    input.className = "cell";
    if (col % 3 === 0) input.classList.add("box-left");
    if (row % 3 === 0) input.classList.add("box-top");
    if (col === 8) input.classList.add("box-right");
    if (row === 8) input.classList.add("box-bottom");

    input.addEventListener("input", () => {
      if (this.locked) {
        input.value = input.dataset.prev ?? "";
        return;
      }
      const match = input.value.match(/[1-9]/);
      if (match) {
        input.value = match[0];
        input.dataset.prev = match[0];
        this.onEdit(cell, Number(match[0]));
      } else {
        // rejected character: restore, like an input restricted to 1-9
        input.value = input.dataset.prev ?? "";
      }
    });
    input.addEventListener("click", () => {
      if (this.locked) return;
      input.value = "";
      input.dataset.prev = "";
      this.onEdit(cell, 0);
    });
    this.inputs.push(input);
    return input;
  }

  render(board: BoardState): void {
    board.forEach((state, cell) => {
      const input = this.inputs[cell]!;
      input.value = state.digit ? String(state.digit) : "";
      input.dataset.prev = input.value;
      input.classList.remove(...KIND_CLASSES);
      if (state.kind) {
        input.classList.add(COLOR_CLASS[state.kind]);
      }
    });
  }

  /** Edits are locked while a solve stream is animating the board. */
  setLocked(locked: boolean): void {
    this.locked = locked;
    this.inputs.forEach((input) => (input.readOnly = locked));
    this.root.classList.toggle("locked", locked);
  }

  highlightConflicts(cells: Iterable<number>): void {
    this.clearConflicts();
    for (const cell of cells) {
      this.inputs[cell]?.classList.add("conflict");
    }
  }

  clearConflicts(): void {
    this.inputs.forEach((input) => input.classList.remove("conflict"));
  }

  input(cell: number): HTMLInputElement {
    const input = this.inputs[cell];
    if (!input) throw new Error(`no cell ${cell}`);
    return input;
  }
}
