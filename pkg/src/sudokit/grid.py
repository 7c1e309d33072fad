"""Board representation, text parsing, formation geometry, and legality queries.

A board is 81 cells in row-major order (index = row*9 + col). The 27
"formations" are the constraint groups: rows 0-8, columns 9-17, and the
nine 3x3 boxes 18-26 in row-major box order.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, NamedTuple

GRID_CELLS = 81
DIGITS = frozenset(range(1, 10))


class GridError(ValueError):
    """Base class for board format and edit errors."""


class MalformedRowError(GridError):
    """A puzzle row does not have exactly 9 characters (or 9 rows / 81 chars)."""


class InvalidCharacterError(GridError):
    """A puzzle character is not one of '-', '.', '1'..'9'."""


class InvalidDigitError(GridError):
    """A cell write used a digit outside 1..9 (0 means empty; use clear)."""


class CellOccupiedError(GridError):
    """A query that requires an empty cell was given an occupied one."""


class CellKind(Enum):
    """How a digit got onto the board; drives certainty and display color."""

    EMPTY = "empty"
    GIVEN = "given"          # present at session start (dark blue)
    CERTAIN = "certain"      # forced deduction before any guessing (light blue)
    UNCERTAIN = "uncertain"  # deduction made after guessing began (grey)
    GUESS = "guess"          # one of two legal positions, picked (red)


CERTAIN_KINDS = frozenset((CellKind.GIVEN, CellKind.CERTAIN))


@dataclass(frozen=True, slots=True)
class Cell:
    """Immutable view of one board square."""

    digit: int
    kind: CellKind

    @property
    def certain(self) -> bool:
        return self.kind in CERTAIN_KINDS


EMPTY_CELL = Cell(0, CellKind.EMPTY)

# Row / column / box of every cell index, precomputed.
ROW_OF = tuple(i // 9 for i in range(GRID_CELLS))
COL_OF = tuple(i % 9 for i in range(GRID_CELLS))
BOX_OF = tuple((i // 27) * 3 + (i % 9) // 3 for i in range(GRID_CELLS))


class FormationKind(Enum):
    ROW = "row"
    COLUMN = "column"
    BOX = "box"


@dataclass(frozen=True, slots=True)
class Formation:
    """One of the 27 nine-cell constraint groups."""

    index: int
    kind: FormationKind
    cell_indices: tuple[int, ...]


def _build_formations() -> tuple[Formation, ...]:
    out = []
    for r in range(9):
        out.append(Formation(r, FormationKind.ROW, tuple(r * 9 + c for c in range(9))))
    for c in range(9):
        out.append(Formation(9 + c, FormationKind.COLUMN, tuple(r * 9 + c for r in range(9))))
    for b in range(9):
        r0, c0 = (b // 3) * 3, (b % 3) * 3
        cells = tuple((r0 + dr) * 9 + (c0 + dc) for dr in range(3) for dc in range(3))
        out.append(Formation(18 + b, FormationKind.BOX, cells))
    return tuple(out)


FORMATIONS = _build_formations()


def _build_peers() -> tuple[tuple[int, ...], ...]:
    peers = []
    for i in range(GRID_CELLS):
        seen = {j for j in range(GRID_CELLS)
                if j != i and (ROW_OF[j] == ROW_OF[i] or COL_OF[j] == COL_OF[i]
                               or BOX_OF[j] == BOX_OF[i])}
        peers.append(tuple(sorted(seen)))
    return tuple(peers)


# The 20 cells sharing a row, column, or box with each cell.
PEERS = _build_peers()


class Conflict(NamedTuple):
    """A digit occurring two or more times within one formation."""

    formation_index: int
    digit: int


class Grid:
    """81 cells plus an immutable snapshot of the digits present at construction.

    Mutations go through set_cell/clear_cell; the givens snapshot never changes.
    Grid is a plain value: copy() yields a fully independent board.
    """

    __slots__ = ("_digits", "_kinds", "givens")

    def __init__(self, cells: Iterable[Cell], givens: Iterable[int] | None = None):
        cells = list(cells)
        if len(cells) != GRID_CELLS:
            raise ValueError(f"a grid needs {GRID_CELLS} cells, got {len(cells)}")
        self._digits = [c.digit for c in cells]
        self._kinds = [c.kind for c in cells]
        self.givens = tuple(self._digits) if givens is None else tuple(givens)

    @classmethod
    def empty(cls) -> Grid:
        return cls([EMPTY_CELL] * GRID_CELLS)

    @property
    def digits(self) -> tuple[int, ...]:
        return tuple(self._digits)

    @property
    def cells(self) -> tuple[Cell, ...]:
        return tuple(Cell(d, k) for d, k in zip(self._digits, self._kinds))

    def cell(self, index: int) -> Cell:
        return Cell(self._digits[index], self._kinds[index])

    def digit_at(self, index: int) -> int:
        return self._digits[index]

    def kind_at(self, index: int) -> CellKind:
        return self._kinds[index]

    def is_empty(self, index: int) -> bool:
        return self._digits[index] == 0

    def is_complete(self) -> bool:
        return 0 not in self._digits

    def set_cell(self, index: int, digit: int, kind: CellKind) -> None:
        """Write a digit with the certainty implied by its kind."""
        if not 1 <= digit <= 9:
            raise InvalidDigitError(f"digit must be 1..9, got {digit} (0 means empty; use clear_cell)")
        if kind is CellKind.EMPTY:
            raise ValueError("cannot set a digit with kind EMPTY; use clear_cell")
        self._digits[index] = digit
        self._kinds[index] = kind

    def clear_cell(self, index: int) -> None:
        self._digits[index] = 0
        self._kinds[index] = CellKind.EMPTY

    def copy(self) -> Grid:
        g = object.__new__(Grid)
        g._digits = self._digits.copy()
        g._kinds = self._kinds.copy()
        g.givens = self.givens
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Grid):
            return NotImplemented
        return (self._digits == other._digits and self._kinds == other._kinds
                and self.givens == other.givens)

    def __hash__(self) -> int:
        return hash((tuple(self._digits), tuple(self._kinds), self.givens))

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.cells)

    def __repr__(self) -> str:
        return f"Grid({format_grid_inline(self)!r})"


def grid_from_digits(digits: Iterable[int]) -> Grid:
    """Build a fresh board where every non-zero digit is a given."""
    cells = [Cell(d, CellKind.GIVEN) if d else EMPTY_CELL for d in digits]
    return Grid(cells)


def parse_grid(text: str) -> Grid:
    """Parse board text: 9 lines of 9 characters, or one 81-character line.

    '-' and '.' both mean empty. Every parsed digit becomes a given.
    Consistency is NOT checked here: duplicate digits parse fine so that
    validate_grid can report them.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if len(lines) == 1 and len(lines[0]) == GRID_CELLS:
        rows = [lines[0][i * 9:(i + 1) * 9] for i in range(9)]
    elif len(lines) == 9:
        rows = lines
    else:
        raise MalformedRowError(
            f"expected 9 rows or a single 81-character line, got {len(lines)} row(s)")
    digits: list[int] = []
    for r, row in enumerate(rows):
        if len(row) != 9:
            raise MalformedRowError(f"row {r} has {len(row)} characters, expected 9: {row!r}")
        for ch in row:
            if ch in "-.":
                digits.append(0)
            elif "1" <= ch <= "9":
                digits.append(int(ch))
            else:
                raise InvalidCharacterError(f"invalid character {ch!r} in row {r}")
    return grid_from_digits(digits)


def format_grid(g: Grid) -> str:
    """Render as 9 lines of 9 characters, '-' for empty."""
    rows = []
    for r in range(9):
        rows.append("".join(str(d) if d else "-" for d in g._digits[r * 9:(r + 1) * 9]))
    return "\n".join(rows)


def format_grid_inline(g: Grid) -> str:
    """Render as a single 81-character string, '-' for empty."""
    return "".join(str(d) if d else "-" for d in g._digits)


def formation_cells(index: int) -> Formation:
    """The formation for a cycle counter value 0..26 (rows, columns, boxes)."""
    if not 0 <= index <= 26:
        raise IndexError(f"formation index must be 0..26, got {index}")
    return FORMATIONS[index]


def missing_numbers(g: Grid, f: Formation) -> set[int]:
    """Digits 1..9 not currently placed anywhere in the formation."""
    present = {g._digits[i] for i in f.cell_indices}
    return set(DIGITS) - present


def candidates(g: Grid, cell_index: int) -> set[int]:
    """Digits legal at an empty cell: absent from its row, column, and box."""
    if g._digits[cell_index] != 0:
        raise CellOccupiedError(f"cell {cell_index} holds {g._digits[cell_index]}")
    used = {g._digits[p] for p in PEERS[cell_index]}
    return set(DIGITS) - used


def count_free_squares(g: Grid) -> int:
    """Number of empty cells on the board."""
    return g._digits.count(0)


def validate_grid(g: Grid) -> list[Conflict]:
    """All (formation, digit) pairs where a digit occurs two or more times."""
    out: list[Conflict] = []
    for f in FORMATIONS:
        counts = Counter(d for i in f.cell_indices if (d := g._digits[i]))
        out.extend(Conflict(f.index, d) for d, n in sorted(counts.items()) if n >= 2)
    return out
