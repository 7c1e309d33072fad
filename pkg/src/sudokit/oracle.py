"""Ground truth for the solver: exhaustive backtracking, solution counting,
difficulty bands by givens count, and unique-solution puzzle generation."""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .grid import (
    BOX_OF,
    COL_OF,
    GRID_CELLS,
    ROW_OF,
    CellKind,
    Grid,
    count_free_squares,
    grid_from_digits,
)


class GenerationExhaustedError(RuntimeError):
    """Digging could not land in the requested givens band after bounded retries."""


class Band(Enum):
    EASY = "Easy"
    MEDIUM = "Medium"
    HARD = "Hard"
    EVIL = "Evil"
    OTHER = "Other"


# Difficulty is defined purely by how many squares are given.
BAND_GIVENS: dict[Band, tuple[int, int]] = {
    Band.EASY: (34, 35),
    Band.MEDIUM: (29, 30),
    Band.HARD: (26, 27),
    Band.EVIL: (23, 24),
}


@dataclass(frozen=True)
class Difficulty:
    band: Band
    givens: int


def classify_difficulty(g: Grid) -> Difficulty:
    """Band the puzzle by givens count; counts outside every band are Other."""
    givens = GRID_CELLS - count_free_squares(g)
    for band, (lo, hi) in BAND_GIVENS.items():
        if lo <= givens <= hi:
            return Difficulty(band, givens)
    return Difficulty(Band.OTHER, givens)


def _build_masks(digits: list[int]) -> tuple[list[int], list[int], list[int]] | None:
    """Digit-presence bitmasks per row/col/box, or None if a duplicate exists."""
    rows, cols, boxes = [0] * 9, [0] * 9, [0] * 9
    for i, d in enumerate(digits):
        if d:
            bit = 1 << d
            r, c, b = ROW_OF[i], COL_OF[i], BOX_OF[i]
            if (rows[r] | cols[c] | boxes[b]) & bit:
                return None
            rows[r] |= bit
            cols[c] |= bit
            boxes[b] |= bit
    return rows, cols, boxes


def solve_backtracking(g: Grid) -> Grid | None:
    """First complete consistent extension of g, or None if unsatisfiable.

    Depth-first, deterministic: cells in row-major order of first empty,
    digits tried 1..9. No heuristics, by design.
    """
    digits = list(g.digits)
    masks = _build_masks(digits)
    if masks is None:
        return None
    rows, cols, boxes = masks
    empties = [i for i, d in enumerate(digits) if d == 0]

    def bt(k: int) -> bool:
        if k == len(empties):
            return True
        i = empties[k]
        r, c, b = ROW_OF[i], COL_OF[i], BOX_OF[i]
        used = rows[r] | cols[c] | boxes[b]
        for d in range(1, 10):
            bit = 1 << d
            if not used & bit:
                digits[i] = d
                rows[r] |= bit
                cols[c] |= bit
                boxes[b] |= bit
                if bt(k + 1):
                    return True
                rows[r] ^= bit
                cols[c] ^= bit
                boxes[b] ^= bit
        digits[i] = 0
        return False

    if not bt(0):
        return None
    solution = g.copy()
    for i in empties:
        solution.set_cell(i, digits[i], CellKind.CERTAIN)
    return solution


def count_solutions(g: Grid, cap: int = 2) -> int:
    """Exact number of complete extensions if below cap, else cap."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    return _count_solutions_digits(list(g.digits), cap)


def _count_solutions_digits(digits: list[int], cap: int) -> int:
    masks = _build_masks(digits)
    if masks is None:
        return 0
    rows, cols, boxes = masks
    empties = [i for i, d in enumerate(digits) if d == 0]
    count = 0

    def bt(k: int) -> bool:
        nonlocal count
        if k == len(empties):
            count += 1
            return count >= cap
        i = empties[k]
        r, c, b = ROW_OF[i], COL_OF[i], BOX_OF[i]
        used = rows[r] | cols[c] | boxes[b]
        for d in range(1, 10):
            bit = 1 << d
            if not used & bit:
                rows[r] |= bit
                cols[c] |= bit
                boxes[b] |= bit
                done = bt(k + 1)
                rows[r] ^= bit
                cols[c] ^= bit
                boxes[b] ^= bit
                if done:
                    return True
        return False

    bt(0)
    return count


def _count_solutions_mrv(digits: list[int], cap: int) -> int:
    """Solution count with most-constrained-cell ordering.

    Same answer as _count_solutions_digits (counting is order-independent)
    but far faster on sparse boards; used only inside the dig loop, where the
    plain counter is too slow. The public oracle stays heuristic-free.
    """
    masks = _build_masks(digits)
    if masks is None:
        return 0
    rows, cols, boxes = masks
    empties = [i for i, d in enumerate(digits) if d == 0]
    count = 0

    def bt(remaining: list[int]) -> bool:
        nonlocal count
        if not remaining:
            count += 1
            return count >= cap
        best_k, best_n, best_free = -1, 10, 0
        for k, i in enumerate(remaining):
            free = ~(rows[ROW_OF[i]] | cols[COL_OF[i]] | boxes[BOX_OF[i]]) & 0x3FE
            n = bin(free).count("1")
            if n == 0:
                return False
            if n < best_n:
                best_k, best_n, best_free = k, n, free
                if n == 1:
                    break
        i = remaining[best_k]
        rest = remaining[:best_k] + remaining[best_k + 1:]
        r, c, b = ROW_OF[i], COL_OF[i], BOX_OF[i]
        free = best_free
        while free:
            bit = free & -free
            free ^= bit
            rows[r] |= bit
            cols[c] |= bit
            boxes[b] |= bit
            done = bt(rest)
            rows[r] ^= bit
            cols[c] ^= bit
            boxes[b] ^= bit
            if done:
                return True
        return False

    bt(empties)
    return count


_MIX = 0x9E3779B97F4A7C15
_MASK64 = (1 << 64) - 1


def derive_seed(*parts: int) -> int:
    """Deterministically mix integers into a 64-bit seed (splitmix-style)."""
    acc = 0x243F6A8885A308D3
    for p in parts:
        acc = (acc ^ (p & _MASK64)) * _MIX & _MASK64
        acc ^= acc >> 31
    return acc


def _random_full_grid(rng: random.Random) -> list[int]:
    """A complete valid board via backtracking with shuffled digit order."""
    digits = [0] * GRID_CELLS
    rows, cols, boxes = [0] * 9, [0] * 9, [0] * 9

    def bt(i: int) -> bool:
        if i == GRID_CELLS:
            return True
        r, c, b = ROW_OF[i], COL_OF[i], BOX_OF[i]
        used = rows[r] | cols[c] | boxes[b]
        ds = [d for d in range(1, 10) if not used & (1 << d)]
        rng.shuffle(ds)
        for d in ds:
            bit = 1 << d
            digits[i] = d
            rows[r] |= bit
            cols[c] |= bit
            boxes[b] |= bit
            if bt(i + 1):
                return True
            rows[r] ^= bit
            cols[c] ^= bit
            boxes[b] ^= bit
        digits[i] = 0
        return False

    bt(0)
    return digits


def generate_puzzle(band: Band, seed: int, *, max_retries: int = 32) -> Grid:
    """A unique-solution puzzle whose givens count lies in the band's range.

    Fill-then-dig: build a full board, then remove digits in seeded random
    order, refusing any removal that breaks uniqueness, aiming at a target
    count inside the band. Deterministic per (band, seed); retries derive a
    fresh sub-seed when digging gets stuck above the band.
    """
    if band not in BAND_GIVENS:
        raise ValueError(f"cannot generate for band {band.value!r}")
    lo, hi = BAND_GIVENS[band]
    for attempt in range(max_retries):
        rng = random.Random(derive_seed(seed, attempt))
        digits = _random_full_grid(rng)
        target = rng.choice((lo, hi))
        order = list(range(GRID_CELLS))
        rng.shuffle(order)
        givens = GRID_CELLS
        for pos in order:
            if givens <= target:
                break
            saved = digits[pos]
            digits[pos] = 0
            if _count_solutions_mrv(digits, 2) == 1:
                givens -= 1
            else:
                digits[pos] = saved
        if lo <= givens <= hi:
            return grid_from_digits(digits)
    raise GenerationExhaustedError(
        f"no {band.value} puzzle within {max_retries} attempts for seed {seed}")
