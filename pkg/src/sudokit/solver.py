"""Formation-cycling solver.

One tick processes one formation (row, column, or box, cycling 0..26): every
digit missing from the formation is examined once. A digit with exactly one
legal cell is placed (a hidden single). After too many fruitless examinations
the board stalls: all uncertain digits are wiped and the tolerance rises to 2,
which additionally lets a digit with exactly two legal cells be placed as a
guess. A contradiction (a missing digit with no legal cell) triggers the same
wipe immediately. Givens and pre-guess deductions survive every wipe, so the
search restarts from solid ground each time.

Every state change is reported as a trace event; identical (grid, config)
inputs produce identical event streams.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Union

from .grid import (
    BOX_OF,
    COL_OF,
    FORMATIONS,
    ROW_OF,
    CellKind,
    Formation,
    Grid,
    count_free_squares,
    missing_numbers,
    validate_grid,
)

DEFAULT_ATTEMPTS_CAP = 1_000_000
DEFAULT_STALL_FACTOR = 4


class SessionNotRunningError(RuntimeError):
    """tick() was called on a session that already reached a terminal status."""


class GuessPolicy(Enum):
    RANDOM_OF_TWO = "random"
    FIRST_OF_TWO = "first"


class Status(Enum):
    RUNNING = "Running"
    SOLVED = "Solved"
    EXHAUSTED = "Exhausted"
    GIVENS_CONFLICT = "GivensConflict"


@dataclass(frozen=True)
class SolverConfig:
    seed: int = 0
    attempts_cap: int = DEFAULT_ATTEMPTS_CAP
    stall_factor: int = DEFAULT_STALL_FACTOR
    guess_policy: GuessPolicy = GuessPolicy.RANDOM_OF_TWO

    def __post_init__(self) -> None:
        if self.attempts_cap <= 0:
            raise ValueError("attempts_cap must be positive")
        if self.stall_factor <= 0:
            raise ValueError("stall_factor must be positive")


# --- trace events ------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Tick:
    counter: int
    formation: int


@dataclass(frozen=True, slots=True)
class Placed:
    cell: int
    digit: int
    kind: CellKind


@dataclass(frozen=True, slots=True)
class ToleranceRaised:
    tolerance: int


@dataclass(frozen=True, slots=True)
class Cleared:
    cells: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class Stats:
    tries: int
    free_squares: int
    success_rate: int


@dataclass(frozen=True, slots=True)
class Completed:
    tries: int


@dataclass(frozen=True, slots=True)
class Failed:
    reason: str


TraceEvent = Union[Tick, Placed, ToleranceRaised, Cleared, Stats, Completed, Failed]

_EVENT_NAMES: dict[type, str] = {
    Tick: "tick",
    Placed: "placed",
    ToleranceRaised: "tolerance_raised",
    Cleared: "cleared",
    Stats: "stats",
    Completed: "completed",
    Failed: "failed",
}


def event_to_dict(event: TraceEvent) -> dict:
    """Stable wire form: {"event": <name>, ...fields}."""
    if isinstance(event, Tick):
        return {"event": "tick", "counter": event.counter, "formation": event.formation}
    if isinstance(event, Placed):
        return {"event": "placed", "cell": event.cell, "digit": event.digit,
                "kind": event.kind.value}
    if isinstance(event, ToleranceRaised):
        return {"event": "tolerance_raised", "tolerance": event.tolerance}
    if isinstance(event, Cleared):
        return {"event": "cleared", "cells": list(event.cells)}
    if isinstance(event, Stats):
        return {"event": "stats", "tries": event.tries, "free_squares": event.free_squares,
                "success_rate": event.success_rate}
    if isinstance(event, Completed):
        return {"event": "completed", "tries": event.tries}
    if isinstance(event, Failed):
        return {"event": "failed", "reason": event.reason}
    raise TypeError(f"not a trace event: {event!r}")


def event_to_json(event: TraceEvent) -> str:
    return json.dumps(event_to_dict(event), separators=(",", ":"))


def event_from_dict(data: dict) -> TraceEvent:
    """Inverse of event_to_dict, for replaying dumped traces."""
    name = data["event"]
    if name == "tick":
        return Tick(data["counter"], data["formation"])
    if name == "placed":
        return Placed(data["cell"], data["digit"], CellKind(data["kind"]))
    if name == "tolerance_raised":
        return ToleranceRaised(data["tolerance"])
    if name == "cleared":
        return Cleared(tuple(data["cells"]))
    if name == "stats":
        return Stats(data["tries"], data["free_squares"], data["success_rate"])
    if name == "completed":
        return Completed(data["tries"])
    if name == "failed":
        return Failed(data["reason"])
    raise ValueError(f"unknown event name {name!r}")


# --- session state ------------------------------------------------------------

class SolverState:
    """All mutable search state for one solve session.

    Self-contained value: sessions never share anything, so distinct sessions
    may run in parallel. Owns a private copy of the grid.
    """

    __slots__ = ("grid", "config", "counter", "tries", "tries_since_last_result",
                 "tolerance", "certain_mode", "free_squares", "initial_free_squares",
                 "rng", "status", "_row_masks", "_col_masks", "_box_masks")

    def __init__(self, grid: Grid, config: SolverConfig):
        self.grid = grid.copy()
        self.config = config
        self.counter = 0
        self.tries = 0
        self.tries_since_last_result = 0
        self.tolerance = 1
        self.certain_mode = True
        self.free_squares = count_free_squares(self.grid)
        self.initial_free_squares = self.free_squares
        self.rng = random.Random(config.seed)
        self.status = Status.GIVENS_CONFLICT if validate_grid(self.grid) else Status.RUNNING
        self._rebuild_masks()

    @property
    def attempts_cap(self) -> int:
        return self.config.attempts_cap

    def _rebuild_masks(self) -> None:
        # Digit-presence bitmasks per row/col/box; the solver's fast path for
        # "is d legal at cell i". Must be kept in sync with every mutation.
        rows, cols, boxes = [0] * 9, [0] * 9, [0] * 9
        for i, d in enumerate(self.grid._digits):
            if d:
                bit = 1 << d
                rows[ROW_OF[i]] |= bit
                cols[COL_OF[i]] |= bit
                boxes[BOX_OF[i]] |= bit
        self._row_masks, self._col_masks, self._box_masks = rows, cols, boxes

    def _place(self, cell: int, digit: int, kind: CellKind) -> None:
        self.grid.set_cell(cell, digit, kind)
        bit = 1 << digit
        self._row_masks[ROW_OF[cell]] |= bit
        self._col_masks[COL_OF[cell]] |= bit
        self._box_masks[BOX_OF[cell]] |= bit
        self.free_squares -= 1
        self.tries_since_last_result = 0


def new_session(grid: Grid, config: SolverConfig | None = None) -> SolverState:
    """Fresh session over a private copy of the grid.

    Conflicting givens surface as status GIVENS_CONFLICT instead of an
    exception, so callers can report them.
    """
    return SolverState(grid, config or SolverConfig())


def clear_uncertain_squares(state: SolverState) -> list[int]:
    """Empty every cell that is not certain; returns the indices cleared.

    Givens and pre-guess deductions are untouched. free_squares is recounted.
    """
    grid = state.grid
    cleared = [i for i in range(81)
               if grid._digits[i] and grid._kinds[i] not in (CellKind.GIVEN, CellKind.CERTAIN)]
    for i in cleared:
        grid.clear_cell(i)
    state.free_squares = count_free_squares(grid)
    state._rebuild_masks()
    return cleared


def _restart(state: SolverState) -> list[TraceEvent]:
    """Wipe uncertain digits and enable guessing; the conflict/stall recovery."""
    cleared = clear_uncertain_squares(state)
    state.tolerance = 2
    state.certain_mode = False
    state.tries_since_last_result = 0
    return [Cleared(tuple(cleared)), ToleranceRaised(2)]


def check_possible_positions(state: SolverState, digit: int, formation: Formation) -> list[TraceEvent]:
    """Examine one missing digit against one formation.

    Exactly one legal cell: place it (certain before guessing began, uncertain
    after). Exactly two legal cells and tolerance 2: place a guess in one of
    them per the guess policy. No legal cell: the board contradicts itself,
    restart immediately. Anything else: no change.
    """
    grid = state.grid
    digits = grid._digits
    rows, cols, boxes = state._row_masks, state._col_masks, state._box_masks
    bit = 1 << digit
    positions = []
    for i in formation.cell_indices:
        if digits[i] == 0 and not (rows[ROW_OF[i]] | cols[COL_OF[i]] | boxes[BOX_OF[i]]) & bit:
            positions.append(i)
            if len(positions) > 2:
                break
    if len(positions) == 1:
        kind = CellKind.CERTAIN if state.certain_mode else CellKind.UNCERTAIN
        state._place(positions[0], digit, kind)
        return [Placed(positions[0], digit, kind)]
    if len(positions) == 2 and state.tolerance == 2:
        if state.config.guess_policy is GuessPolicy.RANDOM_OF_TWO:
            cell = positions[state.rng.randrange(2)]
        else:
            cell = positions[0]
        state._place(cell, digit, CellKind.GUESS)
        return [Placed(cell, digit, CellKind.GUESS)]
    if not positions:
        return _restart(state)
    return []


def _success_rate(state: SolverState) -> int:
    """Percentage of examinations that placed a digit, rounded half-up."""
    if state.tries == 0:
        return 0
    placed = state.initial_free_squares - state.free_squares
    return int(100 * placed / state.tries + 0.5)


def stats_line(state: SolverState) -> str:
    return f"Attempts: {state.tries}, success rate: {_success_rate(state)}%"


def tick(state: SolverState) -> list[TraceEvent]:
    """Process the current formation once and advance the cycle counter.

    Each missing digit costs one try. Completion is checked after the digit
    loop; otherwise a stall (no result for more than stall_factor *
    free_squares tries) forces a restart. The attempts cap turns the session
    to EXHAUSTED.
    """
    if state.status is not Status.RUNNING:
        raise SessionNotRunningError(f"session is {state.status.value}")
    formation = FORMATIONS[state.counter]
    events: list[TraceEvent] = [Tick(state.counter, formation.index)]
    for digit in sorted(missing_numbers(state.grid, formation)):
        events.extend(check_possible_positions(state, digit, formation))
        state.tries += 1
        state.tries_since_last_result += 1
    if state.free_squares == 0:
        state.status = Status.SOLVED
        events.append(Completed(state.tries))
        return events
    if state.tries_since_last_result > state.config.stall_factor * state.free_squares:
        events.extend(_restart(state))
    events.append(Stats(state.tries, state.free_squares, _success_rate(state)))
    state.counter = (state.counter + 1) % 27
    if state.tries >= state.config.attempts_cap:
        state.status = Status.EXHAUSTED
        events.append(Failed("exhausted"))
    return events


def iter_events(state: SolverState) -> Iterator[list[TraceEvent]]:
    """Yield each tick's events until the session reaches a terminal status.

    A session born with conflicting givens yields a single Failed event; every
    stream therefore ends with Completed or Failed.
    """
    if state.status is Status.GIVENS_CONFLICT:
        yield [Failed("givens_conflict")]
        return
    while state.status is Status.RUNNING:
        yield tick(state)


@dataclass
class SolveResult:
    status: Status
    grid: Grid
    tries: int
    trace: list[TraceEvent]


def run_to_completion(state: SolverState, *, collect_trace: bool = True) -> SolveResult:
    """Tick until the session terminates; optionally keep the full trace."""
    trace: list[TraceEvent] = []
    for events in iter_events(state):
        if collect_trace:
            trace.extend(events)
    return SolveResult(state.status, state.grid, state.tries, trace)
