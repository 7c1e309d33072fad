"""Sudoku toolkit: a formation-cycling solver with tolerance-escalated
guessing and stall-triggered restarts, a backtracking oracle, a difficulty
bench, a CLI, and an HTTP service that streams solver traces."""

from .grid import (
    Cell,
    CellKind,
    Conflict,
    Formation,
    FormationKind,
    Grid,
    GridError,
    InvalidCharacterError,
    InvalidDigitError,
    MalformedRowError,
    candidates,
    count_free_squares,
    format_grid,
    format_grid_inline,
    formation_cells,
    grid_from_digits,
    missing_numbers,
    parse_grid,
    validate_grid,
)
from .model import MODEL_BOARD_ROWS, MODEL_BOARD_TEXT, model_board
from .oracle import (
    Band,
    Difficulty,
    GenerationExhaustedError,
    classify_difficulty,
    count_solutions,
    derive_seed,
    generate_puzzle,
    solve_backtracking,
)
from .solver import (
    Cleared,
    Completed,
    Failed,
    GuessPolicy,
    Placed,
    SolveResult,
    SolverConfig,
    SolverState,
    Stats,
    Status,
    Tick,
    ToleranceRaised,
    TraceEvent,
    check_possible_positions,
    clear_uncertain_squares,
    event_from_dict,
    event_to_dict,
    event_to_json,
    iter_events,
    new_session,
    run_to_completion,
    stats_line,
    tick,
)

__version__ = "0.1.0"
