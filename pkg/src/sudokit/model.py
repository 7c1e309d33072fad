"""The built-in model board: the restore target for the CLI and the UI."""

from __future__ import annotations

from .grid import Grid, parse_grid

# Row 5 differs from the historical demo data, which carried a malformed
# 10-character row; this 9-character replacement drops one filler dash and
# keeps the board conflict-free with a unique solution.
MODEL_BOARD_ROWS = (
    "-43-12---",
    "-----58--",
    "2--39-41-",
    "496-3----",
    "5-24-17-3",
    "----8-564",
    "-68-74--5",
    "--18-----",
    "---15-37-",
)

MODEL_BOARD_TEXT = "\n".join(MODEL_BOARD_ROWS)


def model_board() -> Grid:
    """A fresh copy of the model board, all digits as givens."""
    return parse_grid(MODEL_BOARD_TEXT)
