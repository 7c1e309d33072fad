"""Board parsing, formation geometry, and legality queries."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sudokit.grid import (
    FORMATIONS,
    Cell,
    CellKind,
    Conflict,
    FormationKind,
    Grid,
    CellOccupiedError,
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

MODEL_ROW0 = "-43-12---"


# --- independent brute-force oracles -----------------------------------------

def brute_candidates(g, idx):
    """Digits absent from the cell's row, column, and box, by exhaustive scan."""
    r, c = idx // 9, idx % 9
    seen = set()
    for j in range(81):
        jr, jc = j // 9, j % 9
        if jr == r or jc == c or (jr // 3 == r // 3 and jc // 3 == c // 3):
            seen.add(g.digit_at(j))
    return set(range(1, 10)) - seen


def brute_conflicts(g):
    """O(27*9^2) duplicate scan over every formation."""
    out = set()
    for f in FORMATIONS:
        for a in range(9):
            for b in range(a + 1, 9):
                da = g.digit_at(f.cell_indices[a])
                if da and da == g.digit_at(f.cell_indices[b]):
                    out.add((f.index, da))
    return out


grids = st.lists(st.integers(0, 9), min_size=81, max_size=81).map(grid_from_digits)


# --- parsing ------------------------------------------------------------------

def test_parse_model_row_places_givens():
    g = parse_grid(MODEL_ROW0 + "\n" + "\n".join(["-" * 9] * 8))
    assert g.cell(1) == Cell(4, CellKind.GIVEN)
    assert g.digit_at(4) == 1
    assert g.cell(0) == Cell(0, CellKind.EMPTY)
    assert g.givens[:9] == (0, 4, 3, 0, 1, 2, 0, 0, 0)


def test_parse_empty_board():
    g = parse_grid("\n".join(["-" * 9] * 9))
    assert count_free_squares(g) == 81
    assert all(c.kind is CellKind.EMPTY for c in g.cells)


def test_parse_rejects_ten_character_row():
    rows = ["-" * 9] * 9
    rows[5] = "-----8-564"
    with pytest.raises(MalformedRowError):
        parse_grid("\n".join(rows))


def test_parse_rejects_bad_characters():
    with pytest.raises(InvalidCharacterError):
        parse_grid("0" * 9 + "\n" + "\n".join(["-" * 9] * 8))
    with pytest.raises(InvalidCharacterError):
        parse_grid("x43-12---\n" + "\n".join(["-" * 9] * 8))


def test_parse_rejects_wrong_row_count():
    with pytest.raises(MalformedRowError):
        parse_grid("\n".join(["-" * 9] * 8))
    with pytest.raises(MalformedRowError):
        parse_grid("-" * 80)


def test_parse_accepts_inline_and_dot_alias():
    g = parse_grid("." * 72 + MODEL_ROW0.replace("-", "."))
    assert g.digit_at(73) == 4
    assert count_free_squares(g) == 77


def test_parse_does_not_validate_consistency():
    g = parse_grid("55-------\n" + "\n".join(["-" * 9] * 8))
    assert g.digit_at(0) == g.digit_at(1) == 5
    assert validate_grid(g) == [Conflict(0, 5), Conflict(18, 5)]


# --- formatting ---------------------------------------------------------------

def test_format_empty_grid():
    assert format_grid(Grid.empty()) == "\n".join(["-" * 9] * 9)


def test_format_round_trips_model_row():
    g = parse_grid(MODEL_ROW0 + "\n" + "\n".join(["-" * 9] * 8))
    assert format_grid(g).splitlines()[0] == MODEL_ROW0


def test_format_inline_is_81_chars():
    g = Grid.empty()
    g.set_cell(80, 9, CellKind.GIVEN)
    s = format_grid_inline(g)
    assert len(s) == 81 and s[-1] == "9" and set(s[:-1]) == {"-"}


@settings(max_examples=60)
@given(grids)
def test_parse_format_round_trip(g):
    again = parse_grid(format_grid(g))
    assert again.digits == g.digits
    assert again.givens == g.digits


# --- formations ---------------------------------------------------------------

def test_formation_rows_columns_boxes():
    assert formation_cells(0).cell_indices == tuple(range(9))
    assert formation_cells(0).kind is FormationKind.ROW
    assert formation_cells(9).cell_indices == tuple(range(0, 81, 9))
    assert formation_cells(9).kind is FormationKind.COLUMN
    assert formation_cells(18).cell_indices == (0, 1, 2, 9, 10, 11, 18, 19, 20)
    assert formation_cells(18).kind is FormationKind.BOX


def test_formation_index_out_of_range():
    for bad in (-1, 27):
        with pytest.raises(IndexError):
            formation_cells(bad)


def test_formations_cover_every_cell_three_times():
    cover = [0] * 81
    for f in FORMATIONS:
        assert len(set(f.cell_indices)) == 9
        for i in f.cell_indices:
            cover[i] += 1
    assert cover == [3] * 81


# --- queries ------------------------------------------------------------------

def test_missing_numbers():
    g = parse_grid(MODEL_ROW0 + "\n" + "\n".join(["-" * 9] * 8))
    assert missing_numbers(g, formation_cells(0)) == {5, 6, 7, 8, 9}
    assert missing_numbers(g, formation_cells(8)) == set(range(1, 10))


def test_missing_numbers_full_formation():
    g = grid_from_digits(list(range(1, 10)) + [0] * 72)
    assert missing_numbers(g, formation_cells(0)) == set()


def test_missing_numbers_with_duplicates():
    g = grid_from_digits([5, 5] + [0] * 79)
    assert missing_numbers(g, formation_cells(0)) == set(range(1, 10)) - {5}


def test_candidates_empty_board():
    assert candidates(Grid.empty(), 40) == set(range(1, 10))


def test_candidates_forced_cell():
    g = grid_from_digits([1, 2, 3, 4, 5, 6, 7, 8, 0] + [0] * 72)
    assert candidates(g, 8) == {9}


def test_candidates_requires_empty_cell():
    g = grid_from_digits([7] + [0] * 80)
    with pytest.raises(CellOccupiedError):
        candidates(g, 0)


@settings(max_examples=60)
@given(grids, st.integers(0, 80))
def test_candidates_match_brute_force(g, idx):
    if g.digit_at(idx) != 0:
        g.clear_cell(idx)
    assert candidates(g, idx) == brute_candidates(g, idx)


@settings(max_examples=60)
@given(grids)
def test_count_free_squares_matches_definition(g):
    assert count_free_squares(g) == sum(1 for i in range(81) if g.digit_at(i) == 0)


@settings(max_examples=60)
@given(grids)
def test_validate_matches_brute_force(g):
    assert set(validate_grid(g)) == brute_conflicts(g)


def test_validate_clean_boards():
    assert validate_grid(Grid.empty()) == []
    solved = parse_grid(
        "123456789\n456789123\n789123456\n"
        "231564897\n564897231\n897231564\n"
        "312645978\n645978312\n978312645"
    )
    assert validate_grid(solved) == []


# --- edits --------------------------------------------------------------------

def test_set_cell_writes_kind_and_certainty():
    g = Grid.empty()
    g.set_cell(0, 7, CellKind.GIVEN)
    assert g.cell(0).digit == 7 and g.cell(0).certain
    g.set_cell(1, 2, CellKind.GUESS)
    assert not g.cell(1).certain


def test_clear_cell_resets_to_empty():
    g = grid_from_digits([7] + [0] * 80)
    g.clear_cell(0)
    assert g.cell(0) == Cell(0, CellKind.EMPTY)
    assert g.givens[0] == 7  # snapshot untouched


def test_set_cell_rejects_zero_and_out_of_range():
    g = Grid.empty()
    for bad in (0, 10, -3):
        with pytest.raises(InvalidDigitError):
            g.set_cell(0, bad, CellKind.GIVEN)


def test_copy_is_independent():
    g = grid_from_digits([7] + [0] * 80)
    h = g.copy()
    h.set_cell(1, 3, CellKind.CERTAIN)
    assert g.digit_at(1) == 0
    assert h.givens == g.givens
