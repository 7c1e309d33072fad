"""Difficulty-band benchmark: run the solver across generated puzzles and
seeds, collect attempt counts, and report them as CSV, a text table, and a
figure. Everything except wall time is deterministic from the plan."""

from __future__ import annotations

import csv
import io
import json
import statistics
import time
from dataclasses import dataclass, replace
from pathlib import Path

from .grid import GRID_CELLS, Grid, count_free_squares, validate_grid
from .oracle import Band, derive_seed, generate_puzzle
from .solver import SolverConfig, GuessPolicy, Status, new_session, run_to_completion

CSV_HEADER = ("test", "band", "givens", "seed", "attempts", "status", "ms")

# stable tags so derived seeds do not depend on plan ordering
_BAND_TAGS = {Band.EASY: 1, Band.MEDIUM: 2, Band.HARD: 3, Band.EVIL: 4}


@dataclass(frozen=True)
class BenchPlan:
    bands: tuple[Band, ...] = (Band.EASY, Band.MEDIUM, Band.HARD, Band.EVIL)
    puzzles_per_band: int = 5
    seeds_per_puzzle: int = 5
    solver: SolverConfig = SolverConfig()

    def __post_init__(self) -> None:
        if self.puzzles_per_band < 1:
            raise ValueError("puzzles_per_band must be >= 1")
        if self.seeds_per_puzzle < 1:
            raise ValueError("seeds_per_puzzle must be >= 1")
        for band in self.bands:
            if band is Band.OTHER:
                raise ValueError("cannot bench the Other band")

    @classmethod
    def from_json(cls, text: str) -> BenchPlan:
        """Plan file schema: bands, puzzlesPerBand, seedsPerPuzzle, solverConfig."""
        raw = json.loads(text)
        fields: dict = {}
        if "bands" in raw:
            fields["bands"] = tuple(Band(b) for b in raw["bands"])
        if "puzzlesPerBand" in raw:
            fields["puzzles_per_band"] = int(raw["puzzlesPerBand"])
        if "seedsPerPuzzle" in raw:
            fields["seeds_per_puzzle"] = int(raw["seedsPerPuzzle"])
        solver = raw.get("solverConfig", {})
        fields["solver"] = SolverConfig(
            seed=int(solver.get("seed", 0)),
            attempts_cap=int(solver.get("attemptsCap", SolverConfig().attempts_cap)),
            stall_factor=int(solver.get("stallFactor", SolverConfig().stall_factor)),
            guess_policy=GuessPolicy(solver.get("guessPolicy", "random")),
        )
        return cls(**fields)

    @classmethod
    def from_file(cls, path: str | Path) -> BenchPlan:
        return cls.from_json(Path(path).read_text())


@dataclass(frozen=True)
class BenchRecord:
    test: int
    band: Band
    givens: int
    seed: int
    attempts: int
    status: Status
    ms: int


@dataclass(frozen=True)
class BandSummary:
    band: Band
    runs: int
    solved: int
    min_attempts: int
    median_attempts: float
    max_attempts: int


@dataclass(frozen=True)
class BenchReport:
    plan: BenchPlan
    records: tuple[BenchRecord, ...]
    summaries: tuple[BandSummary, ...]


def _verify_solved(grid: Grid, puzzle: Grid) -> None:
    # a Solved record must be a real solution extending the puzzle
    if count_free_squares(grid) or validate_grid(grid):
        raise RuntimeError("solver reported Solved for a non-solution")
    for i in range(GRID_CELLS):
        if puzzle.givens[i] and grid.digit_at(i) != puzzle.givens[i]:
            raise RuntimeError("solver altered a given")


def run_bench(plan: BenchPlan) -> BenchReport:
    """Generate puzzles per band, solve each with derived seeds, summarize."""
    records: list[BenchRecord] = []
    test_id = 0
    for band in plan.bands:
        tag = _BAND_TAGS[band]
        for p in range(plan.puzzles_per_band):
            puzzle_seed = derive_seed(plan.solver.seed, tag, p)
            puzzle = generate_puzzle(band, puzzle_seed)
            givens = GRID_CELLS - count_free_squares(puzzle)
            for s in range(plan.seeds_per_puzzle):
                run_seed = derive_seed(puzzle_seed, s)
                config = replace(plan.solver, seed=run_seed)
                test_id += 1
                t0 = time.perf_counter()
                result = run_to_completion(new_session(puzzle, config), collect_trace=False)
                ms = int((time.perf_counter() - t0) * 1000 + 0.5)
                if result.status is Status.SOLVED:
                    _verify_solved(result.grid, puzzle)
                records.append(BenchRecord(test_id, band, givens, run_seed,
                                           result.tries, result.status, ms))
    summaries = []
    for band in plan.bands:
        attempts = [r.attempts for r in records if r.band is band]
        solved = sum(1 for r in records if r.band is band and r.status is Status.SOLVED)
        summaries.append(BandSummary(band, len(attempts), solved, min(attempts),
                                     statistics.median(attempts), max(attempts)))
    return BenchReport(plan, tuple(records), tuple(summaries))


def report_to_csv(report: BenchReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in report.records:
        writer.writerow([r.test, r.band.value, r.givens, r.seed, r.attempts,
                         r.status.value, r.ms])
    return buf.getvalue()


def summary_table(report: BenchReport) -> str:
    lines = [f"{'band':<8}{'runs':>6}{'solved':>8}{'min':>10}{'median':>12}{'max':>10}"]
    for s in report.summaries:
        median = f"{s.median_attempts:.1f}" if s.median_attempts % 1 else f"{int(s.median_attempts)}"
        lines.append(f"{s.band.value:<8}{s.runs:>6}{s.solved:>8}"
                     f"{s.min_attempts:>10}{median:>12}{s.max_attempts:>10}")
    return "\n".join(lines)


def render_attempts_figure(report: BenchReport, path: str | Path) -> None:
    """Per-run attempts by band on a log scale, with per-band medians."""
    from matplotlib.figure import Figure

    fig = Figure(figsize=(7, 4.5))
    ax = fig.add_subplot()
    bands = [s.band for s in report.summaries]
    for x, band in enumerate(bands):
        runs = [r for r in report.records if r.band is band]
        # spread runs horizontally so equal attempt counts stay visible
        xs = [x + (i - (len(runs) - 1) / 2) * (0.6 / max(len(runs), 1)) for i in range(len(runs))]
        solved = [r.status is Status.SOLVED for r in runs]
        ax.scatter([p for p, ok in zip(xs, solved) if ok],
                   [r.attempts for r, ok in zip(runs, solved) if ok],
                   s=18, color="tab:blue", alpha=0.75,
                   label="solved" if x == 0 else None)
        if not all(solved):
            ax.scatter([p for p, ok in zip(xs, solved) if not ok],
                       [r.attempts for r, ok in zip(runs, solved) if not ok],
                       s=22, color="tab:red", marker="x",
                       label="exhausted")
        median = next(s.median_attempts for s in report.summaries if s.band is band)
        ax.hlines(median, x - 0.35, x + 0.35, color="black", linewidth=1.5)
    ax.set_yscale("log")
    ax.set_xticks(range(len(bands)), [b.value for b in bands])
    ax.set_ylabel("attempts")
    ax.set_title("Solver attempts by difficulty band (bars: band medians)")
    ax.grid(True, axis="y", alpha=0.3)
    handles, labels = ax.get_legend_handles_labels()
    if handles:
        ax.legend(dict(zip(labels, handles)).values(), dict(zip(labels, handles)).keys(),
                  loc="upper left")
    fig.tight_layout()
    fig.savefig(path, dpi=150)


def write_report(report: BenchReport, out_dir: str | Path) -> dict[str, Path]:
    """Write records.csv, summary.txt, and attempts.png into out_dir."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {
        "csv": out / "records.csv",
        "summary": out / "summary.txt",
        "figure": out / "attempts.png",
    }
    paths["csv"].write_text(report_to_csv(report))
    paths["summary"].write_text(summary_table(report) + "\n")
    render_attempts_figure(report, paths["figure"])
    return paths
