"""Command-line entry point.

Commands: solve, trace, generate, classify, bench, serve, restore-model.
Exit codes: 0 success, 1 solver gave up (exhausted / conflicting givens),
2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .bench import BenchPlan, run_bench, summary_table, write_report
from .grid import Grid, GridError, format_grid, format_grid_inline, parse_grid, validate_grid
from .model import model_board
from .oracle import Band, GenerationExhaustedError, classify_difficulty, generate_puzzle
from .solver import (
    GuessPolicy,
    SolverConfig,
    Status,
    event_to_json,
    iter_events,
    new_session,
    stats_line,
)

EXIT_OK = 0
EXIT_SOLVER = 1
EXIT_USAGE = 2


def _default_seed() -> int:
    env = os.environ.get("SUDOKU_SEED")
    try:
        return int(env) if env else 0
    except ValueError:
        return 0


def _add_solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=None,
                   help="RNG seed (default: $SUDOKU_SEED or 0)")
    p.add_argument("--max-attempts", type=int, default=SolverConfig().attempts_cap)
    p.add_argument("--stall-factor", type=int, default=SolverConfig().stall_factor)
    p.add_argument("--guess-policy", choices=[p.value for p in GuessPolicy],
                   default=GuessPolicy.RANDOM_OF_TWO.value)


def _add_format_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("lines", "inline"), default="lines",
                   help="grid output: 9 lines or one 81-char line")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sudokit",
                                     description="Formation-cycling Sudoku solver toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve a puzzle and print the grid plus a stats line")
    p.add_argument("puzzle", help="puzzle file, or '-' for stdin")
    _add_solver_flags(p)
    _add_format_flag(p)
    p.add_argument("--trace", metavar="FILE", help="dump the event stream as JSON lines")

    p = sub.add_parser("trace", help="solve a puzzle, streaming the event trace to stdout")
    p.add_argument("puzzle", help="puzzle file, or '-' for stdin")
    _add_solver_flags(p)

    p = sub.add_parser("generate", help="generate a unique-solution puzzle")
    p.add_argument("--band", required=True,
                   choices=[b.value for b in Band if b is not Band.OTHER])
    p.add_argument("--seed", type=int, default=None)
    _add_format_flag(p)

    p = sub.add_parser("classify", help="print the difficulty band of a puzzle")
    p.add_argument("puzzle", help="puzzle file, or '-' for stdin")

    p = sub.add_parser("bench", help="run the difficulty bench and write a report")
    p.add_argument("--plan", metavar="FILE", help="JSON plan (default: built-in plan)")
    p.add_argument("--out-dir", default="bench-report",
                   help="where records.csv, summary.txt, attempts.png go")

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--ui", metavar="DIR", default=None,
                   help="also serve a static UI directory at /")

    p = sub.add_parser("restore-model", help="print the built-in model board")
    _add_format_flag(p)

    return parser


def _read_grid(source: str) -> Grid:
    text = sys.stdin.read() if source == "-" else Path(source).read_text()
    return parse_grid(text)


def _print_grid(g: Grid, fmt: str) -> None:
    print(format_grid_inline(g) if fmt == "inline" else format_grid(g))


def _solver_config(args: argparse.Namespace) -> SolverConfig:
    seed = args.seed if args.seed is not None else _default_seed()
    return SolverConfig(seed=seed, attempts_cap=args.max_attempts,
                        stall_factor=args.stall_factor,
                        guess_policy=GuessPolicy(args.guess_policy))


def _report_conflicts(g: Grid) -> None:
    for c in validate_grid(g):
        print(f"conflict: digit {c.digit} repeats in formation {c.formation_index}",
              file=sys.stderr)


def cmd_solve(args: argparse.Namespace) -> int:
    state = new_session(_read_grid(args.puzzle), _solver_config(args))
    if state.status is Status.GIVENS_CONFLICT:
        _report_conflicts(state.grid)
        return EXIT_SOLVER
    trace_file = open(args.trace, "w") if args.trace else None
    try:
        for events in iter_events(state):
            if trace_file:
                trace_file.writelines(event_to_json(e) + "\n" for e in events)
    finally:
        if trace_file:
            trace_file.close()
    if state.status is not Status.SOLVED:
        print(f"gave up after {state.tries} attempts", file=sys.stderr)
        return EXIT_SOLVER
    _print_grid(state.grid, args.format)
    print(stats_line(state))
    return EXIT_OK


def cmd_trace(args: argparse.Namespace) -> int:
    state = new_session(_read_grid(args.puzzle), _solver_config(args))
    for events in iter_events(state):
        for e in events:
            print(event_to_json(e))
    return EXIT_OK if state.status is Status.SOLVED else EXIT_SOLVER


def cmd_generate(args: argparse.Namespace) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    try:
        puzzle = generate_puzzle(Band(args.band), seed)
    except GenerationExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    _print_grid(puzzle, args.format)
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    print(classify_difficulty(_read_grid(args.puzzle)).band.value)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        plan = BenchPlan.from_file(args.plan) if args.plan else BenchPlan()
    except ValueError as exc:  # bad JSON, unknown band, invalid counts
        print(f"error: invalid plan: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = run_bench(plan)
    paths = write_report(report, args.out_dir)
    print(summary_table(report))
    print(f"report written to {paths['csv'].parent}")
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(ui_dir=args.ui)
    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def cmd_restore_model(args: argparse.Namespace) -> int:
    _print_grid(model_board(), args.format)
    return EXIT_OK


_COMMANDS = {
    "solve": cmd_solve,
    "trace": cmd_trace,
    "generate": cmd_generate,
    "classify": cmd_classify,
    "bench": cmd_bench,
    "serve": cmd_serve,
    "restore-model": cmd_restore_model,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except GridError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
