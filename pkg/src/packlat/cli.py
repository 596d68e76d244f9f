"""Command-line entry point for reproducible packing-coloring experiments.

Subcommands: solve, verify, chi, split, solve-unit, resume, merge, render.
Reports are JSON on stdout; everything except the single ``volatile``
field is stable across runs of identical inputs in sequential mode.

Exit codes: 0 = SAT / OK, 10 = UNSAT, 11 = verification violation,
20 = interrupted, 1 = any error (including usage errors).
"""

from __future__ import annotations

import argparse
import json
import os
import platform
import signal
import sys
import time
from pathlib import Path

from packlat import __version__
from packlat.coloring import (
    coloring_to_dict,
    format_coloring_text,
    load_coloring,
    verify,
)
from packlat.errors import MalformedInput, PacklatError
from packlat.grid import GridSpec, Position
from packlat.oracle import packing_chromatic_number
from packlat.render import render_ascii, render_svg
from packlat.search import (
    DEFAULT_PROGRESS_EVERY,
    INTERRUPTED,
    SAT,
    UNSAT,
    Checkpoint,
    SolveResult,
    UnitOutcome,
    WorkUnit,
    default_workers,
    merge_outcomes,
    resume,
    solve,
    solve_parallel,
    solve_unit,
    split,
)

CONVENTION = (
    "cells addressed as (col,row), 1-indexed; window is width columns by "
    "height rows; scan order row-major, row 1 first"
)

STATUS_EXIT = {SAT: 0, UNSAT: 10, INTERRUPTED: 20}
EXIT_VIOLATION = 11
MANIFEST_VERSION = 1


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # spec'd contract: usage problems exit 1, not argparse's default 2
    def error(self, message):
        raise _UsageError(message)


def _add_grid_args(parser: argparse.ArgumentParser, with_file: bool = True) -> None:
    if with_file:
        parser.add_argument(
            "grid_file", nargs="?", default=None,
            help="grid spec JSON file (alternative to --width/--height/--k)",
        )
    parser.add_argument("--width", type=int, help="window columns")
    parser.add_argument("--height", type=int, help="window rows")
    parser.add_argument("--k", type=int, help="color budget")
    parser.add_argument(
        "--anchor", action="append", default=[], metavar="COL,ROW,COLOR",
        help="precolored cell, repeatable",
    )


def _parse_anchor(text: str) -> tuple[Position, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise MalformedInput(f"anchor must be COL,ROW,COLOR, got {text!r}")
    try:
        col, row, color = (int(p) for p in parts)
    except ValueError as exc:
        raise MalformedInput(f"bad anchor {text!r}: {exc}") from exc
    return Position(col, row), color


def _grid_from_args(args) -> GridSpec:
    if getattr(args, "grid_file", None):
        text = Path(args.grid_file).read_text(encoding="utf-8")
        grid = GridSpec.from_json(text)
        if args.anchor or args.width or args.height or args.k:
            raise MalformedInput("give either a grid file or flags, not both")
        return grid
    if args.width is None or args.height is None or args.k is None:
        raise _UsageError("need a grid file or all of --width, --height, --k")
    anchors = tuple(_parse_anchor(a) for a in args.anchor)
    return GridSpec(args.width, args.height, args.k, anchors)


def _volatile(t0_wall: float, elapsed: float) -> dict:
    return {
        "started_at_unix": t0_wall,
        "elapsed_seconds": elapsed,
        "host": platform.node(),
        "pid": os.getpid(),
    }


def lower_bound_note(grid: GridSpec) -> dict:
    """The inference an anchored (or plain) UNSAT window supports.

    The tool certifies only the finite statement; the step to the infinite
    lattice rides on the stated assumption when anchors are involved.
    """
    k = grid.max_color
    w, h = grid.width, grid.height
    claim = f"packing chromatic number of the infinite square lattice >= {k + 1}"
    if not grid.anchors:
        return {
            "claim": claim,
            "argument": (
                f"A packing {k}-coloring of the infinite square lattice would "
                f"restrict to a packing {k}-coloring of any {w}x{h} window, "
                f"because rectangular windows preserve lattice distances. The "
                f"exhausted search shows no such window coloring exists."
            ),
            "assumption": None,
        }
    if len(grid.anchors) == 1:
        (pos, color), = grid.anchors
        return {
            "claim": claim,
            "argument": (
                f"If a packing {k}-coloring of the infinite square lattice "
                f"put color {color} on any cell, the {w}x{h} window taken "
                f"around that cell, placed at (col {pos.col}, row {pos.row}), "
                f"would be a packing {k}-coloring of the window extending the "
                f"anchor. The exhausted search shows no such window coloring "
                f"exists."
            ),
            "assumption": (
                f"every packing {k}-coloring of the lattice uses color "
                f"{color} somewhere; this premise is assumed here, not proved"
            ),
        }
    return {
        "claim": claim,
        "argument": (
            f"No packing {k}-coloring of the {w}x{h} window realizes the "
            f"anchor pattern, so no packing {k}-coloring of the lattice "
            f"contains a window matching it."
        ),
        "assumption": (
            f"every packing {k}-coloring of the lattice realizes the anchor "
            f"pattern in some window placement; this premise is assumed "
            f"here, not proved"
        ),
    }


def build_report(
    grid: GridSpec,
    mode: str,
    flags: dict,
    result: SolveResult,
    t0_wall: float,
    extra: dict | None = None,
) -> dict:
    report = {
        "tool": "packlat",
        "version": __version__,
        "convention": CONVENTION,
        "grid": grid.to_dict(),
        "mode": mode,
        "flags": flags,
        "status": result.status,
        "stats": result.stats.counters(),
        "witness": result.coloring,
        "lower_bound": lower_bound_note(grid) if result.status == UNSAT else None,
        "volatile": _volatile(t0_wall, result.stats.elapsed),
    }
    if result.parallel is not None:
        report["parallel"] = {
            "depth": result.parallel.depth,
            "units": result.parallel.units,
            "unit_nodes_total": result.parallel.unit_nodes_total,
            "emitted_prefix_assignments": result.parallel.emitted_prefix_assignments,
            "prefix_overhead": result.parallel.prefix_overhead,
            "count_reproducible": result.parallel.count_reproducible,
            "early_exit": result.parallel.early_exit,
            "workers": result.parallel.workers,
        }
    if extra:
        report.update(extra)
    return report


def _emit_report(report: dict) -> None:
    print(json.dumps(report, indent=2, sort_keys=True))


def _write_witness(path: str, grid: GridSpec, rows: list[list[int]]) -> None:
    out = Path(path)
    if out.suffix == ".json":
        out.write_text(
            json.dumps(coloring_to_dict(grid, rows), indent=2, sort_keys=True) + "\n",
            encoding="utf-8",
        )
    else:
        out.write_text(format_coloring_text(rows), encoding="utf-8")


def _progress_printer(t0: float):
    def on_progress(nodes: int, frontier: int) -> None:
        elapsed = time.perf_counter() - t0
        rate = nodes / elapsed if elapsed > 0 else 0.0
        print(
            f"[packlat] nodes={nodes:,} frontier={frontier} cells "
            f"elapsed={elapsed:.1f}s rate={rate:,.0f}/s",
            file=sys.stderr,
            flush=True,
        )
    return on_progress


def _run_sequential(args, grid: GridSpec, from_checkpoint: Checkpoint | None):
    """Shared driver for cmd_solve (seq) and cmd_resume."""
    checkpoint_file = args.checkpoint_file
    if args.checkpoint_every and not checkpoint_file:
        raise _UsageError("--checkpoint-every needs --checkpoint-file")

    def on_checkpoint(cp: Checkpoint) -> None:
        Path(checkpoint_file).write_text(
            json.dumps(cp.to_dict(), sort_keys=True) + "\n", encoding="utf-8"
        )

    flag = {"hit": False}

    def _handler(signum, frame):
        flag["hit"] = True

    t0 = time.perf_counter()
    old_handler = signal.signal(signal.SIGINT, _handler)
    try:
        kwargs = dict(
            naive=args.naive_check,
            checkpoint_every=args.checkpoint_every,
            on_checkpoint=on_checkpoint if args.checkpoint_every else None,
            progress_every=args.progress_every,
            on_progress=_progress_printer(t0),
            interrupted=lambda: flag["hit"],
        )
        if from_checkpoint is None:
            result = solve(grid, **kwargs)
        else:
            result = resume(from_checkpoint, **kwargs)
    finally:
        signal.signal(signal.SIGINT, old_handler)
    return result


def cmd_solve(args) -> int:
    grid = _grid_from_args(args)
    t0_wall = time.time()
    flags = {
        "mode": args.mode,
        "naive_check": bool(args.naive_check),
        "split_depth": args.split_depth,
        "checkpoint_every": args.checkpoint_every,
        "early_exit": bool(args.early_exit),
    }
    extra: dict = {}
    if args.mode == "par":
        if args.naive_check:
            raise _UsageError("--naive-check applies to sequential mode only")
        if args.checkpoint_every:
            raise _UsageError(
                "checkpointing applies to sequential mode; parallel runs are "
                "resumed per unit"
            )
        depth = args.split_depth if args.split_depth else 2
        result = solve_parallel(
            grid, depth, workers=args.workers, early_exit=args.early_exit
        )
    else:
        result = _run_sequential(args, grid, from_checkpoint=None)
        if result.status == INTERRUPTED:
            path = args.checkpoint_file or "packlat-interrupted.checkpoint.json"
            Path(path).write_text(
                json.dumps(result.checkpoint.to_dict(), sort_keys=True) + "\n",
                encoding="utf-8",
            )
            extra["checkpoint_file"] = path
    if result.coloring is not None and args.witness_file:
        _write_witness(args.witness_file, grid, result.coloring)
        extra["witness_file"] = args.witness_file
    _emit_report(build_report(grid, args.mode, flags, result, t0_wall, extra))
    return STATUS_EXIT[result.status]


def cmd_resume(args) -> int:
    data = json.loads(Path(args.checkpoint).read_text(encoding="utf-8"))
    checkpoint = Checkpoint.from_dict(data)
    grid = checkpoint.grid
    t0_wall = time.time()
    flags = {
        "mode": "resume",
        "naive_check": bool(args.naive_check),
        "resumed_from_nodes": checkpoint.nodes,
        "checkpoint_every": args.checkpoint_every,
    }
    result = _run_sequential(args, grid, from_checkpoint=checkpoint)
    extra: dict = {}
    if result.status == INTERRUPTED:
        path = args.checkpoint_file or args.checkpoint
        Path(path).write_text(
            json.dumps(result.checkpoint.to_dict(), sort_keys=True) + "\n",
            encoding="utf-8",
        )
        extra["checkpoint_file"] = path
    if result.coloring is not None and args.witness_file:
        _write_witness(args.witness_file, grid, result.coloring)
        extra["witness_file"] = args.witness_file
    _emit_report(build_report(grid, "resume", flags, result, t0_wall, extra))
    return STATUS_EXIT[result.status]


def cmd_verify(args) -> int:
    text = Path(args.coloring).read_text(encoding="utf-8")
    grid = None
    if args.grid_file or args.width or args.height or args.k or args.anchor:
        grid = _grid_from_args(args)
    file_grid, rows = load_coloring(text, grid)
    if grid is not None and file_grid != grid:
        raise MalformedInput("coloring file's embedded grid disagrees with flags")
    violation = verify(file_grid, rows)
    if violation is None:
        print("OK")
        return 0
    print(
        f"VIOLATION color={violation.color} "
        f"first=({violation.first.col},{violation.first.row}) "
        f"second=({violation.second.col},{violation.second.row})"
    )
    return EXIT_VIOLATION


def cmd_chi(args) -> int:
    value = packing_chromatic_number(args.width, args.height, args.cap)
    print(f">{args.cap}" if value is None else str(value))
    return 0


def cmd_split(args) -> int:
    grid = _grid_from_args(args)
    result = split(grid, args.split_depth)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    unit_files = []
    for i, unit in enumerate(result.units):
        name = f"unit_{i:04d}.json"
        (out_dir / name).write_text(
            json.dumps(unit.to_dict(), sort_keys=True) + "\n", encoding="utf-8"
        )
        unit_files.append(name)
    manifest = {
        "version": MANIFEST_VERSION,
        "convention": CONVENTION,
        "grid": grid.to_dict(),
        "depth": result.depth,
        "units": len(result.units),
        "emitted_prefix_assignments": result.emitted_prefix_assignments,
        "prefix_overhead": result.prefix_overhead,
        "assignments_at_emission": list(result.assignments_at_emission),
        "unit_files": unit_files,
    }
    (out_dir / "split.json").write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    print(json.dumps(manifest, indent=2, sort_keys=True))
    return 0


def cmd_solve_unit(args) -> int:
    data = json.loads(Path(args.unit).read_text(encoding="utf-8"))
    unit = WorkUnit.from_dict(data)
    t0_wall = time.time()
    result = solve_unit(unit, naive=args.naive_check)
    extra = {"unit": {"prefix": list(unit.prefix)}}
    if result.coloring is not None and args.witness_file:
        _write_witness(args.witness_file, unit.grid, result.coloring)
        extra["witness_file"] = args.witness_file
    flags = {"mode": "unit", "naive_check": bool(args.naive_check)}
    _emit_report(build_report(unit.grid, "unit", flags, result, t0_wall, extra))
    return STATUS_EXIT[result.status]


def cmd_merge(args) -> int:
    manifest = json.loads(Path(args.manifest).read_text(encoding="utf-8"))
    if manifest.get("version") != MANIFEST_VERSION:
        raise MalformedInput(f"unsupported split manifest version {manifest.get('version')!r}")
    grid = GridSpec.from_dict(manifest["grid"])
    from packlat.search import SplitResult  # local: reconstruct from manifest

    outcomes = []
    for path in args.reports:
        report = json.loads(Path(path).read_text(encoding="utf-8"))
        if GridSpec.from_dict(report["grid"]) != grid:
            raise MalformedInput(f"report {path} is for a different grid")
        outcomes.append(
            UnitOutcome(
                prefix=tuple(report["unit"]["prefix"]),
                status=report["status"],
                nodes=report["stats"]["nodes"],
                coloring=report.get("witness"),
                tests=report["stats"].get("tests", 0),
                calls=report["stats"].get("calls", 0),
                max_depth=report["stats"].get("max_depth", 0),
            )
        )
    units = tuple(
        WorkUnit(grid, o.prefix) for o in sorted(outcomes, key=lambda o: o.prefix)
    )
    if len(units) != manifest["units"]:
        raise MalformedInput(
            f"{len(units)} unit reports for a split of {manifest['units']} units"
        )
    split_result = SplitResult(
        units=units,
        depth=manifest["depth"],
        emitted_prefix_assignments=manifest["emitted_prefix_assignments"],
        prefix_overhead=manifest["prefix_overhead"],
        assignments_at_emission=tuple(manifest["assignments_at_emission"]),
    )
    status, coloring, sequential, unit_total = merge_outcomes(split_result, outcomes)
    merged = {
        "tool": "packlat",
        "version": __version__,
        "convention": CONVENTION,
        "grid": grid.to_dict(),
        "mode": "merge",
        "status": status,
        "witness": coloring,
        "stats": {"nodes": sequential},
        "merge": {
            "units": len(outcomes),
            "unit_nodes_total": unit_total,
            "emitted_prefix_assignments": manifest["emitted_prefix_assignments"],
            "prefix_overhead": manifest["prefix_overhead"],
        },
        "lower_bound": lower_bound_note(grid) if status == UNSAT else None,
    }
    if args.expect_sequential_nodes is not None:
        if sequential != args.expect_sequential_nodes:
            print(
                f"packlat: count additivity FAILED: reconstructed {sequential} "
                f"!= expected {args.expect_sequential_nodes}",
                file=sys.stderr,
            )
            return 1
        merged["merge"]["matches_sequential_nodes"] = args.expect_sequential_nodes
    _emit_report(merged)
    return STATUS_EXIT[status]


def cmd_render(args) -> int:
    text = Path(args.coloring).read_text(encoding="utf-8")
    grid = None
    if args.grid_file or args.width or args.height or args.k or args.anchor:
        grid = _grid_from_args(args)
    _, rows = load_coloring(text, grid)
    rendered = render_svg(rows) if args.format == "svg" else render_ascii(rows)
    if args.out:
        Path(args.out).write_text(rendered, encoding="utf-8")
    else:
        sys.stdout.write(rendered)
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="packlat",
        description="Exact search and verification for packing colorings "
                    "of rectangular windows of the square lattice.",
    )
    parser.add_argument("--version", action="version", version=f"packlat {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="search a window for a packing coloring")
    _add_grid_args(p_solve)
    p_solve.add_argument("--mode", choices=["seq", "par"], default="seq")
    p_solve.add_argument("--split-depth", type=int, default=None,
                         help="prefix length for parallel work units")
    p_solve.add_argument("--workers", type=int, default=None,
                         help=f"worker processes (default {default_workers()}, "
                              f"capped by PACKLAT_THREADS)")
    p_solve.add_argument("--early-exit", action="store_true",
                         help="parallel mode: stop at the first SAT unit "
                              "(node counts no longer reproduce sequential)")
    p_solve.add_argument("--naive-check", action="store_true",
                         help="use the ball-rescan admissibility test "
                              "(slow, for differential runs)")
    p_solve.add_argument("--checkpoint-every", type=int, default=None, metavar="NODES")
    p_solve.add_argument("--checkpoint-file", default=None)
    p_solve.add_argument("--witness-file", default=None)
    p_solve.add_argument("--progress-every", type=int,
                         default=DEFAULT_PROGRESS_EVERY, metavar="NODES",
                         help="stderr status line interval in nodes")
    p_solve.set_defaults(func=cmd_solve)

    p_verify = sub.add_parser("verify", help="check a complete coloring file")
    p_verify.add_argument("coloring", help="coloring file (text or JSON)")
    p_verify.add_argument("--grid", dest="grid_file", default=None,
                          help="grid spec JSON file for text colorings")
    p_verify.add_argument("--width", type=int)
    p_verify.add_argument("--height", type=int)
    p_verify.add_argument("--k", type=int)
    p_verify.add_argument("--anchor", action="append", default=[],
                          metavar="COL,ROW,COLOR")
    p_verify.set_defaults(func=cmd_verify)

    p_chi = sub.add_parser("chi", help="exact packing chromatic number of a "
                                       "small window, by brute force")
    p_chi.add_argument("--width", type=int, required=True)
    p_chi.add_argument("--height", type=int, required=True)
    p_chi.add_argument("--cap", type=int, default=6,
                       help="largest budget to try (default 6)")
    p_chi.set_defaults(func=cmd_chi)

    p_split = sub.add_parser("split", help="cut the search into work units")
    _add_grid_args(p_split)
    p_split.add_argument("--split-depth", type=int, required=True)
    p_split.add_argument("--out-dir", default="units")
    p_split.set_defaults(func=cmd_split)

    p_unit = sub.add_parser("solve-unit", help="run one work unit file")
    p_unit.add_argument("unit", help="work unit JSON file")
    p_unit.add_argument("--naive-check", action="store_true")
    p_unit.add_argument("--witness-file", default=None)
    p_unit.set_defaults(func=cmd_solve_unit)

    p_resume = sub.add_parser("resume", help="continue from a checkpoint file")
    p_resume.add_argument("checkpoint")
    p_resume.add_argument("--naive-check", action="store_true")
    p_resume.add_argument("--checkpoint-every", type=int, default=None)
    p_resume.add_argument("--checkpoint-file", default=None)
    p_resume.add_argument("--witness-file", default=None)
    p_resume.add_argument("--progress-every", type=int,
                          default=DEFAULT_PROGRESS_EVERY)
    p_resume.set_defaults(func=cmd_resume)

    p_merge = sub.add_parser("merge", help="combine unit reports, checking "
                                           "the count additivity identity")
    p_merge.add_argument("manifest", help="split.json written by the split command")
    p_merge.add_argument("reports", nargs="+", help="solve-unit report files")
    p_merge.add_argument("--expect-sequential-nodes", type=int, default=None,
                         help="fail loudly unless the reconstructed count matches")
    p_merge.set_defaults(func=cmd_merge)

    p_render = sub.add_parser("render", help="draw a coloring as text or SVG")
    p_render.add_argument("coloring")
    p_render.add_argument("--grid", dest="grid_file", default=None)
    p_render.add_argument("--width", type=int)
    p_render.add_argument("--height", type=int)
    p_render.add_argument("--k", type=int)
    p_render.add_argument("--anchor", action="append", default=[],
                          metavar="COL,ROW,COLOR")
    p_render.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    p_render.add_argument("--out", default=None)
    p_render.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"packlat: usage error: {exc}", file=sys.stderr)
        return 1
    except PacklatError as exc:
        print(f"packlat: error: {exc}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"packlat: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
