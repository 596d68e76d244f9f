"""Deterministic depth-first search for packing colorings of a window.

The solver colors cells in scan order, trying colors 1..max_color
ascending at each cell, backtracking on dead ends, and stopping at the
first complete coloring (SAT) or after exhausting the tree (UNSAT by
exhaustion). Sequential runs are bit-deterministic: the same GridSpec
always produces the same node count.

Counters, and what they mean here:

* ``nodes``   successful color assignments (anchor installation and
              prefix/branch replay excluded). This is the package's
              "checked configurations" unit.
* ``tests``   admissibility checks, counting one per color considered
              at a cell, admissible or not.
* ``calls``   arrivals at a non-anchor cell with a fresh color loop
              (the recursion depth events of the classic formulation).

The fast path keeps all forbidden-color bitsets in one big integer and
journals one delta per assignment; the naive path rescans distance balls
on every test. Both traverse the identical tree.
"""

from __future__ import annotations

import math
import os
import time
from dataclasses import dataclass
from functools import lru_cache

from packlat.coloring import verify
from packlat.errors import (
    CorruptCheckpoint,
    CorruptUnit,
    MalformedInput,
    VersionMismatch,
)
from packlat.grid import GridSpec

SAT = "SAT"
UNSAT = "UNSAT"
INTERRUPTED = "INTERRUPTED"

CHECKPOINT_VERSION = 1
DEFAULT_PROGRESS_EVERY = 10**8

_INTERRUPT_POLL = 1 << 16  # nodes between interrupt-flag polls


@dataclass
class SearchStats:
    """Deterministic work accounting for one search run."""

    nodes: int = 0
    tests: int = 0
    calls: int = 0
    max_depth: int = 0
    elapsed: float = 0.0
    status: str = UNSAT

    def counters(self) -> dict:
        return {
            "nodes": self.nodes,
            "tests": self.tests,
            "calls": self.calls,
            "max_depth": self.max_depth,
        }


@dataclass(frozen=True)
class WorkUnit:
    """A consistent prefix of scan-order decisions, naming a subtree.

    ``prefix[i]`` is the color of the i-th non-anchor cell in scan order.
    """

    grid: GridSpec
    prefix: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"grid": self.grid.to_dict(), "prefix": list(self.prefix)}

    @classmethod
    def from_dict(cls, data: object) -> "WorkUnit":
        if not isinstance(data, dict) or "grid" not in data or "prefix" not in data:
            raise MalformedInput('work unit JSON must have "grid" and "prefix"')
        grid = GridSpec.from_dict(data["grid"])
        try:
            prefix = tuple(int(c) for c in data["prefix"])
        except (TypeError, ValueError) as exc:
            raise MalformedInput(f"bad work unit prefix: {exc}") from exc
        return cls(grid=grid, prefix=prefix)


@dataclass(frozen=True)
class Checkpoint:
    """A suspended sequential search: the branch in progress plus nodes so far."""

    grid: GridSpec
    branch: tuple[int, ...]
    nodes: int

    def to_dict(self) -> dict:
        return {
            "version": CHECKPOINT_VERSION,
            "grid": self.grid.to_dict(),
            "branch": list(self.branch),
            "nodes": self.nodes,
        }

    @classmethod
    def from_dict(cls, data: object) -> "Checkpoint":
        if not isinstance(data, dict):
            raise MalformedInput("checkpoint must be a JSON object")
        version = data.get("version")
        if version != CHECKPOINT_VERSION:
            raise VersionMismatch(
                f"checkpoint version {version!r}, expected {CHECKPOINT_VERSION}"
            )
        try:
            grid = GridSpec.from_dict(data["grid"])
            branch = tuple(int(c) for c in data["branch"])
            nodes = int(data["nodes"])
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInput(f"bad checkpoint: {exc}") from exc
        if nodes < 0:
            raise MalformedInput(f"negative node count {nodes}")
        return cls(grid=grid, branch=branch, nodes=nodes)


@dataclass(frozen=True)
class SplitResult:
    """Work units plus the bookkeeping needed to reconcile node counts.

    ``assignments_at_emission[i]`` is the number of assignments the
    splitting pass had performed when it emitted unit i; a sequential run
    reaching that unit's prefix has done exactly that much work above the
    split depth. ``emitted_prefix_assignments`` counts split assignments
    that lie on some emitted prefix, ``prefix_overhead`` the dead-end
    remainder.
    """

    units: tuple[WorkUnit, ...]
    depth: int
    emitted_prefix_assignments: int
    prefix_overhead: int
    assignments_at_emission: tuple[int, ...]


@dataclass
class ParallelInfo:
    """How a parallel run was carried out and whether counts are exact."""

    depth: int
    units: int
    unit_nodes_total: int
    emitted_prefix_assignments: int
    prefix_overhead: int
    count_reproducible: bool
    early_exit: bool
    workers: int


@dataclass
class SolveResult:
    status: str
    coloring: list[list[int]] | None
    stats: SearchStats
    checkpoint: Checkpoint | None = None
    parallel: ParallelInfo | None = None


class _Tables:
    """Precomputed per-grid search tables; immutable once built."""

    def __init__(self, grid: GridSpec):
        w, h, k = grid.width, grid.height, grid.max_color
        n = grid.n_cells
        anchor_at = [0] * n
        for pos, color in grid.anchors:
            anchor_at[grid.index_of(pos)] = color
        self.free: tuple[int, ...] = tuple(i for i in range(n) if not anchor_at[i])
        fpos = {cell: p for p, cell in enumerate(self.free)}
        self.k = k
        self.full_mask = (1 << k) - 1
        self.anchor_at = tuple(anchor_at)

        def cell_distance(a: int, b: int) -> int:
            return abs(a % w - b % w) + abs(a // w - b // w)

        # Mask path: when the p-th free cell takes color c, forbid c at every
        # later free cell within distance c. Earlier cells are already
        # colored, so the forward half of the ball suffices.
        patterns: list[tuple[int, ...]] = []
        for p, cell in enumerate(self.free):
            per_color = []
            for c in range(1, k + 1):
                pat = 0
                for q in range(p + 1, len(self.free)):
                    if cell_distance(cell, self.free[q]) <= c:
                        pat |= 1 << (q * k + (c - 1))
                per_color.append(pat)
            patterns.append(tuple(per_color))
        self.patterns: tuple[tuple[int, ...], ...] = tuple(patterns)

        init_mask = 0
        for acell in range(n):
            ac = anchor_at[acell]
            if not ac:
                continue
            for p, cell in enumerate(self.free):
                if cell_distance(acell, cell) <= ac:
                    init_mask |= 1 << (p * k + (ac - 1))
        self.init_mask = init_mask

        # Naive path: per (free cell, color), the cells that can already be
        # colored when that cell is the frontier: earlier free cells plus
        # anchors anywhere, within distance c.
        naive_scan: list[tuple[tuple[int, ...], ...]] = []
        for p, cell in enumerate(self.free):
            per_color = []
            for c in range(1, k + 1):
                candidates = [
                    q for q in range(n)
                    if q != cell and cell_distance(cell, q) <= c
                    and (anchor_at[q] or (not anchor_at[q] and fpos[q] < p))
                ]
                per_color.append(tuple(candidates))
            naive_scan.append(tuple(per_color))
        self.naive_scan = tuple(naive_scan)

    def frontier_cells(self, free_pos: int) -> int:
        """Length of the colored scan prefix once free_pos cells are assigned."""
        if free_pos < len(self.free):
            return self.free[free_pos]
        return len(self.anchor_at)


@lru_cache(maxsize=64)
def _tables(grid: GridSpec) -> _Tables:
    return _Tables(grid)


class _Engine:
    """Single-owner mutable search state; one engine per run."""

    def __init__(self, grid: GridSpec, naive: bool = False):
        self.grid = grid
        self.naive = naive
        self.tables = _tables(grid)
        self.k = grid.max_color
        self.n_free = len(self.tables.free)
        self.branch: list[int] = []
        self.pos = 0
        self.start = 1
        self.nodes = 0
        self.tests = 0
        self.calls = 0
        self.max_pos = 0
        self.mask = self.tables.init_mask
        self.journal: list[int] = []
        self.cell_colors: list[int] | None = None
        if naive:
            self.cell_colors = list(self.tables.anchor_at)

    def replay(self, decisions, error_cls) -> None:
        """Re-apply a decision sequence without counting any work.

        Raises ``error_cls`` when a decision is out of range or lands on a
        forbidden color, which is how corrupt units and checkpoints with
        tampered branches surface.
        """
        k = self.k
        if self.pos + len(decisions) > self.n_free:
            raise error_cls(
                f"{len(decisions)} decisions exceed the {self.n_free} open cells"
            )
        for color in decisions:
            if not 1 <= color <= k:
                raise error_cls(f"decision color {color} outside 1..{k}")
            if self.naive:
                cell = self.tables.free[self.pos]
                for q in self.tables.naive_scan[self.pos][color - 1]:
                    if self.cell_colors[q] == color:
                        raise error_cls(
                            f"decision {self.pos} (color {color}) is inadmissible"
                        )
                self.cell_colors[cell] = color
            else:
                if (self.mask >> (self.pos * k + color - 1)) & 1:
                    raise error_cls(
                        f"decision {self.pos} (color {color}) is inadmissible"
                    )
                newly = self.tables.patterns[self.pos][color - 1] & ~self.mask
                self.mask |= newly
                self.journal.append(newly)
            self.branch.append(color)
            self.pos += 1
        self.max_pos = max(self.max_pos, self.pos)

    def coloring_rows(self) -> list[list[int]]:
        colors = list(self.tables.anchor_at)
        for p, c in enumerate(self.branch):
            colors[self.tables.free[p]] = c
        w = self.grid.width
        return [colors[r * w:(r + 1) * w] for r in range(self.grid.height)]

    def max_depth(self) -> int:
        return self.tables.frontier_cells(self.max_pos)

    def run(
        self,
        floor: int = 0,
        suspend_at: int | None = None,
        checkpoint_every: int | None = None,
        on_checkpoint=None,
        progress_every: int | None = None,
        on_progress=None,
        interrupted=None,
    ) -> str:
        if self.naive:
            return self._run_naive(
                floor, suspend_at, checkpoint_every, on_checkpoint,
                progress_every, on_progress, interrupted,
            )
        return self._run_mask(
            floor, suspend_at, checkpoint_every, on_checkpoint,
            progress_every, on_progress, interrupted,
        )

    def _next_events(self, suspend_at, checkpoint_every, progress_every, interrupted):
        inf = math.inf
        nodes = self.nodes
        stop_at = suspend_at if suspend_at is not None else inf
        next_poll = nodes + _INTERRUPT_POLL if interrupted is not None else inf
        next_progress = (
            (nodes // progress_every + 1) * progress_every if progress_every else inf
        )
        next_checkpoint = (
            (nodes // checkpoint_every + 1) * checkpoint_every
            if checkpoint_every else inf
        )
        return stop_at, next_poll, next_progress, next_checkpoint

    def _run_mask(
        self, floor, suspend_at, checkpoint_every, on_checkpoint,
        progress_every, on_progress, interrupted,
    ) -> str:
        k = self.k
        full = self.tables.full_mask
        patterns = self.tables.patterns
        n = self.n_free
        mask = self.mask
        branch = self.branch
        journal = self.journal
        pos = self.pos
        start = self.start
        nodes = self.nodes
        tests = self.tests
        calls = self.calls
        max_pos = self.max_pos
        shift = pos * k

        stop_at, next_poll, next_progress, next_checkpoint = self._next_events(
            suspend_at, checkpoint_every, progress_every, interrupted
        )
        next_event = min(stop_at, next_poll, next_progress, next_checkpoint)

        status = None
        if pos < n:
            calls += 1
        while True:
            if pos == n:
                status = SAT
                break
            row = (mask >> shift) & full
            avail = ~row & full & -(1 << (start - 1))
            if avail:
                c = (avail & -avail).bit_length()
                tests += c - start + 1
                newly = patterns[pos][c - 1] & ~mask
                mask |= newly
                journal.append(newly)
                branch.append(c)
                nodes += 1
                pos += 1
                shift += k
                start = 1
                if pos > max_pos:
                    max_pos = pos
                if pos < n:
                    calls += 1
                if nodes >= next_event:
                    if nodes >= stop_at:
                        status = INTERRUPTED
                        break
                    if nodes >= next_poll:
                        if interrupted():
                            status = INTERRUPTED
                            break
                        next_poll = nodes + _INTERRUPT_POLL
                    if nodes >= next_progress:
                        on_progress(nodes, self.tables.frontier_cells(pos))
                        next_progress += progress_every
                    if nodes >= next_checkpoint:
                        on_checkpoint(Checkpoint(self.grid, tuple(branch), nodes))
                        next_checkpoint += checkpoint_every
                    next_event = min(
                        stop_at, next_poll, next_progress, next_checkpoint
                    )
            else:
                tests += k - start + 1
                if pos == floor:
                    status = UNSAT
                    break
                pos -= 1
                shift -= k
                c = branch.pop()
                mask ^= journal.pop()
                start = c + 1

        self.mask = mask
        self.pos = pos
        self.start = start
        self.nodes = nodes
        self.tests = tests
        self.calls = calls
        self.max_pos = max_pos
        return status

    def _run_naive(
        self, floor, suspend_at, checkpoint_every, on_checkpoint,
        progress_every, on_progress, interrupted,
    ) -> str:
        k = self.k
        n = self.n_free
        scan = self.tables.naive_scan
        free = self.tables.free
        colors = self.cell_colors
        branch = self.branch
        pos = self.pos
        start = self.start
        nodes = self.nodes
        tests = self.tests
        calls = self.calls
        max_pos = self.max_pos

        stop_at, next_poll, next_progress, next_checkpoint = self._next_events(
            suspend_at, checkpoint_every, progress_every, interrupted
        )
        next_event = min(stop_at, next_poll, next_progress, next_checkpoint)

        status = None
        if pos < n:
            calls += 1
        while True:
            if pos == n:
                status = SAT
                break
            found = 0
            c = start
            per_color = scan[pos]
            while c <= k:
                tests += 1
                ok = True
                for q in per_color[c - 1]:
                    if colors[q] == c:
                        ok = False
                        break
                if ok:
                    found = c
                    break
                c += 1
            if found:
                colors[free[pos]] = found
                branch.append(found)
                nodes += 1
                pos += 1
                start = 1
                if pos > max_pos:
                    max_pos = pos
                if pos < n:
                    calls += 1
                if nodes >= next_event:
                    if nodes >= stop_at:
                        status = INTERRUPTED
                        break
                    if nodes >= next_poll:
                        if interrupted():
                            status = INTERRUPTED
                            break
                        next_poll = nodes + _INTERRUPT_POLL
                    if nodes >= next_progress:
                        on_progress(nodes, self.tables.frontier_cells(pos))
                        next_progress += progress_every
                    if nodes >= next_checkpoint:
                        on_checkpoint(Checkpoint(self.grid, tuple(branch), nodes))
                        next_checkpoint += checkpoint_every
                    next_event = min(
                        stop_at, next_poll, next_progress, next_checkpoint
                    )
            else:
                if pos == floor:
                    status = UNSAT
                    break
                pos -= 1
                c = branch.pop()
                colors[free[pos]] = 0
                start = c + 1

        self.pos = pos
        self.start = start
        self.nodes = nodes
        self.tests = tests
        self.calls = calls
        self.max_pos = max_pos
        return status


def _finish(engine: _Engine, status: str, t0: float) -> SolveResult:
    stats = SearchStats(
        nodes=engine.nodes,
        tests=engine.tests,
        calls=engine.calls,
        max_depth=engine.max_depth(),
        elapsed=time.perf_counter() - t0,
        status=status,
    )
    coloring = None
    checkpoint = None
    if status == SAT:
        coloring = engine.coloring_rows()
        violation = verify(engine.grid, coloring)
        if violation is not None:
            raise RuntimeError(f"internal error: SAT coloring fails verify: {violation}")
    elif status == INTERRUPTED:
        checkpoint = Checkpoint(engine.grid, tuple(engine.branch), engine.nodes)
    return SolveResult(status=status, coloring=coloring, stats=stats,
                       checkpoint=checkpoint)


def solve(
    grid: GridSpec,
    naive: bool = False,
    suspend_at: int | None = None,
    checkpoint_every: int | None = None,
    on_checkpoint=None,
    progress_every: int | None = None,
    on_progress=None,
    interrupted=None,
) -> SolveResult:
    """Search the whole window for a packing coloring extending the anchors.

    Sequential and bit-deterministic. SAT comes with a verified coloring;
    UNSAT means the deterministic exhaustion completed with no solution;
    INTERRUPTED (from ``suspend_at`` or the ``interrupted`` flag callable)
    comes with a resumable checkpoint.

    Args:
        grid: window, color budget, anchors.
        naive: use the ball-rescan admissibility test instead of the
            incremental mask (slow; for differential runs).
        suspend_at: stop once this many nodes have been counted.
        checkpoint_every / on_checkpoint: invoke the callback with a
            rolling Checkpoint every N nodes, without stopping.
        progress_every / on_progress: invoke ``on_progress(nodes,
            frontier_cells)`` every N nodes.
        interrupted: zero-argument callable polled every 65536 nodes; a
            true result suspends the search with a checkpoint.
    """
    t0 = time.perf_counter()
    engine = _Engine(grid, naive=naive)
    status = engine.run(
        suspend_at=suspend_at,
        checkpoint_every=checkpoint_every,
        on_checkpoint=on_checkpoint,
        progress_every=progress_every,
        on_progress=on_progress,
        interrupted=interrupted,
    )
    return _finish(engine, status, t0)


def resume(
    checkpoint: Checkpoint,
    naive: bool = False,
    suspend_at: int | None = None,
    checkpoint_every: int | None = None,
    on_checkpoint=None,
    progress_every: int | None = None,
    on_progress=None,
    interrupted=None,
) -> SolveResult:
    """Continue a suspended run to the same final (status, nodes).

    Only the node counter carries across a suspension; tests, calls,
    max_depth and elapsed restart from the resume point.
    """
    t0 = time.perf_counter()
    engine = _Engine(checkpoint.grid, naive=naive)
    engine.replay(checkpoint.branch, CorruptCheckpoint)
    engine.nodes = checkpoint.nodes
    status = engine.run(
        suspend_at=suspend_at,
        checkpoint_every=checkpoint_every,
        on_checkpoint=on_checkpoint,
        progress_every=progress_every,
        on_progress=on_progress,
        interrupted=interrupted,
    )
    return _finish(engine, status, t0)


def solve_unit(unit: WorkUnit, naive: bool = False) -> SolveResult:
    """Search one work unit's subtree; nodes count only below the prefix."""
    t0 = time.perf_counter()
    engine = _Engine(unit.grid, naive=naive)
    engine.replay(unit.prefix, CorruptUnit)
    status = engine.run(floor=len(unit.prefix))
    return _finish(engine, status, t0)


def split(grid: GridSpec, depth: int) -> SplitResult:
    """Enumerate every consistent prefix of the given length, in DFS order.

    The emitted units partition the search space below the split depth.
    Assignments spent on prefixes that die before reaching the depth are
    returned as prefix overhead so that node counts stay reconcilable.
    """
    tables = _tables(grid)
    n_free = len(tables.free)
    if not 1 <= depth <= n_free:
        raise ValueError(f"split depth {depth} outside 1..{n_free}")
    k = grid.max_color
    full = tables.full_mask
    patterns = tables.patterns

    mask = tables.init_mask
    branch: list[int] = []
    journal: list[int] = []
    emitted_marks: list[int] = []
    units: list[WorkUnit] = []
    cum: list[int] = []
    assignments = 0
    emitted = 0
    overhead = 0
    pos = 0
    start = 1
    while True:
        if pos == depth:
            units.append(WorkUnit(grid, tuple(branch)))
            cum.append(assignments)
            backtrack = True
        else:
            row = (mask >> (pos * k)) & full
            avail = ~row & full & -(1 << (start - 1))
            if avail:
                c = (avail & -avail).bit_length()
                newly = patterns[pos][c - 1] & ~mask
                mask |= newly
                journal.append(newly)
                branch.append(c)
                emitted_marks.append(len(units))
                assignments += 1
                pos += 1
                start = 1
                continue
            backtrack = pos > 0
            if not backtrack:
                break
        pos -= 1
        c = branch.pop()
        mask ^= journal.pop()
        if len(units) > emitted_marks.pop():
            emitted += 1
        else:
            overhead += 1
        start = c + 1
    return SplitResult(
        units=tuple(units),
        depth=depth,
        emitted_prefix_assignments=emitted,
        prefix_overhead=overhead,
        assignments_at_emission=tuple(cum),
    )


@dataclass(frozen=True)
class UnitOutcome:
    """What one work unit reported back: enough to merge deterministically."""

    prefix: tuple[int, ...]
    status: str
    nodes: int
    coloring: list[list[int]] | None = None
    tests: int = 0
    calls: int = 0
    max_depth: int = 0


def merge_outcomes(
    split_result: SplitResult, outcomes: list[UnitOutcome]
) -> tuple[str, list[list[int]] | None, int, int]:
    """Combine unit outcomes into (status, coloring, sequential_nodes, unit_total).

    ``sequential_nodes`` reconstructs what one uninterrupted sequential run
    would have counted: for UNSAT that is emitted prefix assignments plus
    overhead plus every unit's nodes; for SAT the reconstruction stops at
    the DFS-first satisfiable unit, crediting the split assignments that
    preceded its emission.
    """
    expected = {unit.prefix for unit in split_result.units}
    got = {o.prefix for o in outcomes}
    if expected != got or len(outcomes) != len(split_result.units):
        raise MalformedInput(
            "unit outcomes do not cover the split exactly: "
            f"{len(outcomes)} outcomes for {len(split_result.units)} units"
        )
    ordered = sorted(outcomes, key=lambda o: o.prefix)
    unit_total = sum(o.nodes for o in ordered)
    for i, outcome in enumerate(ordered):
        if outcome.status == SAT:
            sequential = split_result.assignments_at_emission[i] + sum(
                o.nodes for o in ordered[: i + 1]
            )
            return SAT, outcome.coloring, sequential, unit_total
        if outcome.status != UNSAT:
            raise MalformedInput(
                f"unit {outcome.prefix} has non-terminal status {outcome.status}"
            )
    sequential = (
        split_result.emitted_prefix_assignments
        + split_result.prefix_overhead
        + unit_total
    )
    return UNSAT, None, sequential, unit_total


def _unit_worker(unit: WorkUnit) -> UnitOutcome:
    result = solve_unit(unit)
    return UnitOutcome(
        prefix=unit.prefix,
        status=result.status,
        nodes=result.stats.nodes,
        coloring=result.coloring,
        tests=result.stats.tests,
        calls=result.stats.calls,
        max_depth=result.stats.max_depth,
    )


def default_workers() -> int:
    cap = os.environ.get("PACKLAT_THREADS")
    count = os.cpu_count() or 1
    if cap:
        try:
            count = min(count, max(1, int(cap)))
        except ValueError:
            pass
    return count


def solve_parallel(
    grid: GridSpec,
    depth: int,
    workers: int | None = None,
    early_exit: bool = False,
) -> SolveResult:
    """Split the search and run the units across worker processes.

    Without ``early_exit`` every unit runs to completion and the merged
    node count reproduces the sequential one exactly, independent of
    scheduling. With it, the first SAT unit wins and counting is only a
    lower bound (flagged in the result).
    """
    import multiprocessing

    t0 = time.perf_counter()
    split_result = split(grid, depth)
    if workers is None:
        workers = default_workers()
    workers = max(1, min(workers, len(split_result.units) or 1))

    outcomes: list[UnitOutcome] = []
    early_hit = False
    if not split_result.units:
        pass
    elif workers == 1:
        for unit in split_result.units:
            outcome = _unit_worker(unit)
            outcomes.append(outcome)
            if early_exit and outcome.status == SAT:
                early_hit = True
                break
    else:
        ctx = multiprocessing.get_context()
        with ctx.Pool(processes=workers) as pool:
            if early_exit:
                for outcome in pool.imap_unordered(
                    _unit_worker, split_result.units
                ):
                    outcomes.append(outcome)
                    if outcome.status == SAT:
                        early_hit = True
                        pool.terminate()
                        break
            else:
                outcomes = list(pool.map(_unit_worker, split_result.units))

    elapsed = time.perf_counter() - t0
    unit_total = sum(o.nodes for o in outcomes)
    if early_hit:
        sat = min(
            (o for o in outcomes if o.status == SAT), key=lambda o: o.prefix
        )
        status, coloring, sequential = SAT, sat.coloring, unit_total
        reproducible = False
    else:
        status, coloring, sequential, unit_total = merge_outcomes(
            split_result, outcomes
        )
        reproducible = True
    stats = SearchStats(
        nodes=sequential,
        tests=sum(o.tests for o in outcomes),
        calls=sum(o.calls for o in outcomes),
        max_depth=max((o.max_depth for o in outcomes), default=0),
        elapsed=elapsed,
        status=status,
    )
    info = ParallelInfo(
        depth=depth,
        units=len(split_result.units),
        unit_nodes_total=unit_total,
        emitted_prefix_assignments=split_result.emitted_prefix_assignments,
        prefix_overhead=split_result.prefix_overhead,
        count_reproducible=reproducible,
        early_exit=early_exit,
        workers=workers,
    )
    return SolveResult(status=status, coloring=coloring, stats=stats, parallel=info)
