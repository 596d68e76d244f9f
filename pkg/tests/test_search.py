"""Solver behavior: node accounting, splitting, checkpoints, determinism."""

import itertools
import random

import pytest

from packlat.coloring import verify
from packlat.errors import CorruptCheckpoint, CorruptUnit, VersionMismatch
from packlat.grid import GridSpec, Position, distance
from packlat.oracle import enumerate_feasible
from packlat.search import (
    INTERRUPTED,
    SAT,
    UNSAT,
    Checkpoint,
    WorkUnit,
    merge_outcomes,
    resume,
    solve,
    solve_parallel,
    solve_unit,
    split,
    _INTERRUPT_POLL,
)


def test_single_cell_is_sat_in_one_node():
    result = solve(GridSpec(1, 1, 1))
    assert result.status == SAT
    assert result.stats.nodes == 1
    assert result.coloring == [[1]]


def test_domino_with_one_color_fails_after_one_node():
    # color 1 goes on cell one, cell two is blocked, backtracking exhausts
    result = solve(GridSpec(1, 2, 1))
    assert result.status == UNSAT
    assert result.stats.nodes == 1


def test_2x2_with_two_colors_is_unsat():
    assert not enumerate_feasible(GridSpec(2, 2, 2)).sat  # brute force, 2^4
    assert solve(GridSpec(2, 2, 2)).status == UNSAT


def test_2x2_with_three_colors_solves():
    result = solve(GridSpec(2, 2, 3))
    assert result.status == SAT
    assert result.coloring == [[1, 2], [3, 1]]
    assert verify(GridSpec(2, 2, 3), result.coloring) is None


def test_3x3_with_three_colors_is_unsat():
    assert not enumerate_feasible(GridSpec(3, 3, 3)).sat  # brute force, 3^9
    assert solve(GridSpec(3, 3, 3)).status == UNSAT


def test_sequential_runs_are_deterministic():
    grid = GridSpec(4, 4, 4)
    first = solve(grid)
    second = solve(grid)
    assert first.status == second.status == UNSAT
    assert first.stats.counters() == second.stats.counters()


def test_solver_matches_oracle_on_small_windows():
    for w in range(1, 4):
        for h in range(1, 4):
            if w * h > 6:
                continue
            for k in range(1, 4):
                grid = GridSpec(w, h, k)
                oracle = enumerate_feasible(grid)
                result = solve(grid)
                assert result.status == (SAT if oracle.sat else UNSAT), grid
                if result.status == SAT:
                    assert verify(grid, result.coloring) is None


def test_anchored_solve_counts_exclude_anchors():
    grid = GridSpec(1, 1, 1, anchors=((Position(1, 1), 1),))
    result = solve(grid)
    assert result.status == SAT
    assert result.stats.nodes == 0
    assert result.coloring == [[1]]


def test_naive_and_mask_modes_agree():
    for w in range(1, 4):
        for h in range(1, 4):
            for k in range(1, 5):
                grid = GridSpec(w, h, k)
                fast = solve(grid)
                slow = solve(grid, naive=True)
                assert (fast.status, fast.stats.nodes) == (slow.status, slow.stats.nodes)
                assert fast.stats.tests == slow.stats.tests
                assert fast.stats.calls == slow.stats.calls
                assert fast.coloring == slow.coloring


def test_anchor_never_turns_unsat_into_sat():
    rng = random.Random(4217)
    tried = 0
    while tried < 40:
        w, h = rng.randint(1, 3), rng.randint(1, 3)
        k = rng.randint(1, 4)
        base = GridSpec(w, h, k)
        pos = Position(rng.randint(1, w), rng.randint(1, h))
        color = rng.randint(1, k)
        anchored = GridSpec(w, h, k, anchors=((pos, color),))
        tried += 1
        if solve(base).status == UNSAT:
            assert solve(anchored).status == UNSAT


# --- splitting --------------------------------------------------------------


def test_split_domino_two_colors():
    result = split(GridSpec(1, 2, 2), depth=1)
    assert [u.prefix for u in result.units] == [(1,), (2,)]
    assert result.emitted_prefix_assignments == 2
    assert result.prefix_overhead == 0
    assert result.assignments_at_emission == (1, 2)


def test_split_single_color_2x2():
    result = split(GridSpec(2, 2, 1), depth=1)
    assert [u.prefix for u in result.units] == [(1,)]


def test_split_counts_match_direct_prefix_enumeration():
    # consistent 2-prefixes of 3x3 k=4, counted straight from the rule
    grid = GridSpec(3, 3, 4)
    cells = [grid.position_at(0), grid.position_at(1)]
    expected = sum(
        1
        for c1, c2 in itertools.product(range(1, 5), repeat=2)
        if not (c1 == c2 and distance(cells[0], cells[1]) <= c1)
    )
    result = split(grid, depth=2)
    assert len(result.units) == expected


def test_split_depth_bounds():
    with pytest.raises(ValueError):
        split(GridSpec(2, 2, 2), depth=0)
    with pytest.raises(ValueError):
        split(GridSpec(2, 2, 2), depth=5)


def test_split_units_replay_cleanly():
    for unit in split(GridSpec(3, 3, 3), depth=3).units:
        solve_unit(unit)  # CorruptUnit would raise


def test_solve_unit_full_length_prefix_is_sat_with_zero_nodes():
    grid = GridSpec(2, 2, 3)
    full = split(grid, depth=4)
    assert full.units  # at least one complete coloring
    first = solve_unit(full.units[0])
    assert first.status == SAT
    assert first.stats.nodes == 0
    assert verify(grid, first.coloring) is None


def test_solve_unit_domino_hand_simulation():
    grid = GridSpec(1, 2, 2)
    units = split(grid, depth=1).units
    one = solve_unit(units[0])
    assert (one.status, one.stats.nodes, one.coloring) == (SAT, 1, [[1], [2]])
    two = solve_unit(units[1])
    assert (two.status, two.stats.nodes, two.coloring) == (SAT, 1, [[2], [1]])


def test_solve_unit_rejects_corrupt_prefix():
    grid = GridSpec(1, 2, 2)
    with pytest.raises(CorruptUnit):
        solve_unit(WorkUnit(grid, (1, 1)))  # second 1 is inadmissible
    with pytest.raises(CorruptUnit):
        solve_unit(WorkUnit(grid, (3,)))  # color out of budget
    with pytest.raises(CorruptUnit):
        solve_unit(WorkUnit(grid, (1, 2, 1)))  # longer than the window


def test_count_additivity_3x3_unsat():
    grid = GridSpec(3, 3, 3)
    sequential = solve(grid)
    result = split(grid, depth=1)
    total = 0
    for unit in result.units:
        unit_result = solve_unit(unit)
        assert unit_result.status == UNSAT
        total += unit_result.stats.nodes
    assert (
        sequential.stats.nodes
        == result.emitted_prefix_assignments + result.prefix_overhead + total
    )


def test_count_additivity_reconstruction_for_sat():
    # merged counts reproduce the sequential run even when a unit is SAT
    for depth in (1, 2, 3):
        grid = GridSpec(2, 2, 3)
        sequential = solve(grid)
        split_result = split(grid, depth)
        outcomes = []
        from packlat.search import UnitOutcome

        for unit in split_result.units:
            r = solve_unit(unit)
            outcomes.append(
                UnitOutcome(unit.prefix, r.status, r.stats.nodes, r.coloring)
            )
        status, coloring, sequential_nodes, _ = merge_outcomes(split_result, outcomes)
        assert status == SAT
        assert coloring == sequential.coloring
        assert sequential_nodes == sequential.stats.nodes


def test_workunit_round_trip():
    grid = GridSpec(3, 3, 3, anchors=((Position(2, 2), 2),))
    unit = WorkUnit(grid, (1, 3))
    assert WorkUnit.from_dict(unit.to_dict()) == unit


# --- checkpoints ------------------------------------------------------------


def test_checkpoint_at_zero_nodes_equals_fresh_solve():
    grid = GridSpec(3, 3, 3)
    fresh = solve(grid)
    resumed = resume(Checkpoint(grid, (), 0))
    assert (resumed.status, resumed.stats.nodes) == (fresh.status, fresh.stats.nodes)


def test_suspend_and_resume_in_short_hops():
    # 3x3 k=3 exhausts in 28 nodes, so a 5-node stride forces real suspensions
    grid = GridSpec(3, 3, 3)
    one_shot = solve(grid)
    result = solve(grid, suspend_at=5)
    hops = 0
    while result.status == INTERRUPTED:
        checkpoint = Checkpoint.from_dict(result.checkpoint.to_dict())
        result = resume(checkpoint, suspend_at=checkpoint.nodes + 5)
        hops += 1
    assert hops >= 4
    assert (result.status, result.stats.nodes) == (one_shot.status, one_shot.stats.nodes)


def test_suspended_run_reports_checkpoint_at_exact_node():
    result = solve(GridSpec(4, 4, 4), suspend_at=50)
    assert result.status == INTERRUPTED
    assert result.checkpoint is not None
    assert result.checkpoint.nodes == 50
    assert len(result.checkpoint.branch) >= 1


def test_corrupted_checkpoint_decision_fails_replay():
    result = solve(GridSpec(4, 4, 4), suspend_at=50)
    data = result.checkpoint.to_dict()
    # find a decision whose corruption lands on a forbidden color: flipping
    # the first decision to equal the second adjacent one always conflicts
    # for color 1; simpler: duplicate color across adjacent first two cells
    data["branch"] = [1, 1] + data["branch"][2:]
    with pytest.raises(CorruptCheckpoint):
        resume(Checkpoint.from_dict(data))


def test_checkpoint_version_mismatch():
    result = solve(GridSpec(3, 3, 3), suspend_at=10)
    data = result.checkpoint.to_dict()
    data["version"] = 99
    with pytest.raises(VersionMismatch):
        Checkpoint.from_dict(data)


def test_rolling_checkpoints_fire_on_schedule():
    seen = []
    solve(GridSpec(3, 3, 3), checkpoint_every=10, on_checkpoint=seen.append)
    assert seen, "expected at least one rolling checkpoint"
    assert all(cp.nodes % 10 == 0 for cp in seen)
    # resuming from any rolling checkpoint reaches the one-shot totals
    one_shot = solve(GridSpec(3, 3, 3))
    for cp in seen[::2]:
        resumed = resume(cp)
        assert (resumed.status, resumed.stats.nodes) == (
            one_shot.status, one_shot.stats.nodes,
        )


def test_interrupt_flag_suspends_with_resumable_state():
    grid = GridSpec(9, 7, 6, anchors=((Position(5, 4), 4),))
    result = solve(grid, interrupted=lambda: True)
    assert result.status == INTERRUPTED
    assert result.checkpoint.nodes == _INTERRUPT_POLL
    finished = resume(result.checkpoint)
    one_shot = solve(grid)
    assert (finished.status, finished.stats.nodes) == (
        one_shot.status, one_shot.stats.nodes,
    )


def test_progress_callback_cadence():
    seen = []
    solve(
        GridSpec(3, 3, 3),
        progress_every=10,
        on_progress=lambda nodes, frontier: seen.append((nodes, frontier)),
    )
    assert seen
    assert all(nodes % 10 == 0 for nodes, _ in seen)


# --- parallel mode ----------------------------------------------------------


def test_parallel_reproduces_sequential_counts():
    for grid in (GridSpec(3, 3, 3), GridSpec(2, 2, 3), GridSpec(3, 3, 4)):
        sequential = solve(grid)
        for depth in (1, 2):
            for workers in (1, 2):
                parallel = solve_parallel(grid, depth, workers=workers)
                assert parallel.status == sequential.status
                assert parallel.stats.nodes == sequential.stats.nodes
                assert parallel.parallel.count_reproducible
                if parallel.status == SAT:
                    assert parallel.coloring == sequential.coloring


def test_parallel_unit_sum_is_schedule_independent():
    grid = GridSpec(3, 3, 4)
    totals = {
        solve_parallel(grid, 2, workers=w).parallel.unit_nodes_total
        for w in (1, 2, 3)
    }
    assert len(totals) == 1


def test_parallel_early_exit_flags_counts_unreproducible():
    result = solve_parallel(GridSpec(2, 2, 3), depth=1, workers=1, early_exit=True)
    assert result.status == SAT
    assert not result.parallel.count_reproducible
    assert verify(GridSpec(2, 2, 3), result.coloring) is None
