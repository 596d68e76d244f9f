#!/usr/bin/env python3
"""Cutting one exhaustive search into independent work units.

A split at depth d enumerates every consistent prefix of d decisions;
each prefix names a subtree that any worker can search on its own. The
bookkeeping keeps counts exact: sequential nodes must equal the emitted
prefix assignments, plus the dead-end overhead, plus the unit totals.

Equivalent CLI flow:

    packlat split --width 4 --height 4 --k 4 --split-depth 2 --out-dir units/
    packlat solve-unit units/unit_0000.json > report_0000.json  (etc.)
    packlat merge units/split.json report_*.json --expect-sequential-nodes N
"""

from packlat import GridSpec, solve, solve_parallel, solve_unit, split


def main() -> None:
    grid = GridSpec(4, 4, 4)

    sequential = solve(grid)
    print(f"sequential: {sequential.status} in {sequential.stats.nodes} nodes")

    split_result = split(grid, depth=2)
    print(f"\nsplit at depth 2: {len(split_result.units)} units, "
          f"{split_result.emitted_prefix_assignments} emitted prefix "
          f"assignments, {split_result.prefix_overhead} overhead")

    total = 0
    for i, unit in enumerate(split_result.units):
        result = solve_unit(unit)
        total += result.stats.nodes
        print(f"  unit {i:2d} prefix={list(unit.prefix)}: "
              f"{result.status} in {result.stats.nodes} nodes")

    reconstructed = (split_result.emitted_prefix_assignments
                     + split_result.prefix_overhead + total)
    print(f"\nadditivity: {split_result.emitted_prefix_assignments} + "
          f"{split_result.prefix_overhead} + {total} = {reconstructed} "
          f"(sequential counted {sequential.stats.nodes})")
    assert reconstructed == sequential.stats.nodes

    parallel = solve_parallel(grid, depth=2, workers=2)
    print(f"\nparallel (2 workers): {parallel.status}, reconstructed "
          f"nodes {parallel.stats.nodes}, reproducible counts: "
          f"{parallel.parallel.count_reproducible}")
    assert parallel.stats.nodes == sequential.stats.nodes


if __name__ == "__main__":
    main()
