#!/usr/bin/env python3
"""Suspending and resuming a deterministic search.

The whole search state of a scan-order DFS is its current branch: replay
the branch, and the run continues exactly where it stopped. This script
chops one exhaustive run into short hops and shows that the final node
count never changes. The same mechanism backs the CLI's rolling
checkpoint files and its SIGINT handling (exit code 20, resumable file).

Equivalent CLI flow:

    packlat solve --width 4 --height 4 --k 4 \
        --checkpoint-every 50 --checkpoint-file run.checkpoint.json
    packlat resume run.checkpoint.json
"""

from packlat import Checkpoint, GridSpec, resume, solve


def main() -> None:
    grid = GridSpec(4, 4, 4)
    one_shot = solve(grid)
    print(f"one-shot run: {one_shot.status} at {one_shot.stats.nodes} nodes")

    stride = 40
    result = solve(grid, suspend_at=stride)
    hops = 0
    while result.status == "INTERRUPTED":
        cp = result.checkpoint
        print(f"  suspended at {cp.nodes} nodes, branch depth {len(cp.branch)}; "
              f"checkpoint JSON round-trips: "
              f"{Checkpoint.from_dict(cp.to_dict()) == cp}")
        result = resume(cp, suspend_at=cp.nodes + stride)
        hops += 1

    print(f"resumed {hops} times: {result.status} at {result.stats.nodes} nodes")
    assert (result.status, result.stats.nodes) == (
        one_shot.status, one_shot.stats.nodes,
    )
    print("final status and node count match the uninterrupted run exactly")


if __name__ == "__main__":
    main()
