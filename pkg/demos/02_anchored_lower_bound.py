#!/usr/bin/env python3
"""The anchored lower-bound method, scaled to desk size.

Precoloring one cell with a high color prunes the search without
weakening the conclusion: if every hypothetical lattice coloring uses
that color somewhere, a window around such a cell must be colorable with
the anchor in place. Exhausting the anchored window therefore pushes the
lower bound up by one, conditional on that premise.

This script runs a 9x7 window with budget 6 both ways to show the anchor
pruning, then prints the machine-readable inference note the CLI attaches
to anchored UNSAT reports.

Equivalent CLI call:

    packlat solve --width 9 --height 7 --k 6 --anchor 5,4,4
"""

import json

from packlat import GridSpec, Position, solve
from packlat.cli import lower_bound_note


def main() -> None:
    plain = GridSpec(9, 7, 6)
    anchored = GridSpec(9, 7, 6, anchors=((Position(5, 4), 4),))

    print("9x7 window, budget 6, no anchor ...")
    r_plain = solve(plain)
    print(f"  {r_plain.status} after {r_plain.stats.nodes:,} nodes "
          f"({r_plain.stats.elapsed:.1f}s)")

    print("9x7 window, budget 6, color 4 anchored at (5,4) ...")
    r_anch = solve(anchored)
    print(f"  {r_anch.status} after {r_anch.stats.nodes:,} nodes "
          f"({r_anch.stats.elapsed:.1f}s)")

    saved = 1 - r_anch.stats.nodes / r_plain.stats.nodes
    print(f"\nThe anchor removed {saved:.0%} of the search tree.")

    print("\nInference carried by the anchored UNSAT report:")
    print(json.dumps(lower_bound_note(anchored), indent=2))

    print(
        "\nBoth exhaustions certify the finite statement only. The anchored"
        "\nform additionally needs the stated premise that the anchored color"
        "\noccurs in every hypothetical coloring of the infinite lattice."
    )


if __name__ == "__main__":
    main()
