"""Geometry of rectangular windows of the square lattice.

Cells are addressed as ``Position(col, row)``, both 1-indexed. The scan
order is row-major: left to right within a row, rows top to bottom. A
rectangular window is geodesically convex in the lattice, so the shortest
path distance between two cells inside it equals the L1 distance; all
distance computations here use the closed form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from packlat.errors import MalformedInput


class Position(NamedTuple):
    """A lattice cell, (column, row), 1-indexed."""

    col: int
    row: int


def distance(a: Position, b: Position) -> int:
    """Shortest path distance between two cells (L1 on the lattice)."""
    return abs(a[0] - b[0]) + abs(a[1] - b[1])


@dataclass(frozen=True)
class GridSpec:
    """A finite window of the lattice plus a color budget and anchors.

    ``anchors`` holds precolored cells as (Position, color) pairs. The
    constructor validates that anchors lie inside the window, occupy
    pairwise distinct cells, use colors within the budget, and are
    mutually consistent as a packing coloring. Instances are immutable
    and safe to share across workers.
    """

    width: int
    height: int
    max_color: int
    anchors: tuple[tuple[Position, int], ...] = ()

    def __post_init__(self) -> None:
        if self.width < 1 or self.height < 1:
            raise MalformedInput(
                f"window dimensions must be >= 1, got {self.width}x{self.height}"
            )
        if self.max_color < 1:
            raise MalformedInput(f"max_color must be >= 1, got {self.max_color}")
        normalized = tuple(
            (Position(int(p[0]), int(p[1])), int(c)) for p, c in self.anchors
        )
        # store in scan order so serialization is deterministic
        normalized = tuple(
            sorted(normalized, key=lambda pc: (pc[0].row, pc[0].col))
        )
        object.__setattr__(self, "anchors", normalized)
        seen: set[Position] = set()
        for pos, color in normalized:
            if not self.contains(pos):
                raise MalformedInput(f"anchor {pos} outside {self.width}x{self.height} window")
            if pos in seen:
                raise MalformedInput(f"duplicate anchor position {pos}")
            seen.add(pos)
            if not 1 <= color <= self.max_color:
                raise MalformedInput(
                    f"anchor color {color} at {pos} outside 1..{self.max_color}"
                )
        for i, (p, c) in enumerate(normalized):
            for q, d in normalized[i + 1:]:
                if c == d and distance(p, q) <= c:
                    raise MalformedInput(
                        f"anchors {p} and {q} share color {c} at distance "
                        f"{distance(p, q)} <= {c}"
                    )

    @property
    def n_cells(self) -> int:
        return self.width * self.height

    def contains(self, pos: Position) -> bool:
        return 1 <= pos[0] <= self.width and 1 <= pos[1] <= self.height

    def index_of(self, pos: Position) -> int:
        """Scan index of a cell: 0 for (1,1), row-major."""
        return (pos[1] - 1) * self.width + (pos[0] - 1)

    def position_at(self, index: int) -> Position:
        """Inverse of index_of."""
        return Position(index % self.width + 1, index // self.width + 1)

    @cached_property
    def anchor_map(self) -> dict[Position, int]:
        return {pos: color for pos, color in self.anchors}

    def to_dict(self) -> dict:
        return {
            "width": self.width,
            "height": self.height,
            "max_color": self.max_color,
            "anchors": [
                {"col": pos.col, "row": pos.row, "color": color}
                for pos, color in self.anchors
            ],
        }

    @classmethod
    def from_dict(cls, data: object) -> "GridSpec":
        if not isinstance(data, dict):
            raise MalformedInput("grid spec must be a JSON object")
        try:
            width = int(data["width"])
            height = int(data["height"])
            max_color = int(data["max_color"])
            raw_anchors = data.get("anchors", [])
            anchors = tuple(
                (Position(int(a["col"]), int(a["row"])), int(a["color"]))
                for a in raw_anchors
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInput(f"bad grid spec: {exc}") from exc
        return cls(width=width, height=height, max_color=max_color, anchors=anchors)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "GridSpec":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"grid spec is not valid JSON: {exc}") from exc
        return cls.from_dict(data)


def scan_index(pos: Position, grid: GridSpec) -> int:
    return grid.index_of(pos)


def scan_next(index: int, grid: GridSpec) -> int | None:
    """Successor scan index, or None once every cell has been passed.

    Index ``n_cells`` means "all cells colored" and has no successor.
    """
    if not 0 <= index <= grid.n_cells:
        raise ValueError(f"scan index {index} outside 0..{grid.n_cells}")
    if index == grid.n_cells:
        return None
    return index + 1


def ball(center: Position, radius: int, grid: GridSpec) -> set[Position]:
    """In-window cells other than the center within the given distance.

    Clips the L1 ball to the window, so corner and edge cells get smaller
    balls than interior ones.
    """
    if radius < 1:
        raise ValueError(f"radius must be >= 1, got {radius}")
    if not grid.contains(center):
        raise ValueError(f"center {center} outside {grid.width}x{grid.height} window")
    col, row = center
    out: set[Position] = set()
    for dr in range(-radius, radius + 1):
        r = row + dr
        if not 1 <= r <= grid.height:
            continue
        span = radius - abs(dr)
        for c in range(max(1, col - span), min(grid.width, col + span) + 1):
            out.add(Position(c, r))
    out.discard(center)
    return out
