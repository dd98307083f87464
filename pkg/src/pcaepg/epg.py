"""Paths on a grid: bends, edge-intersection graphs, validation and rectangle checks.

Grid points are ``(row, col)`` integer pairs.  Two paths are adjacent when
they share a grid *edge*; meeting at a single grid point does not count.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .graph import Graph

Point = tuple[int, int]
GridEdge = tuple[Point, Point]


class PathError(ValueError):
    pass


def _unit_step(p: Point, q: Point) -> bool:
    return abs(p[0] - q[0]) + abs(p[1] - q[1]) == 1


@dataclass(frozen=True)
class LatticePath:
    points: tuple[Point, ...]

    def __post_init__(self) -> None:
        pts = tuple((int(r), int(c)) for r, c in self.points)
        object.__setattr__(self, "points", pts)
        if len(pts) < 2:
            raise PathError("a path needs at least two grid points")
        for p, q in zip(pts, pts[1:]):
            if not _unit_step(p, q):
                raise PathError(f"non-unit step {p} -> {q}")
        if len(set(pts)) != len(pts):
            raise PathError("path revisits a grid point")

    @classmethod
    def through(cls, *corners: Point) -> "LatticePath":
        """Path visiting the given corner points along straight runs."""
        pts: list[Point] = [corners[0]]
        for q in corners[1:]:
            r, c = pts[-1]
            if r != q[0] and c != q[1]:
                raise PathError(f"{pts[-1]} -> {q} is not axis-aligned")
            dr = (q[0] > r) - (q[0] < r)
            dc = (q[1] > c) - (q[1] < c)
            while (r, c) != q:
                r, c = r + dr, c + dc
                pts.append((r, c))
        return cls(tuple(pts))

    def grid_edges(self) -> frozenset[GridEdge]:
        return frozenset(grid_edge(p, q) for p, q in zip(self.points, self.points[1:]))

    def __len__(self) -> int:
        return len(self.points)


def grid_edge(p: Point, q: Point) -> GridEdge:
    return (p, q) if p <= q else (q, p)


def bends(p: LatticePath) -> int:
    pts = p.points
    count = 0
    for a, b, c in zip(pts, pts[1:], pts[2:]):
        if (b[0] - a[0], b[1] - a[1]) != (c[0] - b[0], c[1] - b[1]):
            count += 1
    return count


@dataclass(frozen=True)
class RectangleSpec:
    top: int
    bottom: int
    left: int
    right: int

    def __post_init__(self) -> None:
        if not (self.top < self.bottom and self.left < self.right):
            raise PathError("rectangle must have positive width and height")

    def boundary_edges(self) -> frozenset[GridEdge]:
        t, b, l, r = self.top, self.bottom, self.left, self.right
        out = set()
        for c in range(l, r):
            out.add(grid_edge((t, c), (t, c + 1)))
            out.add(grid_edge((b, c), (b, c + 1)))
        for row in range(t, b):
            out.add(grid_edge((row, l), (row + 1, l)))
            out.add(grid_edge((row, r), (row + 1, r)))
        return frozenset(out)


@dataclass(frozen=True)
class EpgRepresentation:
    """One lattice path per vertex; vertex ``i`` owns ``paths[i]``."""

    paths: tuple[LatticePath, ...]

    @property
    def n(self) -> int:
        return len(self.paths)

    @property
    def bound(self) -> RectangleSpec | None:
        pts = [p for path in self.paths for p in path.points]
        rows = [p[0] for p in pts]
        cols = [p[1] for p in pts]
        if min(rows) == max(rows) or min(cols) == max(cols):
            return None
        return RectangleSpec(min(rows), max(rows), min(cols), max(cols))

    def to_json(self) -> dict:
        return {"n": self.n, "paths": [[list(p) for p in path.points] for path in self.paths]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict) -> "EpgRepresentation":
        paths = data.get("paths")
        if not isinstance(paths, list) or data.get("n") != len(paths):
            raise PathError("representation JSON needs 'n' equal to the number of 'paths'")
        return cls(tuple(LatticePath(tuple(tuple(p) for p in path)) for path in paths))

    @classmethod
    def loads(cls, text: str) -> "EpgRepresentation":
        return cls.from_json(json.loads(text))

    def translated(self, drow: int, dcol: int) -> "EpgRepresentation":
        return EpgRepresentation(tuple(
            LatticePath(tuple((r + drow, c + dcol) for r, c in path.points)) for path in self.paths
        ))


def make_representation(paths: Iterable[Sequence[Point]]) -> EpgRepresentation:
    return EpgRepresentation(tuple(p if isinstance(p, LatticePath) else LatticePath(tuple(p)) for p in paths))


def intersection_graph(rep: EpgRepresentation) -> Graph:
    edge_sets = [p.grid_edges() for p in rep.paths]
    return Graph(rep.n, [(u, v) for u, v in combinations(range(rep.n), 2) if edge_sets[u] & edge_sets[v]])


@dataclass
class ValidationReport:
    ok: bool
    graph_matches: bool
    missing_edges: list[tuple[int, int]] = field(default_factory=list)
    extra_edges: list[tuple[int, int]] = field(default_factory=list)
    bends: list[int] = field(default_factory=list)
    max_bends: int | None = None
    over_budget: list[int] = field(default_factory=list)

    @property
    def first_mismatch(self) -> tuple[int, int] | None:
        pairs = sorted(self.missing_edges + self.extra_edges)
        return pairs[0] if pairs else None

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "graph_matches": self.graph_matches,
            "first_mismatch": list(self.first_mismatch) if self.first_mismatch else None,
            "missing_edges": [list(e) for e in self.missing_edges],
            "extra_edges": [list(e) for e in self.extra_edges],
            "bends": self.bends,
            "max_bends": self.max_bends,
            "over_budget": self.over_budget,
        }


def validate_representation(rep: EpgRepresentation, g: Graph, max_bends: int | None) -> ValidationReport:
    """Compare ``rep`` against ``g`` and a bend budget (``None`` means unbounded)."""
    if rep.n != g.n:
        raise PathError(f"representation has {rep.n} paths but the graph has {g.n} vertices")
    got = intersection_graph(rep)
    want = set(g.edges)
    have = set(got.edges)
    counts = [bends(p) for p in rep.paths]
    over = [] if max_bends is None else [v for v, b in enumerate(counts) if b > max_bends]
    matches = want == have
    return ValidationReport(
        ok=matches and not over,
        graph_matches=matches,
        missing_edges=sorted(want - have),
        extra_edges=sorted(have - want),
        bends=counts,
        max_bends=max_bends,
        over_budget=over,
    )


def is_epr(rep: EpgRepresentation, rect: RectangleSpec) -> bool:
    boundary = rect.boundary_edges()
    return all(p.grid_edges() <= boundary for p in rep.paths)
