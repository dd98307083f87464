"""Circular-arc models on a discrete circle and an exhaustive endpoint-order search.

A model on ``n`` arcs uses ``2n`` positions.  Arc ``(s, e)`` is open and runs
clockwise (increasing positions, mod ``2n``) from ``s`` to ``e``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .graph import Graph


class ArcSearchError(ValueError):
    pass


@dataclass(frozen=True)
class ArcRepresentation:
    circle_size: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        ends = [p for arc in self.arcs for p in arc]
        if len(set(ends)) != len(ends):
            raise ValueError("arc endpoints must be distinct")
        if any(not 0 <= p < self.circle_size for p in ends):
            raise ValueError("arc endpoint outside the circle")

    @property
    def n(self) -> int:
        return len(self.arcs)

    def half_mask(self, v: int) -> int:
        """Bitmask over ``2 * circle_size`` half-steps: bit ``2p`` is position p, ``2p+1`` the gap after it."""
        s, e = self.arcs[v]
        size = 2 * self.circle_size
        mask = 0
        i = (2 * s + 1) % size
        stop = (2 * e) % size
        while i != stop:
            mask |= 1 << i
            i = (i + 1) % size
        return mask

    def intersection_graph(self) -> Graph:
        masks = [self.half_mask(v) for v in range(self.n)]
        return Graph(self.n, [(u, v) for u, v in combinations(range(self.n), 2) if masks[u] & masks[v]])

    def is_proper(self) -> bool:
        masks = [self.half_mask(v) for v in range(self.n)]
        return not any(
            masks[u] & masks[v] in (masks[u], masks[v]) for u, v in combinations(range(self.n), 2)
        )

    def covers_circle(self, vertices) -> bool:
        full = (1 << (2 * self.circle_size)) - 1
        acc = 0
        for v in vertices:
            acc |= self.half_mask(v)
        return acc == full

    def max_cover_free(self) -> int:
        """Largest k such that no k or fewer arcs cover the circle (capped at 3)."""
        for k in (1, 2, 3):
            if any(self.covers_circle(c) for c in combinations(range(self.n), k)):
                return k - 1
        return 3

    def is_normal(self) -> bool:
        return self.max_cover_free() >= 2

    def is_helly3(self) -> bool:
        return self.max_cover_free() >= 3

    def to_json(self) -> dict:
        return {"circle_size": self.circle_size, "arcs": [list(a) for a in self.arcs]}


MAX_ARC_SEARCH_N = 8


def iter_arc_models(
    g: Graph, proper: bool = False, normal: bool = False, helly3: bool = False
) -> Iterator[ArcRepresentation]:
    """Every arc model of ``g`` satisfying the flags, up to rotation, in a fixed order.

    The circle is cut just before the start of arc 0.  Arcs open across the
    cut (a clique inside N(0)) end first and restart later; the scan places
    one endpoint per position and prunes as soon as an arc closes without
    having met all its neighbours.
    """
    n = g.n
    if n > MAX_ARC_SEARCH_N:
        raise ArcSearchError(f"arc search is limited to n <= {MAX_ARC_SEARCH_N}, got {n}")
    size = 2 * n

    for wrap in _cut_cliques(g):
        start = [-1] * n
        end = [-1] * n
        open_since = [None] * n
        met = [0] * n
        open_set = 0
        for v in range(n):
            if (wrap >> v) & 1:
                open_since[v] = -1
                open_set |= 1 << v
                met[v] = wrap & ~(1 << v)
        # arc 0 starts at position 0
        start[0] = 0
        open_since[0] = 0
        met[0] |= open_set
        for v in range(n):
            if (open_set >> v) & 1:
                met[v] |= 1
        open_set |= 1
        state = _ScanState(g, wrap, start, end, open_since, met, open_set, proper)
        for model in state.run(1, size):
            if normal and not model.is_normal():
                continue
            if helly3 and not model.is_helly3():
                continue
            yield model


def _cut_cliques(g: Graph) -> Iterator[int]:
    """Cliques inside N(0), as bitmasks, by increasing size then value."""
    nb = sorted(g.neighbors(0))
    for k in range(len(nb) + 1):
        for combo in combinations(nb, k):
            if all(g.has_edge(u, v) for u, v in combinations(combo, 2)):
                yield sum(1 << v for v in combo)


class _ScanState:
    def __init__(self, g, wrap, start, end, open_since, met, open_set, proper):
        self.g = g
        self.n = g.n
        self.wrap = wrap
        self.start = start
        self.end = end
        self.open_since = open_since
        self.met = met
        self.open_set = open_set
        self.proper = proper

    def run(self, t: int, size: int) -> Iterator[ArcRepresentation]:
        n, g = self.n, self.g
        if t == size:
            if all(self.met[v] == g.masks[v] for v in range(n)):
                model = ArcRepresentation(size, tuple((self.start[v], self.end[v]) for v in range(n)))
                if model.intersection_graph() == g and (not self.proper or model.is_proper()):
                    yield model
            return
        start, end, open_since, met = self.start, self.end, self.open_since, self.met
        # open an arc: a fresh one, or a cut arc after its first part closed
        for v in range(n):
            fresh = start[v] < 0 and not (self.wrap >> v) & 1
            reopen = (self.wrap >> v) & 1 and end[v] >= 0 and start[v] < 0
            if not (fresh or reopen):
                continue
            if self.open_set & ~g.masks[v]:
                continue
            prev_met = met[v]
            start[v] = t
            open_since[v] = t
            met[v] |= self.open_set
            touched = []
            o = self.open_set
            while o:
                low = o & -o
                u = low.bit_length() - 1
                if not (met[u] >> v) & 1:
                    met[u] |= 1 << v
                    touched.append(u)
                o ^= low
            self.open_set |= 1 << v
            yield from self.run(t + 1, size)
            self.open_set &= ~(1 << v)
            for u in touched:
                met[u] &= ~(1 << v)
            met[v] = prev_met
            start[v] = -1
            open_since[v] = None
        # close an arc
        if self.proper:
            oldest = min(open_since[u] for u in range(n) if (self.open_set >> u) & 1) if self.open_set else None
        for v in range(n):
            if not (self.open_set >> v) & 1 or end[v] >= 0:
                continue
            cut_first_part = (self.wrap >> v) & 1 and start[v] < 0
            if not cut_first_part and met[v] != g.masks[v]:
                continue
            if self.proper and open_since[v] != oldest:
                continue
            end[v] = t
            since = open_since[v]
            open_since[v] = None
            self.open_set &= ~(1 << v)
            yield from self.run(t + 1, size)
            self.open_set |= 1 << v
            open_since[v] = since
            end[v] = -1


def search_arc_representation(
    g: Graph, proper: bool = False, normal: bool = False, helly3: bool = False
) -> ArcRepresentation | None:
    return next(iter_arc_models(g, proper=proper, normal=normal, helly3=helly3), None)
