"""Immutable simple graphs on vertices ``0..n-1`` and the structural predicates
used throughout the package."""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable, Sequence


class GraphError(ValueError):
    pass


class Graph:
    """Simple undirected graph with vertex ids ``0..n-1``.

    Adjacency is stored both as frozensets and as integer bitmasks; the
    bitmasks are what the search code uses on hot paths.
    """

    __slots__ = ("_n", "_adj", "_masks", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise GraphError(f"vertex count must be >= 1, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self._n = n
        self._adj = tuple(frozenset(a) for a in adj)
        self._masks = tuple(sum(1 << w for w in a) for a in adj)
        self._edges = tuple(sorted((u, v) for u in range(n) for v in adj[u] if u < v))

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    def __len__(self) -> int:
        return self._n

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (self._masks[u] >> v) & 1 == 1

    @property
    def m(self) -> int:
        return len(self._edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={list(self._edges)})"


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, edges)


def complement(g: Graph) -> Graph:
    return Graph(g.n, ((u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph(g1.n + g2.n, list(g1.edges) + [(u + shift, v + shift) for u, v in g2.edges])


def distances_from(g: Graph, source: int) -> list[int | None]:
    dist: list[int | None] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def graph_power(g: Graph, k: int) -> Graph:
    """``u ~ v`` in the result iff ``0 < dist(u, v) <= k``; unreachable pairs stay apart."""
    if k < 0:
        raise GraphError("exponent must be >= 0")
    edges = []
    for u in range(g.n):
        dist = distances_from(g, u)
        edges.extend((u, v) for v in range(u + 1, g.n) if dist[v] is not None and dist[v] <= k)
    return Graph(g.n, edges)


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced by ``s``, relabelled in ascending vertex order."""
    verts = sorted(set(s))
    if not verts:
        raise GraphError("induced subgraph needs a nonempty vertex set")
    if verts[0] < 0 or verts[-1] >= g.n:
        raise GraphError(f"vertex set {verts} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(verts)}
    return Graph(len(verts), [(index[u], index[v]) for u, v in g.edges if u in index and v in index])


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, [u for u in range(g.n) if u != v])


def diameter(g: Graph) -> int:
    best = 0
    for u in range(g.n):
        dist = distances_from(g, u)
        if any(d is None for d in dist):
            raise GraphError("diameter of a disconnected graph is infinite")
        best = max(best, max(dist))
    return best


# -- set predicates ---------------------------------------------------------

def is_connected(g: Graph) -> bool:
    return all(d is not None for d in distances_from(g, 0))


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    s = list(s)
    return all(g.has_edge(u, v) for u, v in combinations(s, 2))


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    s = list(s)
    return not any(g.has_edge(u, v) for u, v in combinations(s, 2))


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    closed = 0
    for v in s:
        closed |= g.masks[v] | (1 << v)
    return closed == (1 << g.n) - 1


def is_complete_between(g: Graph, x: Iterable[int], y: Iterable[int]) -> bool:
    y = list(y)
    return all(g.has_edge(u, v) for u in x for v in y)


def is_anticomplete_between(g: Graph, x: Iterable[int], y: Iterable[int]) -> bool:
    y = list(y)
    return not any(g.has_edge(u, v) for u in x for v in y)


def components(g: Graph) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for s in range(g.n):
        if s in seen:
            continue
        dist = distances_from(g, s)
        comp = [v for v in range(g.n) if dist[v] is not None]
        seen.update(comp)
        out.append(comp)
    return out


# -- chordality and asteroidal triples -------------------------------------

def perfect_elimination_ordering(g: Graph) -> list[int] | None:
    """Return a perfect elimination ordering, or None if ``g`` is not chordal.

    Maximum cardinality search followed by the standard PEO check.
    """
    n = g.n
    weight = [0] * n
    numbered = [False] * n
    order = []
    for _ in range(n):
        v = max((u for u in range(n) if not numbered[u]), key=lambda u: (weight[u], -u))
        numbered[v] = True
        order.append(v)
        for w in g.neighbors(v):
            if not numbered[w]:
                weight[w] += 1
    peo = order[::-1]
    position = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [w for w in g.neighbors(v) if position[w] > position[v]]
        if not later:
            continue
        parent = min(later, key=position.__getitem__)
        if any(w != parent and not g.has_edge(parent, w) for w in later):
            return None
    return peo


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_ordering(g) is not None


def _reachable_avoiding(g: Graph, source: int, blocked: int) -> int:
    """Bitmask of vertices reachable from ``source`` without entering ``blocked``."""
    if (blocked >> source) & 1:
        return 0
    seen = 1 << source
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= g.masks[low.bit_length() - 1]
            f ^= low
        nxt &= ~blocked & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def find_asteroidal_triple(g: Graph) -> tuple[int, int, int] | None:
    closed = [g.masks[v] | (1 << v) for v in range(g.n)]
    for a, b, c in combinations(range(g.n), 3):
        if g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c):
            continue
        if not (_reachable_avoiding(g, a, closed[c]) >> b) & 1:
            continue
        if not (_reachable_avoiding(g, a, closed[b]) >> c) & 1:
            continue
        if not (_reachable_avoiding(g, b, closed[a]) >> c) & 1:
            continue
        return (a, b, c)
    return None


def has_asteroidal_triple(g: Graph) -> bool:
    return find_asteroidal_triple(g) is not None


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """Bron-Kerbosch with pivoting; cliques sorted for determinism."""
    out: list[frozenset[int]] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(frozenset(v for v in range(g.n) if (r >> v) & 1))
            return
        pu = p | x
        pivot = max((v for v in range(g.n) if (pu >> v) & 1), key=lambda v: (g.masks[v] & p).bit_count())
        candidates = p & ~g.masks[pivot]
        for v in range(g.n):
            if not (candidates >> v) & 1:
                continue
            expand(r | (1 << v), p & g.masks[v], x & g.masks[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, (1 << g.n) - 1, 0)
    return sorted(out, key=lambda c: sorted(c))


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    return [
        (a, b, c)
        for a, b, c in combinations(range(g.n), 3)
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)
    ]


def edges_between(g: Graph, verts: Sequence[int]) -> list[tuple[int, int]]:
    return [(u, v) for u, v in combinations(verts, 2) if g.has_edge(u, v)]
