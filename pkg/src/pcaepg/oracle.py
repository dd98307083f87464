"""Brute-force oracles: bounded-grid single-bend path search and the
exhaustive cross-validation driver.

The grid search enumerates every path with at most one bend inside a
``rows x cols`` block of grid points, then backtracks over vertices with
forward checking.  Each candidate path is a bit in a Python int, so a
vertex's remaining domain is one integer and each propagation step is a
single AND.
"""

from __future__ import annotations

from dataclasses import dataclass, field
import time
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

from .arcs import ArcRepresentation, iter_arc_models, search_arc_representation  # noqa: F401
from .epg import EpgRepresentation, LatticePath, validate_representation
from .graph import Graph

__all__ = [
    "FOUND", "EXHAUSTED", "INCONCLUSIVE", "SearchBudget", "SearchResult", "search_b1_epg",
    "iter_b1_epg", "cross_validate", "CrossReport", "CrossCase",
    "ArcRepresentation", "iter_arc_models", "search_arc_representation",
]

FOUND = "found"
EXHAUSTED = "exhausted"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SearchBudget:
    grid_rows: int = 6
    grid_cols: int = 6
    node_limit: int = 500_000_000
    # try smaller grids first; a layout found there also fits the full grid
    deepen: bool = True
    # optional wall-clock cap in seconds; hitting it is reported as inconclusive
    time_limit: float | None = None

    def __post_init__(self) -> None:
        if self.grid_rows < 1 or self.grid_cols < 1 or self.node_limit < 1:
            raise ValueError("search budget bounds must be positive")

    @classmethod
    def parse_grid(cls, text: str, node_limit: int | None = None) -> "SearchBudget":
        """``"6x6"`` -> SearchBudget(6, 6)."""
        rows, _, cols = text.lower().partition("x")
        kwargs = {} if node_limit is None else {"node_limit": node_limit}
        return cls(int(rows), int(cols), **kwargs)


@dataclass
class SearchResult:
    status: str
    representation: EpgRepresentation | None = None
    nodes: int = 0
    budget: SearchBudget = field(default_factory=SearchBudget)

    @property
    def found(self) -> bool:
        return self.status == FOUND

    def to_json(self) -> dict:
        out = {
            "status": self.status,
            "grid": [self.budget.grid_rows, self.budget.grid_cols],
            "nodes": self.nodes,
        }
        if self.representation is not None:
            out["representation"] = self.representation.to_json()
        return out


# -- candidate paths ---------------------------------------------------------

@dataclass(frozen=True)
class _Candidates:
    rows: int
    cols: int
    corners: tuple[tuple[tuple[int, int], ...], ...]  # corner points per candidate
    inter: tuple[int, ...]      # bitset of candidates sharing a grid edge
    disjoint: tuple[int, ...]   # complement of inter within the candidate set
    canonical: int              # one representative per grid-symmetry orbit

    @property
    def count(self) -> int:
        return len(self.corners)

    def path(self, i: int) -> LatticePath:
        return LatticePath.through(*self.corners[i])


def _enumerate_shapes(rows: int, cols: int) -> list[tuple[tuple[int, int], ...]]:
    shapes: list[tuple[tuple[int, int], ...]] = []
    for r in range(rows):
        for a in range(cols):
            for b in range(a + 1, cols):
                shapes.append(((r, a), (r, b)))
    for c in range(cols):
        for a in range(rows):
            for b in range(a + 1, rows):
                shapes.append(((a, c), (b, c)))
    for r in range(rows):
        for c in range(cols):
            for h in range(cols):
                if h == c:
                    continue
                for v in range(rows):
                    if v == r:
                        continue
                    shapes.append(((r, h), (r, c), (v, c)))
    return shapes


def _edge_mask(corners, rows: int, cols: int) -> int:
    hbase = rows * (cols - 1)
    mask = 0
    for (r1, c1), (r2, c2) in zip(corners, corners[1:]):
        if r1 == r2:
            for c in range(min(c1, c2), max(c1, c2)):
                mask |= 1 << (r1 * (cols - 1) + c)
        else:
            for r in range(min(r1, r2), max(r1, r2)):
                mask |= 1 << (hbase + r * cols + c1)
    return mask


def _symmetries(rows: int, cols: int):
    maps = [
        lambda r, c: (r, c),
        lambda r, c: (rows - 1 - r, c),
        lambda r, c: (r, cols - 1 - c),
        lambda r, c: (rows - 1 - r, cols - 1 - c),
    ]
    if rows == cols:
        maps += [
            lambda r, c: (c, r),
            lambda r, c: (cols - 1 - c, r),
            lambda r, c: (c, rows - 1 - r),
            lambda r, c: (cols - 1 - c, rows - 1 - r),
        ]
    return maps


@lru_cache(maxsize=16)
def _candidates(rows: int, cols: int) -> _Candidates:
    shapes = _enumerate_shapes(rows, cols)
    masks = [_edge_mask(s, rows, cols) for s in shapes]
    index = {m: i for i, m in enumerate(masks)}
    canonical = 0
    for i, s in enumerate(shapes):
        images = [index[_edge_mask(tuple(f(r, c) for r, c in s), rows, cols)] for f in _symmetries(rows, cols)]
        if min(images) == i:
            canonical |= 1 << i
    n_edges = rows * (cols - 1) + (rows - 1) * cols
    incidence = np.array([[(m >> e) & 1 for e in range(n_edges)] for m in masks], dtype=np.int32)
    overlap = (incidence @ incidence.T) != 0
    full = (1 << len(shapes)) - 1
    packed = np.packbits(overlap, axis=1, bitorder="little")
    inter = tuple(int.from_bytes(row.tobytes(), "little") for row in packed)
    disjoint = tuple(full & ~x for x in inter)
    return _Candidates(rows, cols, tuple(shapes), inter, disjoint, canonical)


class _NodeLimit(Exception):
    pass


def iter_b1_epg(g: Graph, budget: SearchBudget = SearchBudget()) -> Iterator[EpgRepresentation]:
    """Representations with at most one bend per path inside the grid, in search order.

    Raises ``_NodeLimit`` internally when the node cap is hit; use
    :func:`search_b1_epg` for the budget-aware wrapper.
    """
    res = _Search(g, budget)
    yield from res.solutions()


class _Search:
    def __init__(self, g: Graph, budget: SearchBudget):
        self.g = g
        self.budget = budget
        self.cand = _candidates(budget.grid_rows, budget.grid_cols)
        self.nodes = 0
        self.deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit

    def solutions(self) -> Iterator[EpgRepresentation]:
        g, cand = self.g, self.cand
        n = g.n
        full = (1 << cand.count) - 1
        first = max(range(n), key=lambda v: (g.degree(v), -v))
        domains = [full] * n
        domains[first] = cand.canonical
        assign = [-1] * n
        yield from self._extend(domains, assign, first)

    def _extend(self, domains: list[int], assign: list[int], pick: int | None) -> Iterator[EpgRepresentation]:
        g, cand = self.g, self.cand
        n = g.n
        if pick is None:
            free = [v for v in range(n) if assign[v] < 0]
            if not free:
                yield EpgRepresentation(tuple(cand.path(assign[v]) for v in range(n)))
                return
            pick = min(free, key=lambda v: (domains[v].bit_count(), v))
        v = pick
        dom = domains[v]
        others = [u for u in range(n) if assign[u] < 0 and u != v]
        nbr = g.masks[v]
        while dom:
            low = dom & -dom
            dom ^= low
            c = low.bit_length() - 1
            self.nodes += 1
            if self.nodes > self.budget.node_limit:
                raise _NodeLimit
            if self.deadline is not None and not self.nodes & 0xFFF and time.monotonic() > self.deadline:
                raise _NodeLimit
            inter, disjoint = cand.inter[c], cand.disjoint[c]
            new = domains[:]
            ok = True
            for u in others:
                d = new[u] & (inter if (nbr >> u) & 1 else disjoint)
                if not d:
                    ok = False
                    break
                new[u] = d
            if not ok:
                continue
            assign[v] = c
            yield from self._extend(new, assign, None)
            assign[v] = -1


def search_b1_epg(g: Graph, budget: SearchBudget = SearchBudget()) -> SearchResult:
    """First single-bend representation inside the budget's grid.

    ``exhausted`` means no representation exists *on this grid*; hitting the
    node cap gives ``inconclusive`` instead.
    """
    spent = 0
    start = time.monotonic()
    for rows, cols in _grid_schedule(budget):
        left = None if budget.time_limit is None else max(budget.time_limit - (time.monotonic() - start), 1e-3)
        sub = SearchBudget(rows, cols, budget.node_limit - spent, deepen=False, time_limit=left)
        search = _Search(g, sub)
        try:
            rep = next(search.solutions(), None)
        except _NodeLimit:
            return SearchResult(INCONCLUSIVE, None, spent + search.nodes, budget)
        spent += search.nodes
        if rep is not None:
            return SearchResult(FOUND, rep, spent, budget)
        if spent >= budget.node_limit:
            return SearchResult(INCONCLUSIVE, None, spent, budget)
    return SearchResult(EXHAUSTED, None, spent, budget)


def _grid_schedule(budget: SearchBudget) -> list[tuple[int, int]]:
    rows, cols = budget.grid_rows, budget.grid_cols
    if not budget.deepen:
        return [(rows, cols)]
    steps = [(min(k, rows), min(k, cols)) for k in range(3, max(rows, cols))]
    return list(dict.fromkeys(steps + [(rows, cols)]))


# -- cross-validation --------------------------------------------------------

AGREE = "agree"
DISAGREE = "disagree"


@dataclass(frozen=True)
class CrossCase:
    graph6: str
    verdict: str
    oracle: str
    status: str

    def line(self) -> str:
        return f"{self.graph6} {self.verdict} {self.oracle} {self.status}"


@dataclass
class CrossReport:
    max_n: int
    budget: SearchBudget
    cases: list[CrossCase] = field(default_factory=list)

    def _with(self, status: str) -> list[CrossCase]:
        return [c for c in self.cases if c.status == status]

    @property
    def agreements(self) -> list[CrossCase]:
        return self._with(AGREE)

    @property
    def disagreements(self) -> list[CrossCase]:
        return self._with(DISAGREE)

    @property
    def inconclusive(self) -> list[CrossCase]:
        return self._with(INCONCLUSIVE)

    @property
    def ok(self) -> bool:
        return not self.disagreements and not self.inconclusive

    def text(self) -> str:
        lines = [c.line() for c in self.cases]
        lines.append(
            f"# {len(self.cases)} PCA graphs: {len(self.agreements)} agree, "
            f"{len(self.disagreements)} disagree, {len(self.inconclusive)} inconclusive"
        )
        return "\n".join(lines) + "\n"


def _cross_case(args) -> CrossCase | None:
    g, budget, classify_fn = args
    from .classify import is_pca
    from .formats import to_graph6

    if not is_pca(g):
        return None
    verdict = classify_fn(g)
    result = search_b1_epg(g, budget)
    if result.found and not validate_representation(result.representation, g, 1).ok:
        raise AssertionError(f"oracle returned an invalid representation for {to_graph6(g)}")
    yes = bool(verdict)
    if result.status == INCONCLUSIVE:
        status = INCONCLUSIVE
    elif yes == result.found:
        status = AGREE
    else:
        status = DISAGREE
    return CrossCase(to_graph6(g), "YES" if yes else "NO", result.status, status)


def cross_validate(
    max_n: int,
    budget: SearchBudget = SearchBudget(),
    corpus: Iterable[Graph] | None = None,
    jobs: int = 1,
    classify_fn=None,
) -> CrossReport:
    """Compare the forbidden-family verdict with the grid search on every connected PCA graph.

    ``corpus`` defaults to the bundled list of connected graphs; ``classify_fn``
    can be swapped out to check that the harness notices a wrong classifier.
    Output order follows the corpus regardless of ``jobs``.
    """
    from .classify import classify_b1_epg
    from .formats import bundled_corpus

    if max_n > 7:
        raise ValueError("cross-validation is limited to graphs on at most 7 vertices")
    classify_fn = classify_fn or classify_b1_epg
    graphs = [g for g in (bundled_corpus(max_n) if corpus is None else corpus) if g.n <= max_n]
    work = [(g, budget, classify_fn) for g in graphs]
    if jobs > 1:
        from multiprocessing import Pool

        with Pool(jobs) as pool:
            out = pool.map(_cross_case, work)
    else:
        out = [_cross_case(w) for w in work]
    return CrossReport(max_n, budget, [c for c in out if c is not None])
