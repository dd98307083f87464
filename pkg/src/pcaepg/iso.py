"""Induced-subgraph isomorphism and forbidden-family scanning."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .families import Family
from .graph import Graph


@dataclass(frozen=True)
class Embedding:
    """``mapping[i]`` is the host vertex that pattern vertex ``i`` lands on."""

    mapping: tuple[int, ...]

    def __iter__(self) -> Iterator[int]:
        return iter(self.mapping)

    def __len__(self) -> int:
        return len(self.mapping)


def is_induced_embedding(host: Graph, pattern: Graph, mapping: Sequence[int]) -> bool:
    """Independent validator: injective and adjacency-preserving in both directions."""
    if len(mapping) != pattern.n or len(set(mapping)) != pattern.n:
        return False
    if any(not 0 <= h < host.n for h in mapping):
        return False
    for u in range(pattern.n):
        for v in range(u + 1, pattern.n):
            if pattern.has_edge(u, v) != host.has_edge(mapping[u], mapping[v]):
                return False
    return True


def iter_induced(host: Graph, pattern: Graph) -> Iterator[Embedding]:
    """All induced embeddings, in lexicographic order of the mapping tuple."""
    m, n = pattern.n, host.n
    if m > n:
        return
    pdeg = [pattern.degree(u) for u in range(m)]
    hdeg = [host.degree(h) for h in range(n)]
    # candidate host vertices per pattern vertex: enough neighbours and enough non-neighbours
    cand = [
        [h for h in range(n) if hdeg[h] >= pdeg[u] and (n - 1 - hdeg[h]) >= (m - 1 - pdeg[u])]
        for u in range(m)
    ]
    pmask = pattern.masks
    hmask = host.masks
    mapping = [0] * m

    def extend(i: int, used: int) -> Iterator[Embedding]:
        if i == m:
            yield Embedding(tuple(mapping))
            return
        pm = pmask[i]
        for h in cand[i]:
            if (used >> h) & 1:
                continue
            hm = hmask[h]
            ok = True
            for j in range(i):
                if ((pm >> j) & 1) != ((hm >> mapping[j]) & 1):
                    ok = False
                    break
            if ok:
                mapping[i] = h
                yield from extend(i + 1, used | (1 << h))

    yield from extend(0, 0)


def find_induced(host: Graph, pattern: Graph) -> Embedding | None:
    """Lexicographically least induced embedding of ``pattern`` into ``host``, or None."""
    return next(iter_induced(host, pattern), None)


def contains_induced(host: Graph, pattern: Graph) -> bool:
    return find_induced(host, pattern) is not None


# -- family scans ------------------------------------------------------------

def pca_obstructions(max_order: int) -> list[Family]:
    """Minimal non-PCA patterns with at most ``max_order`` vertices, in scan order.

    Scan order: the six drawn graphs by vertex count, then each infinite
    family by ascending parameter.
    """
    out = sorted((Family(f"G{i}") for i in range(1, 7)), key=lambda f: (f.order, f.name))
    out = [f for f in out if f.order <= max_order]
    out += _ascending("cycle+k1", 0, max_order)
    out += _ascending("co-odd-cycle+k1", 0, max_order)
    out += _ascending("co-even-cycle", 0, max_order)
    return out


def b1_epg_obstructions(max_order: int) -> list[Family]:
    """H1..H8 (both H5 variants) by vertex count, then C_(4k-1)^k by ascending k."""
    from .families import h_family

    out = sorted(h_family(), key=lambda f: (f.order, f.name, f.serpentine))
    out = [f for f in out if f.order <= max_order]
    return out + _ascending("powercycle", 2, max_order)


def b1_epr_obstructions(max_order: int) -> list[Family]:
    out = [f for f in (Family("wheel", 4), Family("sun3")) if f.order <= max_order]
    return out + _ascending("powercycle", 2, max_order)


def _ascending(name: str, start: int, max_order: int) -> list[Family]:
    out = []
    p = start
    while Family(name, p).order <= max_order:
        out.append(Family(name, p))
        p += 1
    return out


def first_forbidden(host: Graph, family: Iterable[Family]) -> tuple[Family, Embedding] | None:
    """First family member (in the given order) that embeds in ``host``, with its embedding."""
    for f in family:
        if f.order > host.n:
            continue
        emb = find_induced(host, f.graph())
        if emb is not None:
            return f, emb
    return None
