"""Text formats for graphs: the ``n m`` adjacency-list format and graph6."""

from __future__ import annotations

from importlib import resources
from typing import Iterable, Iterator, TextIO

from .graph import Graph, GraphError


class FormatError(ValueError):
    pass


def parse_adjacency(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` (0-based). Blank lines and ``#`` comments are skipped."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise FormatError("empty graph file")
    try:
        n, m = (int(x) for x in lines[0].split())
        edges = [tuple(int(x) for x in ln.split()) for ln in lines[1:]]
    except ValueError as exc:
        raise FormatError(f"malformed adjacency list: {exc}") from None
    if any(len(e) != 2 for e in edges):
        raise FormatError("each edge line must hold exactly two vertex ids")
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}")
    try:
        return Graph(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def format_adjacency(g: Graph) -> str:
    return "\n".join([f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]) + "\n"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise FormatError("graph6 supports at most 2**36 - 1 vertices; this encoder stops at 258047")


def to_graph6(g: Graph) -> str:
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6))
    return _encode_n(g.n) + body


def from_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise FormatError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise FormatError(f"invalid graph6 character in {s!r}")
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise FormatError("graph6 sizes beyond 258047 are not supported")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        data = data[4:]
    else:
        n = data[0]
        data = data[1:]
    if n == 0:
        raise FormatError("graphs must have at least one vertex")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) != need:
        raise FormatError(f"graph6 body has {len(data)} bytes, expected {need} for n={n}")
    bits = [(d >> (5 - k)) & 1 for d in data for k in range(6)]
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line and not line.startswith("#"):
            yield from_graph6(line)


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    """Parse a single graph; ``auto`` picks graph6 when the first token is not a number."""
    if fmt == "auto":
        first = text.strip().split(None, 1)[0] if text.strip() else ""
        fmt = "adj" if first.lstrip("-").isdigit() else "graph6"
    if fmt == "adj":
        return parse_adjacency(text)
    if fmt == "graph6":
        graphs = list(read_graph6_lines(text.splitlines()))
        if len(graphs) != 1:
            raise FormatError(f"expected one graph6 line, found {len(graphs)}")
        return graphs[0]
    raise FormatError(f"unknown graph format {fmt!r}")


def format_graph(g: Graph, fmt: str) -> str:
    if fmt == "adj":
        return format_adjacency(g)
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    raise FormatError(f"unknown graph format {fmt!r}")


def bundled_corpus(max_n: int = 7) -> list[Graph]:
    """All connected graphs on at most ``max_n`` (<= 7) vertices, one per isomorphism class."""
    if max_n > 7:
        raise ValueError("the bundled corpus stops at 7 vertices")
    text = resources.files("pcaepg").joinpath("data/connected_le7.g6").read_text()
    return [g for g in read_graph6_lines(text.splitlines()) if g.n <= max_n]


def load_corpus(stream: TextIO) -> list[Graph]:
    return list(read_graph6_lines(stream))
