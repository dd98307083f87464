"""Generators for every named graph family used by the classifiers.

Vertex numbering is part of the public contract (witnesses and golden tests
refer to it).  For the figure-drawn graphs ``G1..G6`` and ``H1..H8`` the
vertices are numbered in the order the nodes are declared in the drawing,
i.e. by the letter lists in ``_DRAWN`` below; primed letters follow the
unprimed one (``a, a', a''``).

==================  ======================================================
family              numbering
==================  ======================================================
cycle(n)            0-1-...-(n-1)-0
path(n)             0-1-...-(n-1)
complete(n)         0..n-1
wheel(k)            centre 0, rim cycle 1-2-...-k-1
claw                centre 0, leaves 1, 2, 3
sun3                s0, s1, s2 = 0, 1, 2; k0, k1, k2 = 3, 4, 5; s_i ~ k_i, k_(i+1)
powercycle(k)       C_(4k-1)^k on the cycle numbering
cycle+k1(n)         C_(n+4) on 0..n+3, isolated vertex n+4
co-odd-cycle+k1(n)  complement of C_(2n+3) + K1 (isolated vertex last)
co-even-cycle(n)    complement of C_(2n+6)
==================  ======================================================

``H5`` comes in two variants; ``serpentine=True`` is the one where the wavy
pair (a, g) is an edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph import Graph, GraphError, complement, disjoint_union, graph_power

# letters in declaration order, then edges as letter pairs
_DRAWN: dict[str, tuple[list[str], list[str]]] = {
    # 3-sun plus an isolated vertex: c, b, f outer; a, d, e are the midpoints
    "G1": (["c", "b", "f", "g", "a", "d", "e"],
           ["c-a", "a-b", "c-d", "d-f", "b-e", "e-f", "a-d", "d-e", "e-a"]),
    "G2": (["a", "b", "c", "d", "e", "f", "g"],
           ["a-b", "a-c", "a-d", "a-e", "b-c", "b-e", "b-f", "c-d", "c-g", "d-e", "d-g", "e-f"]),
    "G3": (["a", "b", "c", "d", "e", "f", "g"],
           ["a-b", "a-c", "a-d", "b-c", "b-d", "b-e", "b-f", "c-d", "c-f", "c-g", "d-e",
            "d-g", "e-f", "e-g", "f-g"]),
    "G4": (["a", "b", "c", "d", "e", "f", "g"],
           ["a-b", "a-c", "a-d", "a-e", "a-f", "b-c", "b-e", "c-d", "c-f", "c-g", "d-e",
            "d-f", "d-g", "f-g"]),
    "G5": (["a", "b", "c", "d", "e", "f", "g"],
           ["a-b", "a-c", "a-d", "a-e", "a-g", "b-c", "b-e", "b-f", "c-d", "c-g", "d-e",
            "d-g", "e-f"]),
    # the net
    "G6": (["a", "b", "c", "d", "e", "f"],
           ["a-b", "a-c", "a-e", "b-c", "b-f", "c-d"]),
    "H1": (["a", "b", "c", "d", "e", "f"],
           ["a-b", "a-c", "a-d", "a-e", "b-c", "b-e", "c-d", "c-f", "d-f", "d-e", "e-f"]),
    "H2": (["a", "b", "c", "d", "e", "f", "g"],
           ["a-b", "a-c", "a-d", "a-e", "a-f", "a-g", "b-c", "b-e", "b-g", "c-d", "c-f",
            "c-g", "d-f", "d-e", "d-g", "e-f"]),
    "H3": (["a", "a'", "a''", "b", "c", "d", "e"],
           ["a-b", "a-c", "a-d", "a-e", "a-a'", "a-a''", "a'-b", "a'-c", "a'-d", "a'-e",
            "a''-b", "a''-c", "a''-d", "a''-e", "b-c", "b-e", "c-d", "d-e"]),
    "H4": (["a'", "a''", "b", "c", "d", "e", "f"],
           ["a'-b", "a'-c", "a'-d", "a'-e", "a'-f", "a''-b", "a''-c", "a''-d", "a''-e",
            "a''-f", "b-c", "b-e", "c-d", "c-f", "d-f", "d-e"]),
    "H5": (["a", "b", "c", "d", "e", "f", "g"],
           ["a-b", "a-c", "a-d", "a-e", "a-f", "b-c", "b-e", "b-g", "c-d", "c-f", "d-f",
            "d-e", "e-f", "e-g", "f-g"]),
    "H6": (["a'", "a''", "b", "c", "d", "e", "f", "g"],
           ["a'-b", "a'-c", "a'-d", "a'-e", "a'-g", "a'-a''", "a''-b", "a''-c", "a''-d",
            "a''-e", "a''-f", "b-c", "b-e", "b-g", "c-d", "d-f", "d-e", "e-f", "e-g"]),
    "H7": (["a", "b", "c", "d", "e", "f", "g"],
           ["a-b", "a-c", "a-d", "a-e", "a-f", "a-g", "b-c", "b-e", "b-g", "c-d", "c-f",
            "c-g", "d-f", "d-e", "e-f", "e-g", "f-g"]),
    "H8": (["a", "b", "c", "d", "e", "f", "g"],
           ["a-b", "a-c", "a-d", "a-e", "a-g", "b-c", "b-e", "c-d", "c-g", "d-f", "d-e",
            "d-g", "e-f", "f-g"]),
}

# the wavy pair in H5
_SERPENTINE = ("a", "g")

DRAWN_NAMES = tuple(_DRAWN)

_PARAMETRIC_MIN = {
    "cycle": 3,
    "path": 1,
    "complete": 1,
    "wheel": 3,
    "powercycle": 2,
    "cycle+k1": 0,
    "co-odd-cycle+k1": 0,
    "co-even-cycle": 0,
}

_ALIASES = {
    "c": "cycle", "k": "complete", "p": "path", "w": "wheel",
    "s3": "sun3", "3sun": "sun3", "k13": "claw",
    "power": "powercycle", "power-cycle": "powercycle",
    "cycle-union-k1": "cycle+k1", "co-odd-cycle-union-k1": "co-odd-cycle+k1",
}


@dataclass(frozen=True)
class Family:
    """A named graph family member, e.g. ``Family("wheel", 4)`` or ``Family("H5", serpentine=True)``."""

    name: str
    param: int | None = None
    serpentine: bool = False

    def __post_init__(self) -> None:
        name = self.name
        if name.upper() in _DRAWN:
            name = name.upper()
        else:
            name = _ALIASES.get(name.lower(), name.lower())
        object.__setattr__(self, "name", name)
        if name in _DRAWN or name in ("sun3", "claw"):
            if self.param is not None:
                raise GraphError(f"{name} takes no parameter")
            if self.serpentine and name != "H5":
                raise GraphError("only H5 has a serpentine variant")
        elif name in _PARAMETRIC_MIN:
            if self.param is None or self.param < _PARAMETRIC_MIN[name]:
                raise GraphError(f"{name} needs an integer parameter >= {_PARAMETRIC_MIN[name]}")
            if self.serpentine:
                raise GraphError("only H5 has a serpentine variant")
        else:
            raise GraphError(f"unknown family {self.name!r}")

    @property
    def label(self) -> str:
        p = self.param
        return {
            "cycle": f"C{p}",
            "path": f"P{p}",
            "complete": f"K{p}",
            "wheel": f"W{p}",
            "sun3": "S3",
            "claw": "claw",
            "powercycle": f"C{4 * p - 1}^{p}" if p is not None else "",
            "cycle+k1": f"C{p + 4}+K1" if p is not None else "",
            "co-odd-cycle+k1": f"co(C{2 * p + 3}+K1)" if p is not None else "",
            "co-even-cycle": f"co(C{2 * p + 6})" if p is not None else "",
        }.get(self.name, self.name + ("+" if self.serpentine else ""))

    @property
    def order(self) -> int:
        """Vertex count of the family member."""
        p = self.param or 0
        return {
            "cycle": p, "path": p, "complete": p, "wheel": p + 1, "sun3": 6, "claw": 4,
            "powercycle": 4 * p - 1, "cycle+k1": p + 5, "co-odd-cycle+k1": 2 * p + 4,
            "co-even-cycle": 2 * p + 6,
        }.get(self.name) or len(_DRAWN[self.name][0])

    def graph(self) -> Graph:
        return named_graph(self)


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def wheel(k: int) -> Graph:
    if k < 3:
        raise GraphError("wheels need k >= 3")
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)] + [(i, i % k + 1) for i in range(1, k + 1)])


def claw() -> Graph:
    return Graph(4, [(0, 1), (0, 2), (0, 3)])


def sun3() -> Graph:
    s, k = (0, 1, 2), (3, 4, 5)
    edges = [(k[0], k[1]), (k[1], k[2]), (k[0], k[2])]
    for i in range(3):
        edges += [(s[i], k[i]), (s[i], k[(i + 1) % 3])]
    return Graph(6, edges)


def power_cycle(k: int) -> Graph:
    """C_(4k-1)^k, the infinite non-B1-EPG family."""
    return graph_power(cycle(4 * k - 1), k)


def _drawn(name: str, serpentine: bool) -> Graph:
    letters, pairs = _DRAWN[name]
    index = {c: i for i, c in enumerate(letters)}
    pairs = [tuple(p.split("-")) for p in pairs]
    if name == "H5" and serpentine:
        pairs.append(_SERPENTINE)
    return Graph(len(letters), [(index[a], index[b]) for a, b in pairs])


def drawn_letters(name: str) -> list[str]:
    return list(_DRAWN[name][0])


@lru_cache(maxsize=None)
def named_graph(f: Family) -> Graph:
    name, p = f.name, f.param
    if name in _DRAWN:
        return _drawn(name, f.serpentine)
    if name == "sun3":
        return sun3()
    if name == "claw":
        return claw()
    if name == "cycle":
        return cycle(p)
    if name == "path":
        return path(p)
    if name == "complete":
        return complete(p)
    if name == "wheel":
        return wheel(p)
    if name == "powercycle":
        return power_cycle(p)
    if name == "cycle+k1":
        return disjoint_union(cycle(p + 4), complete(1))
    if name == "co-odd-cycle+k1":
        return complement(disjoint_union(cycle(2 * p + 3), complete(1)))
    if name == "co-even-cycle":
        return complement(cycle(2 * p + 6))
    raise GraphError(f"unknown family {name!r}")  # pragma: no cover


def h_family() -> list[Family]:
    """The nine finite non-B1-EPG patterns (both H5 variants)."""
    out = []
    for i in range(1, 9):
        out.append(Family(f"H{i}"))
        if i == 5:
            out.append(Family("H5", serpentine=True))
    return out


def g_family() -> list[Family]:
    return [Family(f"G{i}") for i in range(1, 7)]
