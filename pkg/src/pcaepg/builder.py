"""Constructive single-bend layouts for PCA graphs free of the H patterns and
of C_(4k-1)^k.

Dispatch, mirroring the sufficiency argument:

* interval graphs get a 0-bend layout on one row;
* graphs with an induced 4-wheel are partitioned around the wheel's rim
  and laid out on a central cross (three layouts, by which rim-pair sets
  are nonempty);
* 4-wheel-free graphs with a suitable triangle use the three-armed layout;
* everything else goes through a proper Helly arc model mapped onto the
  boundary of a rectangle.

All cross layouts share one geometry: a centre point and four arms of
length 2.  Paths either pass through the centre (one or two arms, full
length), or occupy the outer unit of a single arm.  Paths sharing an arm
edge are adjacent, which is exactly what the partition lemmas guarantee.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations

from .arcs import ArcRepresentation, iter_arc_models
from .epg import EpgRepresentation, LatticePath, RectangleSpec, is_epr, validate_representation
from .families import Family
from .graph import (
    Graph,
    is_anticomplete_between,
    is_clique,
    is_complete_between,
    is_dominating,
    maximal_cliques,
    perfect_elimination_ordering,
    find_asteroidal_triple,
    triangles,
)
from .iso import find_induced

log = logging.getLogger(__name__)


class BuildError(RuntimeError):
    """Construction failed; ``detail`` names the violated structural condition."""

    def __init__(self, message: str, detail: object = None):
        super().__init__(message)
        self.detail = detail


class PartitionError(BuildError):
    pass


# -- cross geometry ----------------------------------------------------------

ARM = 2
CENTRE = (ARM, ARM)
_DIRS = {"W": (0, -1), "E": (0, 1), "N": (-1, 0), "S": (1, 0)}
_OPPOSITE = {"W": "E", "E": "W", "N": "S", "S": "N"}


def _arm_point(arm: str, d: int) -> tuple[int, int]:
    dr, dc = _DIRS[arm]
    return (CENTRE[0] + dr * d, CENTRE[1] + dc * d)


def through_centre(arm1: str, arm2: str, reach1: int = ARM, reach2: int = ARM) -> LatticePath:
    """Path from ``arm1`` through the centre into ``arm2``: straight if the arms are opposite, else an L."""
    return LatticePath.through(_arm_point(arm1, reach1), CENTRE, _arm_point(arm2, reach2))


def outer_segment(arm: str) -> LatticePath:
    """The outer unit of an arm; touches nothing through the centre."""
    return LatticePath.through(_arm_point(arm, 1), _arm_point(arm, ARM))


# -- 4-wheel witness and partition ------------------------------------------

@dataclass(frozen=True)
class WheelWitness:
    """Induced 4-wheel: ``rim`` is the 4-cycle x2, x3, x4, x5 in cyclic order."""

    center: int
    rim: tuple[int, int, int, int]

    def check(self, g: Graph) -> None:
        r = self.rim
        for i in range(4):
            if not g.has_edge(r[i], r[(i + 1) % 4]):
                raise BuildError(f"rim vertices {r[i]}, {r[(i + 1) % 4]} are not adjacent", self)
            if not g.has_edge(self.center, r[i]):
                raise BuildError(f"centre {self.center} misses rim vertex {r[i]}", self)
        if g.has_edge(r[0], r[2]) or g.has_edge(r[1], r[3]):
            raise BuildError("rim has a chord", self)

    def rotated(self, k: int) -> "WheelWitness":
        r = self.rim
        return WheelWitness(self.center, tuple(r[(i + k) % 4] for i in range(4)))


def find_wheel(g: Graph) -> WheelWitness | None:
    """Lexicographically least induced W4 (centre first, then the rim in cycle order)."""
    emb = find_induced(g, Family("wheel", 4).graph())
    if emb is None:
        return None
    m = emb.mapping
    return WheelWitness(m[0], (m[1], m[2], m[3], m[4]))


def dominating_triangle_from_w4(g: Graph, w: WheelWitness) -> tuple[int, int, int]:
    """A dominating triangle containing the wheel's centre.

    Tries {centre, two consecutive rim vertices} first, then any triangle of ``g``.
    """
    w.check(g)
    for i in range(4):
        tri = (w.center, w.rim[i], w.rim[(i + 1) % 4])
        if is_dominating(g, tri):
            return tri
    for tri in triangles(g):
        if is_dominating(g, tri):
            return tri
    raise BuildError("no dominating triangle; the input is not a PCA graph containing W4", w)


def wheel_from_triangle(g: Graph, tri: tuple[int, int, int]) -> WheelWitness:
    """Rebuild the 4-cycle x2, x3, x4, x5 from a dominating triangle (x1 = centre).

    x4 is adjacent to x1, x3 but not x2; x5 is adjacent to x1, x2 but not x3;
    and x4 ~ x5.
    """
    x1, x2, x3 = tri
    a13 = [v for v in range(g.n) if v not in tri and g.has_edge(v, x1) and g.has_edge(v, x3) and not g.has_edge(v, x2)]
    a12 = [v for v in range(g.n) if v not in tri and g.has_edge(v, x1) and g.has_edge(v, x2) and not g.has_edge(v, x3)]
    for x4 in a13:
        for x5 in a12:
            if g.has_edge(x4, x5):
                return WheelWitness(x1, (x2, x3, x4, x5))
    raise BuildError(f"triangle {tri} does not extend to a 4-wheel")


# labels for the partition around the rim (rim positions 0..3 are x2..x5)
PAIR_LABELS = ("A23", "A34", "A45", "A52")
TRIPLE_LABELS = ("A2", "A3", "A4", "A5")
ALL_LABEL = "Ac'"


@dataclass
class ASetPartition:
    witness: WheelWitness
    sets: dict[str, tuple[int, ...]]
    refinements: dict[str, tuple[int, ...]] = field(default_factory=dict)

    def __getitem__(self, label: str) -> tuple[int, ...]:
        return self.sets[label]

    def nonempty_pairs(self) -> list[int]:
        return [i for i, lab in enumerate(PAIR_LABELS) if self.sets[lab]]


def _label_of(g: Graph, v: int, rim: tuple[int, ...]) -> str:
    hit = [i for i in range(4) if g.has_edge(v, rim[i])]
    if len(hit) == 4:
        return ALL_LABEL
    if len(hit) == 3:
        missing = ({0, 1, 2, 3} - set(hit)).pop()
        return TRIPLE_LABELS[(missing + 2) % 4]
    if len(hit) == 2 and (hit[1] - hit[0]) in (1, 3):
        i = hit[0] if hit[1] - hit[0] == 1 else hit[1]
        return PAIR_LABELS[i]
    raise PartitionError(
        f"vertex {v} sees rim vertices {[rim[i] for i in hit]}; every vertex must see two consecutive ones",
        {"vertex": v, "rim_neighbours": [rim[i] for i in hit]},
    )


def _lemma_checks(g: Graph, s: dict[str, tuple[int, ...]]):
    """Yield (lemma, X, Y, kind) for every structural condition of the W4 case."""
    for lab in PAIR_LABELS + TRIPLE_LABELS:
        yield (f"{lab} is a clique", lab, lab, "clique")
    for lab in TRIPLE_LABELS:
        yield (f"{lab} complete to {ALL_LABEL}", lab, ALL_LABEL, "complete")
    for i in range(4):
        yield ("triple sets complete around the rim", TRIPLE_LABELS[i], TRIPLE_LABELS[(i + 1) % 4], "complete")
    yield ("A2 anticomplete to A4", "A2", "A4", "anti")
    yield ("A3 anticomplete to A5", "A3", "A5", "anti")
    for i, lab in enumerate(PAIR_LABELS):
        for k in range(4):
            if k not in (i, (i + 1) % 4):
                yield (f"{lab} anticomplete to {TRIPLE_LABELS[k]}", lab, TRIPLE_LABELS[k], "anti")
    for a, b in combinations(PAIR_LABELS, 2):
        yield (f"{a} anticomplete to {b}", a, b, "anti")
    for i, lab in enumerate(PAIR_LABELS):
        yield (f"{TRIPLE_LABELS[i]} complete to {lab}", TRIPLE_LABELS[i], lab, "complete")
        yield (f"{lab} complete to {TRIPLE_LABELS[(i + 1) % 4]}", lab, TRIPLE_LABELS[(i + 1) % 4], "complete")


def _first_violation(g: Graph, xs, ys, kind: str) -> tuple[int, int] | None:
    if kind == "clique":
        for u, v in combinations(xs, 2):
            if not g.has_edge(u, v):
                return (u, v)
        return None
    for u in xs:
        for v in ys:
            if u != v and g.has_edge(u, v) != (kind == "complete"):
                return (u, v)
    return None


def partition_around_c4(g: Graph, w: WheelWitness) -> ASetPartition:
    """Partition V minus the rim by adjacency to the rim and verify every lemma.

    Raises PartitionError with the violated condition and the offending pair.
    """
    w.check(g)
    rim = w.rim
    sets: dict[str, list[int]] = {lab: [] for lab in PAIR_LABELS + TRIPLE_LABELS + (ALL_LABEL,)}
    for v in range(g.n):
        if v in rim:
            continue
        sets[_label_of(g, v, rim)].append(v)
    frozen = {k: tuple(v) for k, v in sets.items()}
    for lemma, x, y, kind in _lemma_checks(g, frozen):
        bad = _first_violation(g, frozen[x], frozen[y], kind)
        if bad is not None:
            raise PartitionError(f"lemma violated: {lemma} (pair {bad})", {"lemma": lemma, "pair": bad})
    return ASetPartition(w, frozen)


# -- the 4-wheel layouts -------------------------------------------------------

# rim position i sits between pair sets i-1 and i; pair set i lives on PAIR_ARMS[i]
PAIR_ARMS = ("E", "N", "W", "S")


def _rim_shape(i: int) -> LatticePath:
    return through_centre(PAIR_ARMS[(i - 1) % 4], PAIR_ARMS[i])


def _wheel_layout(g: Graph, part: ASetPartition) -> tuple[str, dict[int, LatticePath]]:
    """Pick the layout by which pair sets are nonempty and place every vertex."""
    s = part.sets
    rim = part.witness.rim
    paths: dict[int, LatticePath] = {}
    for i in range(4):
        paths[rim[i]] = _rim_shape(i)
        for v in s[TRIPLE_LABELS[i]]:
            paths[v] = _rim_shape(i)
        for v in s[PAIR_LABELS[i]]:
            paths[v] = outer_segment(PAIR_ARMS[i])

    centre_set = s[ALL_LABEL]
    nonempty = part.nonempty_pairs()
    row = lambda r_w=ARM, r_e=ARM: through_centre("W", "E", r_w, r_e)  # noqa: E731
    col = lambda r_n=ARM, r_s=ARM: through_centre("N", "S", r_n, r_s)  # noqa: E731

    if 0 in nonempty and 2 in nonempty:
        # both E and W pair sets present: the centre clique takes the whole row
        layout = "cas1"
        for v in centre_set:
            paths[v] = row()
    elif nonempty == [1, 2]:
        # N and W pair sets: each centre vertex follows the one it is complete to
        layout = "cas1-adjacent"
        for v in centre_set:
            paths[v] = col() if is_complete_between(g, [v], s["A34"]) else row()
        part.refinements = {
            "Ac'^1": tuple(v for v in centre_set if is_complete_between(g, [v], s["A34"])),
            "Ac'^2": tuple(v for v in centre_set if not is_complete_between(g, [v], s["A34"])),
        }
    elif nonempty == [1]:
        layout = "cas2"
        adj = tuple(v for v in centre_set if is_complete_between(g, [v], s["A34"]))
        non = tuple(v for v in centre_set if is_anticomplete_between(g, [v], s["A34"]))
        if len(adj) + len(non) != len(centre_set):
            mixed = next(v for v in centre_set if v not in adj and v not in non)
            raise PartitionError(f"{mixed} is neither complete nor anticomplete to A34", {"vertex": mixed})
        part.refinements = {"Ac'^a": adj, "Ac'^na": non}
        for v in adj:
            paths[v] = col()
        for v in non:
            paths[v] = col(r_n=1)
    elif not nonempty:
        layout = "cas3"
        comps = _components_within(g, centre_set)
        if len(comps) > 2 or any(not is_clique(g, c) for c in comps):
            raise PartitionError("Ac' does not split into two anticomplete cliques", {"components": comps})
        first = comps[0]
        second = comps[1] if len(comps) > 1 else ()
        part.refinements = {"Ac'^1": tuple(first), "Ac'^2": tuple(second)}
        for v in first:
            paths[v] = row()
        for v in second:
            paths[v] = col()
    else:
        raise PartitionError(f"unexpected nonempty pair sets {[PAIR_LABELS[i] for i in nonempty]}")
    return layout, paths


def _canonical_rotation(part_of, g: Graph, w: WheelWitness) -> tuple[WheelWitness, ASetPartition]:
    """Rotate the rim so the nonempty pair sets match one of the drawn layouts."""
    first = None
    for k in range(4):
        wk = w.rotated(k)
        part = part_of(g, wk)
        if first is None:
            first = (wk, part)
        ne = part.nonempty_pairs()
        if (0 in ne and 2 in ne) or ne in ([1, 2], [1], []):
            return wk, part
    raise PartitionError(f"pair sets {first[1].nonempty_pairs()} fit no layout")


def _components_within(g: Graph, verts) -> list[list[int]]:
    left = list(verts)
    comps = []
    while left:
        stack = [left[0]]
        comp = {left[0]}
        while stack:
            u = stack.pop()
            for v in left:
                if v not in comp and g.has_edge(u, v):
                    comp.add(v)
                    stack.append(v)
        comps.append(sorted(comp))
        left = [v for v in left if v not in comp]
    return comps


def build_wheel_case(g: Graph, w: WheelWitness | None = None) -> tuple[str, EpgRepresentation, ASetPartition]:
    if w is None:
        w = find_wheel(g)
        if w is None:
            raise BuildError("graph has no induced W4")
        tri = dominating_triangle_from_w4(g, w)
        w = wheel_from_triangle(g, tri)
    w, part = _canonical_rotation(partition_around_c4, g, w)
    layout, paths = _wheel_layout(g, part)
    return layout, EpgRepresentation(tuple(paths[v] for v in range(g.n))), part


# -- the triangle layout (no 4-wheel) -----------------------------------------

@dataclass
class TrianglePartition:
    triangle: tuple[int, int, int]
    pair_sets: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]  # A12, A23, A31
    centre_sets: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]  # Ac^1, Ac^2, Ac^3


def triangle_partition(g: Graph, tri: tuple[int, int, int]) -> TrianglePartition:
    """Partition around a triangle x1, x2, x3 for the 4-wheel-free layout.

    Raises PartitionError unless every vertex sees two triangle vertices, the
    three pair sets are nonempty, pairwise anticomplete cliques, and the
    common neighbourhood is a clique that splits by which two pair sets it sees.
    """
    pair_sets: list[list[int]] = [[], [], []]
    common: list[int] = []
    for v in range(g.n):
        if v in tri:
            continue
        hit = [j for j in range(3) if g.has_edge(v, tri[j])]
        if len(hit) == 3:
            common.append(v)
        elif len(hit) == 2:
            missing = ({0, 1, 2} - set(hit)).pop()
            # A_{j,j+1} misses x_{j-1}
            pair_sets[(missing + 1) % 3].append(v)
        else:
            raise PartitionError(f"vertex {v} sees fewer than two triangle vertices", {"vertex": v})
    if any(not p for p in pair_sets):
        raise PartitionError("some pair set is empty")
    for p in pair_sets:
        if not is_clique(g, p):
            raise PartitionError(f"pair set {p} is not a clique")
    for a, b in combinations(range(3), 2):
        if not is_anticomplete_between(g, pair_sets[a], pair_sets[b]):
            raise PartitionError("pair sets are not pairwise anticomplete")
    if not is_clique(g, common):
        raise PartitionError("common neighbourhood is not a clique")
    centre_sets: list[list[int]] = [[], [], []]
    for v in common:
        sees = [is_complete_between(g, [v], p) for p in pair_sets]
        misses = [is_anticomplete_between(g, [v], p) for p in pair_sets]
        placed = False
        for j in range(3):
            # Ac^j: complete to A_{j-1,j} and A_{j,j+1}, anticomplete to A_{j+1,j+2}
            if sees[(j - 1) % 3] and sees[j] and misses[(j + 1) % 3]:
                centre_sets[j].append(v)
                placed = True
                break
        if not placed:
            raise PartitionError(f"common neighbour {v} fits no centre set", {"vertex": v})
    return TrianglePartition(
        tri,
        tuple(tuple(p) for p in pair_sets),
        tuple(tuple(c) for c in centre_sets),
    )


# triangle vertex j spans the arms of A_{j-1,j} and A_{j,j+1}; pair set j lives on TRI_ARMS[j]
TRI_ARMS = ("E", "N", "W")


def _triangle_layout(g: Graph, tp: TrianglePartition) -> EpgRepresentation:
    paths: dict[int, LatticePath] = {}
    for j in range(3):
        shape = through_centre(TRI_ARMS[(j - 1) % 3], TRI_ARMS[j])
        paths[tp.triangle[j]] = shape
        for v in tp.centre_sets[j]:
            paths[v] = shape
        for v in tp.pair_sets[j]:
            paths[v] = outer_segment(TRI_ARMS[j])
    return EpgRepresentation(tuple(paths[v] for v in range(g.n)))


def build_triangle_case(g: Graph) -> tuple[TrianglePartition, EpgRepresentation] | None:
    """First triangle (lexicographic) whose partition passes and whose layout validates."""
    for tri in triangles(g):
        try:
            tp = triangle_partition(g, tri)
        except PartitionError:
            continue
        rep = _triangle_layout(g, tp)
        if validate_representation(rep, g, 1).ok:
            return tp, rep
    return None


# -- interval graphs -----------------------------------------------------------

def clique_path(g: Graph) -> list[frozenset[int]]:
    """Order the maximal cliques so every vertex lies in a consecutive run (backtracking)."""
    cliques = maximal_cliques(g)
    k = len(cliques)
    order: list[int] = []
    # per vertex: 0 unseen, 1 active, 2 finished
    state = [0] * g.n

    def extend() -> bool:
        if len(order) == k:
            return True
        for i in range(k):
            if i in order:
                continue
            q = cliques[i]
            if any(state[v] == 2 for v in q):
                continue
            saved = state[:]
            for v in range(g.n):
                if state[v] == 1 and v not in q:
                    state[v] = 2
            for v in q:
                state[v] = 1
            order.append(i)
            if extend():
                return True
            order.pop()
            state[:] = saved
        return False

    if not extend():
        raise BuildError("no consecutive clique arrangement; the graph is not an interval graph")
    return [cliques[i] for i in order]


def interval_layout(g: Graph) -> EpgRepresentation:
    """Every vertex becomes a horizontal segment on row 0 over its run of cliques."""
    path = clique_path(g)
    paths = []
    for v in range(g.n):
        idx = [i for i, q in enumerate(path) if v in q]
        paths.append(LatticePath.through((0, idx[0]), (0, idx[-1] + 1)))
    return EpgRepresentation(tuple(paths))


def is_interval_graph(g: Graph) -> bool:
    return perfect_elimination_ordering(g) is not None and find_asteroidal_triple(g) is None


# -- arc models onto a rectangle -------------------------------------------------

def corner_slots(arcs: ArcRepresentation) -> tuple[int, int, int, int] | None:
    """Four cut points on the circle (in half-steps) such that every arc contains at most one.

    Half-step ``2p`` is position p, ``2p + 1`` the gap after it; search is
    lexicographic over slot quadruples.
    """
    size = 2 * arcs.circle_size
    masks = [arcs.half_mask(v) for v in range(arcs.n)]
    for quad in combinations(range(size), 4):
        bits = sum(1 << k for k in quad)
        if all((m & bits).bit_count() <= 1 for m in masks):
            return quad
    return None


def _side_lengths(quad, size: int) -> list[int]:
    return [((quad[(i + 1) % 4] - quad[i]) % size) for i in range(4)]


def boundary_rectangle(arcs: ArcRepresentation) -> RectangleSpec:
    quad = corner_slots(arcs)
    if quad is None:
        raise BuildError("no corner placement with at most one corner per arc")
    top, right, bottom, left = _side_lengths(quad, 2 * arcs.circle_size)
    return RectangleSpec(0, max(left, right), 0, max(top, bottom))


def arcs_to_boundary_paths(arcs: ArcRepresentation, rect: RectangleSpec | None = None) -> EpgRepresentation:
    """Map an arc model onto the boundary of ``rect``, one path per arc, at most one bend each.

    The circle is cut at four corner slots; each half-step becomes one unit of
    boundary, and the last unit of a short side is stretched so opposite sides
    match ``rect``.  With ``rect=None`` the smallest fitting rectangle at the
    origin is used.
    """
    quad = corner_slots(arcs)
    if quad is None:
        raise BuildError("no corner placement with at most one corner per arc", arcs)
    size = 2 * arcs.circle_size
    sides = _side_lengths(quad, size)
    if rect is None:
        rect = RectangleSpec(0, max(sides[1], sides[3]), 0, max(sides[0], sides[2]))
    width, height = rect.right - rect.left, rect.bottom - rect.top
    target = [width, height, width, height]
    if any(s > t for s, t in zip(sides, target)):
        raise BuildError(f"rectangle {rect} too small for side lengths {sides}")

    # walk clockwise from the first corner: top (east), right (south), bottom (west), left (north)
    headings = [(0, 1), (1, 0), (0, -1), (-1, 0)]
    point_of: dict[int, tuple[int, int]] = {}
    cur = (rect.top, rect.left)
    slot = quad[0]
    for side in range(4):
        dr, dc = headings[side]
        steps = sides[side]
        extra = target[side] - steps
        for i in range(steps):
            point_of[slot % size] = cur
            run = 1 + (extra if i == steps - 1 else 0)
            cur = (cur[0] + dr * run, cur[1] + dc * run)
            slot += 1
    paths = []
    for s, e in arcs.arcs:
        a, b = 2 * s, 2 * e
        corners = [point_of[a]]
        k = a
        while k != b:
            k = (k + 1) % size
            if k in quad and k != b:
                corners.append(point_of[k])
        corners.append(point_of[b])
        paths.append(LatticePath.through(*corners))
    return EpgRepresentation(tuple(paths))


def build_from_arc_models(g: Graph) -> tuple[ArcRepresentation, EpgRepresentation, RectangleSpec]:
    """Proper Helly arc model mapped onto a rectangle; falls back to non-proper models."""
    for proper in (True, False):
        for model in iter_arc_models(g, proper=proper, normal=True, helly3=True):
            if corner_slots(model) is None:
                log.info("arc model %s admits no corner placement; trying the next one", model.arcs)
                continue
            if not proper:
                log.warning("no proper arc model admitted a corner placement; used a non-proper one")
            rect = boundary_rectangle(model)
            return model, arcs_to_boundary_paths(model, rect), rect
    raise BuildError("no normal Helly arc model admits a corner placement")


# -- dispatch ------------------------------------------------------------------

@dataclass
class BuildResult:
    case: str
    representation: EpgRepresentation
    partition: object = None
    rectangle: RectangleSpec | None = None


def build_b1_epg_detailed(g: Graph, check: bool = True) -> BuildResult:
    if check:
        from .classify import classify_b1_epg

        verdict = classify_b1_epg(g)
        if not verdict:
            raise BuildError(f"graph is not B1-EPG: contains induced {verdict.pattern.label}", verdict)
    if is_interval_graph(g):
        rep = interval_layout(g)
        result = BuildResult("interval", rep, rectangle=_row_rectangle(rep))
    elif find_induced(g, Family("wheel", 4).graph()) is not None:
        layout, rep, part = build_wheel_case(g)
        result = BuildResult(layout, rep, part)
    else:
        tri = build_triangle_case(g)
        if tri is not None:
            result = BuildResult("cas4", tri[1], tri[0])
        else:
            model, rep, rect = build_from_arc_models(g)
            result = BuildResult("phca", rep, model, rect)
    report = validate_representation(result.representation, g, 1)
    if not report.ok:
        raise BuildError(f"{result.case} layout failed validation at pair {report.first_mismatch}", report)
    return result


def build_b1_epg(g: Graph, check: bool = True) -> EpgRepresentation:
    """Single-bend representation of a connected PCA graph free of the H patterns and C_(4k-1)^k."""
    return build_b1_epg_detailed(g, check).representation


def _row_rectangle(rep: EpgRepresentation) -> RectangleSpec:
    cols = [c for p in rep.paths for _, c in p.points]
    return RectangleSpec(0, 1, min(cols), max(cols))


def build_b1_epr_detailed(g: Graph, check: bool = True) -> BuildResult:
    if check:
        from .classify import classify_b1_epr

        verdict = classify_b1_epr(g)
        if not verdict:
            raise BuildError(f"graph is not B1-EPR: contains induced {verdict.pattern.label}", verdict)
    if is_interval_graph(g):
        rep = interval_layout(g)
        result = BuildResult("interval", rep, rectangle=_row_rectangle(rep))
    else:
        model, rep, rect = build_from_arc_models(g)
        result = BuildResult("phca", rep, model, rect)
    report = validate_representation(result.representation, g, 1)
    if not report.ok or not is_epr(result.representation, result.rectangle):
        raise BuildError(f"{result.case} rectangle layout failed validation", report)
    return result


def build_b1_epr(g: Graph, check: bool = True) -> EpgRepresentation:
    """Single-bend representation on a rectangle boundary for a {W4, S3, C_(4k-1)^k}-free PCA graph."""
    return build_b1_epr_detailed(g, check).representation
