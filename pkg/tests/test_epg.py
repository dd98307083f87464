import json

import pytest
from hypothesis import given, strategies as st

from pcaepg.epg import (
    EpgRepresentation,
    LatticePath,
    PathError,
    RectangleSpec,
    bends,
    intersection_graph,
    is_epr,
    make_representation,
    validate_representation,
)
from pcaepg.families import wheel
from pcaepg.graph import Graph


@st.composite
def one_bend_paths(draw, size=6):
    r, c = draw(st.integers(0, size)), draw(st.integers(0, size))
    h = draw(st.integers(0, size).filter(lambda x: x != c))
    if draw(st.booleans()):
        return LatticePath.through((r, h), (r, c))
    v = draw(st.integers(0, size).filter(lambda x: x != r))
    return LatticePath.through((r, h), (r, c), (v, c))


@st.composite
def representations(draw):
    return EpgRepresentation(tuple(draw(st.lists(one_bend_paths(), min_size=1, max_size=8))))


def _edge_oracle(a: LatticePath, b: LatticePath) -> bool:
    # unordered point pairs, computed without the library's normalisation
    ea = {frozenset(p) for p in zip(a.points, a.points[1:])}
    eb = {frozenset(p) for p in zip(b.points, b.points[1:])}
    return bool(ea & eb)


def test_bend_counts():
    assert bends(LatticePath.through((0, 0), (0, 2))) == 0
    assert bends(LatticePath.through((2, 0), (2, 2), (0, 2))) == 1
    assert bends(LatticePath.through((0, 0), (0, 1), (1, 1), (1, 2))) == 2


def test_bad_paths():
    with pytest.raises(PathError):
        LatticePath(((0, 0),))
    with pytest.raises(PathError):
        LatticePath(((0, 0), (1, 1)))
    with pytest.raises(PathError):
        LatticePath(((0, 0), (0, 1), (0, 0)))
    with pytest.raises(PathError):
        LatticePath.through((0, 0), (1, 1))


def test_overlap_and_crossing():
    overlap = make_representation([[(0, 0), (0, 1), (0, 2)], [(0, 1), (0, 2), (0, 3)]])
    assert intersection_graph(overlap).edges == ((0, 1),)
    cross = make_representation([[(1, 0), (1, 1), (1, 2)], [(0, 1), (1, 1), (2, 1)]])
    assert intersection_graph(cross).m == 0
    report = validate_representation(cross, Graph(2, [(0, 1)]), 1)
    assert not report.ok and report.missing_edges == [(0, 1)]


def test_true_pie_plus_row_centre_is_w4():
    rim = [
        LatticePath.through((2, 4), (2, 2), (0, 2)),
        LatticePath.through((0, 2), (2, 2), (2, 0)),
        LatticePath.through((2, 0), (2, 2), (4, 2)),
        LatticePath.through((4, 2), (2, 2), (2, 4)),
    ]
    centre = LatticePath.through((2, 0), (2, 4))
    rep = EpgRepresentation((centre, *rim))
    assert intersection_graph(rep) == wheel(4)


def test_bend_budget_enforced():
    rep = make_representation([[(0, 0), (0, 1), (1, 1)], [(0, 0), (0, 1)]])
    g = Graph(2, [(0, 1)])
    assert validate_representation(rep, g, 1).ok
    report = validate_representation(rep, g, 0)
    assert not report.ok and report.graph_matches and report.over_budget == [0]


def test_size_mismatch_raises():
    with pytest.raises(PathError):
        validate_representation(make_representation([[(0, 0), (0, 1)]]), Graph(2), 1)


def test_rectangle_checks():
    rect = RectangleSpec(0, 2, 0, 2)
    corners = make_representation([
        [(1, 0), (0, 0), (0, 1)], [(0, 1), (0, 2), (1, 2)], [(1, 2), (2, 2), (2, 1)], [(2, 1), (2, 0), (1, 0)],
    ])
    assert is_epr(corners, rect)
    assert not is_epr(make_representation([[(1, 0), (1, 1)]]), rect)
    assert len(rect.boundary_edges()) == 8
    with pytest.raises(PathError):
        RectangleSpec(0, 0, 0, 2)


@given(representations())
def test_random_representations_roundtrip(rep):
    g = intersection_graph(rep)
    assert validate_representation(rep, g, None).ok
    assert EpgRepresentation.loads(rep.dumps()) == rep
    for u in range(rep.n):
        assert not g.has_edge(u, u)
        for v in range(u + 1, rep.n):
            assert g.has_edge(u, v) == _edge_oracle(rep.paths[u], rep.paths[v])


@given(representations(), st.integers(-5, 5), st.integers(-5, 5))
def test_translation_preserves_graph(rep, dr, dc):
    assert intersection_graph(rep.translated(dr, dc)) == intersection_graph(rep)


def test_json_schema_errors():
    with pytest.raises(PathError):
        EpgRepresentation.from_json({"n": 2, "paths": [[[0, 0], [0, 1]]]})
    data = json.loads(make_representation([[(0, 0), (0, 1)]]).dumps())
    assert data == {"n": 1, "paths": [[[0, 0], [0, 1]]]}
