import itertools

import pytest
from hypothesis import given, settings

from conftest import graphs
from pcaepg.arcs import ArcRepresentation, ArcSearchError, iter_arc_models, search_arc_representation
from pcaepg.families import claw, complete, cycle, wheel
from pcaepg.graph import Graph


def _covers(arcs, vs):
    # independent sampling check on half-step points
    size = 2 * arcs.circle_size
    covered = set()
    for v in vs:
        s, e = arcs.arcs[v]
        k = (2 * s + 1) % size
        while k != 2 * e:
            covered.add(k)
            k = (k + 1) % size
    return len(covered) == size


def _points(arc, size):
    # open arc sampled at half-steps strictly between its endpoints
    s, e = arc
    length = (e - s) % size
    return {(2 * s + k) % (2 * size) for k in range(1, 2 * length)}


def _contains(a, b, size):
    return _points(b, size) <= _points(a, size)


def _check(model, g, proper, normal, helly3):
    assert model.intersection_graph() == g
    n, size = model.n, model.circle_size
    if proper:
        assert not any(_contains(model.arcs[u], model.arcs[v], size) for u in range(n) for v in range(n) if u != v)
    if normal:
        assert not any(_covers(model, c) for c in itertools.combinations(range(n), 2))
    if helly3:
        assert not any(_covers(model, c) for c in itertools.combinations(range(n), 3))


def test_examples():
    m = search_arc_representation(cycle(4), proper=True, normal=True)
    _check(m, cycle(4), True, True, False)
    assert search_arc_representation(claw(), proper=True) is None
    m = search_arc_representation(complete(3), proper=True, normal=True, helly3=True)
    _check(m, complete(3), True, True, True)


def test_w4_has_proper_but_no_helly_model():
    assert search_arc_representation(wheel(4), proper=True) is not None
    assert search_arc_representation(wheel(4), proper=True, normal=True, helly3=True) is None


@given(graphs(max_n=6))
@settings(max_examples=80, deadline=None)
def test_models_are_sound(g):
    for flags in [(True, False, False), (True, True, True), (False, True, True)]:
        for model in itertools.islice(iter_arc_models(g, *flags), 3):
            _check(model, g, *flags)


def test_size_guard():
    with pytest.raises(ArcSearchError):
        search_arc_representation(Graph(9))


def test_bad_models():
    with pytest.raises(ValueError):
        ArcRepresentation(4, ((0, 1), (1, 2)))
    with pytest.raises(ValueError):
        ArcRepresentation(4, ((0, 5), (1, 2)))
