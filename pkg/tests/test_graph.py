import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, to_nx
from pcaepg.graph import (
    Graph,
    GraphError,
    complement,
    components,
    delete_vertex,
    diameter,
    disjoint_union,
    find_asteroidal_triple,
    graph_power,
    induced_subgraph,
    is_chordal,
    is_clique,
    is_connected,
    is_dominating,
    maximal_cliques,
    perfect_elimination_ordering,
    triangles,
)


def test_rejects_bad_input():
    with pytest.raises(GraphError):
        Graph(0)
    with pytest.raises(GraphError):
        Graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(3, [(1, 1)])


def test_duplicate_edges_collapse():
    g = Graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.edges == ((0, 1),)
    assert g == Graph(3, [(1, 0)])
    assert hash(g) == hash(Graph(3, [(0, 1)]))


def test_masks_match_adjacency():
    g = Graph(4, [(0, 1), (0, 3), (2, 3)])
    assert g.masks == (0b1010, 0b0001, 0b1000, 0b0101)
    assert g.degree(0) == 2 and g.has_edge(3, 0) and not g.has_edge(1, 2)


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert g.m + complement(g).m == g.n * (g.n - 1) // 2


@given(graphs())
def test_connectivity_matches_networkx(g):
    h = to_nx(g)
    assert is_connected(g) == nx.is_connected(h)
    assert sorted(map(sorted, components(g))) == sorted(sorted(c) for c in nx.connected_components(h))


@given(graphs(max_n=7))
def test_chordality_matches_networkx(g):
    assert is_chordal(g) == nx.is_chordal(to_nx(g))
    peo = perfect_elimination_ordering(g)
    if peo is not None:
        # every vertex's later neighbours form a clique
        pos = {v: i for i, v in enumerate(peo)}
        for v in g.vertices():
            later = [u for u in g.neighbors(v) if pos[u] > pos[v]]
            assert is_clique(g, later)


@given(graphs(max_n=7))
def test_maximal_cliques_match_networkx(g):
    ours = sorted(sorted(c) for c in maximal_cliques(g))
    theirs = sorted(sorted(c) for c in nx.find_cliques(to_nx(g)))
    assert ours == theirs


@given(graphs(max_n=7))
def test_triangles_match_bruteforce(g):
    want = [t for t in itertools.combinations(range(g.n), 3) if is_clique(g, t)]
    assert triangles(g) == want


@given(graphs(max_n=7))
@settings(max_examples=60)
def test_asteroidal_triple_matches_networkx(g):
    if not nx.is_connected(to_nx(g)):
        return
    at = find_asteroidal_triple(g)
    assert (at is None) == nx.is_at_free(to_nx(g))


@given(graphs(max_n=7))
def test_power_matches_networkx(g):
    for k in (1, 2, 3):
        want = nx.power(to_nx(g), k) if g.m else to_nx(g)
        assert set(graph_power(g, k).edges) == {tuple(sorted(e)) for e in want.edges}


def test_diameter_and_domination():
    p4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert diameter(p4) == 3
    assert is_dominating(p4, [1, 2]) and not is_dominating(p4, [0])


def test_induced_subgraph_relabels_ascending():
    g = Graph(5, [(0, 4), (1, 4), (2, 3)])
    assert induced_subgraph(g, [4, 1, 3]).edges == ((0, 2),)
    assert delete_vertex(g, 0).edges == ((0, 3), (1, 2))


def test_disjoint_union_offsets():
    u = disjoint_union(Graph(2, [(0, 1)]), Graph(2, [(0, 1)]))
    assert u.edges == ((0, 1), (2, 3))
