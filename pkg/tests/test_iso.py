from hypothesis import given, settings
from networkx.algorithms.isomorphism import GraphMatcher

from conftest import graphs, to_nx
from pcaepg.families import Family, claw, complete, cycle, power_cycle, wheel
from pcaepg.graph import Graph, induced_subgraph
from pcaepg.iso import (
    find_induced,
    first_forbidden,
    is_induced_embedding,
    iter_induced,
    pca_obstructions,
    b1_epg_obstructions,
)


def _nx_has_induced(host, pattern):
    return GraphMatcher(to_nx(host), to_nx(pattern)).subgraph_is_isomorphic()


@given(graphs(max_n=7), graphs(max_n=4))
@settings(max_examples=150)
def test_find_induced_matches_networkx(host, pattern):
    emb = find_induced(host, pattern)
    assert (emb is not None) == _nx_has_induced(host, pattern)
    if emb is not None:
        assert is_induced_embedding(host, pattern, emb.mapping)


@given(graphs(max_n=6), graphs(max_n=3))
@settings(max_examples=60)
def test_embeddings_come_in_lex_order(host, pattern):
    maps = [e.mapping for e in iter_induced(host, pattern)]
    assert maps == sorted(maps)
    assert len(set(maps)) == len(maps)


def test_wheel_contains_rim_cycle():
    emb = find_induced(wheel(4), cycle(4))
    assert set(emb.mapping) == {1, 2, 3, 4}
    assert find_induced(complete(4), cycle(4)) is None


def test_h1_contains_w4():
    h1 = Family("H1").graph()
    emb = find_induced(h1, wheel(4))
    assert induced_subgraph(h1, emb.mapping).m == 8


def test_validator_rejects_wrong_maps():
    assert not is_induced_embedding(cycle(4), cycle(4), (0, 2, 1, 3))
    assert not is_induced_embedding(cycle(4), Graph(2), (0, 1))
    assert not is_induced_embedding(cycle(4), Graph(2), (0, 0))


def test_claw_is_the_smallest_pca_obstruction():
    hit = first_forbidden(claw(), pca_obstructions(4))
    assert hit is not None
    assert hit[0] == Family("co-odd-cycle+k1", 0)


def test_power_cycle_hits_itself():
    fam, emb = first_forbidden(power_cycle(2), b1_epg_obstructions(7))
    assert fam == Family("powercycle", 2)
    assert is_induced_embedding(power_cycle(2), fam.graph(), emb.mapping)


def test_c5_is_free_of_the_b1_patterns():
    assert first_forbidden(cycle(5), b1_epg_obstructions(5)) is None


def test_family_scans_are_ordered_by_size():
    fam = b1_epg_obstructions(11)
    drawn = [f.order for f in fam if f.param is None]
    assert drawn == sorted(drawn)
    assert [f.param for f in fam if f.param is not None] == [2, 3]
    assert b1_epg_obstructions(11)[-1] == Family("powercycle", 3)
    assert all(f.order <= 9 for f in pca_obstructions(9))
