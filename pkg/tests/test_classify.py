import pytest

from pcaepg.arcs import search_arc_representation
from pcaepg.classify import (
    NO,
    YES,
    DisconnectedGraphError,
    NotPCAError,
    classify_b1_epg,
    classify_b1_epr,
    is_interval,
    is_pca,
    is_phca,
)
from pcaepg.epg import validate_representation
from pcaepg.families import Family, claw, cycle, path, power_cycle, sun3, wheel
from pcaepg.graph import Graph
from pcaepg.iso import find_induced, is_induced_embedding


def test_pca_examples():
    assert is_pca(Family("H3").graph())
    assert is_pca(cycle(8))
    assert search_arc_representation(cycle(8), proper=True) is not None
    v = is_pca(claw())
    assert v.decision == NO and v.pattern.name == "co-odd-cycle+k1"


@pytest.mark.parametrize("f", [Family(f"G{i}") for i in range(1, 7)])
def test_g_graphs_certify_themselves(f):
    g = f.graph()
    v = is_pca(g)
    assert v.decision == NO and v.pattern == f
    assert is_induced_embedding(g, f.graph(), v.embedding.mapping)
    assert v.certificate["kind"] == "forbidden-induced-subgraph"


def test_interval_examples():
    assert is_interval(path(4)).decision == YES
    v = is_interval(cycle(4))
    assert v.decision == NO and v.pattern == Family("cycle", 4)
    assert is_interval(power_cycle(2)).decision == NO
    assert find_induced(power_cycle(2), cycle(4)) is not None


def test_interval_asteroidal_triple_witness():
    # chordal but with an AT: the net
    v = is_interval(Family("G6").graph())
    assert v.decision == NO and "asteroidal_triple" in v.certificate["evidence"]


def test_phca_examples():
    assert is_phca(wheel(4)).pattern == Family("wheel", 4)
    assert is_phca(sun3()).pattern == Family("sun3")
    assert is_phca(cycle(5)).decision == YES
    assert search_arc_representation(cycle(5), proper=True, normal=True, helly3=True) is not None


def test_b1_epg_examples():
    v = classify_b1_epg(Family("H3").graph())
    assert v.decision == NO and v.pattern == Family("H3")
    assert classify_b1_epg(power_cycle(2)).pattern == Family("powercycle", 2)
    assert classify_b1_epg(wheel(4)).decision == YES


def test_b1_epr_examples():
    assert classify_b1_epr(wheel(4)).decision == NO
    assert classify_b1_epr(sun3()).decision == NO
    assert classify_b1_epr(power_cycle(2)).pattern == Family("powercycle", 2)
    assert classify_b1_epr(cycle(4)).decision == YES


def test_build_flag_attaches_a_valid_representation():
    g = wheel(4)
    v = classify_b1_epg(g, build=True)
    assert validate_representation(v.representation, g, 1).ok
    assert "representation" in v.to_json()["certificate"]


def test_preconditions():
    with pytest.raises(DisconnectedGraphError):
        classify_b1_epg(Graph(2))
    with pytest.raises(NotPCAError) as err:
        classify_b1_epg(claw())
    assert err.value.verdict.decision == NO
    with pytest.raises(DisconnectedGraphError):
        is_interval(Graph(3, [(0, 1)]))


def test_epr_implies_epg_on_corpus():
    from pcaepg.formats import bundled_corpus

    for g in bundled_corpus(7):
        if is_pca(g) and classify_b1_epr(g):
            assert classify_b1_epg(g), g.edges
