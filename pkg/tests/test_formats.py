import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, to_nx
from pcaepg.formats import (
    FormatError,
    bundled_corpus,
    format_adjacency,
    from_graph6,
    parse_adjacency,
    parse_graph,
    to_graph6,
)


@given(graphs(max_n=70))
@settings(max_examples=40, deadline=None)
def test_graph6_matches_networkx(g):
    ours = to_graph6(g)
    assert ours == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert from_graph6(ours) == g


@given(graphs())
def test_adjacency_roundtrip(g):
    assert parse_adjacency(format_adjacency(g)) == g


def test_known_graph6_string():
    # K4 is the textbook example
    assert to_graph6(from_graph6("C~")) == "C~"
    assert from_graph6("C~").m == 6


@pytest.mark.parametrize("text", ["", "3", "3 1\n0 5", "2 2\n0 1", "x y"])
def test_malformed_adjacency(text):
    with pytest.raises(FormatError):
        parse_adjacency(text)


def test_malformed_graph6():
    with pytest.raises(FormatError):
        from_graph6("C")
    with pytest.raises(FormatError):
        from_graph6("C\x7f")


def test_auto_detection():
    assert parse_graph("2 1\n0 1\n") == parse_graph("A_\n")


def test_corpus_counts_match_networkx_atlas():
    # connected graphs per order, OEIS A001349
    counts = {}
    for g in bundled_corpus(7):
        counts[g.n] = counts.get(g.n, 0) + 1
    assert counts == {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
    assert len({to_graph6(g) for g in bundled_corpus(7)}) == 996
