"""Regenerate the bundled graph6 corpus of connected graphs on <= 7 vertices.

Uses the networkx graph atlas (all graphs up to 7 vertices, one per
isomorphism class).  Run from the repo root:

    python3 scripts/make_corpus.py > src/pcaepg/data/connected_le7.g6
"""

import networkx as nx

for g in nx.graph_atlas_g()[1:]:
    if nx.is_connected(g):
        print(nx.to_graph6_bytes(g, header=False).decode().strip())
