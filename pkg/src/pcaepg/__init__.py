"""Recognition, construction and brute-force checking of single-bend path
representations for proper circular-arc graphs."""

from .builder import BuildError, PartitionError, build_b1_epg, build_b1_epr, partition_around_c4
from .classify import Verdict, classify_b1_epg, classify_b1_epr, is_interval, is_pca, is_phca
from .epg import EpgRepresentation, LatticePath, RectangleSpec, intersection_graph, is_epr, validate_representation
from .families import Family
from .formats import from_graph6, parse_graph, to_graph6
from .graph import Graph
from .iso import find_induced, first_forbidden
from .oracle import SearchBudget, cross_validate, search_arc_representation, search_b1_epg

__all__ = [
    "BuildError", "PartitionError", "build_b1_epg", "build_b1_epr", "partition_around_c4",
    "Verdict", "classify_b1_epg", "classify_b1_epr", "is_interval", "is_pca", "is_phca",
    "EpgRepresentation", "LatticePath", "RectangleSpec", "intersection_graph", "is_epr",
    "validate_representation", "Family", "from_graph6", "parse_graph", "to_graph6", "Graph",
    "find_induced", "first_forbidden", "SearchBudget", "cross_validate",
    "search_arc_representation", "search_b1_epg",
]
