"""Stability-number robustness analysis of graphs under edge edits.

Decides alpha-minus / alpha-plus / alpha-stability and bistability of
bipartite (and chordal) graphs through maximum-matching structure, producing
machine-checkable certificates, and re-verifies every characterization it
relies on against a brute-force oracle at desk scale.
"""

from .graph import (
    Bipartition,
    Graph,
    NotBipartiteError,
    ParseError,
    bipartition,
    build_graph,
    parse_graph,
    write_graph,
)
from .matching import Matching, StableSet, alpha, maximum_matching, maximum_stable_set
from .stability import (
    StabilityReport,
    bistable_decomposition,
    ear_decomposition,
    is_alpha_minus,
    is_alpha_plus,
    is_alpha_stable,
    is_bistable,
)

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "Graph",
    "Matching",
    "NotBipartiteError",
    "ParseError",
    "StableSet",
    "StabilityReport",
    "alpha",
    "bipartition",
    "bistable_decomposition",
    "build_graph",
    "ear_decomposition",
    "is_alpha_minus",
    "is_alpha_plus",
    "is_alpha_stable",
    "is_bistable",
    "maximum_matching",
    "maximum_stable_set",
    "parse_graph",
    "write_graph",
    "__version__",
]
