"""Constructions and certificates for non-Hamiltonian 1-planar perfect graphs."""

from .canon import CanonicalForm, canonical_form
from .graph import (
    Bipartition,
    Graph,
    GraphError,
    OddCycle,
    complement,
    connected_components,
    induced_subgraph,
    make_graph,
    two_coloring,
)

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "CanonicalForm",
    "Graph",
    "GraphError",
    "OddCycle",
    "canonical_form",
    "complement",
    "connected_components",
    "induced_subgraph",
    "make_graph",
    "two_coloring",
]
