"""Ramsey-number toolkit: graph core, lemma procedures, bound arithmetic,
hypothesis checkers, and an exhaustive small-case oracle."""

from .coloring import (Color, Embedding, MonoPair, TwoColoring,
                       check_embedding, check_mono_pair, induced_coloring,
                       monochromatic_subgraph, validate_mono_pair)
from .graphs import Graph, delete_vertices, edge_density, join
from .intervals import LogQty, PrecisionError, RInterval

__all__ = [
    "Color", "Embedding", "Graph", "LogQty", "MonoPair", "PrecisionError",
    "RInterval", "TwoColoring", "check_embedding", "check_mono_pair",
    "delete_vertices", "edge_density", "induced_coloring", "join",
    "monochromatic_subgraph", "validate_mono_pair",
]

__version__ = "0.1.0"
