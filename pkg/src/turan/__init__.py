"""Turán numbers of paths, path packings and equibipartite forests.

Closed forms, extremal constructions, exact containment detectors, the
matching lemmas behind the forest result, and a canonical-augmentation
search that computes ex(n, H) exactly for small n.
"""

from .canon import GraphCode, canonical_code, canonical_form, canonical_labeling
from .detectors import PatternSpec, Witness, contains_pattern, find_pattern, longest_path
from .formulas import DomainError, FormulaResult
from .graph import CapExceeded, Graph, GraphError, from_edges
from .io import ParseError, decode, encode, read_graph, write_graph
from .oracle import SearchReport, exact_ex, extremal_graphs

__all__ = [
    "Graph", "GraphError", "CapExceeded", "from_edges",
    "GraphCode", "canonical_code", "canonical_form", "canonical_labeling",
    "PatternSpec", "Witness", "contains_pattern", "find_pattern", "longest_path",
    "DomainError", "FormulaResult",
    "ParseError", "decode", "encode", "read_graph", "write_graph",
    "SearchReport", "exact_ex", "extremal_graphs",
]

__version__ = "0.1.0"
