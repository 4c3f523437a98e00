"""Regular graphs of prescribed chromatic number: constructions, exact
invariants, order bounds and exhaustive search for the smallest examples."""

from .graph import Graph, cartesian_product, complement, disjoint_union, is_regular
from .canon import canonical_form, is_isomorphic, is_vertex_transitive
from .chromatic import chromatic_number, max_clique, independence_number
from .formats import decode_graph6, encode_graph6

__all__ = [
    "Graph",
    "cartesian_product",
    "canonical_form",
    "chromatic_number",
    "complement",
    "decode_graph6",
    "disjoint_union",
    "encode_graph6",
    "independence_number",
    "is_isomorphic",
    "is_regular",
    "is_vertex_transitive",
    "max_clique",
]
