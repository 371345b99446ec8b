"""Exact combinatorics of cubical matching complexes of embedded planar
graphs, with the associated Fibonacci/Catalan polynomial calculus."""

from .complexes import (CubicalMatchingComplex, TilingFace, build_complex,
                        face_leq, region_alternations,
                        verify_edge_decomposition)
from .fibpoly import (Poly, a_unit_closed_form, affine_rank, apply_A,
                      bareiss_rank, catalan, catalan_identity_check,
                      f_polynomial, fibonacci, multiset_no_consecutive_count,
                      p_closed_form, p_polynomial)
from .matchings import (CycleDecomposition, Matching, cube_coordinates,
                        enumerate_perfect_matchings,
                        symmetric_difference_cycles)
from .planar import (DualGraph, Edge, EdgeClassification, GraphError,
                     PlanarGraph, Region, build_from_polyomino, build_ladder,
                     build_planar_graph, classify_edges, edge_key,
                     load_graph_json, parse_polyomino, reduce_graph,
                     weak_dual)
from .topology import (CollapseVerdict, SimplicialComplex, collapse_search,
                       independence_complex, kozlov_reference_betti,
                       link_of_face, matched_region_graph, z2_betti)

# `reduce` mirrors the operation name used in the docs; `reduce_graph` avoids
# shadowing functools.reduce at call sites that star-import.
reduce = reduce_graph

__all__ = [
    "CollapseVerdict", "CubicalMatchingComplex", "CycleDecomposition",
    "DualGraph", "Edge", "EdgeClassification", "GraphError", "Matching",
    "PlanarGraph", "Poly", "Region", "SimplicialComplex", "TilingFace",
    "a_unit_closed_form", "affine_rank", "apply_A", "bareiss_rank",
    "build_complex", "build_from_polyomino", "build_ladder",
    "build_planar_graph", "catalan", "catalan_identity_check",
    "classify_edges", "collapse_search", "cube_coordinates", "edge_key",
    "enumerate_perfect_matchings", "f_polynomial", "face_leq", "fibonacci",
    "independence_complex", "kozlov_reference_betti", "link_of_face",
    "load_graph_json", "matched_region_graph",
    "multiset_no_consecutive_count", "p_closed_form", "p_polynomial",
    "parse_polyomino", "reduce", "reduce_graph", "region_alternations",
    "symmetric_difference_cycles", "verify_edge_decomposition", "weak_dual",
    "z2_betti",
]
