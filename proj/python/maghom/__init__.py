"""Magnitude power series and bigraded integral magnitude homology of finite graphs."""

from ._maghom import (
    Graph,
    SimplicialComplex,
    cartesian_product,
    chain_counts,
    complete_graph,
    complex_from_facets,
    complex_homology,
    cycle_graph,
    geodesic_stats,
    homology,
    homology_table,
    is_convex,
    ky_graph,
    magnitude_alternating,
    magnitude_series,
    pachner_subdivide,
    path_graph,
    polyomino_graph,
    projection,
    rp2_complex,
    simplex_boundary,
    single_simplex,
    torsion_detect,
    tree_graph,
    wheel_graph,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "SimplicialComplex",
    "cartesian_product",
    "chain_counts",
    "complete_graph",
    "complex_from_facets",
    "complex_homology",
    "cycle_graph",
    "geodesic_stats",
    "homology",
    "homology_table",
    "is_convex",
    "ky_graph",
    "magnitude_alternating",
    "magnitude_series",
    "pachner_subdivide",
    "path_graph",
    "polyomino_graph",
    "projection",
    "rp2_complex",
    "simplex_boundary",
    "single_simplex",
    "torsion_detect",
    "tree_graph",
    "wheel_graph",
]
