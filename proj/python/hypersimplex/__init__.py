"""Hypersimplex graph toolkit.

Closed-form structure of the hypersimplex graph G(d,k) (the Johnson graph):
counts, distances, spectra, cliques, the Pascal-identity decomposition,
brute-force verification oracles, and a random-walk sampler of uniform
k-subsets of {1..d}.
"""

from ._core import (
    CapError,
    ExpansionBounds,
    GraphParams,
    IndexPermutation,
    OverflowError,
    ParamError,
    RegimeError,
    SamplerError,
    UniformityReport,
    Vertex,
    adjacency_matrix,
    all_vertices,
    apply_permutation,
    canonical_clique,
    cheeger_bounds,
    clique_number,
    complement_map,
    decompose_tree,
    default_steps,
    degree,
    diameter,
    distance,
    edge_count,
    inner_product,
    is_adjacent,
    linking_edge_count,
    neighbors,
    oracle,
    sample_subsets,
    spectral_gap,
    spectrum,
    subset_of,
    transitive_automorphism,
    tv_evolution,
    uniformity_test,
    verify,
    verify_spectrum,
    vertex_count,
    vertex_of,
)

__all__ = [
    "CapError",
    "ExpansionBounds",
    "GraphParams",
    "IndexPermutation",
    "OverflowError",
    "ParamError",
    "RegimeError",
    "SamplerError",
    "UniformityReport",
    "Vertex",
    "adjacency_matrix",
    "all_vertices",
    "apply_permutation",
    "canonical_clique",
    "cheeger_bounds",
    "clique_number",
    "complement_map",
    "decompose_tree",
    "default_steps",
    "degree",
    "diameter",
    "distance",
    "edge_count",
    "inner_product",
    "is_adjacent",
    "linking_edge_count",
    "neighbors",
    "oracle",
    "sample_subsets",
    "spectral_gap",
    "spectrum",
    "subset_of",
    "transitive_automorphism",
    "tv_evolution",
    "uniformity_test",
    "verify",
    "verify_spectrum",
    "vertex_count",
    "vertex_of",
]

__version__ = "0.1.0"
