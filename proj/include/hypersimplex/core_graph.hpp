// Closed-form structure of G(d,k): counts, adjacency, distance, and the
// vertex-transitivity automorphism. Every function here is a pure function
// of immutable values and safe for unrestricted concurrent use.
#pragma once

#include <cstdint>
#include <vector>

#include "hypersimplex/vertex.hpp"

namespace hypersimplex {

// Exact C(n, r) in 64 bits. r < 0 or r > n gives 0. Throws OverflowError if
// the result does not fit; intermediates are exact (128-bit accumulation).
std::uint64_t binomial(int n, int r);

// Number of vertices: C(d,k).
std::uint64_t vertex_count(const GraphParams& p);

// Common degree: k(d-k).
std::uint64_t degree(const GraphParams& p);

// Number of edges: C(d,k) * k(d-k) / 2, computed without factorials.
std::uint64_t edge_count(const GraphParams& p);

// All vertices in canonical order (ascending bit patterns).
// Enumeration is capped; exceeding the cap throws CapError.
std::vector<Vertex> all_vertices(const GraphParams& p, std::uint64_t cap = 1u << 20);

// Inner product x.y = number of shared ones; in [max(0, 2k-d), k].
int inner_product(const Vertex& x, const Vertex& y);

// Adjacent iff x.y = k-1 (equivalently Hamming distance 2). x == y is false.
bool is_adjacent(const Vertex& x, const Vertex& y);

// The k(d-k) neighbors of x in canonical order.
std::vector<Vertex> neighbors(const Vertex& x);

// Graph distance k - x.y. Requires the half regime k <= d/2.
int distance(const Vertex& x, const Vertex& y);

// Diameter k. Requires the half regime.
int diameter(const GraphParams& p);

// Witness of the isomorphism G(d,k) ~ G(d,d-k): bitwise complement per vertex.
struct ComplementIsomorphism {
  GraphParams source;
  GraphParams image;

  Vertex map(const Vertex& v) const;
};

ComplementIsomorphism complement_params(const GraphParams& p);

// An adjacency-preserving automorphism f with f(x) = y. f fixes every
// coordinate where x and y agree and pairs the disagreement coordinates
// smallest-first, so it is an involution (a product of disjoint swaps).
IndexPermutation transitive_automorphism(const Vertex& x, const Vertex& y);

// Output bit at position f(i) equals input bit at position i.
Vertex apply_permutation(const IndexPermutation& f, const Vertex& x);

}  // namespace hypersimplex
