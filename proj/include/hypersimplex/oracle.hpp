// Brute-force reference implementations, built from the definition alone:
// enumerate d-bit words with popcount k, connect pairs at Hamming distance 2.
// Deliberately shares nothing with the closed-form modules beyond GraphParams
// and raw bit masks, so the two sides can check each other.
#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "hypersimplex/vertex.hpp"

namespace hypersimplex::oracle {

struct SmallGraph {
  GraphParams params;
  std::vector<std::uint64_t> vertices;  // ascending masks
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // i < j, each pair once
  std::vector<std::vector<std::uint32_t>> adjacency;

  std::size_t size() const { return vertices.size(); }
  std::size_t index_of(std::uint64_t mask) const;  // throws ParamError if absent
  bool adjacent(std::uint32_t i, std::uint32_t j) const;
};

SmallGraph build_small_graph(const GraphParams& p,
                             std::uint64_t enumeration_cap = std::uint64_t{1} << 20,
                             std::uint64_t edge_cap = 4096);

// Exact distances from `source` (vertex index) to every vertex.
std::vector<int> bfs_distances(const SmallGraph& g, std::size_t source);

// Exact nonnegative rational, normalized (gcd 1, den > 0).
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
};

struct ExpansionReport {
  Rational value;                       // exact edge expansion
  std::vector<std::uint32_t> witness;   // minimizing subset, ascending indices,
                                        // lexicographically least among minimizers
  std::uint64_t sets_examined = 0;
};

// Exact edge expansion min |cut(U)|/|U| over nonempty U with |U| <= |V|/2,
// by enumerating all subsets. Throws CapError beyond `vertex_cap` and
// suggests the sweep bound instead.
ExpansionReport exact_expansion(const SmallGraph& g, std::size_t vertex_cap = 24);

// Spectral sweep-cut upper bound: minimum cut ratio over prefixes of the
// vertices sorted by second-eigenvector component. Always >= the exact
// expansion and <= the Cheeger upper bound.
Rational sweep_expansion_upper_bound(const SmallGraph& g, std::size_t vertex_cap = 512);

// Exact maximum clique size by branch and bound, vertices ordered by degree.
std::size_t max_clique(const SmallGraph& g, std::size_t vertex_cap = 128);

// True iff every unordered vertex pair is joined by a Hamiltonian path.
bool hamilton_connected_check(const SmallGraph& g, std::size_t vertex_cap = 12);

// True iff every vertex pair admits >= t internally-disjoint paths
// (unit-vertex-capacity max-flow per pair).
bool vertex_connectivity_at_least(const SmallGraph& g, std::size_t t,
                                  std::size_t vertex_cap = 64);

}  // namespace hypersimplex::oracle
