// Closed-form adjacency spectrum of G(d,k), Cheeger bounds on the edge
// expansion, and explicit matrices with numeric verification for small
// instances.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hypersimplex/vertex.hpp"

namespace hypersimplex {

inline constexpr std::size_t kDefaultMatrixCap = 512;

struct SpectrumEntry {
  int j;                       // 0..k
  std::int64_t eigenvalue;     // (k-j)(d-k-j) - j
  std::uint64_t multiplicity;  // C(d,j) - C(d,j-1)
};

struct Spectrum {
  GraphParams params;
  std::vector<SpectrumEntry> entries;  // strictly decreasing eigenvalues

  std::int64_t top() const { return entries.front().eigenvalue; }     // = degree
  std::int64_t second() const { return entries[1].eigenvalue; }
  std::int64_t smallest() const { return entries.back().eigenvalue; }
};

// The k+1 eigenvalue/multiplicity pairs. Requires the half regime.
Spectrum closed_form_spectrum(const GraphParams& p);

// Dense symmetric 0/1 adjacency matrix in canonical vertex order.
struct AdjacencyMatrix {
  std::size_t n = 0;
  std::vector<std::uint8_t> values;  // row-major n*n

  std::uint8_t at(std::size_t i, std::size_t j) const { return values[i * n + j]; }
};

AdjacencyMatrix adjacency_matrix(const GraphParams& p, std::size_t cap = kDefaultMatrixCap);

struct EigenvalueCheck {
  int j;
  std::int64_t expected;
  std::uint64_t multiplicity;
  std::size_t observed_count;  // cluster size after tolerance-clustering
  double max_deviation;
};

struct SpectrumVerification {
  bool pass = false;
  double tolerance = 0.0;
  std::vector<EigenvalueCheck> entries;
  std::string detail;  // empty on pass, names the offending cluster otherwise
};

// Numerically diagonalizes the adjacency matrix and matches the eigenvalue
// multiset against the closed form, clustering with gap threshold 10*tol.
SpectrumVerification verify_spectrum(const GraphParams& p, double tol = 1e-8,
                                     std::size_t cap = kDefaultMatrixCap);

// Cheeger sandwich (r - l1)/2 <= expansion <= sqrt(2 r (r - l1)) with the
// gap r - l1 = d exactly. The lower bound is the exact rational d/2 and the
// squared upper bound 2rd is kept exact for comparisons before rounding.
struct ExpansionBounds {
  std::uint64_t degree;         // r = k(d-k)
  std::uint64_t gap;            // r - l1 = d
  std::uint64_t lower_num;      // lower = gap / 2
  std::uint64_t lower_den;
  std::uint64_t upper_squared;  // 2 * degree * gap

  double lower() const { return static_cast<double>(lower_num) / static_cast<double>(lower_den); }
  double upper() const;
};

ExpansionBounds cheeger_bounds(const GraphParams& p);

// Walk convergence rate. Non-lazy: 1 - max(|l1|, |l_min|)/r. Lazy (half
// self-loop): (1 - l1/r)/2 from the shifted spectrum, always positive.
double spectral_gap(const GraphParams& p, bool lazy);

}  // namespace hypersimplex
