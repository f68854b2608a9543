// Bit-vector vertices of the hypersimplex graph G(d,k) and coordinate
// permutations. Coordinates are 1-based and coordinate 1 is the leftmost
// character of the textual form, i.e. bit (d - i) of the 64-bit mask.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hypersimplex/errors.hpp"

namespace hypersimplex {

inline constexpr int kMaxDimension = 64;

// The pair (d, k): vertices are d-bit vectors with exactly k ones, 1 <= k < d.
struct GraphParams {
  int d;
  int k;

  GraphParams(int d_, int k_);

  // The regime 1 <= k <= d/2 in which distance, diameter, spectrum and the
  // expansion bounds are stated. Outside it, route through complement().
  bool in_half_regime() const { return 2 * k <= d; }
  GraphParams complement() const { return GraphParams(d, d - k); }

  std::uint64_t coordinate_mask() const {
    return d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
  }
  std::uint64_t coordinate_bit(int i) const;  // 1-based coordinate index

  std::string name() const;  // "G(d,k)"

  friend bool operator==(const GraphParams&, const GraphParams&) = default;
};

// Throws RegimeError naming the complement remedy unless 1 <= k <= d/2.
void require_half_regime(const GraphParams& p, const char* operation);

class Vertex {
 public:
  Vertex(GraphParams params, std::uint64_t bits);

  // Parses the d-character 0/1 string, coordinate 1 leftmost. Rejects wrong
  // length, wrong characters and wrong popcount.
  static Vertex parse(GraphParams params, std::string_view text);

  // The vertex with the first k coordinates set ("11000" for d=5, k=2).
  static Vertex canonical_start(GraphParams params);

  std::uint64_t bits() const { return bits_; }
  const GraphParams& params() const { return params_; }

  bool coordinate(int i) const;  // value of x_i, 1-based
  std::string to_string() const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) {
    if (auto c = a.params_.d <=> b.params_.d; c != 0) return c;
    if (auto c = a.params_.k <=> b.params_.k; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  GraphParams params_;
  std::uint64_t bits_;
};

// Bijection f on coordinates {1..d}; target(i) is where coordinate i is sent.
class IndexPermutation {
 public:
  // 1-based target array; every value in {1..d} must appear exactly once.
  explicit IndexPermutation(std::vector<int> targets);

  static IndexPermutation identity(int d);

  int size() const { return static_cast<int>(targets_.size()); }
  int target(int i) const { return targets_[static_cast<std::size_t>(i) - 1]; }
  const std::vector<int>& targets() const { return targets_; }

  bool is_identity() const;
  bool is_involution() const;

  friend bool operator==(const IndexPermutation&, const IndexPermutation&) = default;

 private:
  std::vector<int> targets_;
};

}  // namespace hypersimplex
