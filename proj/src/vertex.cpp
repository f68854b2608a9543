#include "hypersimplex/vertex.hpp"

#include <algorithm>
#include <bit>

namespace hypersimplex {

GraphParams::GraphParams(int d_, int k_) : d(d_), k(k_) {
  if (d < 2 || d > kMaxDimension) {
    throw ParamError("GraphParams: d must be in [2, " +
                     std::to_string(kMaxDimension) + "], got d=" + std::to_string(d));
  }
  if (k < 1 || k >= d) {
    throw ParamError("GraphParams: k must satisfy 1 <= k < d, got d=" +
                     std::to_string(d) + ", k=" + std::to_string(k));
  }
}

std::uint64_t GraphParams::coordinate_bit(int i) const {
  if (i < 1 || i > d) {
    throw ParamError(name() + ": coordinate index " + std::to_string(i) +
                     " outside 1.." + std::to_string(d));
  }
  return std::uint64_t{1} << (d - i);
}

std::string GraphParams::name() const {
  return "G(" + std::to_string(d) + "," + std::to_string(k) + ")";
}

void require_half_regime(const GraphParams& p, const char* operation) {
  if (!p.in_half_regime()) {
    throw RegimeError(std::string(operation) + ": defined for 1 <= k <= d/2 only, got " +
                      p.name() + "; " + p.name() + " is isomorphic to " +
                      p.complement().name() +
                      " -- apply complement_params and map vertices by bitwise complement");
  }
}

Vertex::Vertex(GraphParams params, std::uint64_t bits) : params_(params), bits_(bits) {
  if ((bits & ~params.coordinate_mask()) != 0) {
    throw ParamError("Vertex: bits outside the " + std::to_string(params.d) +
                     " coordinate positions");
  }
  if (std::popcount(bits) != params.k) {
    throw ParamError("Vertex: expected exactly " + std::to_string(params.k) +
                     " ones, got " + std::to_string(std::popcount(bits)));
  }
}

Vertex Vertex::parse(GraphParams params, std::string_view text) {
  if (static_cast<int>(text.size()) != params.d) {
    throw ParamError("Vertex::parse: expected " + std::to_string(params.d) +
                     " characters, got " + std::to_string(text.size()));
  }
  std::uint64_t bits = 0;
  for (int i = 1; i <= params.d; ++i) {
    char c = text[static_cast<std::size_t>(i) - 1];
    if (c == '1') {
      bits |= params.coordinate_bit(i);
    } else if (c != '0') {
      throw ParamError("Vertex::parse: invalid character '" + std::string(1, c) + "'");
    }
  }
  return Vertex(params, bits);
}

Vertex Vertex::canonical_start(GraphParams params) {
  std::uint64_t bits = ((std::uint64_t{1} << params.k) - 1) << (params.d - params.k);
  return Vertex(params, bits);
}

bool Vertex::coordinate(int i) const {
  return (bits_ & params_.coordinate_bit(i)) != 0;
}

std::string Vertex::to_string() const {
  std::string s(static_cast<std::size_t>(params_.d), '0');
  for (int i = 1; i <= params_.d; ++i) {
    if (coordinate(i)) s[static_cast<std::size_t>(i) - 1] = '1';
  }
  return s;
}

IndexPermutation::IndexPermutation(std::vector<int> targets) : targets_(std::move(targets)) {
  const int d = static_cast<int>(targets_.size());
  if (d < 1 || d > kMaxDimension) {
    throw ParamError("IndexPermutation: size must be in [1, " +
                     std::to_string(kMaxDimension) + "]");
  }
  std::uint64_t seen = 0;
  for (int t : targets_) {
    if (t < 1 || t > d) {
      throw ParamError("IndexPermutation: target " + std::to_string(t) +
                       " outside 1.." + std::to_string(d));
    }
    std::uint64_t bit = std::uint64_t{1} << (t - 1);
    if (seen & bit) {
      throw ParamError("IndexPermutation: target " + std::to_string(t) +
                       " appears twice; not a bijection");
    }
    seen |= bit;
  }
}

IndexPermutation IndexPermutation::identity(int d) {
  std::vector<int> t(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) t[static_cast<std::size_t>(i)] = i + 1;
  return IndexPermutation(std::move(t));
}

bool IndexPermutation::is_identity() const {
  for (int i = 1; i <= size(); ++i) {
    if (target(i) != i) return false;
  }
  return true;
}

bool IndexPermutation::is_involution() const {
  for (int i = 1; i <= size(); ++i) {
    if (target(target(i)) != i) return false;
  }
  return true;
}

}  // namespace hypersimplex
