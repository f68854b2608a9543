#include "hypersimplex/core_graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace hypersimplex {

namespace {

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

void require_same_params(const Vertex& x, const Vertex& y, const char* op) {
  if (!(x.params() == y.params())) {
    throw ParamError(std::string(op) + ": operands belong to " + x.params().name() +
                     " and " + y.params().name());
  }
}

}  // namespace

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    if (acc > kU64Max) {
      throw OverflowError("binomial(" + std::to_string(n) + "," + std::to_string(r) +
                          ") exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t vertex_count(const GraphParams& p) { return binomial(p.d, p.k); }

std::uint64_t degree(const GraphParams& p) {
  return static_cast<std::uint64_t>(p.k) * static_cast<std::uint64_t>(p.d - p.k);
}

std::uint64_t edge_count(const GraphParams& p) {
  unsigned __int128 e = static_cast<unsigned __int128>(vertex_count(p)) * degree(p) / 2;
  if (e > kU64Max) {
    throw OverflowError("edge_count " + p.name() + " exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(e);
}

std::vector<Vertex> all_vertices(const GraphParams& p, std::uint64_t cap) {
  const std::uint64_t n = vertex_count(p);
  if (n > cap) {
    throw CapError("all_vertices " + p.name() + ": C(d,k) = " + std::to_string(n) +
                   " exceeds the enumeration cap " + std::to_string(cap));
  }
  std::vector<Vertex> out;
  out.reserve(n);
  std::uint64_t mask = (std::uint64_t{1} << p.k) - 1;  // lowest pattern
  for (std::uint64_t i = 0; i < n; ++i) {
    out.emplace_back(p, mask);
    // Gosper's hack: next ascending pattern with the same popcount.
    std::uint64_t low = mask & ~(mask - 1);
    std::uint64_t ripple = mask + low;
    mask = ripple | (((mask ^ ripple) >> 2) / low);
  }
  return out;
}

int inner_product(const Vertex& x, const Vertex& y) {
  require_same_params(x, y, "inner_product");
  return std::popcount(x.bits() & y.bits());
}

bool is_adjacent(const Vertex& x, const Vertex& y) {
  require_same_params(x, y, "is_adjacent");
  if (x.bits() == y.bits()) return false;
  return std::popcount(x.bits() & y.bits()) == x.params().k - 1;
}

std::vector<Vertex> neighbors(const Vertex& x) {
  const GraphParams& p = x.params();
  std::vector<Vertex> out;
  out.reserve(degree(p));
  const std::uint64_t set = x.bits();
  const std::uint64_t clear = ~set & p.coordinate_mask();
  for (std::uint64_t s = set; s != 0; s &= s - 1) {
    const std::uint64_t drop = s & ~(s - 1);
    for (std::uint64_t c = clear; c != 0; c &= c - 1) {
      const std::uint64_t add = c & ~(c - 1);
      out.emplace_back(p, (set ^ drop) | add);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Vertex& a, const Vertex& b) { return a.bits() < b.bits(); });
  return out;
}

int distance(const Vertex& x, const Vertex& y) {
  require_same_params(x, y, "distance");
  require_half_regime(x.params(), "distance");
  return x.params().k - inner_product(x, y);
}

int diameter(const GraphParams& p) {
  require_half_regime(p, "diameter");
  return p.k;
}

Vertex ComplementIsomorphism::map(const Vertex& v) const {
  if (!(v.params() == source)) {
    throw ParamError("ComplementIsomorphism: vertex belongs to " + v.params().name() +
                     ", expected " + source.name());
  }
  return Vertex(image, ~v.bits() & source.coordinate_mask());
}

ComplementIsomorphism complement_params(const GraphParams& p) {
  return ComplementIsomorphism{p, p.complement()};
}

IndexPermutation transitive_automorphism(const Vertex& x, const Vertex& y) {
  require_same_params(x, y, "transitive_automorphism");
  const int d = x.params().d;
  std::vector<int> targets(static_cast<std::size_t>(d));
  for (int i = 1; i <= d; ++i) targets[static_cast<std::size_t>(i) - 1] = i;

  // Disagreement coordinates, split by the side holding the one in x.
  // Ascending coordinate order, so pairing r-th with r-th realizes the
  // iterated smallest-index rule.
  std::vector<int> x_one, x_zero;
  for (int i = 1; i <= d; ++i) {
    if (x.coordinate(i) != y.coordinate(i)) {
      (x.coordinate(i) ? x_one : x_zero).push_back(i);
    }
  }
  for (std::size_t r = 0; r < x_one.size(); ++r) {
    targets[static_cast<std::size_t>(x_one[r]) - 1] = x_zero[r];
    targets[static_cast<std::size_t>(x_zero[r]) - 1] = x_one[r];
  }
  return IndexPermutation(std::move(targets));
}

Vertex apply_permutation(const IndexPermutation& f, const Vertex& x) {
  const GraphParams& p = x.params();
  if (f.size() != p.d) {
    throw ParamError("apply_permutation: permutation over " + std::to_string(f.size()) +
                     " coordinates applied to " + p.name());
  }
  std::uint64_t bits = 0;
  for (int i = 1; i <= p.d; ++i) {
    if (x.coordinate(i)) bits |= p.coordinate_bit(f.target(i));
  }
  return Vertex(p, bits);
}

}  // namespace hypersimplex
