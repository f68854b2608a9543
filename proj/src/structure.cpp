#include "hypersimplex/structure.hpp"

#include <bit>
#include <limits>

#include "hypersimplex/core_graph.hpp"

namespace hypersimplex {

namespace {

// C(d,k) extended to the degenerate boundary rows used by the recursion.
std::uint64_t count_general(int d, int k) { return binomial(d, k); }

std::uint64_t edges_general(int d, int k) {
  if (k <= 0 || k >= d) return 0;
  return edge_count(GraphParams(d, k));
}

// Drops coordinate `pivot` from a d-coordinate mask.
std::uint64_t drop_coordinate(std::uint64_t bits, int d, int pivot) {
  const int b = d - pivot;  // bit index of the pivot coordinate
  const std::uint64_t low = bits & ((std::uint64_t{1} << b) - 1);
  const std::uint64_t high = b + 1 < 64 ? bits >> (b + 1) : 0;
  return (high << b) | low;
}

}  // namespace

std::vector<Vertex> canonical_clique(const GraphParams& p) {
  require_half_regime(p, "canonical_clique");
  const std::uint64_t prefix = p.k >= 2
      ? ((std::uint64_t{1} << (p.k - 1)) - 1) << (p.d - p.k + 1)
      : 0;
  std::vector<Vertex> clique;
  clique.reserve(static_cast<std::size_t>(p.d - p.k + 1));
  for (int i = p.k; i <= p.d; ++i) {
    clique.emplace_back(p, prefix | p.coordinate_bit(i));
  }
  return clique;
}

std::uint64_t clique_number(const GraphParams& p) {
  require_half_regime(p, "clique_number");
  return p.k == 1 ? static_cast<std::uint64_t>(p.d)
                  : static_cast<std::uint64_t>(p.d - p.k + 1);
}

std::uint64_t linking_edge_count(const GraphParams& p) {
  const unsigned __int128 links =
      static_cast<unsigned __int128>(binomial(p.d - 1, p.k - 1)) *
      static_cast<unsigned>(p.d - p.k);
  if (links > std::numeric_limits<std::uint64_t>::max()) {
    throw OverflowError("linking_edge_count " + p.name() + " exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(links);
}

Decomposition decompose(const GraphParams& p, int pivot) {
  if (pivot < 1 || pivot > p.d) {
    throw ParamError("decompose " + p.name() + ": pivot " + std::to_string(pivot) +
                     " outside 1.." + std::to_string(p.d));
  }
  const std::uint64_t pivot_bit = p.coordinate_bit(pivot);

  Decomposition dec{p, pivot, {}, {}, {}};
  dec.ones_part.sub_d = p.d - 1;
  dec.ones_part.sub_k = p.k - 1;
  dec.zeros_part.sub_d = p.d - 1;
  dec.zeros_part.sub_k = p.k;

  for (const Vertex& v : all_vertices(p)) {
    DecompositionPart& part = (v.bits() & pivot_bit) ? dec.ones_part : dec.zeros_part;
    part.vertices.push_back(v);
    part.relabeled.push_back(drop_coordinate(v.bits(), p.d, pivot));
  }

  // Within-part edges: neighbors that keep the pivot coordinate fixed.
  for (DecompositionPart* part : {&dec.ones_part, &dec.zeros_part}) {
    std::uint64_t total = 0;
    for (const Vertex& v : part->vertices) {
      for (const Vertex& w : neighbors(v)) {
        if ((w.bits() & pivot_bit) == (v.bits() & pivot_bit)) ++total;
      }
    }
    part->edges_within = total / 2;
  }

  // Linking edges: a ones-side vertex u is adjacent to exactly the
  // zeros-side vertices (u minus pivot) plus one other clear coordinate.
  for (const Vertex& u : dec.ones_part.vertices) {
    const std::uint64_t base = u.bits() ^ pivot_bit;
    std::uint64_t clear = ~u.bits() & p.coordinate_mask();
    for (std::uint64_t c = clear; c != 0; c &= c - 1) {
      const std::uint64_t add = c & ~(c - 1);
      dec.linking_edges.emplace_back(u, Vertex(p, base | add));
    }
  }
  return dec;
}

namespace {

DecompositionNode build_node(int d, int k, int depth) {
  DecompositionNode node;
  node.d = d;
  node.k = k;
  node.vertices = count_general(d, k);
  node.edges = edges_general(d, k);
  if (k == 0 || k == d) {
    node.leaf_kind = "single-vertex";
    return node;
  }
  if (k == 1) {
    node.leaf_kind = "complete";
    return node;
  }
  if (depth <= 0) {
    node.leaf_kind = "depth-limited";
    return node;
  }
  node.leaf = false;
  node.pivot = 1;
  node.linking_edges = linking_edge_count(GraphParams(d, k));
  node.ones_child = std::make_unique<DecompositionNode>(build_node(d - 1, k - 1, depth - 1));
  node.zeros_child = std::make_unique<DecompositionNode>(build_node(d - 1, k, depth - 1));
  return node;
}

}  // namespace

DecompositionNode recursive_decomposition(const GraphParams& p, int depth) {
  if (depth < 0) throw ParamError("recursive_decomposition: depth must be >= 0");
  return build_node(p.d, p.k, depth);
}

}  // namespace hypersimplex
