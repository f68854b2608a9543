// Clique structure and the Pascal-identity decomposition of G(d,k) into
// G(d-1,k-1), G(d-1,k) and the linking edges between them.
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "hypersimplex/vertex.hpp"

namespace hypersimplex {

// The d-k+1 vertices whose first k-1 coordinates are one; pairwise adjacent.
// Accepts k = 1 (the whole vertex set of the complete-graph case).
std::vector<Vertex> canonical_clique(const GraphParams& p);

// d-k+1 for k >= 2, d for k = 1. Requires the half regime.
std::uint64_t clique_number(const GraphParams& p);

// Edges linking the two parts: (d-1)!/((k-1)!(d-k-1)!) = C(d-1,k-1)(d-k).
std::uint64_t linking_edge_count(const GraphParams& p);

// One part of a pivot split. The sub-parameters may be degenerate
// (sub_k = 0 or sub_k = sub_d: a single vertex).
struct DecompositionPart {
  int sub_d = 0;
  int sub_k = 0;
  std::vector<Vertex> vertices;            // in the parent graph, canonical order
  std::vector<std::uint64_t> relabeled;    // drop-pivot masks, aligned with vertices
  std::uint64_t edges_within = 0;          // edges of the induced subgraph

  bool proper() const { return sub_k >= 1 && sub_k < sub_d; }
};

struct Decomposition {
  GraphParams params;
  int pivot = 1;
  DecompositionPart ones_part;   // x_pivot = 1, relabels into G(d-1,k-1)
  DecompositionPart zeros_part;  // x_pivot = 0, relabels into G(d-1,k)
  std::vector<std::pair<Vertex, Vertex>> linking_edges;  // (ones side, zeros side)
};

// Splits on coordinate `pivot` (1-based, default 1). Enumerates the vertex
// set, so the usual enumeration cap applies.
Decomposition decompose(const GraphParams& p, int pivot = 1);

// Node of the recursive decomposition. Counts come from the closed forms and
// satisfy edges = edges(ones) + edges(zeros) + linking at every split node.
struct DecompositionNode {
  int d = 0;
  int k = 0;
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  bool leaf = true;
  // Leaf classification: "complete" (k = 1), "single-vertex" (k = 0 or k = d),
  // or "depth-limited". Empty for split nodes.
  std::string leaf_kind;
  int pivot = 0;  // 1 for split nodes
  std::uint64_t linking_edges = 0;
  std::unique_ptr<DecompositionNode> ones_child;
  std::unique_ptr<DecompositionNode> zeros_child;
};

// Repeatedly splits on pivot 1 until parts reach k in {0, 1}, a single
// vertex, or the depth budget runs out.
DecompositionNode recursive_decomposition(const GraphParams& p, int depth);

}  // namespace hypersimplex
