#include "hypersimplex/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <deque>
#include <queue>

namespace hypersimplex::oracle {

namespace {

// Counts how many masks in [0, 2^d) have popcount k, without the closed form.
std::uint64_t count_by_enumeration_bound(const GraphParams& p) {
  // Pascal recurrence on a single row; definitional, no factorials.
  std::vector<std::uint64_t> row(static_cast<std::size_t>(p.d) + 1, 0);
  row[0] = 1;
  for (int n = 1; n <= p.d; ++n) {
    for (int j = n; j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j) - 1];
  }
  return row[static_cast<std::size_t>(p.k)];
}

}  // namespace

std::size_t SmallGraph::index_of(std::uint64_t mask) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), mask);
  if (it == vertices.end() || *it != mask) {
    throw ParamError("SmallGraph: mask not a vertex of " + params.name());
  }
  return static_cast<std::size_t>(it - vertices.begin());
}

bool SmallGraph::adjacent(std::uint32_t i, std::uint32_t j) const {
  const auto& row = adjacency[i];
  return std::find(row.begin(), row.end(), j) != row.end();
}

SmallGraph build_small_graph(const GraphParams& p, std::uint64_t enumeration_cap,
                             std::uint64_t edge_cap) {
  const std::uint64_t n = count_by_enumeration_bound(p);
  if (n > enumeration_cap) {
    throw CapError("build_small_graph " + p.name() + ": " + std::to_string(n) +
                   " vertices exceed the enumeration cap " + std::to_string(enumeration_cap));
  }
  if (n > edge_cap) {
    throw CapError("build_small_graph " + p.name() + ": " + std::to_string(n) +
                   " vertices exceed the edge-building cap " + std::to_string(edge_cap));
  }

  SmallGraph g{p, {}, {}, {}};
  g.vertices.reserve(n);
  const std::uint64_t limit = p.coordinate_mask();
  for (std::uint64_t mask = 0; mask <= limit; ++mask) {
    if (std::popcount(mask) == p.k) g.vertices.push_back(mask);
    if (mask == limit) break;
  }

  g.adjacency.assign(g.vertices.size(), {});
  for (std::uint32_t i = 0; i < g.vertices.size(); ++i) {
    for (std::uint32_t j = i + 1; j < g.vertices.size(); ++j) {
      if (std::popcount(g.vertices[i] ^ g.vertices[j]) == 2) {
        g.edges.emplace_back(i, j);
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
      }
    }
  }
  return g;
}

std::vector<int> bfs_distances(const SmallGraph& g, std::size_t source) {
  if (source >= g.size()) throw ParamError("bfs_distances: source index out of range");
  std::vector<int> dist(g.size(), -1);
  std::queue<std::uint32_t> frontier;
  dist[source] = 0;
  frontier.push(static_cast<std::uint32_t>(source));
  while (!frontier.empty()) {
    std::uint32_t v = frontier.front();
    frontier.pop();
    for (std::uint32_t w : g.adjacency[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw ParamError("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

ExpansionReport exact_expansion(const SmallGraph& g, std::size_t vertex_cap) {
  const std::size_t n = g.size();
  if (n > vertex_cap || n > 30) {
    throw CapError("exact_expansion " + g.params.name() + ": " + std::to_string(n) +
                   " vertices exceed the subset-enumeration cap " + std::to_string(vertex_cap) +
                   "; use sweep_expansion_upper_bound instead");
  }
  if (n < 2) throw ParamError("exact_expansion: need at least two vertices");

  std::vector<std::uint32_t> adj_mask(n, 0);
  for (auto [i, j] : g.edges) {
    adj_mask[i] |= std::uint32_t{1} << j;
    adj_mask[j] |= std::uint32_t{1} << i;
  }

  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  const int half = static_cast<int>(n / 2);

  auto witness_of = [n](std::uint32_t mask) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (mask & (std::uint32_t{1} << v)) out.push_back(v);
    }
    return out;
  };

  ExpansionReport report;
  bool have_best = false;
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 1; mask <= all; ++mask) {
    const int size = std::popcount(mask);
    if (size > half) continue;
    ++report.sets_examined;
    std::int64_t cut = 0;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      cut += std::popcount(adj_mask[static_cast<std::size_t>(v)] & ~mask);
    }
    Rational ratio(cut, size);
    if (!have_best || ratio < report.value ||
        (ratio == report.value && witness_of(mask) < witness_of(best_mask))) {
      have_best = true;
      report.value = ratio;
      best_mask = mask;
    }
  }
  report.witness = witness_of(best_mask);
  return report;
}

Rational sweep_expansion_upper_bound(const SmallGraph& g, std::size_t vertex_cap) {
  const std::size_t n = g.size();
  if (n > vertex_cap) {
    throw CapError("sweep_expansion_upper_bound " + g.params.name() + ": " +
                   std::to_string(n) + " vertices exceed the spectral cap " +
                   std::to_string(vertex_cap));
  }
  if (n < 2) throw ParamError("sweep_expansion_upper_bound: need at least two vertices");

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                            static_cast<Eigen::Index>(n));
  for (auto [i, j] : g.edges) {
    a(i, j) = 1.0;
    a(j, i) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  // Eigenvalues ascend; the second-largest one's eigenvector drives the sweep.
  Eigen::VectorXd fiedler = solver.eigenvectors().col(static_cast<Eigen::Index>(n) - 2);

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
    if (fiedler(x) != fiedler(y)) return fiedler(x) > fiedler(y);
    return x < y;
  });

  std::vector<char> in_prefix(n, 0);
  std::int64_t cut = 0;
  Rational best(0, 1);
  bool have_best = false;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::uint32_t v = order[i];
    // Moving v across the boundary flips its edges' cut status.
    for (std::uint32_t w : g.adjacency[v]) cut += in_prefix[w] ? -1 : 1;
    in_prefix[v] = 1;
    const std::int64_t side = std::min<std::int64_t>(static_cast<std::int64_t>(i) + 1,
                                                     static_cast<std::int64_t>(n - i - 1));
    Rational ratio(cut, side);
    if (!have_best || ratio < best) {
      best = ratio;
      have_best = true;
    }
  }
  return best;
}

namespace {

struct CliqueSearch {
  const SmallGraph& g;
  std::vector<std::array<std::uint64_t, 2>> adj_bits;
  std::size_t best = 0;

  explicit CliqueSearch(const SmallGraph& graph) : g(graph) {
    adj_bits.assign(g.size(), {0, 0});
    for (auto [i, j] : g.edges) {
      adj_bits[i][j >> 6] |= std::uint64_t{1} << (j & 63);
      adj_bits[j][i >> 6] |= std::uint64_t{1} << (i & 63);
    }
  }

  bool connected(std::uint32_t u, std::uint32_t v) const {
    return (adj_bits[u][v >> 6] >> (v & 63)) & 1;
  }

  void expand(std::size_t current, std::vector<std::uint32_t>& candidates) {
    best = std::max(best, current);
    while (!candidates.empty() && current + candidates.size() > best) {
      const std::uint32_t v = candidates.back();
      candidates.pop_back();
      std::vector<std::uint32_t> next;
      next.reserve(candidates.size());
      for (std::uint32_t u : candidates) {
        if (connected(u, v)) next.push_back(u);
      }
      expand(current + 1, next);
    }
  }
};

}  // namespace

std::size_t max_clique(const SmallGraph& g, std::size_t vertex_cap) {
  const std::size_t n = g.size();
  if (n > vertex_cap || n > 128) {
    throw CapError("max_clique " + g.params.name() + ": " + std::to_string(n) +
                   " vertices exceed the branch-and-bound cap " + std::to_string(vertex_cap));
  }
  if (n == 0) return 0;

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  // Expansion pops from the back, so the back holds the largest degree.
  std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
    const auto dx = g.adjacency[x].size(), dy = g.adjacency[y].size();
    if (dx != dy) return dx < dy;
    return x > y;
  });

  CliqueSearch search(g);
  search.expand(0, order);
  return search.best;
}

bool hamilton_connected_check(const SmallGraph& g, std::size_t vertex_cap) {
  const std::size_t n = g.size();
  if (n > vertex_cap || n > 16) {
    throw CapError("hamilton_connected_check " + g.params.name() + ": " + std::to_string(n) +
                   " vertices exceed the search cap " + std::to_string(vertex_cap));
  }
  if (n < 2) return true;

  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint16_t> neighbor_bits(n, 0);
  for (auto [i, j] : g.edges) {
    neighbor_bits[i] |= static_cast<std::uint16_t>(1u << j);
    neighbor_bits[j] |= static_cast<std::uint16_t>(1u << i);
  }

  // dp[mask] = set of endpoints v reachable by a path from s covering mask.
  std::vector<std::uint16_t> dp(static_cast<std::size_t>(full) + 1);
  for (std::uint32_t s = 0; s < n; ++s) {
    std::fill(dp.begin(), dp.end(), 0);
    dp[std::uint32_t{1} << s] = static_cast<std::uint16_t>(1u << s);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      const std::uint16_t ends = dp[mask];
      if (!ends) continue;
      for (std::uint32_t rest = ends; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const std::uint32_t expand =
            static_cast<std::uint32_t>(neighbor_bits[static_cast<std::size_t>(v)]) & ~mask;
        for (std::uint32_t e = expand; e != 0; e &= e - 1) {
          const int w = std::countr_zero(e);
          dp[mask | (std::uint32_t{1} << w)] |= static_cast<std::uint16_t>(1u << w);
        }
      }
    }
    // A Hamiltonian path must reach every other vertex as an endpoint.
    if ((dp[full] | (std::uint16_t)(1u << s)) != (std::uint16_t)full) return false;
  }
  return true;
}

namespace {

// Unit-vertex-capacity max-flow between s and t with early exit at `need`.
// Nodes are split: 2v = in, 2v+1 = out.
struct SplitFlowNetwork {
  struct Arc {
    std::uint32_t to;
    std::int32_t cap;
    std::size_t rev;
  };

  std::vector<std::vector<Arc>> arcs;

  explicit SplitFlowNetwork(std::size_t nodes) : arcs(nodes) {}

  void add(std::uint32_t from, std::uint32_t to, std::int32_t cap) {
    arcs[from].push_back({to, cap, arcs[to].size()});
    arcs[to].push_back({from, 0, arcs[from].size() - 1});
  }

  int max_flow_at_least(std::uint32_t s, std::uint32_t t, int need) {
    int flow = 0;
    while (flow < need) {
      // BFS for one augmenting path; unit capacities keep this simple.
      std::vector<std::pair<std::uint32_t, std::size_t>> parent(arcs.size(),
                                                                {UINT32_MAX, 0});
      std::deque<std::uint32_t> queue{s};
      parent[s] = {s, 0};
      while (!queue.empty() && parent[t].first == UINT32_MAX) {
        const std::uint32_t v = queue.front();
        queue.pop_front();
        for (std::size_t a = 0; a < arcs[v].size(); ++a) {
          const Arc& arc = arcs[v][a];
          if (arc.cap > 0 && parent[arc.to].first == UINT32_MAX) {
            parent[arc.to] = {v, a};
            queue.push_back(arc.to);
          }
        }
      }
      if (parent[t].first == UINT32_MAX) break;
      for (std::uint32_t v = t; v != s;) {
        auto [pv, pa] = parent[v];
        arcs[pv][pa].cap -= 1;
        arcs[arcs[pv][pa].to][arcs[pv][pa].rev].cap += 1;
        v = pv;
      }
      ++flow;
    }
    return flow;
  }
};

}  // namespace

bool vertex_connectivity_at_least(const SmallGraph& g, std::size_t t, std::size_t vertex_cap) {
  const std::size_t n = g.size();
  if (n > vertex_cap) {
    throw CapError("vertex_connectivity_at_least " + g.params.name() + ": " +
                   std::to_string(n) + " vertices exceed the max-flow cap " +
                   std::to_string(vertex_cap));
  }
  if (t == 0) return true;
  if (n < 2) return false;

  for (std::uint32_t s = 0; s < n; ++s) {
    for (std::uint32_t u = s + 1; u < n; ++u) {
      SplitFlowNetwork net(2 * n);
      for (std::uint32_t v = 0; v < n; ++v) net.add(2 * v, 2 * v + 1, 1);
      // Edge arcs carry at most one unit: vertex-disjoint paths never share
      // an edge, and the direct s-u edge is a single path.
      for (auto [i, j] : g.edges) {
        net.add(2 * i + 1, 2 * j, 1);
        net.add(2 * j + 1, 2 * i, 1);
      }
      const int flow = net.max_flow_at_least(2 * s + 1, 2 * u, static_cast<int>(t));
      if (flow < static_cast<int>(t)) return false;
    }
  }
  return true;
}

}  // namespace hypersimplex::oracle
