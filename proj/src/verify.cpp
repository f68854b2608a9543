#include "hypersimplex/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "hypersimplex/core_graph.hpp"
#include "hypersimplex/oracle.hpp"
#include "hypersimplex/sampler.hpp"
#include "hypersimplex/spectral.hpp"
#include "hypersimplex/structure.hpp"

namespace hypersimplex {

namespace {

using oracle::SmallGraph;

class Runner {
 public:
  explicit Runner(VerifyResult& result) : result_(result) {}

  void record(const std::string& check, const GraphParams& p, std::string expected,
              std::string actual) {
    CheckRecord rec{check, p.d, p.k, std::move(expected), std::move(actual), false};
    rec.pass = rec.expected == rec.actual;
    (rec.pass ? result_.passed : result_.failed) += 1;
    result_.records.push_back(std::move(rec));
  }

  void record_bool(const std::string& check, const GraphParams& p, bool ok,
                   const std::string& expected = "true") {
    record(check, p, expected, ok ? expected : "violated");
  }

 private:
  VerifyResult& result_;
};

std::string u64(std::uint64_t v) { return std::to_string(v); }

void check_counts(Runner& run, const GraphParams& p, const SmallGraph& g, bool fault) {
  run.record("vertex_count", p, u64(g.vertices.size()), u64(vertex_count(p)));
  run.record("edge_count", p, u64(g.edges.size()), u64(edge_count(p)));

  const std::uint64_t formula_degree = degree(p) + (fault ? 1 : 0);
  bool regular = true;
  for (const auto& row : g.adjacency) {
    if (row.size() != formula_degree) regular = false;
  }
  run.record_bool("degree_regularity", p, regular,
                  "all degrees " + u64(formula_degree));
}

void check_distances(Runner& run, const GraphParams& p, const SmallGraph& g) {
  bool formula_ok = true;
  int ecc_max = 0;
  for (std::size_t s = 0; s < g.size(); ++s) {
    const std::vector<int> dist = bfs_distances(g, s);
    for (std::size_t t = 0; t < g.size(); ++t) {
      const int shared = std::popcount(g.vertices[s] & g.vertices[t]);
      if (dist[t] != p.k - shared) formula_ok = false;
      ecc_max = std::max(ecc_max, dist[t]);
    }
  }
  run.record_bool("distance_formula", p, formula_ok, "k - x.y for all pairs");
  run.record("diameter", p, std::to_string(ecc_max), std::to_string(diameter(p)));
}

void check_distance_regularity(Runner& run, const GraphParams& p, const SmallGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<int>> dist(n);
  for (std::size_t s = 0; s < n; ++s) dist[s] = bfs_distances(g, s);

  // intersection[i][j] must not depend on the pair (x,y) at distance i.
  std::map<std::pair<int, int>, std::set<int>> seen;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const int i = dist[x][y];
      std::map<int, int> counts;
      for (std::uint32_t z : g.adjacency[y]) counts[dist[x][z]] += 1;
      for (auto [j, c] : counts) seen[{i, j}].insert(c);
    }
  }
  bool regular = true;
  for (auto& [key, values] : seen) {
    if (values.size() != 1) regular = false;
  }
  run.record_bool("distance_regularity", p, regular, "constant intersection counts");
}

void check_spectrum(Runner& run, const GraphParams& p) {
  const Spectrum s = closed_form_spectrum(p);
  std::uint64_t mult_sum = 0;
  std::int64_t trace = 0;
  for (const SpectrumEntry& e : s.entries) {
    mult_sum += e.multiplicity;
    trace += static_cast<std::int64_t>(e.multiplicity) * e.eigenvalue;
  }
  run.record("spectrum_dimension", p, u64(vertex_count(p)), u64(mult_sum));
  run.record("spectrum_trace", p, "0", std::to_string(trace));
  run.record("spectrum_top_is_degree", p, u64(degree(p)), std::to_string(s.top()));
  run.record("cheeger_gap_is_d", p, std::to_string(p.d),
             std::to_string(s.top() - s.second()));

  const SpectrumVerification v = verify_spectrum(p);
  run.record_bool("spectrum_numeric", p, v.pass,
                  "eigensolve matches closed form at 1e-8");
}

void check_expansion(Runner& run, const GraphParams& p, const SmallGraph& g) {
  const oracle::ExpansionReport report = oracle::exact_expansion(g);
  const ExpansionBounds bounds = cheeger_bounds(p);
  // d/2 <= value: compare exactly via cross-multiplication.
  const bool lower_ok = static_cast<__int128>(report.value.num) * 2 >=
                        static_cast<__int128>(bounds.gap) * report.value.den;
  const bool upper_ok = report.value.value() <= bounds.upper() + 1e-12;
  const bool mihail_ok = report.value.num >= report.value.den;  // chi >= 1
  run.record_bool("expansion_cheeger_sandwich", p, lower_ok && upper_ok,
                  "d/2 <= chi <= sqrt(2dk(d-k))");
  run.record_bool("expansion_at_least_one", p, mihail_ok, "chi >= 1");

  const oracle::Rational sweep = oracle::sweep_expansion_upper_bound(g);
  const bool sweep_ok = !(sweep < report.value) &&
                        sweep.value() <= bounds.upper() + 1e-12;
  run.record_bool("expansion_sweep_bound", p, sweep_ok,
                  "exact chi <= sweep <= cheeger upper");
}

// For instances too big for exact enumeration, the sweep cut still has to
// land inside the Cheeger sandwich.
void check_sweep_only(Runner& run, const GraphParams& p, const SmallGraph& g) {
  const ExpansionBounds bounds = cheeger_bounds(p);
  const oracle::Rational sweep = oracle::sweep_expansion_upper_bound(g);
  const bool lower_ok = static_cast<__int128>(sweep.num) * 2 >=
                        static_cast<__int128>(bounds.gap) * sweep.den;
  const bool upper_ok = sweep.value() <= bounds.upper() + 1e-12;
  run.record_bool("expansion_sweep_bound", p, lower_ok && upper_ok,
                  "d/2 <= sweep <= cheeger upper");
}

void check_clique(Runner& run, const GraphParams& p, const SmallGraph& g) {
  const std::uint64_t expected = clique_number(p);
  run.record("clique_number", p, u64(expected), u64(oracle::max_clique(g)));

  const std::vector<Vertex> clique = canonical_clique(p);
  bool pairwise = clique.size() == expected;
  for (std::size_t i = 0; i < clique.size() && pairwise; ++i) {
    for (std::size_t j = i + 1; j < clique.size(); ++j) {
      if (!is_adjacent(clique[i], clique[j])) {
        pairwise = false;
        break;
      }
    }
  }
  run.record_bool("canonical_clique", p, pairwise,
                  u64(expected) + " pairwise-adjacent vertices");
}

void check_connectivity(Runner& run, const GraphParams& p, const SmallGraph& g) {
  if (g.size() <= 32) {
    run.record_bool("vertex_connectivity", p,
                    oracle::vertex_connectivity_at_least(g, static_cast<std::size_t>(p.d - 1)),
                    "at least (d-1)-connected");
  }
  if (g.size() <= 12) {
    run.record_bool("hamilton_connected", p, oracle::hamilton_connected_check(g),
                    "hamiltonian path between every pair");
  }
}

bool relabeling_is_isomorphism(const DecompositionPart& part) {
  if (!part.proper()) {
    // Degenerate part: a single vertex, nothing to check beyond its size.
    return part.vertices.size() == 1;
  }
  const SmallGraph sub = oracle::build_small_graph(GraphParams(part.sub_d, part.sub_k));
  std::vector<std::uint64_t> relabeled = part.relabeled;
  std::sort(relabeled.begin(), relabeled.end());
  if (relabeled != sub.vertices) return false;  // bijection onto the vertex set

  // Edge-by-edge: adjacency in the parent part iff Hamming distance 2 below.
  for (std::size_t i = 0; i < part.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < part.vertices.size(); ++j) {
      const bool parent_adj = is_adjacent(part.vertices[i], part.vertices[j]);
      const bool sub_adj = std::popcount(part.relabeled[i] ^ part.relabeled[j]) == 2;
      if (parent_adj != sub_adj) return false;
    }
  }
  return true;
}

void check_decomposition(Runner& run, const GraphParams& p, const SmallGraph& g) {
  const Decomposition dec = decompose(p, 1);
  run.record("decomposition_ones_size", p, u64(binomial(p.d - 1, p.k - 1)),
             u64(dec.ones_part.vertices.size()));
  run.record("decomposition_zeros_size", p, u64(binomial(p.d - 1, p.k)),
             u64(dec.zeros_part.vertices.size()));
  run.record("decomposition_linking_edges", p, u64(linking_edge_count(p)),
             u64(dec.linking_edges.size()));
  run.record("decomposition_edge_sum", p, u64(edge_count(p)),
             u64(dec.ones_part.edges_within + dec.zeros_part.edges_within +
                 dec.linking_edges.size()));
  run.record_bool("decomposition_isomorphisms", p,
                  relabeling_is_isomorphism(dec.ones_part) &&
                      relabeling_is_isomorphism(dec.zeros_part),
                  "drop-pivot maps preserve adjacency");

  // Cross-check the linking-edge count against the oracle's edge list.
  const std::uint64_t pivot_bit = p.coordinate_bit(1);
  std::uint64_t crossing = 0;
  for (auto [i, j] : g.edges) {
    if (((g.vertices[i] ^ g.vertices[j]) & pivot_bit) != 0) ++crossing;
  }
  run.record("decomposition_crossing_count", p, u64(linking_edge_count(p)), u64(crossing));

  bool pivot_independent = true;
  for (int pivot = 2; pivot <= p.d; ++pivot) {
    const Decomposition other = decompose(p, pivot);
    if (other.ones_part.vertices.size() != dec.ones_part.vertices.size() ||
        other.zeros_part.vertices.size() != dec.zeros_part.vertices.size() ||
        other.linking_edges.size() != dec.linking_edges.size()) {
      pivot_independent = false;
    }
  }
  run.record_bool("decomposition_pivot_independence", p, pivot_independent,
                  "part sizes and link counts equal for all pivots");
}

void check_complement(Runner& run, const GraphParams& p, const SmallGraph& g) {
  const ComplementIsomorphism iso = complement_params(p);
  bool preserved = true;
  for (auto [i, j] : g.edges) {
    const Vertex a = iso.map(Vertex(p, g.vertices[i]));
    const Vertex b = iso.map(Vertex(p, g.vertices[j]));
    if (!is_adjacent(a, b)) preserved = false;
  }
  run.record_bool("complement_isomorphism", p, preserved,
                  "all edges map to edges of " + iso.image.name());
}

void check_automorphism(Runner& run, const GraphParams& p, const SmallGraph& g,
                        std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  bool ok = true;
  for (int trial = 0; trial < 5 && ok; ++trial) {
    const Vertex x(p, g.vertices[pick(rng)]);
    const Vertex y(p, g.vertices[pick(rng)]);
    const IndexPermutation f = transitive_automorphism(x, y);
    if (!(apply_permutation(f, x) == y) || !f.is_involution()) ok = false;
    for (int inner = 0; inner < 10 && ok; ++inner) {
      const Vertex u(p, g.vertices[pick(rng)]);
      const Vertex v(p, g.vertices[pick(rng)]);
      if (inner_product(apply_permutation(f, u), apply_permutation(f, v)) !=
          inner_product(u, v)) {
        ok = false;
      }
    }
  }
  run.record_bool("automorphism_contract", p, ok,
                  "f(x)=y, involution, inner products preserved");
}

}  // namespace

const CheckRecord* VerifyResult::first_failure() const {
  for (const CheckRecord& rec : records) {
    if (!rec.pass) return &rec;
  }
  return nullptr;
}

VerifyResult run_verification(const VerifyOptions& options) {
  if (options.d_max < 2) throw ParamError("run_verification: d_max must be >= 2");
  VerifyResult result;
  Runner run(result);
  std::mt19937_64 rng(20240915);

  for (int d = 2; d <= options.d_max; ++d) {
    for (int k = 1; 2 * k <= d; ++k) {
      const GraphParams p(d, k);
      if (vertex_count(p) > 4096) continue;  // oracle edge-building cap
      const SmallGraph g = oracle::build_small_graph(p);

      check_counts(run, p, g, options.inject_fault);
      check_distances(run, p, g);
      if (d <= 8) check_distance_regularity(run, p, g);
      if (g.size() <= kDefaultMatrixCap) check_spectrum(run, p);
      if (g.size() <= 24) {
        check_expansion(run, p, g);
      } else if (g.size() <= kDefaultMatrixCap) {
        check_sweep_only(run, p, g);
      }
      if (g.size() <= 128) check_clique(run, p, g);
      check_connectivity(run, p, g);
      check_decomposition(run, p, g);
      check_complement(run, p, g);
      check_automorphism(run, p, g, rng);
    }
  }
  return result;
}

}  // namespace hypersimplex
