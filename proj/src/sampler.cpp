#include "hypersimplex/sampler.hpp"

#include <algorithm>
#include <bit>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>

#include "hypersimplex/core_graph.hpp"
#include "hypersimplex/spectral.hpp"

namespace hypersimplex {

namespace {

constexpr std::uint64_t kRejectionDrawCap = 1'000'000;

// Unbiased uniform draw from {0..n-1}: Lemire multiply-shift with the exact
// rejection step. std::uniform_int_distribution's mapping is
// implementation-defined; this one is fixed, so seeded streams are portable.
std::uint32_t bounded_draw(std::mt19937_64& rng, std::uint32_t n) {
  unsigned __int128 m = static_cast<unsigned __int128>(rng()) * n;
  auto low = static_cast<std::uint64_t>(m);
  if (low < n) {
    const std::uint64_t threshold = (0 - std::uint64_t{n}) % n;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(rng()) * n;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint32_t>(m >> 64);
}

// Index (0-based) of the n-th set bit of mask.
int nth_set_bit(std::uint64_t mask, int n) {
  for (int i = 0; i < n; ++i) mask &= mask - 1;
  return std::countr_zero(mask);
}

}  // namespace

void WalkState::reset_position(const Vertex& v) {
  if (!(v.params() == params_)) {
    throw ParamError("WalkState::reset_position: vertex belongs to " + v.params().name() +
                     ", walk is on " + params_.name());
  }
  bits_ = v.bits();
}

void walk_step(WalkState& state, StepRule rule, bool lazy) {
  const GraphParams& p = state.params_;

  if (lazy) {
    if ((state.rng_() & 1) == 0) {  // fair coin: stay put
      ++state.steps_taken_;
      return;
    }
  }

  std::uint64_t bits = state.bits_;
  if (rule == StepRule::kRejectionPair) {
    const auto dim = static_cast<std::uint32_t>(p.d);
    for (std::uint64_t draw = 0;; ++draw) {
      if (draw >= kRejectionDrawCap) {
        throw SamplerError("walk_step: rejection loop exceeded " +
                           std::to_string(kRejectionDrawCap) + " draws");
      }
      const std::uint64_t rb = std::uint64_t{1} << (p.d - 1 - static_cast<int>(bounded_draw(state.rng_, dim)));
      const std::uint64_t sb = std::uint64_t{1} << (p.d - 1 - static_cast<int>(bounded_draw(state.rng_, dim)));
      const bool xr = (bits & rb) != 0;
      const bool xs = (bits & sb) != 0;
      if (xr != xs) {  // x_r + x_s = 1: swap the one and the zero
        bits ^= rb | sb;
        break;
      }
      ++state.rejections_;
    }
  } else {
    const std::uint64_t clear = ~bits & p.coordinate_mask();
    const int drop = nth_set_bit(bits, static_cast<int>(bounded_draw(state.rng_, static_cast<std::uint32_t>(p.k))));
    const int add = nth_set_bit(clear, static_cast<int>(bounded_draw(state.rng_, static_cast<std::uint32_t>(p.d - p.k))));
    bits ^= (std::uint64_t{1} << drop) | (std::uint64_t{1} << add);
  }

  state.bits_ = bits;
  ++state.steps_taken_;
}

std::uint64_t derive_stream_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 on base + index * odd gamma.
  std::uint64_t z = base + index * 0x9E3779B97F4A7C15ull + 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Vertex sample_subset(const WalkConfig& config, std::optional<Vertex> start) {
  const Vertex origin = start.value_or(Vertex::canonical_start(config.params));
  if (!(origin.params() == config.params)) {
    throw ParamError("sample_subset: start vertex belongs to " + origin.params().name() +
                     ", config is for " + config.params.name());
  }
  WalkState state(origin, config.seed);
  for (std::uint64_t i = 0; i < config.steps; ++i) {
    walk_step(state, config.rule, config.lazy);
  }
  return state.current();
}

std::vector<Vertex> sample_subsets(const WalkConfig& config, std::uint64_t n,
                                   std::optional<Vertex> start) {
  std::vector<Vertex> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    WalkConfig chain = config;
    chain.seed = derive_stream_seed(config.seed, i);
    out.push_back(sample_subset(chain, start));
  }
  return out;
}

std::vector<int> subset_of(const Vertex& v) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(v.params().k));
  for (int i = 1; i <= v.params().d; ++i) {
    if (v.coordinate(i)) out.push_back(i);
  }
  return out;
}

Vertex vertex_of(const GraphParams& p, const std::vector<int>& subset) {
  std::uint64_t bits = 0;
  for (int i : subset) {
    const std::uint64_t bit = p.coordinate_bit(i);
    if (bits & bit) {
      throw ParamError("vertex_of: duplicate index " + std::to_string(i));
    }
    bits |= bit;
  }
  return Vertex(p, bits);  // popcount check enforces |subset| = k
}

std::uint64_t default_steps(const GraphParams& p, bool lazy, double epsilon) {
  if (epsilon <= 0.0 || epsilon >= 1.0) {
    throw ParamError("default_steps: epsilon must be in (0,1)");
  }
  const double gap = spectral_gap(p, lazy);
  if (gap <= 0.0) {
    throw ParamError("default_steps " + p.name() +
                     ": the non-lazy walk has zero spectral gap (periodic); use the lazy walk");
  }
  const double steps = std::ceil(std::log(static_cast<double>(vertex_count(p)) / epsilon) / gap);
  return static_cast<std::uint64_t>(steps);
}

std::vector<double> tv_evolution(const GraphParams& p, const Vertex& start,
                                 std::size_t max_t, bool lazy, std::size_t cap) {
  if (!(start.params() == p)) {
    throw ParamError("tv_evolution: start vertex belongs to " + start.params().name());
  }
  const std::uint64_t n64 = vertex_count(p);
  if (n64 > cap) {
    throw CapError("tv_evolution " + p.name() + ": C(d,k) = " + std::to_string(n64) +
                   " exceeds the cap " + std::to_string(cap));
  }
  const std::size_t n = static_cast<std::size_t>(n64);
  const std::vector<Vertex> vertices = all_vertices(p);

  std::vector<std::vector<std::uint32_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const Vertex& w : neighbors(vertices[i])) {
      adj[i].push_back(static_cast<std::uint32_t>(vertex_rank(w)));
    }
  }

  const double r = static_cast<double>(degree(p));
  const double uniform = 1.0 / static_cast<double>(n);
  std::vector<double> dist(n, 0.0), next(n, 0.0);
  dist[static_cast<std::size_t>(vertex_rank(start))] = 1.0;

  std::vector<double> tv;
  tv.reserve(max_t + 1);
  for (std::size_t t = 0;; ++t) {
    double mass = 0.0, distance = 0.0;
    for (double q : dist) mass += q;
    if (std::abs(mass - 1.0) > 1e-12) {
      throw std::logic_error("tv_evolution: probability mass drifted to " + std::to_string(mass));
    }
    for (double q : dist) distance += std::abs(q - uniform);
    tv.push_back(distance / 2.0);
    if (t == max_t) break;

    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double share = dist[i] / r;
      for (std::uint32_t w : adj[i]) next[w] += share;
    }
    if (lazy) {
      for (std::size_t i = 0; i < n; ++i) next[i] = 0.5 * dist[i] + 0.5 * next[i];
    }
    dist.swap(next);
  }
  return tv;
}

std::uint64_t vertex_rank(const Vertex& v) {
  // Ascending bit patterns order the supports colexicographically.
  std::uint64_t rank = 0;
  int seen = 0;
  std::uint64_t bits = v.bits();
  while (bits != 0) {
    const int pos = std::countr_zero(bits);
    ++seen;
    rank += binomial(pos, seen);
    bits &= bits - 1;
  }
  return rank;
}

UniformityReport uniformity_test(const std::vector<Vertex>& samples, double significance) {
  if (samples.empty()) throw ParamError("uniformity_test: no samples");
  if (significance <= 0.0 || significance >= 1.0) {
    throw ParamError("uniformity_test: significance must be in (0,1)");
  }
  const GraphParams p = samples.front().params();
  const std::uint64_t cells = vertex_count(p);
  const std::uint64_t n = samples.size();
  const double expected = static_cast<double>(n) / static_cast<double>(cells);
  if (expected < 5.0) {
    throw ParamError("uniformity_test " + p.name() + ": expected count per cell is " +
                     std::to_string(expected) + " < 5; need at least " +
                     std::to_string(5 * cells) + " samples");
  }

  std::vector<std::uint64_t> counts(static_cast<std::size_t>(cells), 0);
  for (const Vertex& s : samples) {
    if (!(s.params() == p)) {
      throw ParamError("uniformity_test: samples mix " + p.name() + " and " +
                       s.params().name());
    }
    ++counts[static_cast<std::size_t>(vertex_rank(s))];
  }

  double statistic = 0.0;
  for (std::uint64_t c : counts) {
    const double diff = static_cast<double>(c) - expected;
    statistic += diff * diff / expected;
  }

  UniformityReport report;
  report.cells = cells;
  report.sample_count = n;
  report.expected_per_cell = expected;
  report.statistic = statistic;
  report.degrees_of_freedom = cells - 1;
  boost::math::chi_squared_distribution<double> dist(static_cast<double>(cells - 1));
  report.p_value = boost::math::cdf(boost::math::complement(dist, statistic));
  report.significance = significance;
  report.pass = report.p_value > significance;
  return report;
}

}  // namespace hypersimplex
