// Random-walk generator of uniform k-subsets of {1..d}, plus mixing
// diagnostics. One walk state is owned by exactly one chain; parallel
// chains take independent streams via derive_stream_seed.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hypersimplex/vertex.hpp"

namespace hypersimplex {

enum class StepRule {
  kRejectionPair,  // draw r,s in {1..d} until x_r + x_s = 1, then swap
  kDirectSwap,     // draw one set and one clear coordinate, swap
};

struct WalkConfig {
  GraphParams params;
  std::uint64_t seed = 0;
  std::uint64_t steps = 0;
  bool lazy = false;
  StepRule rule = StepRule::kRejectionPair;
};

class WalkState {
 public:
  WalkState(const Vertex& start, std::uint64_t seed)
      : params_(start.params()), bits_(start.bits()), rng_(seed) {}

  Vertex current() const { return Vertex(params_, bits_); }
  const GraphParams& params() const { return params_; }
  std::uint64_t steps_taken() const { return steps_taken_; }
  std::uint64_t rejections() const { return rejections_; }
  std::mt19937_64& rng() { return rng_; }

  // Teleports the walker without touching the RNG stream; for repeated
  // single-step experiments.
  void reset_position(const Vertex& v);

 private:
  friend void walk_step(WalkState&, StepRule, bool);

  GraphParams params_;
  std::uint64_t bits_;  // stays a valid vertex: every step swaps a 1 and a 0
  std::uint64_t steps_taken_ = 0;
  std::uint64_t rejections_ = 0;
  std::mt19937_64 rng_;
};

// Advances the walk by one step. Every accepted move goes to a uniformly
// random neighbor; with `lazy`, a fair coin first decides whether to move at
// all. Throws SamplerError if the rejection loop exceeds 10^6 draws.
void walk_step(WalkState& state, StepRule rule, bool lazy = false);

// splitmix64 of (base, index): one independent stream per chain.
std::uint64_t derive_stream_seed(std::uint64_t base, std::uint64_t index);

// Runs config.steps steps from `start` (canonical vertex if absent) and
// returns the final vertex. Deterministic under the seed.
Vertex sample_subset(const WalkConfig& config, std::optional<Vertex> start = std::nullopt);

// n independent chains on streams derive_stream_seed(seed, 0..n-1).
std::vector<Vertex> sample_subsets(const WalkConfig& config, std::uint64_t n,
                                   std::optional<Vertex> start = std::nullopt);

// {i : x_i = 1}, ascending 1-based coordinates.
std::vector<int> subset_of(const Vertex& v);

// Inverse of subset_of; rejects duplicates, out-of-range indices and wrong size.
Vertex vertex_of(const GraphParams& p, const std::vector<int>& subset);

// Walk length heuristic ceil(ln(C(d,k)/epsilon) / gap) from the spectral gap
// of the configured walk. Fails if that gap is zero (periodic walk); the
// message names the lazy walk as the remedy.
std::uint64_t default_steps(const GraphParams& p, bool lazy, double epsilon = 0.01);

// Exact distribution evolution of the walk from a start delta: total
// variation distance to uniform for t = 0..max_t.
std::vector<double> tv_evolution(const GraphParams& p, const Vertex& start,
                                 std::size_t max_t, bool lazy, std::size_t cap = 512);

struct UniformityReport {
  std::uint64_t cells = 0;  // C(d,k)
  std::uint64_t sample_count = 0;
  double expected_per_cell = 0.0;
  double statistic = 0.0;
  std::uint64_t degrees_of_freedom = 0;
  double p_value = 0.0;
  double significance = 0.0;
  bool pass = false;
};

// Chi-square goodness of fit against the uniform distribution over all
// C(d,k) cells. Requires expected count >= 5 per cell; otherwise throws
// ParamError with the required sample size.
UniformityReport uniformity_test(const std::vector<Vertex>& samples, double significance);

// Position of v in the canonical (ascending bit pattern) vertex order.
std::uint64_t vertex_rank(const Vertex& v);

}  // namespace hypersimplex
