#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>

#include "hypersimplex/oracle.hpp"

using namespace hypersimplex;
using oracle::Rational;
using oracle::SmallGraph;

TEST_CASE("small graph construction") {
  const SmallGraph octa = oracle::build_small_graph(GraphParams(4, 2));
  CHECK(octa.vertices.size() == 6);
  CHECK(octa.edges.size() == 12);

  const SmallGraph petersen_complement = oracle::build_small_graph(GraphParams(5, 2));
  CHECK(petersen_complement.vertices.size() == 10);
  CHECK(petersen_complement.edges.size() == 30);

  const SmallGraph g63 = oracle::build_small_graph(GraphParams(6, 3));
  CHECK(g63.vertices.size() == 20);
  CHECK(g63.edges.size() == 90);
  for (const auto& row : g63.adjacency) CHECK(row.size() == 9);

  CHECK(std::is_sorted(octa.vertices.begin(), octa.vertices.end()));
  CHECK_THROWS_AS(oracle::build_small_graph(GraphParams(15, 7)), CapError);
  CHECK_THROWS_AS(oracle::build_small_graph(GraphParams(6, 3), 10), CapError);
}

TEST_CASE("bfs distances") {
  const SmallGraph g = oracle::build_small_graph(GraphParams(6, 3));
  const std::size_t source = g.index_of(0b111000);
  const std::vector<int> dist = bfs_distances(g, source);
  CHECK(dist[source] == 0);
  CHECK(dist[g.index_of(0b000111)] == 3);  // disjoint supports

  // Full cross-check against k - x.y on G(7,3).
  const SmallGraph g73 = oracle::build_small_graph(GraphParams(7, 3));
  for (std::size_t s = 0; s < g73.size(); ++s) {
    const std::vector<int> d = bfs_distances(g73, s);
    for (std::size_t t = 0; t < g73.size(); ++t) {
      CHECK(d[t] == 3 - std::popcount(g73.vertices[s] & g73.vertices[t]));
    }
  }
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(4, 6) == Rational(2, 3));
  CHECK(Rational(2, 1) < Rational(7, 3));
  CHECK_FALSE(Rational(7, 3) < Rational(7, 3));
  CHECK(Rational(5, 2).to_string() == "5/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK_THROWS_AS(Rational(1, 0), ParamError);
}

TEST_CASE("exact expansion of the octahedron") {
  const SmallGraph g = oracle::build_small_graph(GraphParams(4, 2));
  const oracle::ExpansionReport report = oracle::exact_expansion(g);

  CHECK(report.value == Rational(2, 1));
  // Lexicographically-least witness is the first triangle face.
  CHECK(report.witness == std::vector<std::uint32_t>{0, 1, 2});
  for (std::size_t a = 0; a < report.witness.size(); ++a) {
    for (std::size_t b = a + 1; b < report.witness.size(); ++b) {
      CHECK(g.adjacent(report.witness[a], report.witness[b]));
    }
  }
  // Nonempty subsets of at most half the vertices: C(6,1)+C(6,2)+C(6,3).
  CHECK(report.sets_examined == 41);
}

TEST_CASE("exact expansion of complete graphs") {
  const SmallGraph k5 = oracle::build_small_graph(GraphParams(5, 1));
  const oracle::ExpansionReport report = oracle::exact_expansion(k5);
  CHECK(report.value == Rational(3, 1));
  CHECK(report.witness.size() == 2);

  // Singleton cut is always an upper bound: chi <= degree.
  CHECK(report.value < Rational(4 + 1, 1));
}

TEST_CASE("exact expansion cap") {
  const SmallGraph g = oracle::build_small_graph(GraphParams(8, 2));  // 28 vertices
  CHECK_THROWS_AS(oracle::exact_expansion(g), CapError);
}

TEST_CASE("sweep bound sandwiched between exact value and cheeger upper bound") {
  struct Case {
    int d, k;
    double upper;  // sqrt(2dk(d-k))
  };
  for (const Case c : {Case{4, 2, std::sqrt(32.0)}, Case{5, 2, std::sqrt(60.0)},
                       Case{6, 3, std::sqrt(108.0)}}) {
    const SmallGraph g = oracle::build_small_graph(GraphParams(c.d, c.k));
    const Rational sweep = oracle::sweep_expansion_upper_bound(g);
    const Rational exact = oracle::exact_expansion(g).value;
    CHECK_FALSE(sweep < exact);
    CHECK(sweep.value() <= c.upper + 1e-12);
  }
}

TEST_CASE("max clique") {
  CHECK(oracle::max_clique(oracle::build_small_graph(GraphParams(4, 2))) == 3);
  CHECK(oracle::max_clique(oracle::build_small_graph(GraphParams(6, 2))) == 5);
  for (int d = 4; d <= 7; ++d) {
    CHECK(oracle::max_clique(oracle::build_small_graph(GraphParams(d, 1))) ==
          static_cast<std::size_t>(d));
  }
  // C(8,4) = 70 fits the cap; the largest acceptance instance.
  CHECK(oracle::max_clique(oracle::build_small_graph(GraphParams(8, 4))) == 5);
}

TEST_CASE("hamilton connectivity") {
  CHECK(oracle::hamilton_connected_check(oracle::build_small_graph(GraphParams(4, 2))));
  CHECK(oracle::hamilton_connected_check(oracle::build_small_graph(GraphParams(5, 2))));
  CHECK(oracle::hamilton_connected_check(oracle::build_small_graph(GraphParams(4, 1))));
  CHECK_THROWS_AS(
      oracle::hamilton_connected_check(oracle::build_small_graph(GraphParams(6, 2))),
      CapError);
}

TEST_CASE("vertex connectivity via max-flow") {
  const SmallGraph octa = oracle::build_small_graph(GraphParams(4, 2));
  CHECK(oracle::vertex_connectivity_at_least(octa, 1));
  CHECK(oracle::vertex_connectivity_at_least(octa, 3));
  CHECK(oracle::vertex_connectivity_at_least(octa, 4));  // octahedron is 4-connected
  CHECK_FALSE(oracle::vertex_connectivity_at_least(octa, 5));

  const SmallGraph g52 = oracle::build_small_graph(GraphParams(5, 2));
  CHECK(oracle::vertex_connectivity_at_least(g52, 4));

  const SmallGraph k2 = oracle::build_small_graph(GraphParams(2, 1));
  CHECK(oracle::vertex_connectivity_at_least(k2, 1));
}
