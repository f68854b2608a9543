#include "hypersimplex/spectral.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdlib>

#include "hypersimplex/core_graph.hpp"

namespace hypersimplex {

Spectrum closed_form_spectrum(const GraphParams& p) {
  require_half_regime(p, "closed_form_spectrum");
  Spectrum spectrum{p, {}};
  spectrum.entries.reserve(static_cast<std::size_t>(p.k) + 1);
  for (int j = 0; j <= p.k; ++j) {
    const std::int64_t eigenvalue =
        static_cast<std::int64_t>(p.k - j) * (p.d - p.k - j) - j;
    const std::uint64_t multiplicity = binomial(p.d, j) - binomial(p.d, j - 1);
    spectrum.entries.push_back({j, eigenvalue, multiplicity});
  }
  return spectrum;
}

AdjacencyMatrix adjacency_matrix(const GraphParams& p, std::size_t cap) {
  const std::uint64_t n = vertex_count(p);
  if (n > cap) {
    throw CapError("adjacency_matrix " + p.name() + ": C(d,k) = " + std::to_string(n) +
                   " exceeds the matrix cap " + std::to_string(cap));
  }
  const std::vector<Vertex> vertices = all_vertices(p);
  AdjacencyMatrix m;
  m.n = static_cast<std::size_t>(n);
  m.values.assign(m.n * m.n, 0);
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = i + 1; j < m.n; ++j) {
      if (is_adjacent(vertices[i], vertices[j])) {
        m.values[i * m.n + j] = 1;
        m.values[j * m.n + i] = 1;
      }
    }
  }
  return m;
}

SpectrumVerification verify_spectrum(const GraphParams& p, double tol, std::size_t cap) {
  const Spectrum expected = closed_form_spectrum(p);
  const AdjacencyMatrix adj = adjacency_matrix(p, cap);

  Eigen::MatrixXd a(static_cast<Eigen::Index>(adj.n), static_cast<Eigen::Index>(adj.n));
  for (std::size_t i = 0; i < adj.n; ++i) {
    for (std::size_t j = 0; j < adj.n; ++j) {
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = adj.at(i, j);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd numeric = solver.eigenvalues();  // ascending

  SpectrumVerification report;
  report.tolerance = tol;

  // Cluster the sorted numeric eigenvalues with gap threshold 10*tol; the
  // closed-form values are integers at least 1 apart.
  std::vector<std::pair<std::size_t, std::size_t>> clusters;  // [begin, end)
  std::size_t begin = 0;
  for (std::size_t i = 1; i <= static_cast<std::size_t>(numeric.size()); ++i) {
    if (i == static_cast<std::size_t>(numeric.size()) ||
        numeric(static_cast<Eigen::Index>(i)) - numeric(static_cast<Eigen::Index>(i - 1)) >
            10 * tol) {
      clusters.emplace_back(begin, i);
      begin = i;
    }
  }

  if (clusters.size() != expected.entries.size()) {
    report.detail = "found " + std::to_string(clusters.size()) +
                    " eigenvalue clusters, closed form has " +
                    std::to_string(expected.entries.size());
    return report;
  }

  // Closed form descends in j; numeric ascends, so walk the clusters backwards.
  bool ok = true;
  for (std::size_t e = 0; e < expected.entries.size(); ++e) {
    const SpectrumEntry& entry = expected.entries[e];
    const auto [lo, hi] = clusters[clusters.size() - 1 - e];
    double max_dev = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
      max_dev = std::max(max_dev,
                         std::abs(numeric(static_cast<Eigen::Index>(i)) -
                                  static_cast<double>(entry.eigenvalue)));
    }
    report.entries.push_back({entry.j, entry.eigenvalue, entry.multiplicity, hi - lo, max_dev});
    if (hi - lo != entry.multiplicity || max_dev > tol) {
      ok = false;
      if (report.detail.empty()) {
        report.detail = "eigenvalue " + std::to_string(entry.eigenvalue) + " (j=" +
                        std::to_string(entry.j) + "): expected multiplicity " +
                        std::to_string(entry.multiplicity) + ", observed " +
                        std::to_string(hi - lo) + ", max deviation " +
                        std::to_string(max_dev);
      }
    }
  }
  report.pass = ok;
  return report;
}

double ExpansionBounds::upper() const {
  return std::sqrt(static_cast<double>(upper_squared));
}

ExpansionBounds cheeger_bounds(const GraphParams& p) {
  require_half_regime(p, "cheeger_bounds");
  const std::uint64_t r = degree(p);
  const std::uint64_t gap = static_cast<std::uint64_t>(p.d);  // r - l1 = d
  return ExpansionBounds{r, gap, gap, 2, 2 * r * gap};
}

double spectral_gap(const GraphParams& p, bool lazy) {
  const Spectrum s = closed_form_spectrum(p);
  const double r = static_cast<double>(s.top());
  if (lazy) {
    return (1.0 - static_cast<double>(s.second()) / r) / 2.0;
  }
  const double worst = std::max(std::llabs(s.second()), std::llabs(s.smallest()));
  return 1.0 - worst / r;
}

}  // namespace hypersimplex
