// Python bindings for the hypersimplex graph library.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypersimplex/core_graph.hpp"
#include "hypersimplex/oracle.hpp"
#include "hypersimplex/sampler.hpp"
#include "hypersimplex/spectral.hpp"
#include "hypersimplex/structure.hpp"
#include "hypersimplex/verify.hpp"

namespace py = pybind11;
using namespace hypersimplex;

namespace {

StepRule parse_rule(const std::string& rule) {
  if (rule == "rejection-pair") return StepRule::kRejectionPair;
  if (rule == "direct-swap") return StepRule::kDirectSwap;
  throw ParamError("rule must be 'rejection-pair' or 'direct-swap', got '" + rule + "'");
}

py::dict node_to_dict(const DecompositionNode& node) {
  py::dict d;
  d["d"] = node.d;
  d["k"] = node.k;
  d["vertices"] = node.vertices;
  d["edges"] = node.edges;
  if (node.leaf) {
    d["leaf"] = node.leaf_kind;
  } else {
    d["pivot"] = node.pivot;
    d["linking_edge_count"] = node.linking_edges;
    d["children"] = py::make_tuple(node_to_dict(*node.ones_child), node_to_dict(*node.zeros_child));
  }
  return d;
}

py::dict record_to_dict(const CheckRecord& rec) {
  py::dict d;
  d["check"] = rec.check;
  d["d"] = rec.d;
  d["k"] = rec.k;
  d["expected"] = rec.expected;
  d["actual"] = rec.actual;
  d["pass"] = rec.pass;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hypersimplex graph toolkit: closed-form structure of G(d,k), "
            "spectra, brute-force oracles, and random k-subset sampling.";

  py::register_exception<ParamError>(m, "ParamError", PyExc_ValueError);
  py::register_exception<RegimeError>(m, "RegimeError", PyExc_ValueError);
  py::register_exception<OverflowError>(m, "OverflowError", PyExc_OverflowError);
  py::register_exception<CapError>(m, "CapError", PyExc_RuntimeError);
  py::register_exception<SamplerError>(m, "SamplerError", PyExc_RuntimeError);

  py::class_<GraphParams>(m, "GraphParams")
      .def(py::init<int, int>(), py::arg("d"), py::arg("k"))
      .def_readonly("d", &GraphParams::d)
      .def_readonly("k", &GraphParams::k)
      .def("in_half_regime", &GraphParams::in_half_regime)
      .def("complement", &GraphParams::complement)
      .def("__repr__", &GraphParams::name)
      .def("__eq__", [](const GraphParams& a, const GraphParams& b) { return a == b; });

  py::class_<Vertex>(m, "Vertex")
      .def(py::init(&Vertex::parse), py::arg("params"), py::arg("text"))
      .def_static("canonical_start", &Vertex::canonical_start)
      .def_property_readonly("params", &Vertex::params)
      .def_property_readonly("bits", &Vertex::bits)
      .def("support", &subset_of, "1-based indices of the one coordinates")
      .def("__str__", &Vertex::to_string)
      .def("__repr__", &Vertex::to_string)
      .def("__eq__", [](const Vertex& a, const Vertex& b) { return a == b; })
      .def("__hash__", [](const Vertex& v) { return v.bits(); });

  py::class_<IndexPermutation>(m, "IndexPermutation")
      .def(py::init<std::vector<int>>(), py::arg("targets"))
      .def_property_readonly("targets", &IndexPermutation::targets)
      .def("is_identity", &IndexPermutation::is_identity)
      .def("is_involution", &IndexPermutation::is_involution);

  // Closed-form structure.
  m.def("vertex_count", &vertex_count);
  m.def("degree", &degree);
  m.def("edge_count", &edge_count);
  m.def("all_vertices", &all_vertices, py::arg("params"), py::arg("cap") = 1u << 20);
  m.def("inner_product", &inner_product);
  m.def("is_adjacent", &is_adjacent);
  m.def("neighbors", &neighbors);
  m.def("distance", &distance);
  m.def("diameter", &diameter);
  m.def("transitive_automorphism", &transitive_automorphism,
        "Adjacency-preserving involution mapping x to y");
  m.def("apply_permutation", &apply_permutation);
  m.def(
      "complement_map",
      [](const Vertex& v) { return complement_params(v.params()).map(v); },
      "Image of a vertex under the isomorphism onto G(d, d-k)");

  // Spectrum and expansion bounds.
  m.def("spectrum", [](const GraphParams& p) {
    std::vector<std::tuple<int, std::int64_t, std::uint64_t>> out;
    for (const SpectrumEntry& e : closed_form_spectrum(p).entries) {
      out.emplace_back(e.j, e.eigenvalue, e.multiplicity);
    }
    return out;
  }, "List of (j, eigenvalue, multiplicity) triples");

  py::class_<ExpansionBounds>(m, "ExpansionBounds")
      .def_readonly("degree", &ExpansionBounds::degree)
      .def_readonly("gap", &ExpansionBounds::gap)
      .def_readonly("upper_squared", &ExpansionBounds::upper_squared)
      .def_property_readonly("lower", &ExpansionBounds::lower)
      .def_property_readonly("upper", &ExpansionBounds::upper);
  m.def("cheeger_bounds", &cheeger_bounds);
  m.def("spectral_gap", &spectral_gap, py::arg("params"), py::arg("lazy") = false);

  m.def("adjacency_matrix", [](const GraphParams& p, std::size_t cap) {
    const AdjacencyMatrix a = adjacency_matrix(p, cap);
    std::vector<std::vector<int>> rows(a.n, std::vector<int>(a.n));
    for (std::size_t i = 0; i < a.n; ++i) {
      for (std::size_t j = 0; j < a.n; ++j) rows[i][j] = a.at(i, j);
    }
    return rows;
  }, py::arg("params"), py::arg("cap") = kDefaultMatrixCap);

  m.def("verify_spectrum", [](const GraphParams& p, double tol) {
    const SpectrumVerification v = verify_spectrum(p, tol);
    double max_dev = 0.0;
    for (const auto& e : v.entries) max_dev = std::max(max_dev, e.max_deviation);
    py::dict d;
    d["pass"] = v.pass;
    d["tolerance"] = v.tolerance;
    d["max_deviation"] = max_dev;
    d["detail"] = v.detail;
    return d;
  }, py::arg("params"), py::arg("tol") = 1e-8);

  // Cliques and decomposition.
  m.def("clique_number", &clique_number);
  m.def("canonical_clique", &canonical_clique);
  m.def("linking_edge_count", &linking_edge_count);
  m.def("decompose_tree", [](const GraphParams& p, int depth) {
    return node_to_dict(recursive_decomposition(p, depth));
  }, py::arg("params"), py::arg("depth") = 1);

  // Sampling.
  m.def(
      "sample_subsets",
      [](const GraphParams& p, std::uint64_t n, std::optional<std::uint64_t> steps,
         std::uint64_t seed, bool lazy, const std::string& rule,
         std::optional<Vertex> start) {
        WalkConfig config{p, seed, 0, lazy, parse_rule(rule)};
        config.steps = steps ? *steps : default_steps(p, lazy);
        std::vector<std::vector<int>> out;
        for (const Vertex& v : sample_subsets(config, n, start)) {
          out.push_back(subset_of(v));
        }
        return out;
      },
      py::arg("params"), py::arg("n") = 1, py::arg("steps") = std::nullopt,
      py::arg("seed") = 0, py::arg("lazy") = false, py::arg("rule") = "rejection-pair",
      py::arg("start") = std::nullopt,
      "Uniform random k-subsets of {1..d} as sorted index lists");
  m.def("subset_of", &subset_of);
  m.def("vertex_of", &vertex_of);
  m.def("default_steps", &default_steps, py::arg("params"), py::arg("lazy") = false,
        py::arg("epsilon") = 0.01);
  m.def("tv_evolution", [](const GraphParams& p, std::size_t max_t, bool lazy,
                           std::optional<Vertex> start) {
    return tv_evolution(p, start.value_or(Vertex::canonical_start(p)), max_t, lazy);
  }, py::arg("params"), py::arg("max_t"), py::arg("lazy") = false,
        py::arg("start") = std::nullopt);

  py::class_<UniformityReport>(m, "UniformityReport")
      .def_readonly("cells", &UniformityReport::cells)
      .def_readonly("sample_count", &UniformityReport::sample_count)
      .def_readonly("statistic", &UniformityReport::statistic)
      .def_readonly("degrees_of_freedom", &UniformityReport::degrees_of_freedom)
      .def_readonly("p_value", &UniformityReport::p_value)
      .def_readonly("significance", &UniformityReport::significance)
      .def_readonly("pass_", &UniformityReport::pass)
      .def("__bool__", [](const UniformityReport& r) { return r.pass; });
  m.def("uniformity_test", [](const GraphParams& p, const std::vector<std::vector<int>>& subsets,
                              double significance) {
    std::vector<Vertex> samples;
    samples.reserve(subsets.size());
    for (const auto& s : subsets) samples.push_back(vertex_of(p, s));
    return uniformity_test(samples, significance);
  }, py::arg("params"), py::arg("subsets"), py::arg("significance") = 0.001);

  // Brute-force oracle surface.
  py::module_ oracle = m.def_submodule("oracle", "Brute-force reference implementations");
  oracle.def("graph_size", [](const GraphParams& p) {
    const auto g = hypersimplex::oracle::build_small_graph(p);
    return py::make_tuple(g.vertices.size(), g.edges.size());
  }, "Vertex and edge counts of the enumerated graph");
  oracle.def("exact_expansion", [](const GraphParams& p) {
    const auto report = hypersimplex::oracle::exact_expansion(
        hypersimplex::oracle::build_small_graph(p));
    py::dict d;
    d["numerator"] = report.value.num;
    d["denominator"] = report.value.den;
    d["value"] = report.value.value();
    d["witness"] = report.witness;
    d["sets_examined"] = report.sets_examined;
    return d;
  });
  oracle.def("max_clique", [](const GraphParams& p) {
    return hypersimplex::oracle::max_clique(hypersimplex::oracle::build_small_graph(p));
  });
  oracle.def("hamilton_connected", [](const GraphParams& p) {
    return hypersimplex::oracle::hamilton_connected_check(
        hypersimplex::oracle::build_small_graph(p));
  });
  oracle.def("vertex_connectivity_at_least", [](const GraphParams& p, std::size_t t) {
    return hypersimplex::oracle::vertex_connectivity_at_least(
        hypersimplex::oracle::build_small_graph(p), t);
  });

  // Full verification suite.
  m.def("verify", [](int d_max) {
    const VerifyResult result = run_verification({d_max, false});
    py::list records;
    for (const CheckRecord& rec : result.records) records.append(record_to_dict(rec));
    py::dict d;
    d["passed"] = result.passed;
    d["failed"] = result.failed;
    d["all_pass"] = result.all_pass();
    d["checks"] = records;
    return d;
  }, py::arg("d_max") = 9);
}
