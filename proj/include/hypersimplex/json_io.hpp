// JSON views of the report types (nlohmann/json, alphabetical key order, so
// every document is byte-stable for golden files).
#pragma once

#include <nlohmann/json.hpp>

#include "hypersimplex/sampler.hpp"
#include "hypersimplex/spectral.hpp"
#include "hypersimplex/structure.hpp"
#include "hypersimplex/verify.hpp"

namespace hypersimplex {

inline nlohmann::json spectrum_report_json(const Spectrum& s, const ExpansionBounds& b) {
  nlohmann::json entries = nlohmann::json::array();
  for (const SpectrumEntry& e : s.entries) {
    entries.push_back({{"j", e.j}, {"eigenvalue", e.eigenvalue}, {"multiplicity", e.multiplicity}});
  }
  return nlohmann::json{{"d", s.params.d},    {"k", s.params.k},    {"entries", entries},
                        {"lower", b.lower()}, {"upper", b.upper()}, {"gap", b.gap}};
}

inline nlohmann::json to_json(const UniformityReport& r) {
  return nlohmann::json{{"cells", r.cells},
                        {"samples", r.sample_count},
                        {"expected_per_cell", r.expected_per_cell},
                        {"statistic", r.statistic},
                        {"degrees_of_freedom", r.degrees_of_freedom},
                        {"p_value", r.p_value},
                        {"significance", r.significance},
                        {"pass", r.pass}};
}

inline nlohmann::json to_json(const CheckRecord& rec) {
  return nlohmann::json{{"check", rec.check},       {"d", rec.d},
                        {"k", rec.k},               {"expected", rec.expected},
                        {"actual", rec.actual},     {"pass", rec.pass}};
}

inline nlohmann::json to_json(const DecompositionNode& node) {
  nlohmann::json j{{"d", node.d},
                   {"k", node.k},
                   {"vertices", node.vertices},
                   {"edges", node.edges}};
  if (node.leaf) {
    j["leaf"] = node.leaf_kind;
  } else {
    j["pivot"] = node.pivot;
    j["linking_edge_count"] = node.linking_edges;
    j["children"] = nlohmann::json::array({to_json(*node.ones_child), to_json(*node.zeros_child)});
  }
  return j;
}

}  // namespace hypersimplex
