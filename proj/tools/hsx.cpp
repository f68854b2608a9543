// hsx — command-line surface over the hypersimplex graph library:
// closed-form stats, spectra, decompositions, random k-subset sampling,
// and the full closed-form-vs-oracle verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource/cap error.
#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "hypersimplex/core_graph.hpp"
#include "hypersimplex/json_io.hpp"
#include "hypersimplex/oracle.hpp"
#include "hypersimplex/sampler.hpp"
#include "hypersimplex/spectral.hpp"
#include "hypersimplex/structure.hpp"
#include "hypersimplex/verify.hpp"

namespace hsx {

using namespace hypersimplex;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct OutputOptions {
  std::string format = "text";  // text | json | csv
  std::string path;             // empty = stdout
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--output", out.path, "Write output to FILE instead of stdout");
}

// Runs `body` with the selected output stream.
int with_output(const OutputOptions& out, const std::function<int(std::ostream&)>& body) {
  if (out.path.empty()) return body(std::cout);
  std::ofstream file(out.path);
  if (!file) {
    std::cerr << "error: cannot open output file " << out.path << "\n";
    return kExitUsage;
  }
  return body(file);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string join(const std::vector<int>& values, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(values[i]);
  }
  return s;
}

// ---------------------------------------------------------------- stats ----

int run_stats(const GraphParams& p, const OutputOptions& out) {
  const bool half = p.in_half_regime();
  const GraphParams eff = half ? p : p.complement();

  json j{{"d", p.d},
         {"k", p.k},
         {"vertices", vertex_count(p)},
         {"degree", degree(p)},
         {"edges", edge_count(p)},
         {"diameter", diameter(eff)},
         {"clique_number", clique_number(eff)},
         {"regime", half ? "1 <= k <= d/2" : "k > d/2 (reported via complement)"}};
  if (!half) j["isomorphic_to"] = eff.name();

  return with_output(out, [&](std::ostream& os) {
    if (out.format == "json") {
      os << dump(j);
    } else if (out.format == "csv") {
      os << "d,k,vertices,degree,edges,diameter,clique_number\n"
         << p.d << ',' << p.k << ',' << vertex_count(p) << ',' << degree(p) << ','
         << edge_count(p) << ',' << diameter(eff) << ',' << clique_number(eff) << "\n";
    } else {
      os << "graph: " << p.name() << "\n";
      if (!half) {
        os << "note: " << p.name() << " is isomorphic to " << eff.name()
           << " by coordinate complement; diameter and clique number are reported"
              " via the complement\n";
      }
      os << "vertices: " << vertex_count(p) << "\n"
         << "degree: " << degree(p) << "\n"
         << "edges: " << edge_count(p) << "\n"
         << "diameter: " << diameter(eff) << "\n"
         << "clique_number: " << clique_number(eff) << "\n"
         << "regime: " << j["regime"].get<std::string>() << "\n";
    }
    return kExitOk;
  });
}

// --------------------------------------------------------------- sample ----

struct SampleOptions {
  std::uint64_t n = 1;
  std::int64_t steps = -1;  // -1: use the default heuristic
  std::uint64_t seed = 0;
  bool lazy = false;
  std::string rule = "rejection-pair";
  std::string emit = "indices";  // indices | bits
  std::string start;             // 0/1 string; empty = canonical
};

int run_sample(const GraphParams& p, const SampleOptions& opt, const OutputOptions& out) {
  WalkConfig config{p, opt.seed, 0, opt.lazy,
                    opt.rule == "direct-swap" ? StepRule::kDirectSwap
                                              : StepRule::kRejectionPair};
  const bool defaulted = opt.steps < 0;
  config.steps = defaulted ? default_steps(p, opt.lazy)
                           : static_cast<std::uint64_t>(opt.steps);
  std::optional<Vertex> start;
  if (!opt.start.empty()) start = Vertex::parse(p, opt.start);

  const std::vector<Vertex> samples = sample_subsets(config, opt.n, start);

  return with_output(out, [&](std::ostream& os) {
    if (out.format == "json") {
      json arr = json::array();
      for (const Vertex& v : samples) {
        if (opt.emit == "bits") {
          arr.push_back(v.to_string());
        } else {
          arr.push_back(subset_of(v));
        }
      }
      os << dump(json{{"d", p.d},
                      {"k", p.k},
                      {"n", opt.n},
                      {"steps", config.steps},
                      {"steps_defaulted", defaulted},
                      {"seed", opt.seed},
                      {"rule", opt.rule},
                      {"lazy", opt.lazy},
                      {"samples", arr}});
    } else if (out.format == "csv") {
      os << "vertex,indices\n";
      for (const Vertex& v : samples) {
        os << v.to_string() << ',' << join(subset_of(v), " ") << "\n";
      }
    } else {
      os << "# " << p.name() << " n=" << opt.n << " steps=" << config.steps
         << (defaulted ? " (default: ceil(ln(C(d,k)/0.01)/gap))" : "")
         << " seed=" << opt.seed << " rule=" << opt.rule
         << " lazy=" << (opt.lazy ? "true" : "false")
         << " start=" << (opt.start.empty() ? "canonical" : opt.start) << "\n";
      for (const Vertex& v : samples) {
        os << (opt.emit == "bits" ? v.to_string() : join(subset_of(v), ",")) << "\n";
      }
    }
    return kExitOk;
  });
}

// ----------------------------------------------------------- uniformity ----

std::vector<Vertex> parse_samples(const GraphParams& p, std::istream& in) {
  std::vector<Vertex> samples;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const bool is_bits = static_cast<int>(line.size()) == p.d &&
                         line.find_first_not_of("01") == std::string::npos;
    if (is_bits) {
      samples.push_back(Vertex::parse(p, line));
      continue;
    }
    std::vector<int> indices;
    std::string token;
    std::istringstream ls(line);
    while (std::getline(ls, token, ',')) {
      if (!token.empty()) indices.push_back(std::stoi(token));
    }
    samples.push_back(vertex_of(p, indices));
  }
  return samples;
}

int run_uniformity(const GraphParams& p, double significance, const std::string& input,
                   const OutputOptions& out) {
  std::vector<Vertex> samples;
  if (input.empty()) {
    samples = parse_samples(p, std::cin);
  } else {
    std::ifstream file(input);
    if (!file) {
      std::cerr << "error: cannot open input file " << input << "\n";
      return kExitUsage;
    }
    samples = parse_samples(p, file);
  }
  const UniformityReport report = uniformity_test(samples, significance);

  const int code = report.pass ? kExitOk : kExitVerificationFailure;
  return std::max(code, with_output(out, [&](std::ostream& os) {
           if (out.format == "json") {
             os << dump(to_json(report));
           } else if (out.format == "csv") {
             os << "cells,samples,statistic,dof,p_value,significance,pass\n"
                << report.cells << ',' << report.sample_count << ',' << report.statistic
                << ',' << report.degrees_of_freedom << ',' << report.p_value << ','
                << report.significance << ',' << (report.pass ? "true" : "false") << "\n";
           } else {
             os << "cells: " << report.cells << "\n"
                << "samples: " << report.sample_count << "\n"
                << "expected_per_cell: " << report.expected_per_cell << "\n"
                << "statistic: " << report.statistic << "\n"
                << "degrees_of_freedom: " << report.degrees_of_freedom << "\n"
                << "p_value: " << report.p_value << "\n"
                << "significance: " << report.significance << "\n"
                << "result: " << (report.pass ? "pass" : "fail") << "\n";
           }
           return kExitOk;
         }));
}

// ------------------------------------------------------------- spectrum ----

int run_spectrum(const GraphParams& p, bool verify, double tol, std::size_t cap,
                 const OutputOptions& out) {
  const bool half = p.in_half_regime();
  const GraphParams eff = half ? p : p.complement();
  const Spectrum spectrum = closed_form_spectrum(eff);
  const ExpansionBounds bounds = cheeger_bounds(eff);

  std::optional<SpectrumVerification> verification;
  std::string cap_error;
  if (verify) {
    try {
      verification = verify_spectrum(eff, tol, cap);
    } catch (const CapError& e) {
      cap_error = e.what();
    }
  }

  const int code = !cap_error.empty() ? kExitResource
                   : (verification && !verification->pass) ? kExitVerificationFailure
                                                           : kExitOk;

  const int output_code = with_output(out, [&](std::ostream& os) {
    if (out.format == "json") {
      json j = spectrum_report_json(spectrum, bounds);
      if (!half) j["isomorphic_to"] = eff.name();
      if (verification) {
        double max_dev = 0.0;
        for (const auto& e : verification->entries) max_dev = std::max(max_dev, e.max_deviation);
        j["verification"] = json{{"pass", verification->pass},
                                 {"tolerance", verification->tolerance},
                                 {"max_deviation", max_dev},
                                 {"detail", verification->detail}};
      }
      if (!cap_error.empty()) j["verification_error"] = cap_error;
      os << dump(j);
    } else if (out.format == "csv") {
      os << "j,eigenvalue,multiplicity\n";
      for (const SpectrumEntry& e : spectrum.entries) {
        os << e.j << ',' << e.eigenvalue << ',' << e.multiplicity << "\n";
      }
    } else {
      os << "# spectrum of " << p.name();
      if (!half) os << " (via complement " << eff.name() << ")";
      os << "\nj eigenvalue multiplicity\n";
      for (const SpectrumEntry& e : spectrum.entries) {
        os << e.j << ' ' << e.eigenvalue << ' ' << e.multiplicity << "\n";
      }
      os << "cheeger bounds: " << bounds.lower() << " <= expansion <= " << bounds.upper()
         << " (gap " << bounds.gap << ", degree " << bounds.degree << ")\n";
      if (verification) {
        double max_dev = 0.0;
        for (const auto& e : verification->entries) max_dev = std::max(max_dev, e.max_deviation);
        if (verification->pass) {
          os << "verification: pass, max deviation " << max_dev << " < " << tol << "\n";
        } else {
          os << "verification: FAIL, " << verification->detail << "\n";
        }
      }
      if (!cap_error.empty()) os << "verification skipped: " << cap_error << "\n";
    }
    return kExitOk;
  });
  if (!cap_error.empty()) std::cerr << "error: " << cap_error << "\n";
  return std::max(code, output_code);
}

// ------------------------------------------------------------ decompose ----

bool node_identity_holds(const DecompositionNode& node) {
  if (node.leaf) return true;
  return node.edges ==
         node.ones_child->edges + node.zeros_child->edges + node.linking_edges;
}

void print_node_text(std::ostream& os, const DecompositionNode& node, int indent,
                     bool& all_ok) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  os << pad << "G(" << node.d << "," << node.k << ") vertices=" << node.vertices
     << " edges=" << node.edges;
  if (node.leaf) {
    os << " leaf=" << node.leaf_kind << "\n";
    return;
  }
  const bool ok = node_identity_holds(node);
  all_ok = all_ok && ok;
  os << " split pivot=" << node.pivot << " links=" << node.linking_edges << " identity: "
     << node.edges << " = " << node.ones_child->edges << " + " << node.zeros_child->edges
     << " + " << node.linking_edges << (ok ? " [ok]" : " [VIOLATED]") << "\n";
  print_node_text(os, *node.ones_child, indent + 1, all_ok);
  print_node_text(os, *node.zeros_child, indent + 1, all_ok);
}

void print_node_csv(std::ostream& os, const DecompositionNode& node, int id, int parent,
                    int& next_id) {
  os << id << ',' << parent << ',' << node.d << ',' << node.k << ',' << node.vertices << ','
     << node.edges << ',' << (node.leaf ? 0 : node.linking_edges) << ','
     << (node.leaf ? node.leaf_kind : "split") << "\n";
  if (!node.leaf) {
    const int ones_id = next_id++;
    print_node_csv(os, *node.ones_child, ones_id, id, next_id);
    const int zeros_id = next_id++;
    print_node_csv(os, *node.zeros_child, zeros_id, id, next_id);
  }
}

bool tree_identities_hold(const DecompositionNode& node) {
  if (node.leaf) return true;
  return node_identity_holds(node) && tree_identities_hold(*node.ones_child) &&
         tree_identities_hold(*node.zeros_child);
}

int run_decompose(const GraphParams& p, int depth, const OutputOptions& out) {
  const DecompositionNode tree = recursive_decomposition(p, depth);
  const bool ok = tree_identities_hold(tree);

  const int output_code = with_output(out, [&](std::ostream& os) {
    if (out.format == "json") {
      os << dump(to_json(tree));
    } else if (out.format == "csv") {
      os << "id,parent,d,k,vertices,edges,linking_edges,kind\n";
      int next_id = 1;
      print_node_csv(os, tree, 0, -1, next_id);
    } else {
      bool all_ok = true;
      print_node_text(os, tree, 0, all_ok);
      os << "edge-sum identity: " << (all_ok ? "holds at every node" : "VIOLATED") << "\n";
    }
    return kExitOk;
  });
  return std::max(output_code, ok ? kExitOk : kExitVerificationFailure);
}

// ------------------------------------------------------------ walk-diag ----

int run_walk_diag(const GraphParams& p, std::size_t max_t, bool lazy,
                  const std::string& start_text, const OutputOptions& out) {
  const Vertex start =
      start_text.empty() ? Vertex::canonical_start(p) : Vertex::parse(p, start_text);
  const std::vector<double> tv = tv_evolution(p, start, max_t, lazy);

  const Spectrum s = closed_form_spectrum(p.in_half_regime() ? p : p.complement());
  const bool slow_note = std::llabs(s.smallest()) >= s.second();

  return with_output(out, [&](std::ostream& os) {
    if (out.format == "json") {
      json rows = json::array();
      for (std::size_t t = 0; t < tv.size(); ++t) {
        rows.push_back({{"t", t}, {"tv", tv[t]}});
      }
      json j{{"d", p.d}, {"k", p.k}, {"lazy", lazy}, {"rows", rows}};
      if (slow_note && !lazy) {
        j["note"] = "|smallest eigenvalue| >= second eigenvalue; the non-lazy walk "
                    "converges at the slower of the two rates, consider --lazy";
      }
      os << dump(j);
    } else if (out.format == "csv") {
      os << "t,tv\n";
      for (std::size_t t = 0; t < tv.size(); ++t) os << t << ',' << tv[t] << "\n";
    } else {
      os << "# tv distance to uniform, " << p.name() << (lazy ? " lazy" : " non-lazy")
         << " walk\n";
      if (slow_note && !lazy) {
        os << "# note: |smallest eigenvalue| >= second eigenvalue; consider --lazy\n";
      }
      for (std::size_t t = 0; t < tv.size(); ++t) os << t << ' ' << tv[t] << "\n";
    }
    return kExitOk;
  });
}

// --------------------------------------------------------------- verify ----

int run_verify(int d_max, bool inject_fault, const OutputOptions& out) {
  const VerifyResult result = run_verification({d_max, inject_fault});

  const int output_code = with_output(out, [&](std::ostream& os) {
    if (out.format == "json") {
      json checks = json::array();
      for (const CheckRecord& rec : result.records) checks.push_back(to_json(rec));
      os << dump(json{{"d_max", d_max},
                      {"passed", result.passed},
                      {"failed", result.failed},
                      {"all_pass", result.all_pass()},
                      {"checks", checks}});
    } else if (out.format == "csv") {
      os << "check,d,k,expected,actual,pass\n";
      for (const CheckRecord& rec : result.records) {
        os << rec.check << ',' << rec.d << ',' << rec.k << ",\"" << rec.expected << "\",\""
           << rec.actual << "\"," << (rec.pass ? "true" : "false") << "\n";
      }
    } else {
      // Summary table per check name.
      std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> table;
      for (const CheckRecord& rec : result.records) {
        (rec.pass ? table[rec.check].first : table[rec.check].second) += 1;
      }
      os << "check                              pass  fail\n";
      for (const auto& [name, counts] : table) {
        os << name << std::string(name.size() < 34 ? 34 - name.size() : 1, ' ')
           << counts.first << "     " << counts.second << "\n";
      }
      os << "total: " << result.records.size() << " checks, " << result.passed
         << " passed, " << result.failed << " failed\n"
         << "result: " << (result.all_pass() ? "all checks passed" : "FAILURES") << "\n";
    }
    return kExitOk;
  });

  if (!result.all_pass()) {
    std::cerr << to_json(*result.first_failure()).dump() << "\n";
    return kExitVerificationFailure;
  }
  return output_code;
}

}  // namespace hsx

int main(int argc, char** argv) {
  using namespace hsx;

  CLI::App app{"hypersimplex graph toolkit: structure, spectra, and random k-subsets"};
  app.require_subcommand(1);

  int d = 0, k = 0;
  OutputOptions out;

  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--d", d, "Ambient dimension (number of coordinates)")->required();
    cmd->add_option("--k", k, "Number of ones per vertex")->required();
    add_output_flags(cmd, out);
  };

  std::function<int()> action;

  // stats
  {
    CLI::App* cmd = app.add_subcommand("stats", "Closed-form graph parameters");
    add_params(cmd);
    cmd->callback([&]() { action = [&]() { return run_stats(GraphParams(d, k), out); }; });
  }

  // sample
  {
    CLI::App* cmd = app.add_subcommand("sample", "Random k-subsets via the vertex walk");
    add_params(cmd);
    auto opt = std::make_shared<SampleOptions>();
    cmd->add_option("--n", opt->n, "Number of subsets to emit")->capture_default_str();
    cmd->add_option("--steps", opt->steps,
                    "Walk length per sample (default: spectral-gap heuristic)");
    cmd->add_option("--seed", opt->seed, "RNG seed")->capture_default_str();
    cmd->add_flag("--lazy", opt->lazy, "Half-self-loop walk");
    cmd->add_option("--rule", opt->rule, "Step rule")
        ->check(CLI::IsMember({"rejection-pair", "direct-swap"}))
        ->capture_default_str();
    cmd->add_option("--emit", opt->emit, "Line format")
        ->check(CLI::IsMember({"indices", "bits"}))
        ->capture_default_str();
    cmd->add_option("--start", opt->start, "Start vertex as a 0/1 string (default canonical)");
    cmd->callback([&, opt]() {
      action = [&, opt]() { return run_sample(GraphParams(d, k), *opt, out); };
    });
  }

  // uniformity
  {
    CLI::App* cmd = app.add_subcommand(
        "uniformity", "Chi-square test of sampled subsets against uniform (reads stdin)");
    add_params(cmd);
    auto significance = std::make_shared<double>(0.001);
    auto input = std::make_shared<std::string>();
    cmd->add_option("--significance", *significance, "Rejection threshold")
        ->capture_default_str();
    cmd->add_option("--input", *input, "Read samples from FILE instead of stdin");
    cmd->callback([&, significance, input]() {
      action = [&, significance, input]() {
        return run_uniformity(GraphParams(d, k), *significance, *input, out);
      };
    });
  }

  // spectrum
  {
    CLI::App* cmd = app.add_subcommand("spectrum", "Closed-form spectrum and Cheeger bounds");
    add_params(cmd);
    auto verify = std::make_shared<bool>(false);
    auto tol = std::make_shared<double>(1e-8);
    auto cap = std::make_shared<std::size_t>(kDefaultMatrixCap);
    cmd->add_flag("--verify", *verify, "Numerically verify against the adjacency matrix");
    cmd->add_option("--tol", *tol, "Verification tolerance")->capture_default_str();
    cmd->add_option("--cap", *cap, "Matrix size cap for verification")->capture_default_str();
    cmd->callback([&, verify, tol, cap]() {
      action = [&, verify, tol, cap]() {
        return run_spectrum(GraphParams(d, k), *verify, *tol, *cap, out);
      };
    });
  }

  // decompose
  {
    CLI::App* cmd = app.add_subcommand("decompose", "Recursive Pascal-identity decomposition");
    add_params(cmd);
    auto depth = std::make_shared<int>(1);
    cmd->add_option("--depth", *depth, "Recursion depth")->capture_default_str();
    cmd->callback([&, depth]() {
      action = [&, depth]() { return run_decompose(GraphParams(d, k), *depth, out); };
    });
  }

  // walk-diag
  {
    CLI::App* cmd = app.add_subcommand("walk-diag", "Exact TV-to-uniform per walk step");
    add_params(cmd);
    auto max_t = std::make_shared<std::size_t>(30);
    auto lazy = std::make_shared<bool>(false);
    auto start = std::make_shared<std::string>();
    cmd->add_option("--max-t", *max_t, "Number of steps to evolve")->capture_default_str();
    cmd->add_flag("--lazy", *lazy, "Half-self-loop walk");
    cmd->add_option("--start", *start, "Start vertex as a 0/1 string (default canonical)");
    cmd->callback([&, max_t, lazy, start]() {
      action = [&, max_t, lazy, start]() {
        return run_walk_diag(GraphParams(d, k), *max_t, *lazy, *start, out);
      };
    });
  }

  // verify
  {
    CLI::App* cmd = app.add_subcommand("verify", "Run all closed-form-vs-oracle checks");
    auto d_max = std::make_shared<int>(9);
    auto fault = std::make_shared<bool>(false);
    cmd->add_option("--d-max", *d_max, "Largest dimension to check")->capture_default_str();
    cmd->add_flag("--inject-fault", *fault, "Self-test: corrupt the degree formula")
        ->group("");  // hidden
    add_output_flags(cmd, out);
    cmd->callback([&, d_max, fault]() {
      action = [&, d_max, fault]() { return run_verify(*d_max, *fault, out); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const hypersimplex::CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const hypersimplex::SamplerError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const hypersimplex::OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
