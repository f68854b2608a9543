// End-to-end tests of the hsx binary. The binary path arrives as the last
// command-line argument (or HSX_BIN in the environment).
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

std::string hsx_binary;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs a full shell command line with stdout/stderr captured.
RunResult run_shell(const std::string& command) {
  static int counter = 0;
  const std::string tag = std::to_string(getpid()) + "_" + std::to_string(counter++);
  const std::string out_path = "/tmp/hsx_test_out_" + tag;
  const std::string err_path = "/tmp/hsx_test_err_" + tag;

  const std::string full = command + " >" + out_path + " 2>" + err_path;
  const int status = std::system(full.c_str());

  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

RunResult run_hsx(const std::string& args) { return run_shell(hsx_binary + " " + args); }

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("stats text output") {
  const RunResult r = run_hsx("stats --d 5 --k 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "vertices: 10"));
  CHECK(contains(r.out, "degree: 6"));
  CHECK(contains(r.out, "edges: 30"));
  CHECK(contains(r.out, "diameter: 2"));
  CHECK(contains(r.out, "clique_number: 4"));
}

TEST_CASE("stats beyond the half regime reports the complement") {
  const RunResult r = run_hsx("stats --d 5 --k 4");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "G(5,1)"));
  CHECK(contains(r.out, "diameter: 1"));
  CHECK(contains(r.out, "clique_number: 5"));
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_hsx("stats --d 2 --k 5").exit_code == 2);
  CHECK(run_hsx("stats --d 5").exit_code == 2);
  CHECK(run_hsx("stats --d 5 --k 2 --no-such-flag").exit_code == 2);
  CHECK(run_hsx("no-such-command").exit_code == 2);
  CHECK(run_hsx("--help").exit_code == 0);
}

TEST_CASE("json outputs round-trip byte-identically") {
  for (const std::string& args :
       {std::string("stats --d 6 --k 3 --format json"),
        std::string("spectrum --d 5 --k 2 --format json"),
        std::string("decompose --d 6 --k 3 --depth 2 --format json"),
        std::string("walk-diag --d 4 --k 2 --max-t 5 --format json"),
        std::string("verify --d-max 3 --format json")}) {
    const RunResult r = run_hsx(args);
    REQUIRE(r.exit_code == 0);
    const nlohmann::json parsed = nlohmann::json::parse(r.out);
    CHECK(parsed.dump(2) + "\n" == r.out);
  }
}

TEST_CASE("stats json fields") {
  const RunResult r = run_hsx("stats --d 6 --k 3 --format json");
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["vertices"] == 20);
  CHECK(j["degree"] == 9);
  CHECK(j["edges"] == 90);
  CHECK(j["diameter"] == 3);
  CHECK(j["clique_number"] == 4);
}

TEST_CASE("spectrum table and bounds") {
  const RunResult r = run_hsx("spectrum --d 5 --k 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "0 6 1"));
  CHECK(contains(r.out, "1 1 4"));
  CHECK(contains(r.out, "2 -2 5"));
  CHECK(contains(r.out, "2.5"));
}

TEST_CASE("spectrum verification verdict") {
  const RunResult r = run_hsx("spectrum --d 4 --k 2 --verify");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "verification: pass"));
}

TEST_CASE("spectrum verify cap exceeded still prints the closed form") {
  const RunResult r = run_hsx("spectrum --d 40 --k 20 --verify");
  CHECK(r.exit_code == 3);
  CHECK(contains(r.out, "0 400 1"));  // top eigenvalue k(d-k)
  CHECK(contains(r.err, "cap"));
}

TEST_CASE("sampling is byte-deterministic under the seed") {
  const std::string args = "sample --d 7 --k 3 --n 5 --seed 42";
  const RunResult a = run_hsx(args);
  const RunResult b = run_hsx(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());

  const RunResult c = run_hsx("sample --d 7 --k 3 --n 5 --seed 43");
  CHECK(c.out != a.out);
}

TEST_CASE("zero steps from the canonical start emits the first k coordinates") {
  const RunResult r = run_hsx("sample --d 5 --k 2 --n 1 --steps 0");
  CHECK(r.exit_code == 0);
  const std::string last = r.out.substr(r.out.find_last_of('#'));
  CHECK(contains(last, "\n1,2\n"));
  CHECK(contains(r.out, "steps=0"));

  const RunResult bits = run_hsx("sample --d 5 --k 2 --n 1 --steps 0 --emit bits");
  CHECK(contains(bits.out, "\n11000\n"));
}

TEST_CASE("sample piped into uniformity passes") {
  const RunResult r = run_shell(hsx_binary +
                                " sample --d 6 --k 2 --n 12000 --steps 150 --seed 1 | " +
                                hsx_binary + " uniformity --d 6 --k 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "result: pass"));
}

TEST_CASE("uniformity rejects a constant stream") {
  const RunResult r = run_shell("printf '1,2\\n%.0s' $(seq 100) | " + hsx_binary +
                                " uniformity --d 5 --k 2 --significance 0.001");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "result: fail"));
}

TEST_CASE("uniformity accepts the bits form and skips comments") {
  const RunResult r = run_shell(hsx_binary +
                                " sample --d 5 --k 2 --n 200 --steps 20 --seed 3 --emit bits | " +
                                hsx_binary + " uniformity --d 5 --k 2 --significance 0.001");
  CHECK(r.exit_code == 0);
}

TEST_CASE("uniformity reads samples from a file") {
  const std::string path = "/tmp/hsx_test_samples_" + std::to_string(getpid());
  REQUIRE(run_hsx("sample --d 5 --k 2 --n 300 --steps 20 --seed 9 --output " + path).exit_code ==
          0);
  const RunResult r = run_hsx("uniformity --d 5 --k 2 --input " + path);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "samples: 300"));
  std::remove(path.c_str());
}

TEST_CASE("verify is green and the fault injection trips it") {
  const RunResult ok = run_hsx("verify --d-max 4");
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.out, "all checks passed"));

  const RunResult bad = run_hsx("verify --d-max 4 --inject-fault");
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.err, "degree_regularity"));
  CHECK(contains(bad.err, "\"pass\":false"));
}

TEST_CASE("decompose text reports the edge-sum identity") {
  const RunResult r = run_hsx("decompose --d 5 --k 2 --depth 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "links=12"));
  CHECK(contains(r.out, "30 = 6 + 12 + 12 [ok]"));
  CHECK(contains(r.out, "holds at every node"));
}

TEST_CASE("decompose terminates at complete-graph leaves before the depth budget") {
  const RunResult r = run_hsx("decompose --d 4 --k 2 --depth 3");
  CHECK(r.exit_code == 0);
  CHECK_FALSE(contains(r.out, "depth-limited"));
}

TEST_CASE("walk-diag rows start at 1 - 1/C") {
  const RunResult r = run_hsx("walk-diag --d 5 --k 2 --max-t 3 --format json");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j["rows"].size() == 4);
  CHECK(j["rows"][0]["t"] == 0);
  CHECK(j["rows"][0]["tv"].get<double>() == doctest::Approx(0.9));
}

TEST_CASE("output goes to a file when requested") {
  const std::string path = "/tmp/hsx_test_output_file_" + std::to_string(getpid());
  const RunResult r = run_hsx("stats --d 5 --k 2 --output " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  CHECK(contains(slurp(path), "vertices: 10"));
  std::remove(path.c_str());
}

TEST_CASE("csv outputs carry a header row") {
  const RunResult stats = run_hsx("stats --d 5 --k 2 --format csv");
  CHECK(contains(stats.out, "d,k,vertices,degree,edges,diameter,clique_number\n"));
  const RunResult diag = run_hsx("walk-diag --d 4 --k 2 --max-t 2 --format csv");
  CHECK(contains(diag.out, "t,tv\n"));
  const RunResult spec = run_hsx("spectrum --d 5 --k 2 --format csv");
  CHECK(contains(spec.out, "j,eigenvalue,multiplicity\n"));
  CHECK(contains(spec.out, "2,-2,5\n"));
}

int main(int argc, char** argv) {
  if (argc > 1 && argv[argc - 1][0] != '-') {
    hsx_binary = argv[argc - 1];
    --argc;
  } else if (const char* env = std::getenv("HSX_BIN")) {
    hsx_binary = env;
  }
  if (hsx_binary.empty()) {
    std::fprintf(stderr, "usage: test_cli [doctest args] <path-to-hsx>\n");
    return 1;
  }
  doctest::Context context;
  context.applyCommandLine(argc, argv);
  return context.run();
}
