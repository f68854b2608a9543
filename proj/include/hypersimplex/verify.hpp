// Cross-checks every closed-form result against the brute-force oracle on
// small instances. Used by the CLI `verify` command and the acceptance suite.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hypersimplex {

struct CheckRecord {
  std::string check;
  int d = 0;
  int k = 0;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerifyOptions {
  int d_max = 9;
  // Pretends the closed-form degree is off by one; exercises the failure path.
  bool inject_fault = false;
};

struct VerifyResult {
  std::vector<CheckRecord> records;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;

  bool all_pass() const { return failed == 0; }
  const CheckRecord* first_failure() const;
};

// Runs all checks for every (d <= d_max, 1 <= k <= d/2) within the caps.
VerifyResult run_verification(const VerifyOptions& options = {});

}  // namespace hypersimplex
