#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "eulerform/invariants.hpp"

namespace eulerform {

struct VerifyOptions {
  std::string suite;
  /// Target number of in-regime instances (per branch for sign-trichotomy).
  int trials = 50;
  std::uint64_t seed = 7;
  int vars = 3;
  int maxdeg = 4;
  /// Truncation bound over quotient rings; 0 picks the default.
  int bound = 0;
};

struct Counterexample {
  int trial;
  std::uint64_t seed;
  /// A session script that recomputes the failing values.
  std::string script;
  CheckReport report;
};

struct VerifySummary {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  int attempted = 0;
  int in_regime = 0;
  int passed = 0;
  int failed = 0;
  /// In-regime and passed counts per branch (sign-trichotomy) or per suite.
  std::map<std::string, std::pair<int, int>> branches;
  std::vector<Counterexample> counterexamples;
  /// Fixed instances checked alongside the random ones.
  std::vector<CheckReport> witnesses;

  /// No failures, witnesses passed, and every branch reached the target.
  bool ok() const;
};

const std::vector<std::string>& suite_names();

/// Regenerates one trial of a suite: its in-regime reports, each with a
/// replay script, whether or not they passed.
std::vector<Counterexample> run_trial(const VerifyOptions& options, int trial);

/// Runs a suite; attempts stop after 20 × trials random instances.
VerifySummary verify_suite(const VerifyOptions& options);

}  // namespace eulerform
