// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "aci/betti.hpp"

namespace aci {

// Configuration of one verification run.  Negative window values select the
// documented defaults.
struct ExperimentConfig {
  int n = 6;
  int prime = 32003;
  std::string variant = "tilde";  // "tilde" | "random"
  uint64_t seed = 1;              // consumed only by the random variant
  int cutoff = -1;                // ring cutoff; default n + 2
  int max_i_Q = -1;               // resolution window over Q; default min(n+1, 8)
  int max_i_P = -1;               // resolution window over P / P1; default min(n, 6)
  int max_i_k = -1;               // window for k over R and A; default 4 (n<=5) or 3
  std::vector<std::string> only;  // run only these checks (empty = all)
};

struct CheckResult {
  std::string name;       // stable self-describing identifier
  std::string status;     // "pass" | "fail" | "window-limited"
  std::string computed;   // printable computed value
  std::string predicted;  // printable predicted value
  std::string detail;     // violations, attempts, notes
  double seconds = 0.0;   // wall time (text report only, never serialized)
};

struct VerificationReport {
  ExperimentConfig config;
  int attempts = 1;  // family draws consumed (1 for the tilde variant)
  std::vector<CheckResult> checks;

  bool all_passed() const;        // no check failed (window-limited != failure)
  nlohmann::json to_json() const; // deterministic for a given (config, seed)
  std::string text() const;       // human-readable, includes timings
};

// Execute the applicable checks in dependency order: family construction,
// Hilbert identities, socle/type, generator degrees, Betti tables over Q
// (and P1 for odd tilde n), two-strand tables over P, regularity, Golod
// predicates, Poincaré cross-checks, rate witnesses.  Construction failures
// stop the run; check failures are recorded and the run continues.
VerificationReport run_suite(const ExperimentConfig& config);

// Entrywise table comparison on the common window.
enum class CompareMode { Equal, UpperBound };

struct CompareResult {
  bool pass = false;
  // (i, j, computed, predicted) for every violating position.
  std::vector<std::tuple<int, int, unsigned long long, unsigned long long>> violations;
  std::string summary() const;  // "ok" or the first few violations
};

// Throws std::invalid_argument when the windows do not overlap.
CompareResult compare_tables(const BettiTable& computed, const BettiTable& predicted,
                             CompareMode mode);

}  // namespace aci
