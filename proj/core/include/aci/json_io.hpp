// SPDX-License-Identifier: MIT
#pragma once

#include <functional>
#include <optional>
#include <string>

#include <json.hpp>

#include "aci/betti.hpp"

namespace aci {

// Metadata attached to an emitted Betti table.
struct BettiMeta {
  std::string base;  // ring the resolution is taken over: "Q", "P1", "P", "R", "A"
  int n = 0;
  int prime = 32003;
  std::string variant = "tilde";  // "tilde" | "random"
  std::optional<long long> seed;  // present for the random variant
};

// Serialize to the document schema
//   {"base", "n", "prime", "variant", "seed", "window": {"max_i", "max_j"},
//    "entries": [{"i", "j", "beta"(decimal string)}]}
// with entries in ascending (i, j) order; deterministic for a given input.
nlohmann::json betti_to_json(const BettiTable& T, const BettiMeta& m);

// Inverse of betti_to_json; throws nlohmann::json::exception /
// std::invalid_argument on malformed documents.
std::pair<BettiTable, BettiMeta> betti_from_json(const nlohmann::json& j);

// Plain-text rendering: one column per homological degree i, one row per
// shift a = j - i, "." for an absent entry.
std::string betti_text(const BettiTable& T);

// File-backed cache for expensive tables.  When the environment variable
// ACI_CACHE_DIR names a directory, a table for (module over base, meta,
// window) is loaded from it if present, and stored after computing otherwise.
// Without ACI_CACHE_DIR the computation always runs.  The cached document is
// the betti_to_json schema; window and metadata are re-validated on load.
BettiTable cached_betti(const std::string& module, const BettiMeta& meta,
                        int max_i, int max_j,
                        const std::function<BettiTable()>& compute);

}  // namespace aci
