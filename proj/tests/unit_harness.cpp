// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "aci/json_io.hpp"
#include "aci/suite.hpp"
#include "aci/tables.hpp"

using namespace aci;
namespace fs = std::filesystem;

namespace {

BettiTable sample_table() {
  BettiTable T;
  T.max_i = 3;
  T.max_j = 5;
  T.set(0, 0, 1);
  T.set(1, 2, 4);
  T.set(2, 3, 2);
  T.set(2, 4, 3);
  T.set(3, 5, 2);
  return T;
}

struct CacheDirGuard {
  std::string dir;
  explicit CacheDirGuard(const std::string& d) : dir(d) {
    fs::create_directories(dir);
    setenv("ACI_CACHE_DIR", dir.c_str(), 1);
  }
  ~CacheDirGuard() {
    unsetenv("ACI_CACHE_DIR");
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
};

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("betti json round-trip preserves table and metadata") {
  const BettiTable T = sample_table();
  BettiMeta m;
  m.base = "Q";
  m.n = 3;
  m.prime = 32003;
  m.variant = "tilde";

  const nlohmann::json doc = betti_to_json(T, m);
  CHECK(doc.at("seed").is_null());
  CHECK(doc.at("window").at("max_i") == 3);
  CHECK(doc.at("entries").size() == 5);
  CHECK(doc.at("entries").at(0).at("beta") == "1");

  const auto [T2, m2] = betti_from_json(doc);
  CHECK(T2 == T);
  CHECK(m2.base == m.base);
  CHECK(m2.n == m.n);
  CHECK(m2.prime == m.prime);
  CHECK(m2.variant == m.variant);
  CHECK_FALSE(m2.seed.has_value());

  SUBCASE("seed survives the trip") {
    m.variant = "random";
    m.seed = 7;
    const auto [T3, m3] = betti_from_json(betti_to_json(T, m));
    CHECK(T3 == T);
    REQUIRE(m3.seed.has_value());
    CHECK(*m3.seed == 7);
  }

  SUBCASE("malformed beta strings are rejected") {
    nlohmann::json bad = doc;
    bad["entries"][0]["beta"] = "12x";
    CHECK_THROWS(betti_from_json(bad));
  }

  SUBCASE("serialization is deterministic") {
    CHECK(betti_to_json(T, m).dump() == betti_to_json(T, m).dump());
  }
}

TEST_CASE("betti_text renders shifts as rows") {
  const std::string text = betti_text(sample_table());
  CHECK(text.find("0:") != std::string::npos);
  CHECK(text.find("2:") != std::string::npos);
  CHECK(text.find("4") != std::string::npos);
  CHECK(text.find(".") != std::string::npos);
}

TEST_CASE("compare_tables modes") {
  const BettiTable T = sample_table();
  BettiTable smaller = T;
  smaller.set(2, 4, 2);

  CHECK(compare_tables(T, T, CompareMode::Equal).pass);
  CHECK_FALSE(compare_tables(smaller, T, CompareMode::Equal).pass);
  CHECK(compare_tables(smaller, T, CompareMode::UpperBound).pass);

  BettiTable bigger = T;
  bigger.set(1, 2, 9);
  const CompareResult r = compare_tables(bigger, T, CompareMode::UpperBound);
  CHECK_FALSE(r.pass);
  REQUIRE(r.violations.size() == 1);
  CHECK(std::get<0>(r.violations[0]) == 1);
  CHECK(std::get<1>(r.violations[0]) == 2);
  CHECK(r.summary() != "ok");
}

TEST_CASE("cached_betti stores, reloads, and survives corruption") {
  const CacheDirGuard guard("/tmp/aci_test_cache");
  BettiMeta m;
  m.base = "Q";
  m.n = 3;

  int calls = 0;
  const auto compute = [&]() {
    ++calls;
    return sample_table();
  };

  const BettiTable first = cached_betti("R", m, 3, 5, compute);
  CHECK(calls == 1);
  CHECK(first == sample_table());

  const BettiTable second = cached_betti("R", m, 3, 5, compute);
  CHECK(calls == 1);  // served from disk
  CHECK(second == sample_table());

  // A different window is a different cache entry.
  BettiTable narrow = cached_betti("R", m, 2, 4, [&]() {
    ++calls;
    BettiTable t;
    t.max_i = 2;
    t.max_j = 4;
    t.set(0, 0, 1);
    return t;
  });
  CHECK(calls == 2);
  CHECK(narrow.get(0, 0) == 1);

  // Corrupt every cached file: the loader recomputes and rewrites.
  for (const auto& entry : fs::directory_iterator(guard.dir)) {
    std::ofstream out(entry.path());
    out << "{ not json";
  }
  const BettiTable third = cached_betti("R", m, 3, 5, compute);
  CHECK(calls == 3);
  CHECK(third == sample_table());
}

TEST_CASE("run_suite end-to-end at n = 4") {
  ExperimentConfig cfg;
  cfg.n = 4;
  const VerificationReport rep = run_suite(cfg);
  CHECK(rep.all_passed());
  CHECK(rep.attempts == 1);
  CHECK(rep.checks.size() >= 20);

  const std::string text = rep.text();
  CHECK(text.find("[pass]") != std::string::npos);
  CHECK(text.find("fail") == std::string::npos);

  // JSON determinism: a second identical run serializes identically.
  const VerificationReport rep2 = run_suite(cfg);
  CHECK(rep.to_json().dump() == rep2.to_json().dump());
}

TEST_CASE("run_suite honors the only filter") {
  ExperimentConfig cfg;
  cfg.n = 4;
  cfg.only = {"family-accepted", "hilbert-R-closed-form"};
  const VerificationReport rep = run_suite(cfg);
  CHECK(rep.all_passed());
  CHECK(rep.checks.size() == 2);
  CHECK(rep.checks[0].name == "family-accepted");
  CHECK(rep.checks[1].name == "hilbert-R-closed-form");
}

TEST_CASE("run_suite accepts a random family") {
  ExperimentConfig cfg;
  cfg.n = 4;
  cfg.variant = "random";
  cfg.seed = 1;
  cfg.only = {"family-accepted", "hilbert-R-closed-form",
              "hilbert-A-closed-form", "betti-P-A-two-strand"};
  const VerificationReport rep = run_suite(cfg);
  CHECK(rep.all_passed());
  CHECK(rep.attempts >= 1);
}

}  // TEST_SUITE
