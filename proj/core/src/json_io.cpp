// SPDX-License-Identifier: MIT
#include "aci/json_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace aci {

nlohmann::json betti_to_json(const BettiTable& T, const BettiMeta& m) {
  nlohmann::json j;
  j["base"] = m.base;
  j["n"] = m.n;
  j["prime"] = m.prime;
  j["variant"] = m.variant;
  if (m.seed)
    j["seed"] = *m.seed;
  else
    j["seed"] = nullptr;
  j["window"] = {{"max_i", T.max_i}, {"max_j", T.max_j}};
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [ij, v] : T.e) {
    entries.push_back({{"i", ij.first},
                       {"j", ij.second},
                       {"beta", std::to_string(v)}});
  }
  j["entries"] = std::move(entries);
  return j;
}

std::pair<BettiTable, BettiMeta> betti_from_json(const nlohmann::json& j) {
  BettiMeta m;
  m.base = j.at("base").get<std::string>();
  m.n = j.at("n").get<int>();
  m.prime = j.at("prime").get<int>();
  m.variant = j.at("variant").get<std::string>();
  if (!j.at("seed").is_null()) m.seed = j.at("seed").get<long long>();
  BettiTable T;
  T.max_i = j.at("window").at("max_i").get<int>();
  T.max_j = j.at("window").at("max_j").get<int>();
  for (const auto& en : j.at("entries")) {
    const int i = en.at("i").get<int>();
    const int jj = en.at("j").get<int>();
    const std::string b = en.at("beta").get<std::string>();
    if (b.empty() || b.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("betti_from_json: beta is not a decimal string");
    T.set(i, jj, std::stoull(b));
  }
  return {std::move(T), std::move(m)};
}

std::string betti_text(const BettiTable& T) {
  // Column widths: one per homological degree.
  int min_shift = 0, max_shift = -1;
  for (const auto& [ij, v] : T.e) {
    (void)v;
    const int s = ij.second - ij.first;
    if (max_shift < 0 || s < min_shift) min_shift = s;
    if (s > max_shift) max_shift = s;
  }
  std::ostringstream out;
  if (max_shift < 0) {
    out << "(empty table, window i <= " << T.max_i << ", j <= " << T.max_j
        << ")\n";
    return out.str();
  }
  std::vector<std::size_t> w(static_cast<std::size_t>(T.max_i) + 1);
  for (int i = 0; i <= T.max_i; ++i) {
    w[i] = std::to_string(i).size();
    for (int s = min_shift; s <= max_shift; ++s) {
      const auto v = T.get(i, i + s);
      if (v) w[i] = std::max(w[i], std::to_string(v).size());
    }
  }
  auto pad = [&out](const std::string& s, std::size_t width) {
    for (std::size_t k = s.size(); k < width; ++k) out << ' ';
    out << s;
  };
  std::size_t label = std::to_string(max_shift).size() +
                      (min_shift < 0 ? 1 : 0);
  pad("", label + 1);
  for (int i = 0; i <= T.max_i; ++i) {
    out << "  ";
    pad(std::to_string(i), w[i]);
  }
  out << '\n';
  for (int s = min_shift; s <= max_shift; ++s) {
    pad(std::to_string(s), label);
    out << ':';
    for (int i = 0; i <= T.max_i; ++i) {
      out << "  ";
      const auto v = T.get(i, i + s);
      pad(v ? std::to_string(v) : ".", w[i]);
    }
    out << '\n';
  }
  return out.str();
}

BettiTable cached_betti(const std::string& module, const BettiMeta& meta,
                        int max_i, int max_j,
                        const std::function<BettiTable()>& compute) {
  const char* dir = std::getenv("ACI_CACHE_DIR");
  std::filesystem::path path;
  if (dir && *dir) {
    std::ostringstream name;
    name << "betti_" << module << "_over_" << meta.base << "_n" << meta.n << "_"
         << meta.variant;
    if (meta.seed) name << "_s" << *meta.seed;
    name << "_p" << meta.prime << "_i" << max_i << "_j" << max_j << ".json";
    path = std::filesystem::path(dir) / name.str();
    std::ifstream in(path);
    if (in) {
      try {
        nlohmann::json doc = nlohmann::json::parse(in);
        auto [T, m] = betti_from_json(doc);
        if (T.max_i == max_i && T.max_j == max_j && m.base == meta.base &&
            m.n == meta.n && m.prime == meta.prime &&
            m.variant == meta.variant && m.seed == meta.seed)
          return T;
      } catch (const std::exception&) {
        // Corrupt cache entry: fall through and recompute.
      }
    }
  }
  BettiTable T = compute();
  if (!path.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path);
    if (out) out << betti_to_json(T, meta).dump(2) << '\n';
  }
  return T;
}

}  // namespace aci
