// SPDX-License-Identifier: MIT
//
// Command-line front end for the exact-arithmetic engine: Hilbert functions,
// Betti tables, Poincaré-series comparisons, rate witnesses, the verification
// suite and the combinatorial sequences for the quadric quotient families.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "aci/analysis.hpp"
#include "aci/family.hpp"
#include "aci/json_io.hpp"
#include "aci/kresolutions.hpp"
#include "aci/poincare.hpp"
#include "aci/sequences.hpp"
#include "aci/suite.hpp"
#include "aci/syzygy.hpp"
#include "aci/tables.hpp"

namespace {

int default_prime() {
  if (const char* env = std::getenv("ACI_DEFAULT_PRIME")) {
    try {
      const int p = std::stoi(env);
      aci::PrimeField::validate(static_cast<uint32_t>(p));
      return p;
    } catch (const std::exception& ex) {
      std::cerr << "ignoring ACI_DEFAULT_PRIME: " << ex.what() << "\n";
    }
  }
  return 32003;
}

// The residue field as a graded quotient: k = Q/(x_1..x_n), vanishing from
// degree 1 on.
aci::GradedQuotientRing residue_field(int n, const aci::PrimeField& f) {
  std::vector<aci::SparsePoly> vars;
  for (int k = 0; k < n; ++k) {
    aci::Expo e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(k)] = 1;
    vars.push_back(aci::poly_from_expo(e, 1));
  }
  return aci::GradedQuotientRing(n, f, 1, [vars](int) { return vars; });
}

aci::RingFamily build_family(int n, int prime, const std::string& variant,
                             uint64_t seed) {
  aci::PrimeField f(static_cast<uint32_t>(prime));
  if (variant == "tilde") return aci::tilde_family(n, f);
  auto sr = aci::sample_family(n, f, seed);
  std::cerr << "random family accepted after " << sr.attempts << " draw(s)\n";
  return std::move(sr.family);
}

void print_hilbert(const aci::RingFamily& fam) {
  const int n = fam.n();
  auto line = [&](const char* name, const aci::GradedQuotientRing& S) {
    std::cout << name << ": (";
    for (int d = 0; d <= n + 2; ++d) std::cout << (d ? ", " : "") << S.h(d);
    std::cout << ")\n";
  };
  line("h_R", fam.R());
  line("h_A", fam.A());
  line("h_P", fam.P());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact computations for quotients of a polynomial ring by n+1 quadrics"};
  app.require_subcommand(1);

  int n = 6;
  int prime = default_prime();
  std::string variant = "tilde";
  uint64_t seed = 1;

  // ---- hilbert ----
  auto* hilbert = app.add_subcommand("hilbert", "print h_R, h_A, h_P");
  hilbert->add_option("--n", n, "number of variables")->required();
  hilbert->add_option("--variant", variant, "tilde | random")
      ->check(CLI::IsMember({"tilde", "random"}));
  hilbert->add_option("--seed", seed, "seed for the random variant");
  hilbert->add_option("--prime", prime, "field characteristic");

  // ---- betti ----
  auto* betti = app.add_subcommand("betti", "print a Betti table");
  std::string module = "R", base = "Q";
  int max_i = -1;
  std::string json_out;
  betti->add_option("--n", n, "number of variables")->required();
  betti->add_option("--module", module, "R | A | k")
      ->required()
      ->check(CLI::IsMember({"R", "A", "k"}));
  betti
      ->add_option("--base", base,
                   "Q | P1 | P | self (self: resolve k over the module ring)")
      ->required()
      ->check(CLI::IsMember({"Q", "P1", "P", "self"}));
  betti->add_option("--max-i", max_i, "homological window");
  betti->add_option("--prime", prime, "field characteristic");
  betti->add_option("--json", json_out, "also write the JSON document here");

  // ---- poincare ----
  auto* poincare = app.add_subcommand(
      "poincare", "closed Poincare formula vs computed table");
  std::string ring = "R";
  int pmax_i = -1, pmax_j = -1;
  poincare->add_option("--n", n, "number of variables")->required();
  poincare->add_option("--ring", ring, "R | A")
      ->required()
      ->check(CLI::IsMember({"R", "A"}));
  poincare->add_option("--max-i", pmax_i, "homological window");
  poincare->add_option("--max-j", pmax_j, "internal-degree window");
  poincare->add_option("--prime", prime, "field characteristic");

  // ---- rate ----
  auto* rate = app.add_subcommand("rate", "print witness tau values and rate");
  rate->add_option("--n", n, "number of variables")->required();
  rate->add_option("--ring", ring, "R | A")
      ->required()
      ->check(CLI::IsMember({"R", "A"}));
  rate->add_option("--prime", prime, "field characteristic");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--n", n, "number of variables")->required();
  verify->add_option("--variant", variant, "tilde | random")
      ->check(CLI::IsMember({"tilde", "random"}));
  verify->add_option("--seed", seed, "seed for the random variant");
  verify->add_option("--prime", prime, "field characteristic");
  verify->add_option("--json", json_out, "write the machine-readable report here");

  // ---- sequences ----
  auto* sequences =
      app.add_subcommand("sequences", "print rho / gamma / Catalan values");
  std::string which = "rho";
  int upto = 6;
  sequences->add_option("--n", n, "number of variables")->required();
  sequences->add_option("--which", which, "rho | gamma | catalan")
      ->required()
      ->check(CLI::IsMember({"rho", "gamma", "catalan"}));
  sequences->add_option("--upto", upto, "last index to print")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*hilbert) {
      print_hilbert(build_family(n, prime, variant, seed));
      return 0;
    }

    if (*betti) {
      const int ell = aci::ell_of(n);
      aci::PrimeField f(static_cast<uint32_t>(prime));
      aci::BettiTable T;
      if (base == "self") {
        if (module == "k")
          throw std::invalid_argument(
              "--base self needs --module R or A (k is resolved over that ring)");
        if (max_i < 0) max_i = 6;
        if (module == "A" && n >= 6 && max_i >= 6)
          std::cerr << "note: k over A at n >= 6 grows quickly; i = 6 may take "
                       "hours (lower --max-i for a quick look)\n";
        auto fam = build_family(n, prime, variant, seed);
        const auto& S = fam.ring(module);
        T = aci::minimal_syzygy_betti(S, aci::k_presentation(S), max_i,
                                      2 * max_i + ell + 2);
      } else {
        if (max_i < 0) max_i = std::min(n + 1, 8);
        auto fam = build_family(n, prime, variant, seed);
        const int mj =
            max_i + (module == "A" ? std::max(ell + 2, n - 2) : ell + 2);
        if (base == "Q") {
          if (module == "k") {
            const auto kring = residue_field(n, f);
            T = aci::tensor_homology_betti(aci::koszul_complex(n, max_i + 1, f), kring,
                                           max_i, max_i);
          } else {
            T = aci::tensor_homology_betti(aci::koszul_complex(n, max_i + 1, f),
                                           fam.ring(module), max_i, mj);
          }
        } else if (base == "P1") {
          const auto C =
              aci::hypersurface_k_resolution(n, fam.quadrics()[0], max_i + 1, f);
          if (module == "k") {
            const auto kring = residue_field(n, f);
            T = aci::tensor_homology_betti(C, kring, max_i, max_i);
          } else {
            T = aci::tensor_homology_betti(C, fam.ring(module), max_i, mj);
          }
        } else {  // base == "P"
          if (module == "k") {
            std::vector<aci::SparsePoly> fs(fam.quadrics().begin(),
                                            fam.quadrics().end() - 1);
            const auto C = aci::ci_k_resolution(n, fs, max_i + 1, f);
            const auto kring = residue_field(n, f);
            T = aci::tensor_homology_betti(C, kring, max_i, max_i);
          } else if (module == "R") {
            auto pres = aci::cyclic_presentation(fam.P(), {fam.f_last()});
            T = aci::minimal_syzygy_betti(fam.P(), pres, max_i, max_i + ell + 2);
          } else {
            std::vector<std::pair<int, std::vector<std::vector<uint32_t>>>> pieces;
            for (int d = 1; d <= std::min(n, max_i + ell + 2); ++d) {
              const auto& piece = fam.annihilator(d);
              if (!piece.empty()) pieces.emplace_back(d, piece);
            }
            auto pres = aci::cyclic_presentation_from_pieces(pieces);
            T = aci::minimal_syzygy_betti(fam.P(), pres, max_i, max_i + ell + 2);
          }
        }
      }
      std::cout << "beta(" << (base == "self" ? "k" : module) << " over "
                << (base == "self" ? module : base) << "), n = " << n << ":\n"
                << aci::betti_text(T);
      if (!json_out.empty()) {
        aci::BettiMeta meta;
        meta.base = base;
        meta.n = n;
        meta.prime = prime;
        meta.variant = variant;
        if (variant == "random") meta.seed = static_cast<long long>(seed);
        std::ofstream out(json_out);
        out << aci::betti_to_json(T, meta).dump(2) << '\n';
        std::cout << "json written to " << json_out << "\n";
      }
      return 0;
    }

    if (*poincare) {
      const int ell = aci::ell_of(n);
      if (n < 4)
        throw std::invalid_argument("poincare closed forms need n >= 4");
      if (pmax_i < 0) pmax_i = n <= 5 ? 4 : 3;
      if (pmax_j < 0) pmax_j = 2 * pmax_i + ell + 2;
      const auto series = ring == "R"
                              ? aci::poincare_k_over_R_closed(n, pmax_i, pmax_j)
                              : aci::poincare_k_over_A_closed(n, pmax_i, pmax_j);
      const auto predicted = aci::betti_from_series(series, pmax_i, pmax_j);
      std::cout << "closed-formula window (k over " << ring << ", n = " << n
                << "):\n"
                << aci::betti_text(predicted);
      auto fam = build_family(n, prime, variant, seed);
      const auto& S = fam.ring(ring);
      const auto T = aci::minimal_syzygy_betti(S, aci::k_presentation(S), pmax_i,
                                               pmax_j);
      std::cout << "computed table:\n" << aci::betti_text(T);
      const auto cmp =
          aci::compare_tables(T, predicted, aci::CompareMode::Equal);
      if (cmp.pass) {
        std::cout << "diff: identical on the window\n";
        return 0;
      }
      std::cout << "diff: " << cmp.summary() << "\n";
      return 1;
    }

    if (*rate) {
      if (n < 4) throw std::invalid_argument("rate witnesses need n >= 4");
      const int ell = aci::ell_of(n);
      auto fam = build_family(n, prime, variant, seed);
      const auto& S = fam.ring(ring);
      const int mi = 3;
      const auto T = aci::minimal_syzygy_betti(S, aci::k_presentation(S), mi,
                                               2 * mi + ell + 2);
      const auto r = aci::rate_of_table(T, 2);
      for (int i = 2; i < static_cast<int>(r.tau.size()); ++i)
        std::cout << "tau_" << i << " = " << r.tau[i] << "\n";
      std::cout << "rate(" << ring << ") " << r.str() << "\n";
      std::cout << "predicted: "
                << (ring == "R" ? aci::Frac(ell + 2, 2).str()
                                : aci::Frac(ell, 1).str())
                << " (supremum attained at i = " << (ring == "R" ? 3 : 2)
                << ")\n";
      return 0;
    }

    if (*verify) {
      aci::ExperimentConfig cfg;
      cfg.n = n;
      cfg.prime = prime;
      cfg.variant = variant;
      cfg.seed = seed;
      const auto report = aci::run_suite(cfg);
      std::cout << report.text();
      if (!json_out.empty()) {
        std::ofstream out(json_out);
        out << report.to_json().dump(2) << '\n';
        std::cout << "report written to " << json_out << "\n";
      }
      return report.all_passed() ? 0 : 1;
    }

    if (*sequences) {
      std::vector<long long> v;
      if (which == "rho")
        v = aci::rho_sequence(n, upto);
      else if (which == "gamma")
        v = aci::gamma_sequence(n, upto);
      else
        v = aci::catalan_sequence(upto);
      for (std::size_t i = 0; i < v.size(); ++i)
        std::cout << which << "_" << i << " = " << v[i] << "\n";
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
