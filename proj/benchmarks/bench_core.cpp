// SPDX-License-Identifier: MIT
// Benchmarks for the performance-critical layers: dense elimination over
// GF(p), graded quotient-ring construction, and the Betti-number engines.
//
// Run all:        ./build/benchmarks/aci_benchmarks
// Filter:         ./build/benchmarks/aci_benchmarks --benchmark_filter=Koszul

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "aci/elimination.hpp"
#include "aci/family.hpp"
#include "aci/kresolutions.hpp"
#include "aci/poincare.hpp"
#include "aci/series.hpp"
#include "aci/syzygy.hpp"

using namespace aci;

namespace {

const PrimeField kField(32003);

Mat random_matrix(std::size_t rows, std::size_t cols, uint64_t seed) {
  std::mt19937_64 rng(seed);
  Mat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m.at(r, c) = static_cast<uint32_t>(rng() % kField.p);
  return m;
}

}  // namespace

static void BM_EliminatorRank(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  const auto cols = static_cast<std::size_t>(state.range(1));
  const Mat m = random_matrix(rows, cols, 20260822);
  for (auto _ : state) {
    Eliminator elim(kField, cols);
    elim.feed_rows(m);
    benchmark::DoNotOptimize(elim.rank());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(rows * cols));
}
BENCHMARK(BM_EliminatorRank)->Args({128, 256})->Args({256, 512})->Args({512, 768});

static void BM_KernelBasis(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  const auto cols = static_cast<std::size_t>(state.range(1));
  const Mat m = random_matrix(rows, cols, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel_basis(m, kField));
  }
}
BENCHMARK(BM_KernelBasis)->Args({128, 256})->Args({256, 512});

static void BM_FamilyConstruction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    RingFamily fam = tilde_family(n, kField);
    // Force the lazy ring builds that dominate real usage.
    benchmark::DoNotOptimize(fam.R().hilbert_vector());
    benchmark::DoNotOptimize(fam.A().hilbert_vector());
  }
}
BENCHMARK(BM_FamilyConstruction)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_GenericityCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    SampleResult s = sample_family(n, kField, 1);
    benchmark::DoNotOptimize(s.attempts);
  }
}
BENCHMARK(BM_GenericityCheck)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_KoszulBettiOverQ(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RingFamily fam = tilde_family(n, kField);
  const int ell = fam.ell();
  const int max_j = n + std::max(ell + 2, n - 2);
  const LinearComplex C = koszul_complex(n, n + 1, kField);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tensor_homology_betti(C, fam.R(), n, max_j));
  }
}
BENCHMARK(BM_KoszulBettiOverQ)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_TwoStrandOverP(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RingFamily fam = tilde_family(n, kField);
  const int max_i = std::min(n, 4);
  const int max_j = max_i + fam.ell() + 2;
  for (auto _ : state) {
    GradedModulePresentation pres =
        cyclic_presentation(fam.P(), {fam.f_last()});
    benchmark::DoNotOptimize(
        minimal_syzygy_betti(fam.P(), pres, max_i, max_j));
  }
}
BENCHMARK(BM_TwoStrandOverP)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_SyzygyKOverR(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RingFamily fam = tilde_family(n, kField);
  const int max_i = 4;
  const int max_j = 2 * max_i + fam.ell() + 2;
  for (auto _ : state) {
    GradedModulePresentation pres = k_presentation(fam.R());
    benchmark::DoNotOptimize(
        minimal_syzygy_betti(fam.R(), pres, max_i, max_j));
  }
}
BENCHMARK(BM_SyzygyKOverR)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_PoincareClosedForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(poincare_k_over_R_closed(n, 12, 30));
    benchmark::DoNotOptimize(poincare_k_over_A_closed(n, 12, 30));
  }
}
BENCHMARK(BM_PoincareClosedForm)->Arg(6)->Arg(8);

static void BM_SeriesReciprocal(benchmark::State& state) {
  const RingFamily fam = tilde_family(6, kField);
  const BiSeries h = hilbert_neg_tu(fam.A().hilbert_vector(), 16, 40);
  for (auto _ : state) {
    benchmark::DoNotOptimize(h.reciprocal());
  }
}
BENCHMARK(BM_SeriesReciprocal);

BENCHMARK_MAIN();
