#include <benchmark/benchmark.h>

#include <algorithm>

#include "lific/conditions.hpp"
#include "lific/generators.hpp"
#include "lific/lification.hpp"
#include "lific/refuter.hpp"
#include "lific/verification.hpp"

using namespace lific;

namespace {

const StructureTag kSym{StructureKind::Symmetric, StarFlavor::Transpose};

MatrixPolynomial sample(int k, size_t n) {
  Rng rng(11);
  return random_regular_structured(rng, kSym, n, k, Backend::Rational);
}

void BM_Smith(benchmark::State& st) {
  MatrixPolynomial p = sample(static_cast<int>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(smith_form(p));
}
BENCHMARK(BM_Smith)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Build(benchmark::State& st) {
  int d = static_cast<int>(st.range(0)), ell = 2, k = (2 * d + 1) * ell;
  MatrixPolynomial p = sample(k, 2);
  PlacementPlan plan = find_plan(kSym, d, ell, "sparse");
  for (auto _ : st) benchmark::DoNotOptimize(build_structured(p, kSym, ell, plan));
}
BENCHMARK(BM_Build)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

void BM_Certify(benchmark::State& st) {
  int d = static_cast<int>(st.range(0)), ell = 2, k = (2 * d + 1) * ell;
  MatrixPolynomial p = sample(k, 2);
  LificationResult r = build_structured(p, kSym, ell, find_plan(kSym, d, ell, "sparse"));
  CertifyOptions co;
  co.measure_indices = false;
  for (auto _ : st) benchmark::DoNotOptimize(certify_lification(r.L, p, ell, k, co));
}
BENCHMARK(BM_Certify)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_Refute(benchmark::State& st) {
  // Each orbit restricted to its first few options.
  RefuterSpace sp = make_refuter_space({StructureKind::Palindromic, StarFlavor::Transpose}, {}, true);
  size_t keep = static_cast<size_t>(st.range(0));
  for (size_t o = 0; o < sp.orbits.size(); ++o) {
    size_t m = std::min(keep, sp.options[o].size());
    sp.options[o].resize(m);
    sp.partner_options[o].resize(m);
  }
  for (auto _ : st) benchmark::DoNotOptimize(refute(sp));
  st.counters["templates"] = static_cast<double>(sp.template_count());
}
BENCHMARK(BM_Refute)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
