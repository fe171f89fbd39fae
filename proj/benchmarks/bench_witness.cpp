#include <benchmark/benchmark.h>

#include "mumw/basis.hpp"
#include "mumw/linalg.hpp"
#include "mumw/mum.hpp"
#include "mumw/random.hpp"
#include "mumw/witness.hpp"

namespace {

using namespace mumw;

void BM_GellMannBasis(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gellmann_basis(d));
}
BENCHMARK(BM_GellMannBasis)->DenseRange(3, 7, 2);

void BM_KappaOpt(benchmark::State& state) {
  const HermitianBasis b = gellmann_basis(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kappa_opt(b));
}
BENCHMARK(BM_KappaOpt)->DenseRange(3, 7, 2);

// Full pipeline: measurements, basis round trip and J sums.
void BM_WitnessTilde(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const HermitianBasis b = gellmann_basis(d);
  const WitnessSpec spec = make_spec(b, d + 1, d / 2, kappa_opt(b));
  for (auto _ : state) benchmark::DoNotOptimize(witness_Wtilde(spec));
}
BENCHMARK(BM_WitnessTilde)->DenseRange(3, 7, 2)->Unit(benchmark::kMicrosecond);

void BM_WitnessW(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const HermitianBasis b = gellmann_basis(d);
  const WitnessSpec spec = make_spec(b, d + 1, d / 2, kappa_opt(b));
  for (auto _ : state) benchmark::DoNotOptimize(witness_W(spec));
}
BENCHMARK(BM_WitnessW)->DenseRange(3, 7, 2)->Unit(benchmark::kMicrosecond);

void BM_HermitianEig(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng = make_rng(1);
  const ComplexMatrix m = random_hermitian(d * d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(m));
}
BENCHMARK(BM_HermitianEig)->DenseRange(3, 7, 2)->Unit(benchmark::kMicrosecond);

void BM_PartialTranspose(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng = make_rng(2);
  const ComplexMatrix m = random_complex(d * d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(partial_transpose(m, d));
}
BENCHMARK(BM_PartialTranspose)->DenseRange(3, 7, 2);

}  // namespace
