#include <benchmark/benchmark.h>

#include "mumw/basis.hpp"
#include "mumw/verify.hpp"
#include "mumw/witness.hpp"

namespace {

using namespace mumw;

WitnessSpec shift_spec(int d) {
  const HermitianBasis b = gellmann_basis(d);
  WitnessSpec spec = make_spec(b, d + 1, d + 1, kappa_opt(b));
  spec.rotations[d] = permutation_rotation(d, 1);
  return spec;
}

void BM_Seesaw(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const BipartiteOperator w = witness_Wtilde(shift_spec(d));
  SeesawOptions opt;
  opt.restarts = 8;
  for (auto _ : state) benchmark::DoNotOptimize(block_positivity_min(w, opt));
}
BENCHMARK(BM_Seesaw)->DenseRange(3, 5, 1)->Unit(benchmark::kMillisecond);

void BM_PositivitySampling(benchmark::State& state) {
  const WitnessSpec spec = shift_spec(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_positivity_condition(spec, 1000, 3));
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_PositivitySampling)->DenseRange(3, 5, 1)->Unit(benchmark::kMillisecond);

void BM_DecompositionSearch(benchmark::State& state) {
  const BipartiteOperator w = reduction_witness(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(search_decomposition(w, 2000));
}
BENCHMARK(BM_DecompositionSearch)->DenseRange(3, 4, 1)->Unit(benchmark::kMillisecond);

}  // namespace
