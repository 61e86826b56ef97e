#include <benchmark/benchmark.h>

#include "rqc/correlations.hpp"
#include "rqc/families.hpp"
#include "rqc/oracle.hpp"

namespace {

const rqc::XStateParams kState = rqc::make_state({rqc::Family::Mems, 0.7});

void BM_ClosedFormMeasures(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(rqc::measures(kState));
}
BENCHMARK(BM_ClosedFormMeasures);

void BM_ConcurrenceGeneral(benchmark::State& st) {
  const rqc::DensityMatrix rho = rqc::xstate_to_matrix(kState);
  for (auto _ : st) benchmark::DoNotOptimize(rqc::concurrence_general(rho));
}
BENCHMARK(BM_ConcurrenceGeneral);

void BM_LaqcOracle(benchmark::State& st) {
  const rqc::DensityMatrix rho = rqc::xstate_to_matrix(kState);
  const int grid = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(rqc::laqc_oracle(rho, grid, 2).value);
}
BENCHMARK(BM_LaqcOracle)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_QsOracle(benchmark::State& st) {
  const rqc::DensityMatrix rho = rqc::xstate_to_matrix(kState);
  for (auto _ : st) benchmark::DoNotOptimize(rqc::qs_oracle(rho, 16, 2).value);
}
BENCHMARK(BM_QsOracle)->Unit(benchmark::kMillisecond);

}  // namespace
