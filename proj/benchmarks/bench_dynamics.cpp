#include <benchmark/benchmark.h>

#include "rqc/dynamics.hpp"
#include "rqc/families.hpp"
#include "rqc/noise.hpp"

namespace {

void BM_CommonBath(benchmark::State& st) {
  const rqc::DensityMatrix rho = rqc::xstate_to_matrix(rqc::make_state({rqc::Family::Werner, 0.8}));
  for (auto _ : st) benchmark::DoNotOptimize(rqc::apply_common_bath(rho, 0.3));
}
BENCHMARK(BM_CommonBath);

void BM_Trajectory(benchmark::State& st) {
  const auto s = rqc::make_state({rqc::Family::Werner, 2.0 / 3.0});
  const rqc::Grid g{0.0, 3.0, static_cast<int>(st.range(0))};
  for (auto _ : st) benchmark::DoNotOptimize(rqc::trajectory(s, rqc::RtnNoise{}, g));
}
BENCHMARK(BM_Trajectory)->Arg(600)->Arg(6000);

void BM_Events(benchmark::State& st) {
  const auto s = rqc::make_state({rqc::Family::Werner, 2.0 / 3.0});
  const auto rows = rqc::trajectory(s, rqc::RtnNoise{}, {});
  for (auto _ : st) benchmark::DoNotOptimize(rqc::detect_events(s, rqc::RtnNoise{}, rows));
}
BENCHMARK(BM_Events);

void BM_Surface(benchmark::State& st) {
  rqc::SweepSpec spec;
  spec.family = rqc::Family::Mnms;
  for (auto _ : st)
    benchmark::DoNotOptimize(rqc::surface(spec, rqc::Measure::Concurrence, rqc::Measure::Qs));
}
BENCHMARK(BM_Surface)->Unit(benchmark::kMillisecond);

}  // namespace
