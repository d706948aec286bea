#include <benchmark/benchmark.h>

#include "gha/hartree.hpp"
#include "gha/hipt.hpp"
#include "gha/oracle_diag.hpp"
#include "gha/qft.hpp"
#include "gha/reports.hpp"

namespace {

void BM_SolveGap(benchmark::State& state) {
  const gha::OscillatorModel model(static_cast<int>(state.range(0)), 1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(gha::solve_gap(model, 10, gha::Phase::AHO));
}
BENCHMARK(BM_SolveGap)->Arg(4)->Arg(6)->Arg(8);

void BM_SolveLevelDoubleWell(benchmark::State& state) {
  const gha::OscillatorModel model(4, -1.0, 0.05);
  for (auto _ : state) benchmark::DoNotOptimize(gha::solve_level(model, 0));
}
BENCHMARK(BM_SolveLevelDoubleWell);

void BM_SecondOrder(benchmark::State& state) {
  const gha::OscillatorModel model(static_cast<int>(state.range(0)), 1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(gha::second_order(model, 10));
}
BENCHMARK(BM_SecondOrder)->Arg(4)->Arg(6)->Arg(8);

void BM_TruncatedSpectrum(benchmark::State& state) {
  const gha::OscillatorModel model(4, 1.0, 1.0);
  const gha::TruncatedBasis basis(static_cast<std::size_t>(state.range(0)), 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(gha::truncated_spectrum(model, basis));
}
BENCHMARK(BM_TruncatedSpectrum)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_MassGap(benchmark::State& state) {
  const gha::qft::FieldTheory theory{1.0, 0.1, 1e3};
  for (auto _ : state) benchmark::DoNotOptimize(gha::qft::solve_mass_gap(theory, 0.5));
}
BENCHMARK(BM_MassGap);

void BM_RunTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gha::run_table(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_RunTable)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
