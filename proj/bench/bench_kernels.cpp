// Serial versus OpenMP timings for the hot kernels, plus end-to-end cascade
// and DWT runs on a q = 5 bank.

#include "mathieu/cascade.hpp"
#include "mathieu/dwt.hpp"
#include "mathieu/kernels.hpp"
#include "mathieu/mathieu.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

using namespace mathieu;
namespace k = mathieu::kernels;

std::vector<double> ramp(std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 / static_cast<double>(i + 1);
  return v;
}

template <auto Kernel>
void odd_harmonics(benchmark::State& state) {
  const auto coeffs = ramp(40);
  const auto grid = periodic_grid(static_cast<std::size_t>(state.range(0)));
  std::vector<double> out(grid.size());
  for (auto _ : state) {
    Kernel(coeffs, grid, k::Harmonic::cosine, 2, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void upsample(benchmark::State& state) {
  const auto signal = ramp(static_cast<std::size_t>(state.range(0)));
  const auto filter = ramp(20);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(signal, filter));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void analysis(benchmark::State& state) {
  const auto x = ramp(static_cast<std::size_t>(state.range(0)));
  const auto taps = ramp(20);
  std::vector<double> out(x.size() / 2);
  for (auto _ : state) {
    Kernel(x, taps, -9, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void cascade_q5(benchmark::State& state) {
  const auto bank = make_filter_bank(5, 5.0);
  const auto iterations = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cascade_scaling(bank, iterations));
}

void dwt_round_trip(benchmark::State& state) {
  const auto bank = make_filter_bank(5, 5.0);
  const auto length = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(round_trip_error(bank, length, 3, 10));
}

} // namespace

BENCHMARK(odd_harmonics<k::serial::odd_harmonic_series>)->Name("odd_harmonics/serial")->Range(1 << 10, 1 << 16);
BENCHMARK(odd_harmonics<k::parallel::odd_harmonic_series>)->Name("odd_harmonics/parallel")->Range(1 << 10, 1 << 16);
BENCHMARK(upsample<k::serial::upsample_convolve>)->Name("upsample_convolve/serial")->Range(1 << 10, 1 << 20);
BENCHMARK(upsample<k::parallel::upsample_convolve>)->Name("upsample_convolve/parallel")->Range(1 << 10, 1 << 20);
BENCHMARK(analysis<k::serial::periodic_analysis>)->Name("periodic_analysis/serial")->Range(1 << 10, 1 << 20);
BENCHMARK(analysis<k::parallel::periodic_analysis>)->Name("periodic_analysis/parallel")->Range(1 << 10, 1 << 20);
BENCHMARK(cascade_q5)->DenseRange(6, 14, 4);
BENCHMARK(dwt_round_trip)->Range(256, 1 << 16);

BENCHMARK_MAIN();
