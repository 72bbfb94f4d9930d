// Parallel kernels against their serial reference versions.
//
//   ./bench_kernels --benchmark_filter=Row
//
// Set OMP_NUM_THREADS to vary the thread count of the parallel variants.

#include "stieltjes/convergent.hpp"
#include "stieltjes/kernels.hpp"
#include "stieltjes/oracles.hpp"
#include "stieltjes/stirling.hpp"

#include <benchmark/benchmark.h>

using namespace stieltjes;

namespace {

template <bool Parallel>
void BM_StirlingRow(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  const std::vector<BigInt> row = stirling_table().row(n);
  std::vector<BigInt> next;
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::stirling_next_row(row, n, next);
    } else {
      kernels::serial::stirling_next_row(row, n, next);
    }
    benchmark::DoNotOptimize(next.data());
  }
}

template <bool Parallel>
void BM_OddColumnSums(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const mpfr_prec_t bits = 192;
  const std::vector<BigInt> row = stirling_table().row(n);
  std::vector<std::vector<BigFloat>> weights(4);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    for (std::size_t k = 0; k <= n / 2; ++k) weights[i].emplace_back(BigRational(1, static_cast<long>(k + i + 1)), bits);
  }
  for (auto _ : state) {
    auto out = Parallel ? kernels::odd_column_sums(row, weights, bits)
                        : kernels::serial::odd_column_sums(row, weights, bits);
    benchmark::DoNotOptimize(out.data());
  }
}

template <bool Parallel>
void BM_ConvergentSeries(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    ConvergentEvaluator ev({0, 1, 2}, PrecisionContext(128, 32), Parallel);
    ev.advance_to(N);
    benchmark::DoNotOptimize(ev.partial(0));
  }
}

template <bool Parallel>
void BM_JensenFranel(benchmark::State& state) {
  const QuadratureSpec spec = QuadratureSpec::for_context(PrecisionContext(state.range(0), 32));
  for (auto _ : state) benchmark::DoNotOptimize(jensen_franel_integral(1, spec, Parallel));
  state.counters["nodes"] = static_cast<double>(spec.node_count());
}

}  // namespace

BENCHMARK(BM_StirlingRow<true>)->Name("StirlingRow/parallel")->Arg(500)->Arg(2000);
BENCHMARK(BM_StirlingRow<false>)->Name("StirlingRow/serial")->Arg(500)->Arg(2000);
BENCHMARK(BM_OddColumnSums<true>)->Name("OddColumnSums/parallel")->Arg(500)->Arg(2000);
BENCHMARK(BM_OddColumnSums<false>)->Name("OddColumnSums/serial")->Arg(500)->Arg(2000);
BENCHMARK(BM_ConvergentSeries<true>)->Name("ConvergentSeries/parallel")->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvergentSeries<false>)->Name("ConvergentSeries/serial")->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JensenFranel<true>)->Name("JensenFranel/parallel")->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JensenFranel<false>)->Name("JensenFranel/serial")->Arg(128)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
