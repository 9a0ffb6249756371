#include <benchmark/benchmark.h>

#include "zsindex/campaign.hpp"

using namespace zsindex;

namespace {

VerifyOptions theorem13() {
  VerifyOptions o;
  o.filter = Filter::theorem13;
  return o;
}

void BM_VerifySerial(benchmark::State& state) {
  const auto opt = theorem13();
  for (auto _ : state) benchmark::DoNotOptimize(verify_n_serial(state.range(0), opt));
}

void BM_VerifyParallel(benchmark::State& state) {
  const auto opt = theorem13();
  for (auto _ : state) benchmark::DoNotOptimize(verify_n(state.range(0), opt));
}

void BM_IndexSerial(benchmark::State& state) {
  const Value n = state.range(0);
  const ZsSequence s(n, {1, 2, 3, n - 6});
  IndexOptions no_exit{false};
  for (auto _ : state) benchmark::DoNotOptimize(index_oracle(s, no_exit));
}

void BM_IndexParallel(benchmark::State& state) {
  const Value n = state.range(0);
  const ZsSequence s(n, {1, 2, 3, n - 6});
  IndexOptions no_exit{false};
  for (auto _ : state) benchmark::DoNotOptimize(index_oracle_parallel(s, no_exit));
}

void BM_ScanSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(counterexample_scan_serial(8, state.range(0)));
}

void BM_ScanParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(counterexample_scan(8, state.range(0)));
}

}  // namespace

BENCHMARK(BM_VerifySerial)->Arg(55)->Arg(121)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Arg(55)->Arg(121)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IndexSerial)->Arg(1001)->Arg(100003);
BENCHMARK(BM_IndexParallel)->Arg(1001)->Arg(100003);
BENCHMARK(BM_ScanSerial)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(30)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
