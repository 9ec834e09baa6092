// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include "omega/measures/montecarlo.hpp"
#include "omega/minilang/census.hpp"
#include "omega/weights/audit.hpp"
#include "omega/weights/corpus.hpp"

namespace {

using namespace omega;

void BM_CensusSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(minilang::halting_census_serial(state.range(0), 200));
}
void BM_CensusParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(minilang::halting_census(state.range(0), 200));
}
BENCHMARK(BM_CensusSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

const std::vector<logic::Theory>& corpus(std::size_t n) {
  static const auto c = weights::random_corpus(42, 500);
  static std::vector<logic::Theory> prefix;
  prefix.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n));
  return prefix;
}

void BM_EntailmentSerial(benchmark::State& state) {
  const auto c = corpus(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(weights::entailment_matrix_serial(c));
}
void BM_EntailmentParallel(benchmark::State& state) {
  const auto c = corpus(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(weights::entailment_matrix(c));
}
BENCHMARK(BM_EntailmentSerial)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EntailmentParallel)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_HpAuditSerial(benchmark::State& state) {
  const auto c = corpus(state.range(0));
  const auto w = weights::make_weight("w5");
  for (auto _ : state) benchmark::DoNotOptimize(weights::hp_audit_serial(*w, c));
}
void BM_HpAuditParallel(benchmark::State& state) {
  const auto c = corpus(state.range(0));
  const auto w = weights::make_weight("w5");
  for (auto _ : state) benchmark::DoNotOptimize(weights::hp_audit(*w, c));
}
BENCHMARK(BM_HpAuditSerial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HpAuditParallel)->Arg(200)->Unit(benchmark::kMillisecond);

prefixfree::StringSet coin_set() {
  return prefixfree::StringSet({exact::BitString::parse("1"), exact::BitString::parse("011"),
                                exact::BitString::parse("0100")});
}

void BM_MonteCarloSerial(benchmark::State& state) {
  const auto s = coin_set();
  for (auto _ : state) benchmark::DoNotOptimize(measures::sample_real_prefix_serial(s, state.range(0), 1));
}
void BM_MonteCarloParallel(benchmark::State& state) {
  const auto s = coin_set();
  for (auto _ : state) benchmark::DoNotOptimize(measures::sample_real_prefix(s, state.range(0), 1));
}
BENCHMARK(BM_MonteCarloSerial)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloParallel)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
