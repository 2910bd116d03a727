#include <benchmark/benchmark.h>

#include "pnt/pnt.hpp"

namespace {

void BM_SieveCount(benchmark::State& state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pnt::count_primes_sieve(x));
}
BENCHMARK(BM_SieveCount)->RangeMultiplier(10)->Range(1'000'000, 100'000'000)->Unit(benchmark::kMillisecond);

void BM_CombinatorialCount(benchmark::State& state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pnt::count_primes_combinatorial(x));
}
BENCHMARK(BM_CombinatorialCount)->RangeMultiplier(100)->Range(1'000'000, 10'000'000'000)->Unit(benchmark::kMillisecond);

void BM_LnNatural(benchmark::State& state) {
  const pnt::Natural x = pnt::Natural::pow10(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pnt::ln_natural(x));
}
BENCHMARK(BM_LnNatural)->Arg(10)->Arg(25)->Arg(200);

void BM_Decompose(benchmark::State& state) {
  pnt::PrimeEngine engine;
  const auto kind = state.range(0) == 0 ? pnt::SuccessionKind::prime : pnt::SuccessionKind::primorial;
  const pnt::Succession succ(engine, kind);
  const pnt::Natural x = pnt::Natural::pow10(15) + pnt::Natural(12345);
  for (auto _ : state) benchmark::DoNotOptimize(pnt::decompose(succ, x));
}
BENCHMARK(BM_Decompose)->Arg(0)->Arg(1);

void BM_Squeeze(benchmark::State& state) {
  pnt::PrimeEngine engine;
  for (auto _ : state) benchmark::DoNotOptimize(pnt::check_squeeze_brackets(engine, 100, pnt::Natural::pow10(15)));
}
BENCHMARK(BM_Squeeze)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
