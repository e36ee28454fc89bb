#include <benchmark/benchmark.h>

#include "chainconic/conic.hpp"
#include "chainconic/generator.hpp"

using namespace chainconic;

namespace {

ChainConfiguration<Rational> config_for(std::int64_t n) {
  GeneratorProfile profile;
  profile.seed = 42;
  return random_config(static_cast<std::size_t>(n), profile);
}

void BM_PropagateExact(benchmark::State& state) {
  const auto config = config_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(propagate(config));
}
BENCHMARK(BM_PropagateExact)->Arg(4)->Arg(6)->Arg(10)->Arg(16)->Arg(32);

void BM_PropagateFloat(benchmark::State& state) {
  const auto config = to_float(config_for(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(propagate(config));
}
BENCHMARK(BM_PropagateFloat)->Arg(4)->Arg(6)->Arg(10)->Arg(16)->Arg(32);

void BM_VerifyConicExact(benchmark::State& state) {
  const auto config = config_for(state.range(0));
  const auto polygon = center_polygon(propagate(config));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        verify_inscribed_conic(config.carrier_k.center, as_generalized(config.carrier_l), polygon));
  }
}
BENCHMARK(BM_VerifyConicExact)->Arg(4)->Arg(6)->Arg(10)->Arg(16);

void BM_GenerateConfig(benchmark::State& state) {
  GeneratorProfile profile;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    profile.seed = seed++;
    benchmark::DoNotOptimize(generate_config(static_cast<std::size_t>(state.range(0)), profile));
  }
}
BENCHMARK(BM_GenerateConfig)->Arg(6)->Arg(10);

}  // namespace
BENCHMARK_MAIN();
