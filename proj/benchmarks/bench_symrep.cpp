#include <benchmark/benchmark.h>

#include "secant/bott.hpp"
#include "secant/symrep.hpp"

namespace {

void BM_InvariantMultiplicity(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto ps = secant::enumerate_partitions(d);
  for (auto _ : state) {
    secant::Integer total = 0;
    for (const auto& a : ps)
      for (const auto& b : ps) total += secant::invariant_multiplicity(std::vector<secant::Partition>{a, b, a});
    benchmark::DoNotOptimize(total);
  }
  state.SetLabel(std::to_string(ps.size()) + " partitions");
}
BENCHMARK(BM_InvariantMultiplicity)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_IsotypicDecomposition(benchmark::State& state) {
  const std::vector<int> dims(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(secant::isotypic_decomposition(4, dims));
}
BENCHMARK(BM_IsotypicDecomposition)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_LittlewoodRichardson(benchmark::State& state) {
  const secant::Partition mu{4, 3, 2, 1}, nu{3, 2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(secant::lr_product(mu, nu, 8));
}
BENCHMARK(BM_LittlewoodRichardson);

void BM_SymmetricPowerAcyclicity(benchmark::State& state) {
  const secant::Shape shape({5, 5, 5, 5});
  for (auto _ : state) benchmark::DoNotOptimize(secant::check_acyclic_Sd_eta(shape, 3, 4));
}
BENCHMARK(BM_SymmetricPowerAcyclicity)->Unit(benchmark::kMillisecond);

}  // namespace
