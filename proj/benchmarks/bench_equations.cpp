#include <benchmark/benchmark.h>

#include "secant/equations.hpp"
#include "secant/hilbert.hpp"

namespace {

void BM_StrassenHilbert(benchmark::State& state) {
  const auto gens = secant::strassen_polys().explicit_polys();
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(secant::graded_ideal_dimension(gens, d, secant::kDefaultPrime));
}
BENCHMARK(BM_StrassenHilbert)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_FourFactorHilbert(benchmark::State& state) {
  const auto gens = secant::secant_generators(secant::Shape({2, 2, 2, 2}), 2).explicit_polys();
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(secant::graded_ideal_dimension(gens, d, secant::kDefaultPrime));
}
BENCHMARK(BM_FourFactorHilbert)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_EvaluateGenerators(benchmark::State& state) {
  const std::vector<secant::Shape> shapes{secant::Shape({3, 3, 3}), secant::Shape({3, 3, 3, 3}),
                                          secant::Shape({4, 4, 4})};
  const std::vector<int> rs{3, 2, 3};
  const auto i = static_cast<std::size_t>(state.range(0));
  const auto set = secant::secant_generators(shapes[i], rs[i]);
  const secant::GeneratorEvaluator<secant::ModP> ev(set, secant::PrimeField{});
  const auto t = std::get<secant::ModPTensor>(secant::random_rank_tensor(shapes[i], rs[i], 1, secant::PrimeField{}));
  for (auto _ : state) benchmark::DoNotOptimize(ev.evaluate_all(t));
  state.SetLabel(shapes[i].to_string() + ", " + std::to_string(set.size()) + " generators");
}
BENCHMARK(BM_EvaluateGenerators)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_JacobianRank(benchmark::State& state) {
  const auto set = secant::strassen_polys();
  const auto x = secant::diagonal_tensor(secant::Shape({3, 3, 3}), 3, secant::RationalField{});
  for (auto _ : state) benchmark::DoNotOptimize(secant::jacobian_rank_at(set, x, secant::kDefaultPrime));
}
BENCHMARK(BM_JacobianRank)->Unit(benchmark::kMicrosecond);

}  // namespace
