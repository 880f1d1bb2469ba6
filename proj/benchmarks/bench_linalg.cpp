#include <benchmark/benchmark.h>

#include <random>

#include "secant/linalg.hpp"

namespace {

secant::DenseMatrix<secant::Rational> random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-50, 50);
  secant::DenseMatrix<secant::Rational> m(n, n, secant::Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

void BM_BareissRank(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(secant::rank(m));
}
BENCHMARK(BM_BareissRank)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMicrosecond);

void BM_PrimeFieldRank(benchmark::State& state) {
  const auto q = random_matrix(static_cast<std::size_t>(state.range(0)), 2);
  std::vector<secant::ModP> e;
  for (const auto& x : q.entries()) e.push_back(secant::ModP::from_rational(x, secant::kDefaultPrime));
  const secant::DenseMatrix<secant::ModP> m(q.rows(), q.cols(), e);
  for (auto _ : state) benchmark::DoNotOptimize(secant::rank(m));
}
BENCHMARK(BM_PrimeFieldRank)->RangeMultiplier(2)->Range(8, 128)->Unit(benchmark::kMicrosecond);

void BM_SparseRowSpace(benchmark::State& state) {
  const std::size_t cols = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  secant::SparseRowSet rows(cols, secant::kDefaultPrime);
  for (std::size_t i = 0; i < cols; ++i) {
    secant::SparseRow row;
    for (int k = 0; k < 6; ++k)
      row.emplace_back(static_cast<std::uint32_t>(rng() % cols), static_cast<std::uint32_t>(1 + rng() % 1000));
    rows.add_row(row);
  }
  for (auto _ : state) benchmark::DoNotOptimize(secant::row_space_dimension(rows, secant::kDefaultPrime));
}
BENCHMARK(BM_SparseRowSpace)->RangeMultiplier(2)->Range(256, 1024)->Unit(benchmark::kMillisecond);

}  // namespace
