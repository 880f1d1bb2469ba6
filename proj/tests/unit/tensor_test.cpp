#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "secant/error.hpp"
#include "secant/tensor.hpp"
#include "test_support.hpp"

using secant::AnyTensor;
using secant::ModPTensor;
using secant::PrimeField;
using secant::Rational;
using secant::RationalField;
using secant::RationalTensor;
using secant::Shape;

namespace {

RationalTensor counting_tensor(const Shape& s) {
  std::vector<Rational> e;
  for (std::size_t i = 0; i < s.volume(); ++i) e.emplace_back(static_cast<long>(i + 1));
  return RationalTensor(s, e);
}

Rational phi(const RationalTensor& t, std::vector<int> one_based) {
  for (int& i : one_based) --i;
  return t.at(one_based);
}

}  // namespace

TEST(Shape, IndexingRoundTrip) {
  const Shape s({2, 3, 4});
  EXPECT_EQ(s.volume(), 24u);
  for (std::size_t f = 0; f < s.volume(); ++f) EXPECT_EQ(s.flat_index(s.multi_index(f)), f);
  EXPECT_EQ(s.flat_index(std::vector<int>{0, 0, 1}), 1u);
  EXPECT_EQ(s.coordinate_name(1), "phi_{1,1,2}");
  EXPECT_THROW(Shape({2}), secant::InvalidInput);
  EXPECT_THROW(Shape({2, 1}), secant::InvalidInput);
}

TEST(Flatten, BasisTensorAndComplementTranspose) {
  const Shape s({2, 3, 2});
  const auto e = std::get<RationalTensor>(secant::basis_tensor(s, std::vector<int>{1, 1, 1}, RationalField{}));
  const auto m = secant::flatten(e, {1, 3});
  EXPECT_EQ(m.rows(), 4u);
  EXPECT_EQ(m.cols(), 3u);
  EXPECT_EQ(m(0, 0), 1);
  EXPECT_EQ(secant::rank(m), 1u);

  const auto t = counting_tensor(Shape({2, 2, 3, 2}));
  for (const auto& split : secant::all_splits(4)) {
    EXPECT_EQ(secant::flatten(t, secant::complement_split(4, split)), secant::flatten(t, split).transpose());
  }
  EXPECT_THROW(secant::flatten(t, {}), secant::InvalidInput);
  EXPECT_THROW(secant::flatten(t, {1, 5}), secant::InvalidInput);
}

TEST(Flatten, MatchesDisplayedFourFactorLayouts) {
  const auto t = counting_tensor(Shape({2, 2, 2, 2}));
  // Rows indexed by (i3, i4), columns by (i1, i2), both lexicographic.
  const auto m = secant::flatten(t, {3, 4});
  const int rows[4][2] = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      EXPECT_EQ(m(r, c), phi(t, {rows[c][0], rows[c][1], rows[r][0], rows[r][1]}));
  EXPECT_EQ(m(0, 1), phi(t, {1, 2, 1, 1}));
  EXPECT_EQ(m(1, 0), phi(t, {1, 1, 1, 2}));

  // Rows (i2, i4), columns (i1, i3).
  const auto m2 = secant::flatten(t, {2, 4});
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      EXPECT_EQ(m2(r, c), phi(t, {rows[c][0], rows[r][0], rows[c][1], rows[r][1]}));
}

TEST(RandomTensors, SeedDeterminism) {
  const Shape s({2, 3, 3});
  EXPECT_EQ(secant::random_rank_tensor(s, 2, 99, RationalField{}), secant::random_rank_tensor(s, 2, 99, RationalField{}));
  EXPECT_NE(secant::random_rank_tensor(s, 2, 99, RationalField{}), secant::random_rank_tensor(s, 2, 100, RationalField{}));
  EXPECT_EQ(secant::random_generic_tensor(s, 5, PrimeField{}), secant::random_generic_tensor(s, 5, PrimeField{}));
  const auto t = std::get<ModPTensor>(secant::random_rank_tensor(s, 1, 1, PrimeField{}));
  EXPECT_EQ(t[0].modulus(), secant::kDefaultPrime);
}

TEST(RandomTensors, FlatteningRanksBoundedByR) {
  for (int r = 1; r <= 3; ++r)
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto t = std::get<RationalTensor>(secant::random_rank_tensor(Shape({2, 2, 2, 2}), r, seed, RationalField{}));
      for (const auto& v : secant::flattening_rank_test(t, r)) {
        EXPECT_TRUE(v.within_bound);
        EXPECT_LE(v.rank, static_cast<std::size_t>(r));
      }
      if (r == 1) {
        for (auto k : secant::multilinear_rank(t)) EXPECT_EQ(k, 1u);
      }
    }
}

TEST(RandomTensors, GenericTensorFailsRankTwoFlatteningTest) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto t = std::get<RationalTensor>(secant::random_generic_tensor(Shape({2, 2, 2, 2}), seed, RationalField{}));
    bool any_false = false;
    for (const auto& v : secant::flattening_rank_test(t, 2)) any_false |= !v.within_bound;
    EXPECT_TRUE(any_false);
    for (const auto& v : secant::flattening_rank_test(t, 4)) EXPECT_TRUE(v.within_bound);
  }
}

TEST(MultilinearRank, Examples) {
  const auto d = std::get<RationalTensor>(secant::diagonal_tensor(Shape({3, 3, 3}), 3, RationalField{}));
  EXPECT_EQ(secant::multilinear_rank(d), (std::vector<std::size_t>{3, 3, 3}));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto t = std::get<ModPTensor>(secant::random_rank_tensor(Shape({2, 2, 2}), 2, seed, PrimeField{}));
    EXPECT_EQ(secant::multilinear_rank(t), (std::vector<std::size_t>{2, 2, 2}));
  }
}

TEST(MultilinearRank, AgreesWithOracleRankOfFlattening) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto t = std::get<RationalTensor>(secant::random_rank_tensor(Shape({3, 4, 2}), 2, seed, RationalField{}));
    const auto ml = secant::multilinear_rank(t);
    for (int j = 1; j <= 3; ++j) {
      EXPECT_EQ(ml[j - 1], oracle::rank(support::to_oracle(secant::flatten(t, {j}))));
    }
  }
}

TEST(RankOne, OuterProduct) {
  const Shape s({2, 3});
  const auto t = secant::rank_one<Rational>(s, {{1, 2}, {3, 0, -1}});
  EXPECT_EQ(t.at(std::vector<int>{1, 0}), 6);
  EXPECT_EQ(t.at(std::vector<int>{1, 2}), -2);
  EXPECT_EQ(t.at(std::vector<int>{0, 1}), 0);
}
