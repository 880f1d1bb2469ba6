#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "secant/error.hpp"
#include "secant/polynomial.hpp"
#include "secant/symrep.hpp"

using secant::Monomial;
using secant::Rational;
using secant::RationalTensor;
using secant::Shape;
using secant::SparsePoly;

namespace {

SparsePoly random_poly(const Shape& s, int degree, int terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> var(0, static_cast<std::uint32_t>(s.volume() - 1));
  std::uniform_int_distribution<int> coef(-5, 5);
  SparsePoly f(s);
  for (int k = 0; k < terms; ++k) {
    std::vector<std::uint32_t> vs;
    for (int i = 0; i < degree; ++i) vs.push_back(var(rng));
    f.add_term(Monomial(vs), coef(rng));
  }
  return f;
}

RationalTensor random_point(const Shape& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-7, 7);
  std::vector<Rational> e;
  for (std::size_t i = 0; i < s.volume(); ++i) e.push_back(Rational(d(rng)) / static_cast<long>(1 + i % 3));
  return RationalTensor(s, e);
}

}  // namespace

TEST(Monomial, CanonicalFormAndProduct) {
  const Monomial m({3, 1, 3});
  EXPECT_EQ(m.vars(), (std::vector<std::uint32_t>{1, 3, 3}));
  EXPECT_EQ(m.exponents(), (std::vector<std::pair<std::uint32_t, int>>{{1, 1}, {3, 2}}));
  EXPECT_EQ(m.exponent_vector(4), (std::vector<int>{0, 1, 0, 2}));
  EXPECT_EQ(Monomial({2}) * Monomial({0, 5}), Monomial({0, 2, 5}));
}

TEST(Monomial, GrevlexOrder) {
  const secant::GrevlexLess less;
  EXPECT_TRUE(less(Monomial({5}), Monomial({0, 0})));
  // φ_0 is the smallest variable.
  EXPECT_TRUE(less(Monomial({0}), Monomial({1})));
  // Same degree: the monomial with more of the smallest variable is smaller.
  EXPECT_TRUE(less(Monomial({0, 3}), Monomial({1, 2})));
  EXPECT_FALSE(less(Monomial({1, 2}), Monomial({1, 2})));
  const auto ms = secant::monomials_of_degree(4, 3);
  EXPECT_EQ(ms.size(), 20u);
  for (std::size_t i = 0; i + 1 < ms.size(); ++i) EXPECT_TRUE(less(ms[i], ms[i + 1]));
}

TEST(SparsePoly, ArithmeticAndCancellation) {
  const Shape s({2, 2});
  const auto x = SparsePoly::variable(s, 0), y = SparsePoly::variable(s, 3);
  const auto f = x * y - y * x;
  EXPECT_TRUE(f.is_zero());
  EXPECT_EQ(f.degree(), -1);
  const auto g = (x + y) * (x - y);
  EXPECT_EQ(g, x * x - y * y);
  EXPECT_TRUE(g.is_homogeneous());
  EXPECT_FALSE((g + SparsePoly::constant(s, 1)).is_homogeneous());
  EXPECT_EQ(g.scaled(Rational(1, 2)).terms().begin()->second * 2, g.terms().begin()->second);
  EXPECT_THROW(x + SparsePoly::variable(Shape({2, 3}), 0), secant::InvalidInput);
  EXPECT_EQ((x * y).to_string(), "phi_{1,1}*phi_{2,2}");
}

TEST(Evaluate, Examples) {
  const Shape s({2, 2, 2});
  const auto f = SparsePoly::variable(s, 0);
  RationalTensor e(s, Rational(0));
  e[0] = 1;
  EXPECT_EQ(secant::evaluate(f, e), 1);
  EXPECT_THROW(secant::evaluate(f, RationalTensor(Shape({2, 2}), Rational(0))), secant::InvalidInput);

  const auto ab = SparsePoly::variable(s, 2) * SparsePoly::variable(s, 5);
  RationalTensor ea(s, Rational(0));
  ea[2] = 1;
  const auto grad = secant::differential_at(ab, ea);
  ASSERT_EQ(grad.size(), 1u);
  EXPECT_EQ(grad[0].first, 5u);
  EXPECT_EQ(grad[0].second, 1);
}

TEST(Evaluate, HomogeneityAndFieldAgreement) {
  std::mt19937_64 rng(17);
  const Shape s({2, 3});
  for (int d = 1; d <= 4; ++d) {
    const auto f = random_poly(s, d, 8, rng);
    const auto t = random_point(s, rng);
    Rational scale = 1;
    for (int i = 0; i < d; ++i) scale *= 2;
    EXPECT_EQ(secant::evaluate(f, t.scaled(Rational(2))), scale * secant::evaluate(f, t));

    const secant::PrimeField field{};
    std::vector<secant::ModP> e;
    for (const auto& x : t.entries()) e.push_back(field.from_rational(x));
    const secant::ModPTensor tp(s, e);
    EXPECT_EQ(secant::evaluate(f, tp), field.from_rational(secant::evaluate(f, t)));
    EXPECT_EQ(secant::CompiledPoly<secant::ModP>(f, field).evaluate(tp.entries()), secant::evaluate(f, tp));
  }
}

TEST(Differential, AgreesWithTaylorCoefficient) {
  // ∂f/∂φ_i is the linear coefficient of t ↦ f(T + t·e_i).
  std::mt19937_64 rng(23);
  const Shape s({2, 2, 2});
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 2 + trial % 3;
    const auto f = random_poly(s, d, 10, rng);
    const auto t = random_point(s, rng);
    const auto grad = secant::differential_at(f, t);
    std::vector<Rational> dense(s.volume(), Rational(0));
    for (const auto& [i, v] : grad) {
      EXPECT_NE(sgn(v), 0);
      dense[i] = v;
    }
    for (std::size_t i = 0; i < s.volume(); ++i) {
      const auto coeffs = oracle::interpolate(
          [&](long x) {
            RationalTensor shifted = t;
            shifted[i] += x;
            return secant::evaluate(f, shifted);
          },
          d);
      EXPECT_EQ(dense[i], coeffs[1]);
    }
  }
}

TEST(MonomialsOfDegree, CountIsBinomial) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (int d = 0; d <= 4; ++d)
      EXPECT_EQ(secant::monomials_of_degree(n, d).size(), secant::binomial(static_cast<long>(n) + d - 1, d).get_ui());
}
