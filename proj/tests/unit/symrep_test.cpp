#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "secant/error.hpp"
#include "secant/partition.hpp"
#include "secant/symrep.hpp"

using secant::Integer;
using secant::Partition;

namespace {

Integer mult(std::initializer_list<Partition> pis) {
  const std::vector<Partition> v(pis);
  return secant::invariant_multiplicity(v);
}

}  // namespace

TEST(Character, Examples) {
  for (int d = 1; d <= 6; ++d) {
    for (const auto& l : secant::enumerate_partitions(d)) EXPECT_EQ(secant::character(Partition({d}), l), 1);
  }
  EXPECT_EQ(secant::character(Partition({1, 1, 1}), Partition({2, 1})), -1);
  EXPECT_EQ(secant::character(Partition({2, 1}), Partition({3})), -1);
  EXPECT_THROW(secant::character(Partition({2, 1}), Partition({2})), secant::InvalidInput);
}

TEST(Character, AgreesWithSeminormalTraces) {
  for (int d = 2; d <= 5; ++d) {
    for (const auto& pi : secant::enumerate_partitions(d)) {
      for (const auto& l : secant::enumerate_partitions(d)) {
        EXPECT_EQ(Integer(static_cast<long>(secant::character(pi, l))),
                  oracle::character_by_trace(pi.parts(), l.parts()))
            << pi.to_string() << " at " << l.to_string();
      }
    }
  }
}

TEST(Character, RowOrthogonality) {
  for (int d = 1; d <= 7; ++d) {
    const auto ps = secant::enumerate_partitions(d);
    for (const auto& a : ps) {
      for (const auto& b : ps) {
        Integer sum = 0;
        for (const auto& l : ps) {
          sum += secant::class_size(l) * Integer(static_cast<long>(secant::character(a, l) * secant::character(b, l)));
        }
        EXPECT_EQ(sum, a == b ? secant::factorial(d) : Integer(0));
      }
    }
  }
}

TEST(ClassSizes, SumToGroupOrder) {
  for (int d = 1; d <= 9; ++d) {
    Integer total = 0;
    for (const auto& l : secant::enumerate_partitions(d)) total += secant::class_size(l);
    EXPECT_EQ(total, secant::factorial(d));
  }
  EXPECT_EQ(secant::centralizer_order(Partition({2, 2, 1})), 8);
}

TEST(InvariantMultiplicity, Examples) {
  EXPECT_EQ(mult({{2, 1}, {2, 1}}), 1);
  EXPECT_EQ(mult({{3}, {2, 1}}), 0);
  EXPECT_EQ(mult({{2, 1, 1}, {2, 1, 1}, {2, 1, 1}}), 1);
  EXPECT_EQ(mult({{2, 1}, {2, 1}, {2, 1}, {2, 1}}), 3);
}

TEST(InvariantMultiplicity, FourFoldTwoOneAgreesWithProjector) {
  const std::vector<std::vector<int>> shapes(4, std::vector<int>{2, 1});
  EXPECT_EQ(oracle::invariant_dimension_by_projector(shapes), 3u);
  EXPECT_EQ(oracle::invariant_dimension_by_traces(shapes), 3);
}

TEST(InvariantMultiplicity, AgreesWithGroupAveragingOracle) {
  for (int d = 2; d <= 4; ++d) {
    const auto ps = secant::enumerate_partitions(d);
    for (const auto& a : ps)
      for (const auto& b : ps)
        for (const auto& c : ps) {
          const std::vector<Partition> v{a, b, c};
          EXPECT_EQ(secant::invariant_multiplicity(v),
                    oracle::invariant_dimension_by_traces({a.parts(), b.parts(), c.parts()}));
        }
  }
}

TEST(InvariantMultiplicity, SymmetricInArguments) {
  std::vector<Partition> v{{3, 1}, {2, 2}, {2, 1, 1}, {3, 1}};
  const Integer base = secant::invariant_multiplicity(v);
  std::sort(v.begin(), v.end());
  do {
    EXPECT_EQ(secant::invariant_multiplicity(v), base);
  } while (std::next_permutation(v.begin(), v.end()));
}

TEST(InvariantMultiplicity, ReportBreakdownSumsToNumerator) {
  const std::vector<Partition> v{{2, 1, 1}, {2, 1, 1}, {2, 1, 1}};
  const auto rep = secant::invariant_multiplicity_report(v);
  EXPECT_EQ(rep.d, 4);
  EXPECT_EQ(rep.terms.size(), 5u);
  Integer sum = 0;
  for (const auto& t : rep.terms) sum += t.term;
  EXPECT_EQ(sum, rep.numerator);
  EXPECT_EQ(rep.numerator, 24 * rep.multiplicity);
  EXPECT_THROW(secant::invariant_multiplicity(std::vector<Partition>{{2, 1}, {2}}), secant::InvalidInput);
}

TEST(SchurDimension, Examples) {
  EXPECT_EQ(secant::schur_dimension(Partition({2, 1}), 2), 2);
  EXPECT_EQ(secant::schur_dimension(Partition({6, 3, 3}), 3), 10);
  for (int n = 1; n <= 5; ++n)
    for (int d = 0; d <= 5; ++d) {
      EXPECT_EQ(secant::schur_dimension(Partition({d}), n), secant::binomial(n + d - 1, d));
      std::vector<int> col(d, 1);
      EXPECT_EQ(secant::schur_dimension(Partition(col), n), secant::binomial(n, d));
    }
}

TEST(SchurDimension, AgreesWithTableauCountAndWeyl) {
  for (int d = 0; d <= 6; ++d)
    for (const auto& p : secant::enumerate_partitions(d))
      for (int n = 1; n <= 4; ++n) {
        const Integer dim = secant::schur_dimension(p, n);
        EXPECT_EQ(dim == 0, p.length() > n);
        EXPECT_EQ(dim, oracle::count_ssyt(p.parts(), n));
        if (p.length() <= n) {
          std::vector<int> w(n, 0);
          std::copy(p.parts().begin(), p.parts().end(), w.begin());
          EXPECT_EQ(oracle::Q(dim), oracle::weyl_dimension(w));
        }
      }
}

TEST(Isotypic, SquareOfTwoByTwo) {
  const std::vector<int> dims{2, 2};
  const auto comps = secant::isotypic_decomposition(2, dims);
  ASSERT_EQ(comps.size(), 2u);
  for (const auto& c : comps) {
    EXPECT_EQ(c.multiplicity, 1);
    EXPECT_EQ(c.parts[0], c.parts[1]);
  }
}

TEST(Isotypic, DimensionsAddUpToSymmetricPower) {
  for (const std::vector<int>& dims : {std::vector<int>{2, 2, 2}, {2, 3, 3}, {2, 2, 2, 2}, {3, 3, 3}}) {
    long n = 1;
    for (int a : dims) n *= a;
    for (int d = 0; d <= 4; ++d) {
      Integer total = 0;
      for (const auto& c : secant::isotypic_decomposition(d, dims)) {
        EXPECT_GT(c.multiplicity, 0);
        Integer md = 1;
        for (std::size_t j = 0; j < dims.size(); ++j) md *= secant::schur_dimension(c.parts[j], dims[j]);
        EXPECT_EQ(md, c.module_dimension);
        total += c.multiplicity * c.module_dimension;
      }
      EXPECT_EQ(total, secant::binomial(n + d - 1, d));
    }
  }
}

TEST(LittlewoodRichardson, Examples) {
  EXPECT_EQ(secant::littlewood_richardson(Partition({2, 1}), Partition({1, 1}), Partition({1})), 1);
  EXPECT_EQ(secant::littlewood_richardson(Partition({3, 2, 1}), Partition({2, 1}), Partition({2, 1})), 2);
  EXPECT_THROW(secant::littlewood_richardson(Partition({3}), Partition({1}), Partition({1})), secant::InvalidInput);
}

TEST(LittlewoodRichardson, PieriAndSymmetry) {
  for (int w = 0; w <= 6; ++w)
    for (const auto& l : secant::enumerate_partitions(w))
      for (int m = 0; m <= w; ++m)
        for (const auto& mu : secant::enumerate_partitions(m))
          for (const auto& nu : secant::enumerate_partitions(w - m)) {
            const Integer c = secant::littlewood_richardson(l, mu, nu);
            EXPECT_EQ(c, secant::littlewood_richardson(l, nu, mu));
            if (nu == Partition({1})) {
              EXPECT_EQ(c, (l.contains(mu) && w == m + 1) ? 1 : 0);
            }
          }
}

TEST(LittlewoodRichardson, AgreesWithSchurPolynomialProducts) {
  const int k = 4;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (const auto& mu : secant::enumerate_partitions(a, k))
        for (const auto& nu : secant::enumerate_partitions(b, k)) {
          const auto expansion = oracle::schur_expand(
              oracle::poly_multiply(oracle::schur_polynomial(mu.parts(), k), oracle::schur_polynomial(nu.parts(), k)), k);
          const auto product = secant::lr_product(mu, nu, k);
          ASSERT_EQ(product.size(), expansion.size());
          for (const auto& [lambda, c] : product) {
            EXPECT_EQ(c, expansion.at(lambda.parts()));
            EXPECT_EQ(c, secant::littlewood_richardson(lambda, mu, nu));
          }
        }
}

TEST(LittlewoodRichardson, PieriDimensionConsistency) {
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m <= 5; ++m)
      for (const auto& mu : secant::enumerate_partitions(m)) {
        Integer sum = 0;
        for (const auto& [lambda, c] : secant::lr_product(mu, Partition({1}), 64)) sum += c * secant::schur_dimension(lambda, n);
        EXPECT_EQ(sum, secant::schur_dimension(mu, n) * n);
      }
}
