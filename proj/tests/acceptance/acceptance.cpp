// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "secant/bott.hpp"
#include "secant/equations.hpp"
#include "secant/hilbert.hpp"
#include "secant/resolution.hpp"
#include "secant/symrep.hpp"

using namespace secant;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// ---------------------------------------------------------------------------

void ac1(Outcome& o) {
  std::size_t pairs = 0;
  for (int d = 1; d <= 6; ++d) {
    const auto ps = enumerate_partitions(d);
    for (const auto& a : ps)
      for (const auto& b : ps) {
        const Integer m = invariant_multiplicity(std::vector<Partition>{a, b});
        o.require(m == (a == b ? 1 : 0), "delta for " + a.to_string() + "," + b.to_string());
        ++pairs;
      }
  }
  const Integer m211 = invariant_multiplicity(std::vector<Partition>{{2, 1, 1}, {2, 1, 1}, {2, 1, 1}});
  o.require(m211 == 1, "([211],[211],[211]) = 1");

  const std::vector<Partition> four(4, Partition{2, 1});
  const Integer m21 = invariant_multiplicity(four);
  const std::vector<std::vector<int>> shapes(4, std::vector<int>{2, 1});
  const std::size_t projector = oracle::invariant_dimension_by_projector(shapes);
  o.require(m21 == static_cast<long>(projector), "group-averaging oracle");

  // 816 = Σ over the other components + 16 m.
  Integer rest = 0, total = 0;
  for (const auto& c : isotypic_decomposition(3, std::vector<int>{2, 2, 2, 2})) {
    total += c.multiplicity * c.module_dimension;
    if (c.parts != four) rest += c.multiplicity * c.module_dimension;
  }
  const Integer bookkeeping = (binomial(18, 3) - rest) / 16;
  o.require(total == 816, "dim S^3(C^16) = 816");
  o.require(m21 == bookkeeping, "bookkeeping");
  o.require(m21 == 3, "m = 3");
  o.detail << "delta pairs d<=6: " << pairs << "; ([211]^3)=" << m211 << "; ([21]^4)=" << m21
           << " (projector " << projector << ", bookkeeping " << bookkeeping
           << "); differs from the previously stated value 2 (documented discrepancy)";
}

void ac2(Outcome& o) {
  const BettiNumbers four_expected{{{0, 0}, 1},  {{1, 3}, 32}, {{2, 4}, 78}, {{3, 5}, 48},
                                   {{3, 6}, 20}, {{4, 8}, 57}, {{5, 9}, 48}, {{6, 10}, 12}};
  const BettiNumbers three_expected{{{0, 0}, 1},    {{1, 4}, 27},   {{2, 5}, 27},   {{2, 6}, 30}, {{3, 9}, 223},
                                    {{3, 6}, 1},    {{4, 10}, 351}, {{5, 11}, 189}, {{6, 12}, 30}, {{6, 15}, 1}};
  const auto four = betti_numbers(four_factor_table(), Shape({2, 2, 2, 2}));
  const auto three = betti_numbers(three_factor_table(), Shape({3, 3, 3}));
  o.require(four == four_expected, "four-factor ranks");
  o.require(three == three_expected, "three-factor ranks");
  o.detail << "four-factor " << four.size() << " ranks, three-factor " << three.size() << " ranks match exactly";
}

void ac3(Outcome& o) {
  const auto minors = secant_generators(Shape({2, 2, 2, 2}), 2).explicit_polys();
  const auto strassen = strassen_polys().explicit_polys();
  for (std::uint32_t p : {kDefaultPrime, kSecondPrime}) {
    const auto a = graded_ideal_dimension(minors, 3, p);
    const auto b = graded_ideal_dimension(strassen, 4, p);
    o.require(a == 32, "minor span at p=" + str(p));
    o.require(b == 27, "Strassen span at p=" + str(p));
    o.detail << "p=" << p << ": " << minors.size() << " minors span " << a << ", " << strassen.size()
             << " quartics span " << b << "; ";
  }
}

void ac4(Outcome& o) {
  struct Case {
    const char* name;
    std::vector<SparsePoly> gens;
    const EquivariantBettiTable* table;
  };
  const Case cases[] = {{"4factor", secant_generators(Shape({2, 2, 2, 2}), 2).explicit_polys(), &four_factor_table()},
                        {"3factor", strassen_polys().explicit_polys(), &three_factor_table()}};
  for (const auto& c : cases) {
    const auto betti = betti_numbers(*c.table, Shape(c.table->reference_dims));
    const std::size_t n = c.gens.front().num_vars();
    for (std::uint32_t p : {kDefaultPrime, kSecondPrime}) {
      const auto h = hilbert_function(n, c.gens, 6, p);
      for (const auto& [d, v] : h) {
        const Integer expected = hilbert_from_resolution(betti, static_cast<long>(n), d);
        o.require(v == expected, std::string(c.name) + " d=" + str(d) + " p=" + str(p));
      }
      o.detail << c.name << " p=" << p << " H(6)=" << h.back().second << "; ";
    }
  }
}

void ac5(Outcome& o) {
  const auto four = secant_generators(Shape({2, 2, 2, 2}), 2);
  const auto three = strassen_polys();
  const auto x4 = diagonal_tensor(Shape({2, 2, 2, 2}), 2, RationalField{});
  const auto x3 = diagonal_tensor(Shape({3, 3, 3}), 3, RationalField{});
  for (std::uint32_t p : {kDefaultPrime, kSecondPrime}) {
    const auto a = jacobian_rank_at(four, x4, p);
    const auto b = jacobian_rank_at(three, x3, p);
    o.require(a == 6, "four-factor Jacobian rank at p=" + str(p));
    o.require(b == 6, "Strassen Jacobian rank at p=" + str(p));
    o.detail << "p=" << p << ": ranks " << a << ", " << b << "; ";
  }
  const GeneratorEvaluator<Rational> ev(three, RationalField{});
  std::size_t idx = three.size();
  for (std::size_t i = 0; i < three.size(); ++i)
    if (three.generators[i].provenance == "P_{1,2,3}") idx = i;
  const auto grad = ev.gradient(idx, std::get<RationalTensor>(x3));
  const std::size_t target = three.shape.flat_index(std::vector<int>{0, 1, 2});
  const bool exact = grad.size() == 1 && grad[0].first == target && grad[0].second == -1;
  o.require(exact, "dP_{123} = -dphi_{123}");
  o.detail << "dP_{1,2,3} at x = " << (exact ? "-dphi_{1,2,3}" : "something else");
}

void ac6(Outcome& o) {
  struct Case {
    std::vector<int> dims;
    int r;
  };
  const Case cases[] = {{{2, 3, 3}, 2}, {{2, 3, 4}, 3}, {{2, 4, 4}, 2}, {{2, 4, 4}, 3},
                        {{2, 2, 2, 2}, 2}, {{2, 2, 3, 3}, 2}, {{3, 3, 3, 3}, 2},
                        {{3, 3, 3}, 3}, {{3, 3, 4}, 3}, {{3, 4, 4}, 3}, {{4, 4, 4}, 3}};
  constexpr int kSamples = 500, kRationalSamples = 10, kGeneric = 100;
  for (const auto& c : cases) {
    const Shape shape(c.dims);
    const auto set = secant_generators(shape, c.r);
    const GeneratorEvaluator<ModP> ev(set, PrimeField{});
    int zero = 0, violated = 0, zero_q = 0;
    for (int s = 0; s < kSamples; ++s) {
      const auto t = std::get<ModPTensor>(random_rank_tensor(shape, c.r, 1000 + s, PrimeField{}));
      if (!ev.first_nonvanishing(t)) ++zero;
    }
    const GeneratorEvaluator<Rational> evq(set, RationalField{});
    for (int s = 0; s < kRationalSamples; ++s) {
      const auto t = std::get<RationalTensor>(random_rank_tensor(shape, c.r, 5000 + s, RationalField{}));
      if (!evq.first_nonvanishing(t)) ++zero_q;
    }
    for (int s = 0; s < kGeneric; ++s) {
      const auto t = std::get<ModPTensor>(random_generic_tensor(shape, 9000 + s, PrimeField{}));
      if (ev.first_nonvanishing(t)) ++violated;
    }
    const std::string name = shape.to_string() + " r=" + str(c.r);
    o.require(zero == kSamples && zero_q == kRationalSamples, name + " vanishing");
    o.require(violated == kGeneric, name + " generic violation");
    o.detail << name << " (" << set.size() << " gens): " << zero << "/" << kSamples << " F_p, " << zero_q << "/"
             << kRationalSamples << " Q vanish, " << violated << "/" << kGeneric << " generic violate; ";
  }
}

// Non-decreasing dimension vectors with entries in [lo, hi].
void shapes_with(std::size_t n, int lo, int hi, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (int a = cur.empty() ? lo : cur.back(); a <= hi; ++a) {
    cur.push_back(a);
    shapes_with(n, lo, hi, cur, out);
    cur.pop_back();
  }
}

void ac7(Outcome& o) {
  std::size_t sd_reports = 0, summands = 0, twisted = 0, twisted_summands = 0;
  std::mt19937_64 rng(0x7777);
  for (std::size_t n = 2; n <= 4; ++n)
    for (int r = 1; r <= 3; ++r) {
      std::vector<std::vector<int>> shapes;
      std::vector<int> cur;
      shapes_with(n, std::max(2, r), 5, cur, shapes);
      int power = 1;
      for (std::size_t i = 0; i + 1 < n; ++i) power *= r;
      const auto box = partitions_in_box(r, power - r);
      for (const auto& dims : shapes) {
        const Shape shape(dims);
        for (int d = 0; d <= 4; ++d) {
          const auto rep = check_acyclic_Sd_eta(shape, r, d);
          ++sd_reports;
          summands += rep.summands.size();
          o.require(rep.all_degree_zero && !rep.any_higher, "S^" + str(d) + " eta on " + shape.to_string());
        }
        const auto check = [&](const std::vector<Partition>& pis) {
          const auto rep = twisted_dual_acyclicity(pis, shape, r);
          ++twisted;
          twisted_summands += rep.summands_checked;
          if (!rep.hypothesis_holds || !rep.acyclic) {
            std::string what = "twisted dual on " + shape.to_string() + " r=" + str(r);
            for (const auto& p : pis) what += " " + p.to_string();
            o.require(false, what + (rep.first_failure.empty() ? "" : ": " + rep.first_failure));
          }
        };
        // Every box partition on each factor with the others trivial, then
        // random tuples.
        for (std::size_t j = 0; j < n; ++j) {
          if (j > 0 && dims[j] == dims[j - 1]) continue;
          for (const auto& p : box) {
            std::vector<Partition> pis(n);
            pis[j] = p;
            check(pis);
          }
        }
        for (int k = 0; k < 25; ++k) {
          std::vector<Partition> pis;
          for (std::size_t j = 0; j < n; ++j) pis.push_back(box[rng() % box.size()]);
          check(pis);
        }
      }
    }
  o.detail << sd_reports << " S^d(eta) reports (" << summands << " summands) all degree 0; " << twisted
           << " twisted duals (" << twisted_summands << " summands with S^{<=2} eta) acyclic, hypothesis holding";
}

void ac8(Outcome& o) {
  std::mt19937_64 rng(0x8888);
  int failures = 0;
  for (int s = 0; s < 10000; ++s) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const int r = 1 + static_cast<int>(rng() % 5);
    std::vector<int> dims;
    for (int j = 0; j < n; ++j) dims.push_back(std::max(2, r) + static_cast<int>(rng() % 7));
    try {
      const auto b = resolution_length_budget(Shape(dims), r);
      if (b.budget != b.ambient_codim) ++failures;
    } catch (const InternalError&) {
      ++failures;
    }
  }
  o.require(failures == 0, "length budget identity");
  const Integer c4 = codimension(Shape({2, 2, 2, 2}), 2), c3 = codimension(Shape({3, 3, 3}), 3);
  o.require(c4 == 6 && c3 == 6, "codimension 6");
  const auto cap4 = partition_cap_check(four_factor_table(), 6);
  const auto cap3 = partition_cap_check(three_factor_table(), 6);
  o.require(cap4.passed() && cap3.passed(), "partition cap");
  o.detail << "10000 budgets, " << failures << " failures; codim " << c4 << ", " << c3 << "; largest first parts "
           << cap4.largest_first_part << " and " << cap3.largest_first_part << " (cap 6, "
           << cap4.partitions_checked + cap3.partitions_checked << " partitions)";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"AC1 character and multiplicity suite", ac1}, {"AC2 Betti reconciliation", ac2},
      {"AC3 generator span dimensions", ac3},        {"AC4 Hilbert cross-check", ac4},
      {"AC5 Jacobian ranks", ac5},                   {"AC6 vanishing on secant varieties", ac6},
      {"AC7 Bott suite", ac7},                       {"AC8 arithmetic identities", ac8}};
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", name, secs, o.detail.str().c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
