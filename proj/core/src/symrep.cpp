#include "secant/symrep.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "secant/error.hpp"

namespace secant {

Integer factorial(int n) {
  if (n < 0) throw InvalidInput("factorial of a negative number");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

Integer centralizer_order(const CycleType& lambda) {
  Integer z = 1;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const auto m = static_cast<int>(j - i);
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[i]), static_cast<unsigned long>(m));
    z *= power * factorial(m);
    i = j;
  }
  return z;
}

Integer class_size(const CycleType& lambda) {
  Integer n = factorial(lambda.weight());
  Integer z = centralizer_order(lambda);
  if (n % z != 0) throw InternalError("centralizer order does not divide d!");
  return n / z;
}

namespace {

using CharKey = std::pair<std::vector<int>, std::vector<int>>;

class CharacterMemo {
 public:
  std::optional<std::int64_t> find(const CharKey& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void insert(CharKey key, std::int64_t value) {
    std::unique_lock lock(mutex_);
    table_.emplace(std::move(key), value);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<CharKey, std::int64_t> table_;
};

CharacterMemo& memo() {
  static CharacterMemo instance;
  return instance;
}

// Partition ↔ beta-set (first-column hook lengths) with a fixed length L.
std::vector<int> beta_set(const std::vector<int>& parts) {
  const int len = static_cast<int>(parts.size());
  std::vector<int> beta(parts.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + (len - 1 - i);
  return beta;
}

std::int64_t mn_character(const std::vector<int>& parts, const std::vector<int>& cycles) {
  if (cycles.empty()) return parts.empty() ? 1 : 0;
  CharKey key{parts, cycles};
  if (auto hit = memo().find(key)) return *hit;

  // Strip a rim hook of length k = largest remaining cycle.
  const int k = cycles.front();
  std::vector<int> rest_cycles(cycles.begin() + 1, cycles.end());
  std::vector<int> beta = beta_set(parts);
  const int len = static_cast<int>(parts.size());

  std::int64_t total = 0;
  for (std::size_t idx = 0; idx < beta.size(); ++idx) {
    const int b = beta[idx];
    const int target = b - k;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int other : beta) {
      if (other > target && other < b) ++between;
    }
    std::vector<int> moved = beta;
    moved[idx] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> smaller;
    for (int i = 0; i < len; ++i) {
      int part = moved[static_cast<std::size_t>(i)] - (len - 1 - i);
      if (part > 0) smaller.push_back(part);
    }
    const std::int64_t sub = mn_character(smaller, rest_cycles);
    total += (between % 2 == 0) ? sub : -sub;
  }
  memo().insert(std::move(key), total);
  return total;
}

}  // namespace

std::int64_t character(const Partition& pi, const CycleType& lambda) {
  if (pi.weight() != lambda.weight()) {
    throw InvalidInput("character: |π| = " + std::to_string(pi.weight()) + " but |λ| = " +
                       std::to_string(lambda.weight()));
  }
  if (pi.weight() > 40) throw InvalidInput("character: degree too large for 64-bit values");
  return mn_character(pi.parts(), lambda.parts());
}

MultiplicityReport invariant_multiplicity_report(std::span<const Partition> pis) {
  if (pis.empty()) throw InvalidInput("invariant_multiplicity needs at least one partition");
  const int d = pis.front().weight();
  for (const auto& p : pis) {
    if (p.weight() != d) throw InvalidInput("invariant_multiplicity: partitions of different weights");
  }
  MultiplicityReport report;
  report.d = d;
  report.numerator = 0;
  for (const auto& lambda : enumerate_partitions(d)) {
    ClassTerm term;
    term.cycle_type = lambda;
    term.class_size = class_size(lambda);
    term.term = term.class_size;
    for (const auto& p : pis) {
      const std::int64_t chi = character(p, lambda);
      term.characters.push_back(chi);
      term.term *= static_cast<long>(chi);
    }
    report.numerator += term.term;
    report.terms.push_back(std::move(term));
  }
  const Integer order = factorial(d);
  if (report.numerator % order != 0) {
    throw InternalError("character sum " + report.numerator.get_str() + " not divisible by " +
                        std::to_string(d) + "!");
  }
  report.multiplicity = report.numerator / order;
  if (report.multiplicity < 0) throw InternalError("negative invariant multiplicity");
  return report;
}

Integer invariant_multiplicity(std::span<const Partition> pis) {
  return invariant_multiplicity_report(pis).multiplicity;
}

Integer schur_dimension(const Partition& pi, int n) {
  if (n < 0) throw InvalidInput("schur_dimension: negative dimension");
  if (pi.length() > n) return 0;
  Integer num = 1;
  Integer den = 1;
  for (const auto& cell : hook_content_data(pi)) {
    num *= n + cell.content;
    den *= cell.hook;
  }
  if (num % den != 0) throw InternalError("hook content quotient is not an integer");
  return num / den;
}

std::vector<IsotypicComponent> isotypic_decomposition(int d, std::span<const int> dims) {
  if (d < 0) throw InvalidInput("isotypic_decomposition: negative degree");
  if (dims.empty()) throw InvalidInput("isotypic_decomposition: no factors");
  for (int a : dims) {
    if (a < 1) throw InvalidInput("isotypic_decomposition: factor dimensions must be positive");
  }
  const auto classes = enumerate_partitions(d);
  std::vector<Integer> sizes;
  for (const auto& c : classes) sizes.push_back(class_size(c));
  const Integer order = factorial(d);

  struct Candidate {
    Partition pi;
    std::vector<std::int64_t> chars;
    Integer dim;
  };
  std::vector<std::vector<Candidate>> per_factor;
  for (int a : dims) {
    std::vector<Candidate> cands;
    for (auto& p : enumerate_partitions(d, a)) {
      Candidate c{p, {}, schur_dimension(p, a)};
      for (const auto& lambda : classes) c.chars.push_back(character(p, lambda));
      cands.push_back(std::move(c));
    }
    per_factor.push_back(std::move(cands));
  }

  std::vector<IsotypicComponent> out;
  std::vector<std::size_t> choice(dims.size(), 0);
  std::vector<Integer> running(classes.size());

  // Depth-first over factor choices; running[c] = class_size · Π χ so far.
  auto recurse = [&](auto&& self, std::size_t depth, const std::vector<Integer>& acc, const Integer& dim) -> void {
    if (depth == dims.size()) {
      Integer sum = 0;
      for (const auto& v : acc) sum += v;
      if (sum % order != 0) throw InternalError("isotypic multiplicity is not an integer");
      Integer mult = sum / order;
      if (mult < 0) throw InternalError("negative isotypic multiplicity");
      if (mult != 0) {
        IsotypicComponent comp;
        for (std::size_t j = 0; j < dims.size(); ++j) comp.parts.push_back(per_factor[j][choice[j]].pi);
        comp.multiplicity = mult;
        comp.module_dimension = dim;
        out.push_back(std::move(comp));
      }
      return;
    }
    for (std::size_t i = 0; i < per_factor[depth].size(); ++i) {
      choice[depth] = i;
      const auto& cand = per_factor[depth][i];
      std::vector<Integer> next(acc.size());
      for (std::size_t c = 0; c < acc.size(); ++c) next[c] = acc[c] * static_cast<long>(cand.chars[c]);
      self(self, depth + 1, next, dim * cand.dim);
    }
  };
  recurse(recurse, 0, sizes, Integer(1));
  return out;
}

namespace {

struct LrSearch {
  const Partition& lambda;
  const Partition& mu;
  const Partition& nu;
  std::vector<std::pair<int, int>> cells;  // reading order: rows top-down, right to left
  std::vector<std::vector<int>> filling;   // filling[row][col], 0 = unfilled / not in skew
  std::vector<int> used;                   // used[v] = count of value v placed so far
  Integer count = 0;

  LrSearch(const Partition& l, const Partition& m, const Partition& n) : lambda(l), mu(m), nu(n) {
    filling.resize(static_cast<std::size_t>(lambda.length()));
    for (int i = 0; i < lambda.length(); ++i) {
      filling[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(lambda[static_cast<std::size_t>(i)]), 0);
      for (int j = lambda[static_cast<std::size_t>(i)] - 1; j >= mu[static_cast<std::size_t>(i)]; --j) {
        cells.emplace_back(i, j);
      }
    }
    used.assign(static_cast<std::size_t>(nu.length()) + 1, 0);
  }

  void run(std::size_t k) {
    if (k == cells.size()) {
      ++count;
      return;
    }
    const auto [i, j] = cells[k];
    const auto row = static_cast<std::size_t>(i);
    const auto col = static_cast<std::size_t>(j);
    // Weakly increasing along rows: bounded by the already-filled right neighbour.
    int upper = nu.length();
    if (col + 1 < filling[row].size() && filling[row][col + 1] != 0) upper = filling[row][col + 1];
    // Strictly increasing down columns.
    int lower = 1;
    if (i > 0 && j >= mu[row - 1]) lower = filling[row - 1][col] + 1;
    for (int v = lower; v <= upper; ++v) {
      const auto uv = static_cast<std::size_t>(v);
      if (used[uv] >= nu[uv - 1]) continue;
      if (v > 1 && used[uv] + 1 > used[uv - 1]) continue;  // lattice word
      ++used[uv];
      filling[row][col] = v;
      run(k + 1);
      filling[row][col] = 0;
      --used[uv];
    }
  }
};

}  // namespace

Integer littlewood_richardson(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (mu.weight() + nu.weight() != lambda.weight()) {
    throw InvalidInput("littlewood_richardson: |μ| + |ν| must equal |λ|");
  }
  if (!lambda.contains(mu) || !lambda.contains(nu)) return 0;
  LrSearch search(lambda, mu, nu);
  search.run(0);
  return search.count;
}

std::vector<std::pair<Partition, Integer>> lr_product(const Partition& mu, const Partition& nu, int max_rows) {
  // c^λ_{μν} = c^λ_{νμ}: skew by the larger shape so fewer boxes are added.
  const Partition& big = mu.weight() >= nu.weight() ? mu : nu;
  const Partition& small = mu.weight() >= nu.weight() ? nu : mu;
  const int rows = std::min(max_rows, big.length() + small.length());
  std::vector<std::pair<Partition, Integer>> out;
  if (big.length() > rows || small.length() > rows) return out;

  std::vector<int> shape(static_cast<std::size_t>(rows), 0);
  auto add_boxes = [&](auto&& self, int row, int remaining) -> void {
    if (row == rows) {
      if (remaining != 0) return;
      Partition lambda(shape);
      if (!lambda.contains(small)) return;
      Integer c = littlewood_richardson(lambda, big, small);
      if (c != 0) out.emplace_back(std::move(lambda), std::move(c));
      return;
    }
    const auto r = static_cast<std::size_t>(row);
    const int base = big[r];
    // Horizontal strips per row are bounded by the row above and by |ν|'s
    // first part (an LR filling puts at most ν_1 boxes in any row).
    int cap = remaining;
    if (row > 0) cap = std::min(cap, shape[r - 1] - base);
    cap = std::min(cap, small[0]);
    for (int x = cap; x >= 0; --x) {
      shape[r] = base + x;
      self(self, row + 1, remaining - x);
    }
    shape[r] = 0;
  };
  add_boxes(add_boxes, 0, small.weight());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  return out;
}

}  // namespace secant
