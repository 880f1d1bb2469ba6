#include "secant/bott.hpp"

#include <algorithm>
#include <numeric>

#include "secant/error.hpp"
#include "secant/symrep.hpp"

namespace secant {

FactorWeight FactorWeight::dual_subspace(int r, int a, std::vector<int> lambda) {
  if (r < 1 || a < r) throw InvalidInput("dual_subspace: need 1 <= r <= a");
  if (static_cast<int>(lambda.size()) > r) throw InvalidInput("dual_subspace: more than r parts");
  lambda.resize(static_cast<std::size_t>(r), 0);
  FactorWeight w{r, a, std::vector<int>(static_cast<std::size_t>(a - r), 0)};
  for (int i = r - 1; i >= 0; --i) w.alpha.push_back(-lambda[i]);
  w.validate();
  return w;
}

void FactorWeight::validate() const {
  if (r < 1 || a < r) throw InvalidInput("factor weight needs 1 <= r <= a");
  if (static_cast<int>(alpha.size()) != a) throw InvalidInput("factor weight must have a entries");
  const auto split = alpha.begin() + (a - r);
  if (!std::is_sorted(alpha.begin(), split, std::greater<>()) || !std::is_sorted(split, alpha.end(), std::greater<>())) {
    throw InvalidInput("factor weight blocks must be weakly decreasing");
  }
}

BottResult bott_resolve(const FactorWeight& w) {
  w.validate();
  const int a = w.a;
  std::vector<int> shifted(w.alpha);
  for (int i = 0; i < a; ++i) shifted[i] += a - 1 - i;
  BottResult res;
  int inversions = 0;
  for (int i = 0; i < a; ++i) {
    for (int j = i + 1; j < a; ++j) {
      if (shifted[i] == shifted[j]) {
        res.vanishes = true;
        return res;
      }
      inversions += shifted[i] < shifted[j];
    }
  }
  std::sort(shifted.begin(), shifted.end(), std::greater<>());
  for (int i = 0; i < a; ++i) shifted[i] -= a - 1 - i;
  res.degree = inversions;
  res.dominant = std::move(shifted);
  return res;
}

Integer weight_dimension(const std::vector<int>& dominant) {
  if (dominant.empty()) return 1;
  if (!std::is_sorted(dominant.begin(), dominant.end(), std::greater<>())) {
    throw InvalidInput("weight_dimension: weight is not dominant");
  }
  const int shift = -std::min(0, dominant.back());
  std::vector<int> parts;
  for (int x : dominant) parts.push_back(x + shift);
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return schur_dimension(Partition(parts), static_cast<int>(dominant.size()));
}

ProductResult product_cohomology(const std::vector<FactorWeight>& bundle) {
  ProductResult out;
  for (const auto& w : bundle) {
    auto r = bott_resolve(w);
    if (r.vanishes) {
      out.vanishes = true;
      out.degree = 0;
      out.dominant.clear();
      return out;
    }
    out.degree += r.degree;
    out.dominant.push_back(std::move(r.dominant));
  }
  return out;
}

AcyclicityReport check_acyclic_Sd_eta(const Shape& shape, int r, int d) {
  if (r < 1) throw InvalidInput("r must be positive");
  for (int a : shape.dims()) {
    if (a < r) throw InvalidInput("check_acyclic_Sd_eta requires r <= every a_j");
  }
  if (d < 0) throw InvalidInput("degree must be non-negative");
  AcyclicityReport rep{shape.dims(), r, d, {}, true, false};
  const std::vector<int> dims(shape.factors(), r);
  for (const auto& comp : isotypic_decomposition(d, dims)) {
    std::vector<FactorWeight> bundle;
    for (std::size_t j = 0; j < shape.factors(); ++j) {
      bundle.push_back(FactorWeight::dual_subspace(r, shape[j], comp.parts[j].parts()));
    }
    const auto coh = product_cohomology(bundle);
    SummandCohomology s{comp.parts, comp.multiplicity, coh.vanishes, coh.degree};
    if (coh.vanishes || coh.degree != 0) rep.all_degree_zero = false;
    if (!coh.vanishes && coh.degree > 0) rep.any_higher = true;
    rep.summands.push_back(std::move(s));
  }
  return rep;
}

namespace {

// S_λ ⊗ S_μ for a weakly decreasing integer λ (possibly negative) of length r
// and a partition μ, as weights of length r with multiplicities.
std::vector<std::pair<std::vector<int>, Integer>> twisted_product(const std::vector<int>& lambda, const Partition& mu,
                                                                  int r) {
  const int shift = -std::min(0, lambda.back());
  std::vector<int> parts;
  for (int x : lambda) parts.push_back(x + shift);
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  std::vector<std::pair<std::vector<int>, Integer>> out;
  for (const auto& [nu, c] : lr_product(Partition(parts), mu, r)) {
    std::vector<int> w(static_cast<std::size_t>(r), 0);
    for (int i = 0; i < r; ++i) w[i] = nu[i] - shift;
    out.emplace_back(std::move(w), c);
  }
  return out;
}

}  // namespace

TwistedDualReport twisted_dual_acyclicity(const std::vector<Partition>& pis, const Shape& shape, int r,
                                          int max_sym_degree) {
  const std::size_t n = shape.factors();
  if (pis.size() != n) throw InvalidInput("need one partition per factor");
  if (r < 1) throw InvalidInput("r must be positive");
  for (int a : shape.dims()) {
    if (a < r) throw InvalidInput("twisted_dual_acyclicity requires r <= every a_j");
  }
  int top = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) top *= r;  // r^{n−1}

  TwistedDualReport rep;
  rep.shape = shape.dims();
  rep.r = r;
  rep.max_sym_degree = max_sym_degree;
  std::vector<std::vector<int>> lambdas;
  for (std::size_t j = 0; j < n; ++j) {
    const auto& pi = pis[j];
    if (pi.length() > r) throw InvalidInput("partition " + pi.to_string() + " has more than r parts");
    TwistedFactor tf;
    tf.pi = pi;
    for (int i = r - 1; i >= 0; --i) tf.transformed.push_back(top - shape[j] - pi[static_cast<std::size_t>(i)]);
    const auto w = FactorWeight::dual_subspace(r, shape[j], tf.transformed);
    const long total = std::accumulate(w.alpha.begin(), w.alpha.end(), 0L);
    const Rational mean(total, static_cast<long>(shape[j]));
    for (int x : w.alpha) tf.normalized.push_back(Rational(x) - mean);
    for (auto& q : tf.normalized) q.canonicalize();
    tf.literal_bound = -shape[j] + 1;
    tf.exact_bound = r - shape[j];
    tf.literal_holds = tf.transformed.back() >= tf.literal_bound;
    tf.hypothesis_holds = tf.transformed.back() >= tf.exact_bound;
    rep.hypothesis_holds = rep.hypothesis_holds && tf.hypothesis_holds;
    lambdas.push_back(tf.transformed);
    rep.factors.push_back(std::move(tf));
  }

  const std::vector<int> eta_dims(n, r);
  for (int d = 0; d <= max_sym_degree; ++d) {
    for (const auto& comp : isotypic_decomposition(d, eta_dims)) {
      std::vector<std::vector<std::pair<std::vector<int>, Integer>>> per_factor;
      for (std::size_t j = 0; j < n; ++j) per_factor.push_back(twisted_product(lambdas[j], comp.parts[j], r));
      std::vector<std::size_t> pick(n, 0);
      for (;;) {
        std::vector<FactorWeight> bundle;
        for (std::size_t j = 0; j < n; ++j) {
          bundle.push_back(FactorWeight::dual_subspace(r, shape[j], per_factor[j][pick[j]].first));
        }
        const auto coh = product_cohomology(bundle);
        ++rep.summands_checked;
        if (!coh.vanishes && coh.degree > 0 && rep.acyclic) {
          rep.acyclic = false;
          std::string where = "S^" + std::to_string(d) + " summand";
          for (const auto& p : comp.parts) where += " " + p.to_string();
          rep.first_failure = where + ": cohomology in degree " + std::to_string(coh.degree);
        }
        std::size_t k = 0;
        while (k < n && ++pick[k] == per_factor[k].size()) pick[k++] = 0;
        if (k == n) break;
      }
    }
  }
  return rep;
}

}  // namespace secant
