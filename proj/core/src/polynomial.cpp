#include "secant/polynomial.hpp"

#include <algorithm>

namespace secant {

Monomial::Monomial(std::vector<std::uint32_t> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
}

std::vector<std::pair<std::uint32_t, int>> Monomial::exponents() const {
  std::vector<std::pair<std::uint32_t, int>> out;
  for (auto v : vars_) {
    if (!out.empty() && out.back().first == v) {
      ++out.back().second;
    } else {
      out.emplace_back(v, 1);
    }
  }
  return out;
}

std::vector<int> Monomial::exponent_vector(std::size_t num_vars) const {
  std::vector<int> e(num_vars, 0);
  for (auto v : vars_) {
    if (v >= num_vars) throw InvalidInput("monomial variable outside the coordinate range");
    ++e[v];
  }
  return e;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> vars;
  vars.reserve(a.vars_.size() + b.vars_.size());
  std::merge(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(), std::back_inserter(vars));
  Monomial m;
  m.vars_ = std::move(vars);
  return m;
}

bool GrevlexLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  // Walk both sorted multisets; at the smallest variable whose exponents
  // differ, the monomial with the larger exponent is the smaller one.
  const auto& x = a.vars();
  const auto& y = b.vars();
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] == y[j]) {
      ++i;
      ++j;
      continue;
    }
    // x[i] < y[j]: variable x[i] occurs more often in a than in b.
    return x[i] < y[j];
  }
  return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  for (auto v : m.vars()) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

SparsePoly SparsePoly::variable(const Shape& shape, std::size_t flat) {
  if (flat >= shape.volume()) throw InvalidInput("variable index out of range");
  SparsePoly p(shape);
  p.terms_.emplace(Monomial({static_cast<std::uint32_t>(flat)}), Rational(1));
  return p;
}

SparsePoly SparsePoly::constant(const Shape& shape, const Rational& c) {
  SparsePoly p(shape);
  p.add_term(Monomial(), c);
  return p;
}

void SparsePoly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  for (auto v : m.vars()) {
    if (v >= num_vars()) throw InvalidInput("monomial variable outside the coordinate range");
  }
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int SparsePoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool SparsePoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

void SparsePoly::check_shape(const SparsePoly& o) const {
  if (o.shape_ != shape_) throw InvalidInput("polynomials live in different coordinate rings");
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  check_shape(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  check_shape(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SparsePoly SparsePoly::operator-() const { return scaled(Rational(-1)); }

SparsePoly SparsePoly::scaled(const Rational& c) const {
  SparsePoly p(shape_);
  if (sgn(c) == 0) return p;
  for (const auto& [m, coef] : terms_) p.terms_.emplace_hint(p.terms_.end(), m, coef * c);
  return p;
}

SparsePoly SparsePoly::times(const Monomial& mono) const {
  SparsePoly p(shape_);
  for (const auto& [m, coef] : terms_) p.terms_.emplace(m * mono, coef);
  return p;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.check_shape(b);
  SparsePoly p(a.shape_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
  }
  return p;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  // Largest monomial first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) s += "-";
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    bool unit = mag == 1 && m.degree() > 0;
    if (!unit) s += mag.get_str();
    bool need_star = !unit;
    for (const auto& [v, e] : m.exponents()) {
      if (need_star) s += "*";
      s += shape_.coordinate_name(v);
      if (e > 1) s += "^" + std::to_string(e);
      need_star = true;
    }
  }
  return s;
}

template <class F>
F evaluate(const SparsePoly& f, const Tensor<F>& t) {
  if (f.shape() != t.shape()) throw InvalidInput("evaluate: polynomial and tensor shapes differ");
  const auto field = field_of(t[0]);
  F total = field.zero();
  for (const auto& [m, c] : f.terms()) {
    F term = field.from_rational(c);
    for (auto v : m.vars()) term *= t[v];
    total += term;
  }
  return total;
}

template Rational evaluate(const SparsePoly&, const Tensor<Rational>&);
template ModP evaluate(const SparsePoly&, const Tensor<ModP>&);

template <class F>
SparseVector<F> differential_at(const SparsePoly& f, const Tensor<F>& t) {
  if (f.shape() != t.shape()) throw InvalidInput("differential_at: polynomial and tensor shapes differ");
  const auto field = field_of(t[0]);
  std::map<std::size_t, F> grad;
  for (const auto& [m, c] : f.terms()) {
    const auto exps = m.exponents();
    for (std::size_t k = 0; k < exps.size(); ++k) {
      F term = field.from_rational(c * exps[k].second);
      for (std::size_t l = 0; l < exps.size(); ++l) {
        const int power = (l == k) ? exps[l].second - 1 : exps[l].second;
        for (int e = 0; e < power; ++e) term *= t[exps[l].first];
      }
      if (is_zero(term)) continue;
      auto [it, inserted] = grad.emplace(exps[k].first, term);
      if (!inserted) it->second += term;
    }
  }
  SparseVector<F> out;
  for (auto& [v, g] : grad) {
    if (!is_zero(g)) out.emplace_back(v, std::move(g));
  }
  return out;
}

template SparseVector<Rational> differential_at(const SparsePoly&, const Tensor<Rational>&);
template SparseVector<ModP> differential_at(const SparsePoly&, const Tensor<ModP>&);

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<std::uint32_t> current;
  auto rec = [&](auto&& self, std::uint32_t start, int left) -> void {
    if (left == 0) {
      out.emplace_back(current);
      return;
    }
    for (std::uint32_t v = start; v < num_vars; ++v) {
      current.push_back(v);
      self(self, v, left - 1);
      current.pop_back();
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), GrevlexLess{});
  return out;
}

}  // namespace secant
