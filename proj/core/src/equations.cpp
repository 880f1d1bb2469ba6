#include "secant/equations.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace secant {

namespace {

std::string join(const std::vector<int>& v, char sep = ',') {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

// Mixed-radix decoding, last position fastest.
std::vector<int> decode(std::size_t index, const std::vector<int>& radices) {
  std::vector<int> out(radices.size(), 0);
  for (std::size_t k = radices.size(); k-- > 0;) {
    out[k] = static_cast<int>(index % static_cast<std::size_t>(radices[k]));
    index /= static_cast<std::size_t>(radices[k]);
  }
  return out;
}

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
  }
  return inversions % 2 ? -1 : 1;
}

// Flat coordinate of entry (row, col) of the generic flattening along split.
class FlatteningLayout {
 public:
  FlatteningLayout(const Shape& shape, const std::vector<int>& split)
      : shape_(shape), rows_factors_(split), cols_factors_(complement_split(shape.factors(), split)) {
    for (int f : rows_factors_) row_radices_.push_back(shape[f - 1]);
    for (int f : cols_factors_) col_radices_.push_back(shape[f - 1]);
    rows_ = std::accumulate(row_radices_.begin(), row_radices_.end(), std::size_t{1},
                            [](std::size_t a, int b) { return a * static_cast<std::size_t>(b); });
    cols_ = shape.volume() / rows_;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t variable(std::size_t row, std::size_t col) const {
    std::vector<int> idx(shape_.factors(), 0);
    const auto ri = decode(row, row_radices_);
    const auto ci = decode(col, col_radices_);
    for (std::size_t k = 0; k < rows_factors_.size(); ++k) idx[rows_factors_[k] - 1] = ri[k];
    for (std::size_t k = 0; k < cols_factors_.size(); ++k) idx[cols_factors_[k] - 1] = ci[k];
    return static_cast<std::uint32_t>(shape_.flat_index(idx));
  }

 private:
  const Shape& shape_;
  std::vector<int> rows_factors_;
  std::vector<int> cols_factors_;
  std::vector<int> row_radices_;
  std::vector<int> col_radices_;
  std::size_t rows_ = 1;
  std::size_t cols_ = 1;
};

std::vector<int> normalized_split(const Shape& shape, std::vector<int> split) {
  std::sort(split.begin(), split.end());
  if (split.empty() || split.size() >= shape.factors()) throw InvalidInput("split must be a proper nonempty subset");
  if (split.front() < 1 || split.back() > static_cast<int>(shape.factors()) ||
      std::adjacent_find(split.begin(), split.end()) != split.end()) {
    throw InvalidInput("split factors must be distinct and within 1..n");
  }
  return split;
}

// Matrices of polynomials for the Strassen construction.
using PolyMatrix = std::vector<std::vector<SparsePoly>>;

PolyMatrix slice(const Shape& shape, int i) {
  PolyMatrix m;
  for (int j = 0; j < 3; ++j) {
    m.emplace_back();
    for (int k = 0; k < 3; ++k) {
      const int idx[3] = {i, j, k};
      m.back().push_back(SparsePoly::variable(shape, shape.flat_index(idx)));
    }
  }
  return m;
}

PolyMatrix adjugate(const PolyMatrix& x) {
  const Shape& shape = x[0][0].shape();
  PolyMatrix adj(3, std::vector<SparsePoly>(3, SparsePoly(shape)));
  for (int p = 0; p < 3; ++p) {
    for (int q = 0; q < 3; ++q) {
      // adj(X)_{pq} = (−1)^{p+q} det of X without row q and column p.
      std::vector<int> rs, cs;
      for (int t = 0; t < 3; ++t) {
        if (t != q) rs.push_back(t);
        if (t != p) cs.push_back(t);
      }
      SparsePoly minor = x[rs[0]][cs[0]] * x[rs[1]][cs[1]] - x[rs[0]][cs[1]] * x[rs[1]][cs[0]];
      adj[p][q] = (p + q) % 2 ? -minor : minor;
    }
  }
  return adj;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  const Shape& shape = a[0][0].shape();
  PolyMatrix c(3, std::vector<SparsePoly>(3, SparsePoly(shape)));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

DenseMatrix<Rational> random_invertible(int a, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (;;) {
    DenseMatrix<Rational> m(static_cast<std::size_t>(a), static_cast<std::size_t>(a), Rational(0));
    for (int i = 0; i < a; ++i) {
      for (int j = 0; j < a; ++j) m(i, j) = Rational(static_cast<long>(uniform_below(rng, 7)) - 3);
    }
    if (sgn(determinant(m)) != 0) return m;
  }
}

// Applies maps[j] along every factor j: entries of the result have shape
// (rows of maps[0], …).
template <class F>
std::vector<F> apply_maps(const std::vector<DenseMatrix<F>>& maps, const Shape& shape, std::span<const F> entries,
                          const F& zero) {
  std::vector<int> dims = shape.dims();
  std::vector<F> cur(entries.begin(), entries.end());
  for (std::size_t j = 0; j < maps.size(); ++j) {
    const auto& m = maps[j];
    std::size_t outer = 1, inner = 1;
    for (std::size_t k = 0; k < j; ++k) outer *= static_cast<std::size_t>(dims[k]);
    for (std::size_t k = j + 1; k < dims.size(); ++k) inner *= static_cast<std::size_t>(dims[k]);
    const std::size_t in_dim = static_cast<std::size_t>(dims[j]);
    const std::size_t out_dim = m.rows();
    std::vector<F> next(outer * out_dim * inner, zero);
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t a = 0; a < out_dim; ++a) {
        F* dst = &next[(o * out_dim + a) * inner];
        for (std::size_t i = 0; i < in_dim; ++i) {
          const F& coef = m(a, i);
          if (is_zero(coef)) continue;
          const F* src = &cur[(o * in_dim + i) * inner];
          for (std::size_t t = 0; t < inner; ++t) dst[t] += coef * src[t];
        }
      }
    }
    dims[j] = static_cast<int>(out_dim);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

std::vector<SparsePoly> GeneratorSet::explicit_polys() const {
  std::vector<SparsePoly> out;
  out.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.substitution) throw InvalidInput("generator set contains pulled-back generators");
    out.push_back(g.poly);
  }
  return out;
}

void GeneratorSet::append(GeneratorSet other) {
  if (other.shape != shape) throw InvalidInput("cannot merge generator sets of different shapes");
  const std::size_t offset = substitutions.size();
  for (auto& s : other.substitutions) substitutions.push_back(std::move(s));
  for (auto& g : other.generators) {
    if (g.substitution) g.substitution = *g.substitution + offset;
    generators.push_back(std::move(g));
  }
}

GeneratorSet flattening_minor_polys(const Shape& shape, const std::vector<int>& split_in, int s) {
  const auto split = normalized_split(shape, split_in);
  FlatteningLayout layout(shape, split);
  if (s < 1 || static_cast<std::size_t>(s) > std::min(layout.rows(), layout.cols())) {
    throw InvalidInput("minor size " + std::to_string(s) + " exceeds the flattening dimensions " +
                       std::to_string(layout.rows()) + "x" + std::to_string(layout.cols()));
  }
  GeneratorSet set{shape, "flat-minors", s - 1, {}, {}, {}};
  const auto row_sets = combinations(static_cast<int>(layout.rows()), s);
  const auto col_sets = combinations(static_cast<int>(layout.cols()), s);
  std::vector<int> perm0(static_cast<std::size_t>(s));
  std::iota(perm0.begin(), perm0.end(), 0);
  std::vector<std::pair<std::vector<int>, int>> perms;
  do {
    perms.emplace_back(perm0, permutation_sign(perm0));
  } while (std::next_permutation(perm0.begin(), perm0.end()));

  const std::string prefix = "minor {" + join(split) + "} rows ";
  set.generators.reserve(row_sets.size() * col_sets.size());
  for (const auto& rs : row_sets) {
    for (const auto& cs : col_sets) {
      SparsePoly f(shape);
      std::vector<std::uint32_t> vars(static_cast<std::size_t>(s));
      for (const auto& [perm, sign] : perms) {
        for (int i = 0; i < s; ++i) vars[i] = layout.variable(rs[i], cs[perm[i]]);
        f.add_term(Monomial(vars), Rational(sign));
      }
      set.generators.push_back({std::move(f), std::nullopt, prefix + join(rs) + " cols " + join(cs)});
    }
  }
  return set;
}

GeneratorSet subspace_variety_generators(const Shape& shape, const std::vector<int>& b) {
  if (b.size() != shape.factors()) throw InvalidInput("subspace bounds must have one entry per factor");
  GeneratorSet set{shape, "subspace", 0, b, {}, {}};
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (b[j] < 1 || b[j] > shape[j]) throw InvalidInput("subspace bound b_j must satisfy 1 <= b_j <= a_j");
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (b[j] + 1 > shape[j]) continue;
    auto part = flattening_minor_polys(shape, {static_cast<int>(j) + 1}, b[j] + 1);
    for (auto& g : part.generators) set.generators.push_back(std::move(g));
  }
  return set;
}

GeneratorSet strassen_polys() {
  const Shape shape({3, 3, 3});
  GeneratorSet set{shape, "strassen", 3, {}, {}, {}};
  const PolyMatrix slices[3] = {slice(shape, 0), slice(shape, 1), slice(shape, 2)};
  // (X, Y, Z) slice roles for i = 1, 2, 3.
  const int roles[3][3] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}};
  for (int i = 0; i < 3; ++i) {
    const auto& x = slices[roles[i][0]];
    const auto& y = slices[roles[i][1]];
    const auto& z = slices[roles[i][2]];
    const PolyMatrix adj = adjugate(x);
    const PolyMatrix left = multiply(multiply(y, adj), z);
    const PolyMatrix right = multiply(multiply(z, adj), y);
    for (int s = 0; s < 3; ++s) {
      for (int t = 0; t < 3; ++t) {
        set.generators.push_back({left[s][t] - right[s][t], std::nullopt,
                                  "P_{" + std::to_string(i + 1) + "," + std::to_string(s + 1) + "," +
                                      std::to_string(t + 1) + "}"});
      }
    }
  }
  return set;
}

GeneratorSet inherited_strassen(const Shape& shape) {
  if (shape.factors() != 3) throw InvalidInput("inherited Strassen generators need three factors");
  for (int a : shape.dims()) {
    if (a < 3) throw InvalidInput("inherited Strassen generators need every a_j >= 3");
  }
  const GeneratorSet base = strassen_polys();
  GeneratorSet set{shape, "strassen", 3, {}, {}, {}};
  std::vector<std::vector<std::vector<int>>> choices;
  for (int a : shape.dims()) choices.push_back(combinations(a, 3));

  for (int change = 0; change <= kInheritedCoordinateChanges; ++change) {
    std::vector<DenseMatrix<Rational>> g;
    for (std::size_t j = 0; j < 3; ++j) {
      const int a = shape[j];
      if (change == 0) {
        DenseMatrix<Rational> id(a, a, Rational(0));
        for (int i = 0; i < a; ++i) id(i, i) = 1;
        g.push_back(std::move(id));
      } else {
        g.push_back(random_invertible(a, 0x5eedULL * 1000 + static_cast<std::uint64_t>(change) * 10 + j));
      }
    }
    for (const auto& c0 : choices[0]) {
      for (const auto& c1 : choices[1]) {
        for (const auto& c2 : choices[2]) {
          const std::vector<int>* picks[3] = {&c0, &c1, &c2};
          const std::string where = "slices {" + join(c0) + "}{" + join(c1) + "}{" + join(c2) + "}";
          if (change == 0) {
            // Pure coordinate slices: rename variables.
            for (const auto& bg : base.generators) {
              SparsePoly f(shape);
              for (const auto& [m, coef] : bg.poly.terms()) {
                std::vector<std::uint32_t> vars;
                for (auto v : m.vars()) {
                  auto idx = base.shape.multi_index(v);
                  for (int k = 0; k < 3; ++k) idx[k] = (*picks[k])[idx[k]];
                  vars.push_back(static_cast<std::uint32_t>(shape.flat_index(idx)));
                }
                f.add_term(Monomial(vars), coef);
              }
              set.generators.push_back({std::move(f), std::nullopt, bg.provenance + " " + where});
            }
            continue;
          }
          Substitution sub;
          for (int k = 0; k < 3; ++k) {
            DenseMatrix<Rational> m(3, static_cast<std::size_t>(shape[k]), Rational(0));
            for (int row = 0; row < 3; ++row) {
              for (int col = 0; col < shape[k]; ++col) m(row, col) = g[k]((*picks[k])[row], col);
            }
            sub.maps.push_back(std::move(m));
          }
          sub.note = "change " + std::to_string(change) + " " + where;
          set.substitutions.push_back(std::move(sub));
          const std::size_t id = set.substitutions.size() - 1;
          for (const auto& bg : base.generators) {
            set.generators.push_back({bg.poly, id, bg.provenance + " change " + std::to_string(change) + " " + where});
          }
        }
      }
    }
  }
  return set;
}

GeneratorSet secant_generators(const Shape& shape, int r) {
  const auto& a = shape.dims();
  const std::size_t n = shape.factors();
  if (r < 1) throw InvalidInput("r must be positive");

  if (n == 3) {
    const auto two = std::find(a.begin(), a.end(), 2);
    if (two != a.end()) {
      const int f = static_cast<int>(two - a.begin()) + 1;
      std::vector<int> others;
      for (int j = 1; j <= 3; ++j) {
        if (j != f) others.push_back(j);
      }
      if (r <= std::min(a[others[0] - 1], a[others[1] - 1])) {
        GeneratorSet set{shape, "secant-assembled", r, {}, {}, {}};
        for (int c : others) {
          std::vector<int> rows_split{f};
          for (int o : others) {
            if (o != c) rows_split.push_back(o);
          }
          FlatteningLayout layout(shape, normalized_split(shape, rows_split));
          if (static_cast<std::size_t>(r + 1) > std::min(layout.rows(), layout.cols())) continue;
          set.append(flattening_minor_polys(shape, rows_split, r + 1));
        }
        set.label = "secant-assembled";
        set.r = r;
        return set;
      }
    }
  }
  if (n == 4 && r == 2) {
    GeneratorSet set{shape, "secant-assembled", r, {}, {}, {}};
    set.append(subspace_variety_generators(shape, std::vector<int>(4, 2)));
    for (int other = 2; other <= 4; ++other) set.append(flattening_minor_polys(shape, {1, other}, 3));
    set.label = "secant-assembled";
    set.r = r;
    return set;
  }
  if (n == 3 && r == 3 && std::all_of(a.begin(), a.end(), [](int x) { return x >= 3; })) {
    GeneratorSet set{shape, "secant-assembled", r, {}, {}, {}};
    set.append(subspace_variety_generators(shape, std::vector<int>(3, 3)));
    if (std::all_of(a.begin(), a.end(), [](int x) { return x == 3; })) {
      set.append(strassen_polys());
    } else {
      set.append(inherited_strassen(shape));
    }
    set.label = "secant-assembled";
    set.r = r;
    return set;
  }
  throw NotImplemented("no generator set for shape " + shape.to_string() + " and r = " + std::to_string(r) +
                       ": supported cases are three factors with a 2-dimensional factor and r <= the other two "
                       "dimensions, four factors with r = 2, and three factors of dimension >= 3 with r = 3");
}

template <class F>
template <class Field>
GeneratorEvaluator<F>::GeneratorEvaluator(const GeneratorSet& set, const Field& field)
    : set_(&set), zero_(field.zero()) {
  compiled_.reserve(set.size());
  for (const auto& g : set.generators) compiled_.emplace_back(g.poly, field);
  for (const auto& sub : set.substitutions) {
    std::vector<DenseMatrix<F>> maps;
    std::vector<int> base_dims;
    for (const auto& m : sub.maps) {
      std::vector<F> entries;
      for (const auto& e : m.entries()) entries.push_back(field.from_rational(e));
      maps.emplace_back(m.rows(), m.cols(), std::move(entries));
      base_dims.push_back(static_cast<int>(m.rows()));
    }
    maps_.push_back(std::move(maps));
    base_shapes_.emplace_back(base_dims);
  }
}

template <class F>
void GeneratorEvaluator<F>::check(const Tensor<F>& t) const {
  if (t.shape() != set_->shape) throw InvalidInput("tensor shape does not match the generator set");
  if (!t.entries().empty() && !(field_of(t[0]) == field_of(zero_))) {
    throw InvalidInput("tensor field does not match the evaluator field");
  }
}

template <class F>
std::vector<F> GeneratorEvaluator<F>::image(std::size_t substitution, const Tensor<F>& t) const {
  return apply_maps<F>(maps_[substitution], set_->shape, t.entries(), zero_);
}

template <class F>
F GeneratorEvaluator<F>::evaluate(std::size_t i, const Tensor<F>& t) const {
  check(t);
  const auto& g = set_->generators.at(i);
  if (!g.substitution) return compiled_[i].evaluate(t.entries());
  const auto img = image(*g.substitution, t);
  return compiled_[i].evaluate(img);
}

template <class F>
std::vector<F> GeneratorEvaluator<F>::evaluate_all(const Tensor<F>& t) const {
  check(t);
  std::vector<F> out;
  out.reserve(size());
  std::optional<std::size_t> cached_id;
  std::vector<F> cached;
  for (std::size_t i = 0; i < size(); ++i) {
    const auto& g = set_->generators[i];
    if (!g.substitution) {
      out.push_back(compiled_[i].evaluate(t.entries()));
      continue;
    }
    if (cached_id != g.substitution) {
      cached = image(*g.substitution, t);
      cached_id = g.substitution;
    }
    out.push_back(compiled_[i].evaluate(cached));
  }
  return out;
}

template <class F>
std::optional<std::size_t> GeneratorEvaluator<F>::first_nonvanishing(const Tensor<F>& t) const {
  check(t);
  std::optional<std::size_t> cached_id;
  std::vector<F> cached;
  for (std::size_t i = 0; i < size(); ++i) {
    const auto& g = set_->generators[i];
    F value = zero_;
    if (!g.substitution) {
      value = compiled_[i].evaluate(t.entries());
    } else {
      if (cached_id != g.substitution) {
        cached = image(*g.substitution, t);
        cached_id = g.substitution;
      }
      value = compiled_[i].evaluate(cached);
    }
    if (!is_zero(value)) return i;
  }
  return std::nullopt;
}

template <class F>
SparseVector<F> GeneratorEvaluator<F>::gradient(std::size_t i, const Tensor<F>& t) const {
  check(t);
  const auto& g = set_->generators.at(i);
  if (!g.substitution) return differential_at(g.poly, t);
  // Chain rule: the differential of f∘M is (M_1⊗…⊗M_n)^T applied to df at M(t).
  const std::size_t sid = *g.substitution;
  const Tensor<F> img(base_shapes_[sid], image(sid, t));
  const auto base_grad = differential_at(g.poly, img);
  std::vector<F> dense(base_shapes_[sid].volume(), zero_);
  for (const auto& [v, val] : base_grad) dense[v] = val;
  std::vector<DenseMatrix<F>> transposed;
  for (const auto& m : maps_[sid]) transposed.push_back(m.transpose());
  const auto pulled = apply_maps<F>(transposed, base_shapes_[sid], dense, zero_);
  SparseVector<F> out;
  for (std::size_t v = 0; v < pulled.size(); ++v) {
    if (!is_zero(pulled[v])) out.emplace_back(v, pulled[v]);
  }
  return out;
}

template class GeneratorEvaluator<Rational>;
template class GeneratorEvaluator<ModP>;
template GeneratorEvaluator<Rational>::GeneratorEvaluator(const GeneratorSet&, const RationalField&);
template GeneratorEvaluator<ModP>::GeneratorEvaluator(const GeneratorSet&, const PrimeField&);

namespace {

ModPTensor reduce_tensor(const AnyTensor& t, std::uint32_t p) {
  if (const auto* q = std::get_if<RationalTensor>(&t)) {
    std::vector<ModP> entries;
    entries.reserve(q->entries().size());
    for (const auto& e : q->entries()) entries.push_back(ModP::from_rational(e, p));
    return ModPTensor(q->shape(), std::move(entries));
  }
  const auto& m = std::get<ModPTensor>(t);
  if (!m.entries().empty() && m[0].modulus() != p) throw InvalidInput("tensor lives over a different prime field");
  return m;
}

}  // namespace

std::size_t jacobian_rank_at(const GeneratorSet& set, const AnyTensor& t, std::uint32_t p) {
  if (!is_prime(p)) throw InvalidInput("jacobian_rank_at: modulus is not prime");
  const ModPTensor tp = reduce_tensor(t, p);
  GeneratorEvaluator<ModP> eval(set, PrimeField{p});
  SparseRowSet rows(set.shape.volume(), p);
  for (std::size_t i = 0; i < set.size(); ++i) {
    SparseRow row;
    for (const auto& [v, val] : eval.gradient(i, tp)) row.emplace_back(static_cast<std::uint32_t>(v), val.value());
    if (!row.empty()) rows.add_row(std::move(row));
  }
  return row_space_dimension(rows, p);
}

MembershipVerdict membership_verdict(const AnyTensor& t, const GeneratorSet& set) {
  MembershipVerdict verdict;
  auto run = [&](const auto& tensor, const auto& field) {
    using F = typename std::decay_t<decltype(field)>::value_type;
    GeneratorEvaluator<F> eval(set, field);
    const auto witness = eval.first_nonvanishing(tensor);
    verdict.generators_checked = witness ? *witness + 1 : set.size();
    if (witness) {
      verdict.violates = true;
      verdict.witness = witness;
      verdict.witness_provenance = set.generators[*witness].provenance;
      verdict.witness_value = scalar_text(eval.evaluate(*witness, tensor));
    }
  };
  if (shape_of(t) != set.shape) throw InvalidInput("tensor shape does not match the generator set");
  if (const auto* q = std::get_if<RationalTensor>(&t)) {
    run(*q, RationalField{});
  } else {
    const auto& m = std::get<ModPTensor>(t);
    run(m, std::get<PrimeField>(domain_of(t)));
  }
  return verdict;
}

MembershipVerdict membership_verdict(const AnyTensor& t, int r) {
  return membership_verdict(t, secant_generators(shape_of(t), r));
}

}  // namespace secant
