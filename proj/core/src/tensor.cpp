#include "secant/tensor.hpp"

#include <algorithm>
#include <random>

namespace secant {

Shape::Shape(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.size() < 2) throw InvalidInput("shape needs at least two factors");
  volume_ = 1;
  for (int a : dims_) {
    if (a < 2) throw InvalidInput("every factor dimension must be at least 2, got " + std::to_string(a));
    volume_ *= static_cast<std::size_t>(a);
  }
}

std::size_t Shape::flat_index(std::span<const int> idx) const {
  if (idx.size() != dims_.size()) throw InvalidInput("multi-index has the wrong number of factors");
  std::size_t flat = 0;
  for (std::size_t j = 0; j < dims_.size(); ++j) {
    if (idx[j] < 0 || idx[j] >= dims_[j]) throw InvalidInput("multi-index out of range");
    flat = flat * static_cast<std::size_t>(dims_[j]) + static_cast<std::size_t>(idx[j]);
  }
  return flat;
}

std::vector<int> Shape::multi_index(std::size_t flat) const {
  std::vector<int> idx(dims_.size());
  for (std::size_t j = dims_.size(); j-- > 0;) {
    idx[j] = static_cast<int>(flat % static_cast<std::size_t>(dims_[j]));
    flat /= static_cast<std::size_t>(dims_[j]);
  }
  return idx;
}

std::string Shape::coordinate_name(std::size_t flat) const {
  std::string s = "phi_{";
  auto idx = multi_index(flat);
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(idx[j] + 1);
  }
  return s + "}";
}

std::string Shape::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < dims_.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(dims_[j]);
  }
  return s;
}

template <class F>
Tensor<F> rank_one(const Shape& shape, const std::vector<std::vector<F>>& factors) {
  if (factors.size() != shape.factors()) throw InvalidInput("rank_one: wrong number of factor vectors");
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (static_cast<int>(factors[j].size()) != shape[j]) throw InvalidInput("rank_one: factor vector of wrong length");
  }
  std::vector<F> entries;
  entries.reserve(shape.volume());
  for (std::size_t flat = 0; flat < shape.volume(); ++flat) {
    auto idx = shape.multi_index(flat);
    F v = factors[0][static_cast<std::size_t>(idx[0])];
    for (std::size_t j = 1; j < idx.size(); ++j) v *= factors[j][static_cast<std::size_t>(idx[j])];
    entries.push_back(v);
  }
  return Tensor<F>(shape, std::move(entries));
}

template Tensor<Rational> rank_one(const Shape&, const std::vector<std::vector<Rational>>&);
template Tensor<ModP> rank_one(const Shape&, const std::vector<std::vector<ModP>>&);

namespace {

template <class Field>
typename Field::value_type draw(const Field& field, std::mt19937_64& rng) {
  if constexpr (std::is_same_v<Field, RationalField>) {
    return field.from_integer(static_cast<std::int64_t>(uniform_below(rng, 19)) - 9);
  } else {
    return field.from_integer(static_cast<std::int64_t>(uniform_below(rng, field.p)));
  }
}

template <class Field>
Tensor<typename Field::value_type> random_rank_impl(const Shape& shape, int r, std::uint64_t seed, const Field& field) {
  using F = typename Field::value_type;
  std::mt19937_64 rng(seed);
  Tensor<F> total(shape, field.zero());
  for (int s = 0; s < r; ++s) {
    std::vector<std::vector<F>> factors;
    for (std::size_t j = 0; j < shape.factors(); ++j) {
      std::vector<F> v;
      bool nonzero = false;
      while (!nonzero) {
        v.clear();
        for (int i = 0; i < shape[j]; ++i) {
          v.push_back(draw(field, rng));
          nonzero = nonzero || !is_zero(v.back());
        }
      }
      factors.push_back(std::move(v));
    }
    total += rank_one(shape, factors);
  }
  return total;
}

}  // namespace

AnyTensor random_rank_tensor(const Shape& shape, int r, std::uint64_t seed, const ScalarDomain& domain) {
  if (r < 1) throw InvalidInput("random_rank_tensor: r must be positive");
  return std::visit([&](const auto& field) -> AnyTensor { return random_rank_impl(shape, r, seed, field); }, domain);
}

AnyTensor random_generic_tensor(const Shape& shape, std::uint64_t seed, const ScalarDomain& domain) {
  return std::visit(
      [&](const auto& field) -> AnyTensor {
        std::mt19937_64 rng(seed);
        using F = typename std::decay_t<decltype(field)>::value_type;
        std::vector<F> entries;
        for (std::size_t i = 0; i < shape.volume(); ++i) entries.push_back(draw(field, rng));
        return Tensor<F>(shape, std::move(entries));
      },
      domain);
}

AnyTensor basis_tensor(const Shape& shape, std::span<const int> one_based, const ScalarDomain& domain) {
  std::vector<int> idx(one_based.begin(), one_based.end());
  for (auto& i : idx) --i;
  const std::size_t flat = shape.flat_index(idx);
  return std::visit(
      [&](const auto& field) -> AnyTensor {
        Tensor<typename std::decay_t<decltype(field)>::value_type> t(shape, field.zero());
        t[flat] = field.one();
        return t;
      },
      domain);
}

AnyTensor diagonal_tensor(const Shape& shape, int k, const ScalarDomain& domain) {
  for (int a : shape.dims()) {
    if (k > a) throw InvalidInput("diagonal_tensor: k exceeds a factor dimension");
  }
  return std::visit(
      [&](const auto& field) -> AnyTensor {
        Tensor<typename std::decay_t<decltype(field)>::value_type> t(shape, field.zero());
        for (int s = 0; s < k; ++s) {
          std::vector<int> idx(shape.factors(), s);
          t[shape.flat_index(idx)] = field.one();
        }
        return t;
      },
      domain);
}

std::vector<int> complement_split(std::size_t factors, std::span<const int> split) {
  std::vector<int> out;
  for (int j = 1; j <= static_cast<int>(factors); ++j) {
    if (std::find(split.begin(), split.end(), j) == split.end()) out.push_back(j);
  }
  return out;
}

std::vector<std::vector<int>> all_splits(std::size_t factors) {
  std::vector<std::vector<int>> out;
  const std::size_t n = factors;
  // Subsets containing factor 1, excluding the full set; bit j ↔ factor j+1.
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n) - 1; ++mask) {
    if ((mask & 1u) == 0) continue;
    std::vector<int> s;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::uint64_t{1} << j)) s.push_back(static_cast<int>(j + 1));
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

template <class F>
DenseMatrix<F> flatten(const Tensor<F>& t, std::vector<int> split) {
  const Shape& shape = t.shape();
  const std::size_t n = shape.factors();
  std::sort(split.begin(), split.end());
  if (split.empty() || split.size() >= n) throw InvalidInput("flatten: split must be a nonempty proper subset");
  if (std::adjacent_find(split.begin(), split.end()) != split.end()) throw InvalidInput("flatten: repeated factor in split");
  for (int j : split) {
    if (j < 1 || j > static_cast<int>(n)) throw InvalidInput("flatten: factor index out of range");
  }
  const auto other = complement_split(n, split);
  std::size_t rows = 1, cols = 1;
  for (int j : split) rows *= static_cast<std::size_t>(shape[static_cast<std::size_t>(j - 1)]);
  for (int j : other) cols *= static_cast<std::size_t>(shape[static_cast<std::size_t>(j - 1)]);

  std::vector<F> data(rows * cols, t[0]);
  for (std::size_t flat = 0; flat < shape.volume(); ++flat) {
    auto idx = shape.multi_index(flat);
    std::size_t r = 0, c = 0;
    for (int j : split) r = r * static_cast<std::size_t>(shape[static_cast<std::size_t>(j - 1)]) + static_cast<std::size_t>(idx[static_cast<std::size_t>(j - 1)]);
    for (int j : other) c = c * static_cast<std::size_t>(shape[static_cast<std::size_t>(j - 1)]) + static_cast<std::size_t>(idx[static_cast<std::size_t>(j - 1)]);
    data[r * cols + c] = t[flat];
  }
  return DenseMatrix<F>(rows, cols, std::move(data));
}

template DenseMatrix<Rational> flatten(const Tensor<Rational>&, std::vector<int>);
template DenseMatrix<ModP> flatten(const Tensor<ModP>&, std::vector<int>);

template <class F>
std::vector<std::size_t> multilinear_rank(const Tensor<F>& t) {
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j <= t.shape().factors(); ++j) {
    out.push_back(rank(flatten(t, {static_cast<int>(j)})));
  }
  return out;
}

template std::vector<std::size_t> multilinear_rank(const Tensor<Rational>&);
template std::vector<std::size_t> multilinear_rank(const Tensor<ModP>&);

template <class F>
std::vector<SplitVerdict> flattening_rank_test(const Tensor<F>& t, int r) {
  if (r < 1) throw InvalidInput("flattening_rank_test: r must be positive");
  std::vector<SplitVerdict> out;
  for (auto& split : all_splits(t.shape().factors())) {
    auto m = flatten(t, split);
    SplitVerdict v;
    v.rows = m.rows();
    v.cols = m.cols();
    v.rank = rank(m);
    v.within_bound = v.rank <= static_cast<std::size_t>(r);
    v.split = std::move(split);
    out.push_back(std::move(v));
  }
  return out;
}

template std::vector<SplitVerdict> flattening_rank_test(const Tensor<Rational>&, int);
template std::vector<SplitVerdict> flattening_rank_test(const Tensor<ModP>&, int);

const Shape& shape_of(const AnyTensor& t) {
  return std::visit([](const auto& x) -> const Shape& { return x.shape(); }, t);
}

ScalarDomain domain_of(const AnyTensor& t) {
  if (const auto* q = std::get_if<ModPTensor>(&t)) return PrimeField{(*q)[0].modulus()};
  return RationalField{};
}

}  // namespace secant
