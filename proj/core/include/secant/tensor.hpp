#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "secant/linalg.hpp"
#include "secant/scalar.hpp"

namespace secant {

/// Factor dimensions (a_1,…,a_n), n ≥ 2 and every a_j ≥ 2.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<int> dims);

  const std::vector<int>& dims() const { return dims_; }
  std::size_t factors() const { return dims_.size(); }
  int operator[](std::size_t j) const { return dims_[j]; }
  /// Π a_j, the number of coordinates φ.
  std::size_t volume() const { return volume_; }

  /// Row-major (last index fastest) position of a 0-based multi-index.
  std::size_t flat_index(std::span<const int> idx) const;
  std::vector<int> multi_index(std::size_t flat) const;
  /// "phi_{1,2,1,1}"-style 1-based label of a coordinate.
  std::string coordinate_name(std::size_t flat) const;
  std::string to_string() const;

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  std::vector<int> dims_;
  std::size_t volume_ = 0;
};

/// Dense tensor in A_1^*⊗…⊗A_n^*, entries stored row-major.
template <class F>
class Tensor {
 public:
  Tensor(Shape shape, const F& zero) : shape_(std::move(shape)), entries_(shape_.volume(), zero) {}
  Tensor(Shape shape, std::vector<F> entries) : shape_(std::move(shape)), entries_(std::move(entries)) {
    if (entries_.size() != shape_.volume()) throw InvalidInput("Tensor: entry count does not match shape");
  }

  const Shape& shape() const { return shape_; }
  std::span<const F> entries() const { return entries_; }
  const F& operator[](std::size_t flat) const { return entries_[flat]; }
  F& operator[](std::size_t flat) { return entries_[flat]; }
  const F& at(std::span<const int> idx) const { return entries_[shape_.flat_index(idx)]; }

  Tensor& operator+=(const Tensor& o) {
    if (o.shape_ != shape_) throw InvalidInput("Tensor: shape mismatch in addition");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  Tensor scaled(const F& c) const {
    Tensor t = *this;
    for (auto& e : t.entries_) e *= c;
    return t;
  }

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  Shape shape_;
  std::vector<F> entries_;
};

using RationalTensor = Tensor<Rational>;
using ModPTensor = Tensor<ModP>;
/// A tensor over whichever field it was created in.
using AnyTensor = std::variant<RationalTensor, ModPTensor>;

/// Σ_{s=1}^r a^s_1⊗…⊗a^s_n with seeded random factor vectors: integers in
/// [−9, 9] over Q, uniform residues over F_p; zero vectors are redrawn.
AnyTensor random_rank_tensor(const Shape& shape, int r, std::uint64_t seed, const ScalarDomain& domain);
/// Every entry drawn independently (same distributions as above).
AnyTensor random_generic_tensor(const Shape& shape, std::uint64_t seed, const ScalarDomain& domain);
/// e_{idx} with 1-based multi-index.
AnyTensor basis_tensor(const Shape& shape, std::span<const int> one_based, const ScalarDomain& domain);
/// Σ_s e_{s,s,…,s}, s = 1..k (the "diagonal" point used in Jacobian checks).
AnyTensor diagonal_tensor(const Shape& shape, int k, const ScalarDomain& domain);

template <class F>
Tensor<F> rank_one(const Shape& shape, const std::vector<std::vector<F>>& factors);

/// Matrix of T ∈ A_I ⊗ A_J. `split` holds 1-based factor numbers; rows follow
/// the lexicographic order of A_I multi-indices, columns that of A_J.
template <class F>
DenseMatrix<F> flatten(const Tensor<F>& t, std::vector<int> split);

/// Complement of a split in {1,…,n}, sorted.
std::vector<int> complement_split(std::size_t factors, std::span<const int> split);
/// One representative (the subset containing factor 1) per complementary pair.
std::vector<std::vector<int>> all_splits(std::size_t factors);

template <class F>
std::vector<std::size_t> multilinear_rank(const Tensor<F>& t);

struct SplitVerdict {
  std::vector<int> split;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  bool within_bound = false;  ///< rank ≤ r
};

template <class F>
std::vector<SplitVerdict> flattening_rank_test(const Tensor<F>& t, int r);

const Shape& shape_of(const AnyTensor& t);
ScalarDomain domain_of(const AnyTensor& t);

/// Portable uniform draw in [0, n) from a 64-bit engine (rejection sampling,
/// identical across standard libraries).
template <class Engine>
std::uint64_t uniform_below(Engine& rng, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  for (;;) {
    std::uint64_t x = rng();
    if (x < limit) return x % n;
  }
}

}  // namespace secant
