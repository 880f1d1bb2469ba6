#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "secant/scalar.hpp"
#include "secant/tensor.hpp"

namespace secant {

/// Monomial in the coordinates φ, stored as the sorted multiset of variable
/// indices (flat row-major coordinate numbers).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> vars);

  const std::vector<std::uint32_t>& vars() const { return vars_; }
  int degree() const { return static_cast<int>(vars_.size()); }
  /// (variable, exponent) pairs, variables increasing.
  std::vector<std::pair<std::uint32_t, int>> exponents() const;
  std::vector<int> exponent_vector(std::size_t num_vars) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> vars_;
};

/// Graded reverse-lexicographic order with φ_{1,…,1} the smallest variable.
/// Strict weak "less than" for use as a map comparator.
struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

/// Polynomial in Sym(A_1⊗…⊗A_n) with exact rational coefficients, terms kept
/// in canonical (grevlex) order with no zero coefficients.
class SparsePoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrevlexLess>;

  explicit SparsePoly(Shape shape) : shape_(std::move(shape)) {}

  static SparsePoly variable(const Shape& shape, std::size_t flat);
  static SparsePoly constant(const Shape& shape, const Rational& c);

  const Shape& shape() const { return shape_; }
  std::size_t num_vars() const { return shape_.volume(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const Rational& c);

  /// Highest total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly operator-() const;
  SparsePoly scaled(const Rational& c) const;
  SparsePoly times(const Monomial& m) const;

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

  /// Readable form such as "phi_{1,1}*phi_{2,2} - phi_{1,2}*phi_{2,1}".
  std::string to_string() const;

 private:
  void check_shape(const SparsePoly& o) const;

  Shape shape_;
  TermMap terms_;
};

/// Gradient entries (coordinate, ∂f/∂φ) with zeros dropped, coordinates increasing.
template <class F>
using SparseVector = std::vector<std::pair<std::size_t, F>>;

/// f(T). Throws InvalidInput if the shapes differ.
template <class F>
F evaluate(const SparsePoly& f, const Tensor<F>& t);

/// df|_T in the dφ basis.
template <class F>
SparseVector<F> differential_at(const SparsePoly& f, const Tensor<F>& t);

/// A polynomial with coefficients already mapped into one field, for repeated
/// evaluation on many tensors.
template <class F>
class CompiledPoly {
 public:
  template <class Field>
  CompiledPoly(const SparsePoly& f, const Field& field) : num_vars_(f.num_vars()) {
    for (const auto& [m, c] : f.terms()) {
      coefficients_.push_back(field.from_rational(c));
      offsets_.push_back(static_cast<std::uint32_t>(vars_.size()));
      vars_.insert(vars_.end(), m.vars().begin(), m.vars().end());
    }
    offsets_.push_back(static_cast<std::uint32_t>(vars_.size()));
    zero_ = field.zero();
  }

  F evaluate(std::span<const F> point) const {
    if (point.size() != num_vars_) throw InvalidInput("CompiledPoly: point has the wrong number of coordinates");
    F total = zero_;
    for (std::size_t k = 0; k < coefficients_.size(); ++k) {
      F term = coefficients_[k];
      for (std::uint32_t i = offsets_[k]; i < offsets_[k + 1]; ++i) term *= point[vars_[i]];
      total += term;
    }
    return total;
  }

 private:
  std::size_t num_vars_;
  std::vector<F> coefficients_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> vars_;
  F zero_;
};

/// All monomials of degree d in num_vars variables, in grevlex order.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int d);

}  // namespace secant
