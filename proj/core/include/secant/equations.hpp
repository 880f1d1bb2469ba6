#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "secant/linalg.hpp"
#include "secant/polynomial.hpp"
#include "secant/tensor.hpp"

namespace secant {

/// Linear coordinate change T ↦ (M_1⊗…⊗M_n)T from a large shape onto the
/// shape of a base polynomial. maps[j] has base_dims[j] rows and a_j columns.
struct Substitution {
  std::vector<DenseMatrix<Rational>> maps;
  std::string note;
};

/// One generator: either an explicit polynomial in the coordinates of the set's
/// shape, or a base polynomial pulled back along a substitution.
struct Generator {
  SparsePoly poly;
  std::optional<std::size_t> substitution;
  std::string provenance;
};

struct GeneratorSet {
  Shape shape;
  std::string label;  ///< flat-minors | subspace | strassen | secant-assembled
  int r = 0;
  std::vector<int> b;  ///< subspace bounds, empty unless label == "subspace"
  std::vector<Generator> generators;
  std::vector<Substitution> substitutions;

  std::size_t size() const { return generators.size(); }
  int degree(std::size_t i) const { return generators.at(i).poly.degree(); }
  bool all_explicit() const { return substitutions.empty(); }
  /// Explicit polynomials; throws InvalidInput if some generator is a pull-back.
  std::vector<SparsePoly> explicit_polys() const;
  /// Appends the generators of another set on the same shape.
  void append(GeneratorSet other);
};

/// All s×s minors of the generic flattening along `split` (1-based factors as
/// rows). Leibniz expansion with rows and columns taken in increasing order.
GeneratorSet flattening_minor_polys(const Shape& shape, const std::vector<int>& split, int s);

/// (b_j+1)-minors of the single-factor flattenings {j} for every j with b_j < a_j.
GeneratorSet subspace_variety_generators(const Shape& shape, const std::vector<int>& b);

/// The 27 quartics P_{ist} on 3×3×3 tensors, P_{1st} = (Y adj(X) Z − Z adj(X) Y)_{st}
/// with X, Y, Z the slices T(a_i,·,·); P_{2st} and P_{3st} exchange X with Y
/// and with Z.
GeneratorSet strassen_polys();

/// Number of random coordinate changes per factor used for inherited Strassen
/// generators, besides the identity.
inline constexpr int kInheritedCoordinateChanges = 5;

/// Strassen quartics on every choice of three coordinates in each factor of
/// a shape with all a_j ≥ 3, after the identity and kInheritedCoordinateChanges
/// seeded invertible coordinate changes. Identity slices are explicit;
/// the rest are pull-backs.
GeneratorSet inherited_strassen(const Shape& shape);

/// Generators for σ_r in the supported cases: three factors with one factor of
/// dimension 2 and r ≤ the other two; four factors with r = 2; three factors
/// with r = 3 and all a_j ≥ 3. Throws NotImplemented otherwise.
GeneratorSet secant_generators(const Shape& shape, int r);

/// Evaluates a generator set in one field, sharing pull-back images between
/// generators that use the same substitution.
template <class F>
class GeneratorEvaluator {
 public:
  template <class Field>
  GeneratorEvaluator(const GeneratorSet& set, const Field& field);

  std::size_t size() const { return set_->size(); }
  std::vector<F> evaluate_all(const Tensor<F>& t) const;
  F evaluate(std::size_t i, const Tensor<F>& t) const;
  /// Index of the first generator not vanishing at t, if any.
  std::optional<std::size_t> first_nonvanishing(const Tensor<F>& t) const;
  SparseVector<F> gradient(std::size_t i, const Tensor<F>& t) const;

 private:
  std::vector<F> image(std::size_t substitution, const Tensor<F>& t) const;
  void check(const Tensor<F>& t) const;

  const GeneratorSet* set_;
  F zero_;
  std::vector<CompiledPoly<F>> compiled_;
  std::vector<std::vector<DenseMatrix<F>>> maps_;
  std::vector<Shape> base_shapes_;
};

/// Rank over F_p of the differentials of all generators at t. Rational
/// tensors are reduced mod p first.
std::size_t jacobian_rank_at(const GeneratorSet& set, const AnyTensor& t, std::uint32_t p);

struct MembershipVerdict {
  bool violates = false;
  std::size_t generators_checked = 0;
  std::optional<std::size_t> witness;
  std::string witness_provenance;
  std::string witness_value;
  /// Passing only shows the tensor satisfies every implemented equation.
  static constexpr const char* kPassMeaning = "necessary condition only";
};

MembershipVerdict membership_verdict(const AnyTensor& t, int r);
MembershipVerdict membership_verdict(const AnyTensor& t, const GeneratorSet& set);

}  // namespace secant
