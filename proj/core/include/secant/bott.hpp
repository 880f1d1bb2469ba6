#pragma once

#include <string>
#include <vector>

#include "secant/partition.hpp"
#include "secant/scalar.hpp"
#include "secant/tensor.hpp"

namespace secant {

/// Weight of an irreducible homogeneous bundle S_μ𝒬 ⊗ S_β𝓡 on G(r, A*),
/// a = dim A, with 0 → 𝓡 → A*⊗𝒪 → 𝒬 → 0. alpha = (μ | β): the quotient
/// block (length a − r) followed by the subspace block (length r), each weakly
/// decreasing. A dominant alpha has H^0 = S_alpha(A*).
///
/// Example on P^1 = G(1, 2): 𝓡 = 𝒪(−1), so alpha = (0 | 2) is 𝒪(−2);
/// alpha + ρ = (1, 2) sorts with one inversion to (2, 1), giving H^1 = S_{(1,1)}
/// of dimension 1.
struct FactorWeight {
  int r = 0;
  int a = 0;
  std::vector<int> alpha;

  /// S_λ𝓡^* for a weakly decreasing integer sequence λ of length ≤ r (padded
  /// with zeros): subspace block (−λ_r, …, −λ_1), zero quotient block.
  static FactorWeight dual_subspace(int r, int a, std::vector<int> lambda);
  /// Throws InvalidInput unless each block is weakly decreasing.
  void validate() const;
};

struct BottResult {
  bool vanishes = false;
  int degree = 0;                 ///< cohomological degree l when not vanishing
  std::vector<int> dominant;      ///< sorted(alpha + ρ) − ρ
};

/// Bott's algorithm: α + ρ with ρ = (a−1, …, 0); a repeated entry means all
/// cohomology vanishes, otherwise the number of inversions sorting it is the
/// only nonzero degree.
BottResult bott_resolve(const FactorWeight& w);

/// dim of the GL_a irreducible with dominant (possibly negative) weight.
Integer weight_dimension(const std::vector<int>& dominant);

struct ProductResult {
  bool vanishes = false;
  int degree = 0;
  std::vector<std::vector<int>> dominant;
};

/// Künneth over G(r, A_1^*) × … × G(r, A_n^*).
ProductResult product_cohomology(const std::vector<FactorWeight>& bundle);

struct SummandCohomology {
  std::vector<Partition> parts;
  Integer multiplicity;
  bool vanishes = false;
  int degree = 0;
};

struct AcyclicityReport {
  std::vector<int> shape;
  int r = 0;
  int d = 0;
  std::vector<SummandCohomology> summands;
  bool all_degree_zero = true;
  bool any_higher = false;
};

/// Decomposes S^d(𝓡_1^*⊗…⊗𝓡_n^*) into ⊗_j S_{π_j}𝓡_j^* and runs Bott on each summand.
AcyclicityReport check_acyclic_Sd_eta(const Shape& shape, int r, int d);

struct TwistedFactor {
  Partition pi;
  std::vector<int> transformed;        ///< (r^{n−1}−a_j−p_r, …, r^{n−1}−a_j−p_1)
  std::vector<Rational> normalized;    ///< full weight minus its mean
  int literal_bound = 0;               ///< −a_j + 1
  int exact_bound = 0;                 ///< r − a_j
  bool literal_holds = false;          ///< last transformed part ≥ −a_j + 1
  bool hypothesis_holds = false;       ///< last transformed part ≥ r − a_j
};

struct TwistedDualReport {
  std::vector<int> shape;
  int r = 0;
  int max_sym_degree = 0;
  std::vector<TwistedFactor> factors;
  bool hypothesis_holds = true;
  std::size_t summands_checked = 0;
  bool acyclic = true;                 ///< no summand with higher cohomology
  std::string first_failure;
};

/// Transforms each π_j to the twisted dual weight, checks the lower bound on
/// its last part (Bott-exact bound r − a_j decides the flag; the literal bound
/// −a_j + 1 is reported alongside), and checks that the twisted dual tensored
/// with S^d(η), d ≤ max_sym_degree, has no higher cohomology.
TwistedDualReport twisted_dual_acyclicity(const std::vector<Partition>& pis, const Shape& shape, int r,
                                          int max_sym_degree = 2);

}  // namespace secant
