#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "secant/partition.hpp"
#include "secant/scalar.hpp"

namespace secant {

/// Conjugacy class of S_d given by its cycle lengths.
using CycleType = Partition;

Integer factorial(int n);
Integer binomial(long n, long k);

/// z_λ = Π i^{m_i} m_i!, the centralizer order of a permutation of cycle type λ.
Integer centralizer_order(const CycleType& lambda);
/// d!/z_λ.
Integer class_size(const CycleType& lambda);

/// χ_π(λ) by the Murnaghan–Nakayama rule. Values are memoized in a table
/// shared by all threads. Throws InvalidInput if |π| != |λ|.
std::int64_t character(const Partition& pi, const CycleType& lambda);

struct ClassTerm {
  CycleType cycle_type;
  Integer class_size;
  std::vector<std::int64_t> characters;  ///< χ_{π_j}(λ), one per argument
  Integer term;                          ///< class_size · Π χ
};

struct MultiplicityReport {
  int d = 0;
  std::vector<ClassTerm> terms;
  Integer numerator;     ///< Σ terms
  Integer multiplicity;  ///< numerator / d!
};

/// dim([π_1]⊗…⊗[π_n])^{S_d} with the per-class breakdown. The division by d!
/// is checked; a remainder throws InternalError.
MultiplicityReport invariant_multiplicity_report(std::span<const Partition> pis);
Integer invariant_multiplicity(std::span<const Partition> pis);

/// dim S_π(C^n) by the hook content formula; 0 when l(π) > n.
Integer schur_dimension(const Partition& pi, int n);

struct IsotypicComponent {
  std::vector<Partition> parts;  ///< (π_1,…,π_n)
  Integer multiplicity;
  Integer module_dimension;      ///< Π schur_dimension(π_j, a_j)
};

/// GL(A_1)×…×GL(A_n) isotypic decomposition of S^d(A_1⊗…⊗A_n); only
/// components with nonzero multiplicity and l(π_j) ≤ a_j are listed, in
/// lexicographic order of the factor-wise canonical partition order.
std::vector<IsotypicComponent> isotypic_decomposition(int d, std::span<const int> dims);

/// c^λ_{μν} by backtracking over LR skew tableaux of shape λ/μ and content ν.
Integer littlewood_richardson(const Partition& lambda, const Partition& mu, const Partition& nu);

/// All λ with c^λ_{μν} ≠ 0 (and at most max_rows rows), with coefficients.
std::vector<std::pair<Partition, Integer>> lr_product(const Partition& mu, const Partition& nu,
                                                      int max_rows);

}  // namespace secant
