#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "secant/partition.hpp"
#include "secant/scalar.hpp"
#include "secant/tensor.hpp"

namespace secant {

/// copies × (sum over distinct factor permutations of orbit) placed in twist k.
struct BettiEntry {
  int twist = 0;
  std::vector<Partition> orbit;
  int copies = 1;
};

/// β_{j,k}, keyed by (homological degree j, twist k).
using BettiNumbers = std::map<std::pair<int, int>, Integer>;

struct EquivariantBettiTable {
  std::string name;
  int version = 0;
  std::size_t factors = 0;
  std::vector<int> reference_dims;
  std::map<int, std::vector<BettiEntry>> degrees;
  /// Numeric ranks as displayed with the resolution, stored alongside.
  BettiNumbers displayed;
};

/// Parses a table document and verifies its checksum, the twist/weight
/// agreement and the orbit lengths. Throws InvalidInput.
EquivariantBettiTable parse_betti_table(std::string_view json_text);

/// σ_2 of four copies of P^1: the resolution of the ideal of 3×3 flattening minors.
const EquivariantBettiTable& four_factor_table();
/// σ_3 of three copies of P^2: the resolution of the ideal of Strassen's quartics.
const EquivariantBettiTable& three_factor_table();
/// Looks up "4factor" / "3factor". Throws InvalidInput otherwise.
const EquivariantBettiTable& table_by_case(std::string_view name);

/// The distinct rearrangements of a tuple of partitions.
std::vector<std::vector<Partition>> orbit_tuples(std::vector<Partition> orbit);

/// Numeric ranks from orbit expansion with dim S_π(C^{a_j}).
BettiNumbers betti_numbers(const EquivariantBettiTable& table, const Shape& dims);

/// Σ_j (−1)^j Σ_k β_{j,k} binomial(d − k + N − 1, N − 1).
Integer hilbert_from_resolution(const BettiNumbers& betti, long num_vars, int d);

/// a_1⋯a_n − 1 − [r(Σa_j − n) + (r − 1)].
Integer codimension(const Shape& shape, int r);

struct LengthBudget {
  Integer rank_xi;        ///< a_1⋯a_n − r^n
  Integer dim_b;          ///< r(Σa_j − nr)
  Integer basic_codim;    ///< r^n − r²n + r(n − 1)
  Integer budget;         ///< rank_xi − dim_b + basic_codim
  Integer ambient_codim;  ///< codimension(shape, r)
};

/// Throws InternalError if budget ≠ ambient_codim. Requires every a_j ≥ r.
LengthBudget resolution_length_budget(const Shape& shape, int r);

struct PartitionCapReport {
  int cap = 0;
  int largest_first_part = 0;
  std::size_t partitions_checked = 0;
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

/// Checks that every partition in the table has first part ≤ cap.
PartitionCapReport partition_cap_check(const EquivariantBettiTable& table, int cap);

}  // namespace secant
