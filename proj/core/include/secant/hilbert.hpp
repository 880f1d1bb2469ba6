#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "secant/polynomial.hpp"
#include "secant/scalar.hpp"

namespace secant {

struct HilbertOptions {
  unsigned threads = 0;             ///< 0 = default_threads()
  std::ostream* progress = nullptr; ///< per-degree progress lines, if set
};

/// dim_{F_p} span{ m·g : deg m = d − deg g } inside S^d. Generators of degree
/// above d contribute nothing. When every generator is homogeneous for the
/// torus multidegree (per-factor index counts) the products are eliminated in
/// independent multidegree blocks; otherwise in a single block.
std::size_t graded_ideal_dimension(std::span<const SparsePoly> gens, int d, std::uint32_t p,
                                   const HilbertOptions& options = {});

/// (d, H(A/I, d)) for 0 ≤ d ≤ d_max, H = binomial(N+d−1, d) − dim I_d with N
/// the number of variables of the ring.
std::vector<std::pair<int, Integer>> hilbert_function(std::size_t num_vars, std::span<const SparsePoly> gens,
                                                      int d_max,
                                                      std::uint32_t p, const HilbertOptions& options = {});

/// True if every term of f has the same per-factor index counts.
bool is_multihomogeneous(const SparsePoly& f);

}  // namespace secant
