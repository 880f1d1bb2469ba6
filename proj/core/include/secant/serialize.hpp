#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "secant/equations.hpp"
#include "secant/partition.hpp"
#include "secant/polynomial.hpp"
#include "secant/resolution.hpp"
#include "secant/tensor.hpp"

namespace secant {

using Json = nlohmann::json;

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t v);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);
/// Accepts "[2,1,1]", "2,1,1" or "(2,1,1)".
Partition parse_partition(std::string_view text);
/// Accepts "2,2,2,2".
Shape parse_shape(std::string_view text);
/// Comma-separated integers, brackets and spaces ignored.
std::vector<int> parse_int_list(std::string_view text);

/// {"shape": [...], "field": "Q" | "F_p", "prime": p?, "entries": [...]}.
/// Rational entries are "num/den" strings, residues are integers.
Json to_json(const AnyTensor& t);
AnyTensor tensor_from_json(const Json& j);

/// {"terms": [{"exponents": [...], "coefficient": "num/den"}, ...]} in
/// increasing canonical monomial order; exponent vectors are dense over the
/// canonical variable order.
Json to_json(const SparsePoly& f);
SparsePoly poly_from_json(const Shape& shape, const Json& j);

Json to_json(const GeneratorSet& set);
GeneratorSet generator_set_from_json(const Json& j);
/// FNV-1a of the canonical compact serialization.
std::string fingerprint(const GeneratorSet& set);

Json to_json(const BettiNumbers& b);

}  // namespace secant
