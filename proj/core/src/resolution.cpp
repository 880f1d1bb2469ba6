#include "secant/resolution.hpp"

#include <algorithm>

#include "secant/error.hpp"
#include "secant/serialize.hpp"
#include "secant/symrep.hpp"

namespace secant {

namespace detail {
extern const std::string_view kFourFactorTableJson;
extern const std::string_view kThreeFactorTableJson;
}  // namespace detail

EquivariantBettiTable parse_betti_table(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("Betti table is not valid JSON: ") + e.what());
  }
  try {
    if (doc.at("format") != "secant-equivariant-betti") throw InvalidInput("unexpected Betti table format");
    const std::string stored = doc.at("checksum");
    Json body = doc;
    body.erase("checksum");
    const std::string actual = "fnv1a64:" + hex64(fnv1a64(body.dump()));
    if (stored != actual) throw InvalidInput("Betti table checksum mismatch: stored " + stored + ", computed " + actual);

    EquivariantBettiTable t;
    t.name = doc.at("name");
    t.version = doc.at("version");
    t.factors = doc.at("factors");
    t.reference_dims = doc.at("reference_dims").get<std::vector<int>>();
    for (const auto& deg : doc.at("degrees")) {
      const int j = deg.at("j");
      auto& entries = t.degrees[j];
      for (const auto& e : deg.at("entries")) {
        BettiEntry be;
        be.twist = e.at("twist");
        be.copies = e.at("copies");
        for (const auto& p : e.at("orbit")) be.orbit.push_back(partition_from_json(p));
        if (be.orbit.size() != t.factors) throw InvalidInput("orbit length differs from the factor count");
        for (const auto& p : be.orbit) {
          if (p.weight() != be.twist) {
            throw InvalidInput("partition " + p.to_string() + " has weight different from twist " +
                               std::to_string(be.twist));
          }
        }
        if (be.copies < 1) throw InvalidInput("copies must be positive");
        entries.push_back(std::move(be));
      }
    }
    for (const auto& b : doc.at("betti")) {
      t.displayed[{b.at("j").get<int>(), b.at("twist").get<int>()}] = Integer(b.at("rank").get<long>());
    }
    return t;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed Betti table: ") + e.what());
  }
}

const EquivariantBettiTable& four_factor_table() {
  static const EquivariantBettiTable t = parse_betti_table(detail::kFourFactorTableJson);
  return t;
}

const EquivariantBettiTable& three_factor_table() {
  static const EquivariantBettiTable t = parse_betti_table(detail::kThreeFactorTableJson);
  return t;
}

const EquivariantBettiTable& table_by_case(std::string_view name) {
  if (name == "4factor") return four_factor_table();
  if (name == "3factor") return three_factor_table();
  throw InvalidInput("unknown case '" + std::string(name) + "' (expected 4factor or 3factor)");
}

std::vector<std::vector<Partition>> orbit_tuples(std::vector<Partition> orbit) {
  std::sort(orbit.begin(), orbit.end());
  std::vector<std::vector<Partition>> out;
  do {
    out.push_back(orbit);
  } while (std::next_permutation(orbit.begin(), orbit.end()));
  return out;
}

BettiNumbers betti_numbers(const EquivariantBettiTable& table, const Shape& dims) {
  if (dims.factors() != table.factors) throw InvalidInput("dimension vector does not match the table's factor count");
  BettiNumbers out;
  for (const auto& [j, entries] : table.degrees) {
    for (const auto& e : entries) {
      Integer total = 0;
      for (const auto& tuple : orbit_tuples(e.orbit)) {
        Integer term = 1;
        for (std::size_t f = 0; f < tuple.size(); ++f) term *= schur_dimension(tuple[f], dims[f]);
        total += term;
      }
      total *= e.copies;
      if (total != 0) out[{j, e.twist}] += total;
    }
  }
  return out;
}

Integer hilbert_from_resolution(const BettiNumbers& betti, long num_vars, int d) {
  if (num_vars < 1) throw InvalidInput("hilbert_from_resolution: need at least one variable");
  Integer h = 0;
  for (const auto& [key, beta] : betti) {
    const auto [j, k] = key;
    if (d < k) continue;
    const Integer term = beta * binomial(d - k + num_vars - 1, num_vars - 1);
    if (j % 2) {
      h -= term;
    } else {
      h += term;
    }
  }
  return h;
}

Integer codimension(const Shape& shape, int r) {
  Integer prod = 1, sum = 0;
  for (int a : shape.dims()) {
    prod *= a;
    sum += a;
  }
  const long n = static_cast<long>(shape.factors());
  return prod - 1 - (Integer(r) * (sum - n) + (r - 1));
}

LengthBudget resolution_length_budget(const Shape& shape, int r) {
  if (r < 1) throw InvalidInput("r must be positive");
  for (int a : shape.dims()) {
    if (a < r) throw InvalidInput("resolution_length_budget requires every a_j >= r");
  }
  const long n = static_cast<long>(shape.factors());
  Integer prod = 1, sum = 0, rn = 1;
  for (int a : shape.dims()) {
    prod *= a;
    sum += a;
    rn *= r;
  }
  LengthBudget b;
  b.rank_xi = prod - rn;
  b.dim_b = Integer(r) * (sum - n * r);
  b.basic_codim = rn - Integer(r) * r * n + Integer(r) * (n - 1);
  b.budget = b.rank_xi - b.dim_b + b.basic_codim;
  b.ambient_codim = codimension(shape, r);
  if (b.budget != b.ambient_codim) {
    throw InternalError("length budget " + b.budget.get_str() + " differs from codimension " +
                        b.ambient_codim.get_str() + " for " + shape.to_string());
  }
  return b;
}

PartitionCapReport partition_cap_check(const EquivariantBettiTable& table, int cap) {
  PartitionCapReport rep;
  rep.cap = cap;
  for (const auto& [j, entries] : table.degrees) {
    for (const auto& e : entries) {
      for (const auto& p : e.orbit) {
        ++rep.partitions_checked;
        rep.largest_first_part = std::max(rep.largest_first_part, p[0]);
        if (p[0] > cap) {
          rep.violations.push_back("j=" + std::to_string(j) + " twist " + std::to_string(e.twist) + " partition " +
                                   p.to_string());
        }
      }
    }
  }
  return rep;
}

}  // namespace secant
