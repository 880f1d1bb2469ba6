#include "secant/serialize.hpp"

#include <cctype>
#include <cstdio>

#include "secant/error.hpp"

namespace secant {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Json to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("partition must be a JSON array");
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InvalidInput("partition parts must be integers");
    parts.push_back(x.get<int>());
  }
  return Partition(parts);
}

namespace {

std::vector<int> parse_ints(std::string_view text, const char* what) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    try {
      std::size_t used = 0;
      const int v = std::stoi(cur, &used);
      if (used != cur.size()) throw std::invalid_argument(cur);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InvalidInput(std::string("cannot parse ") + what + " from '" + std::string(text) + "'");
    }
    cur.clear();
  };
  for (char c : text) {
    if (c == '[' || c == ']' || c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',') {
      flush();
      continue;
    }
    cur += c;
  }
  flush();
  return out;
}

}  // namespace

Partition parse_partition(std::string_view text) { return Partition(parse_ints(text, "partition")); }

Shape parse_shape(std::string_view text) { return Shape(parse_ints(text, "shape")); }

std::vector<int> parse_int_list(std::string_view text) { return parse_ints(text, "integer list"); }

Json to_json(const AnyTensor& t) {
  Json j;
  j["shape"] = shape_of(t).dims();
  if (const auto* q = std::get_if<RationalTensor>(&t)) {
    j["field"] = "Q";
    Json entries = Json::array();
    for (const auto& e : q->entries()) entries.push_back(to_string(e));
    j["entries"] = std::move(entries);
  } else {
    const auto& m = std::get<ModPTensor>(t);
    j["field"] = "F_p";
    j["prime"] = std::get<PrimeField>(domain_of(t)).p;
    Json entries = Json::array();
    for (const auto& e : m.entries()) entries.push_back(e.value());
    j["entries"] = std::move(entries);
  }
  return j;
}

AnyTensor tensor_from_json(const Json& j) {
  try {
    Shape shape(j.at("shape").get<std::vector<int>>());
    const std::string field = j.value("field", "Q");
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != shape.volume()) {
      throw InvalidInput("tensor needs " + std::to_string(shape.volume()) + " entries");
    }
    if (field == "Q") {
      std::vector<Rational> v;
      for (const auto& e : entries) {
        if (e.is_string()) {
          v.push_back(parse_rational(e.get<std::string>()));
        } else if (e.is_number_integer()) {
          v.emplace_back(e.get<long>());
        } else {
          throw InvalidInput("rational entries must be integers or \"num/den\" strings");
        }
      }
      return RationalTensor(shape, std::move(v));
    }
    if (field == "F_p") {
      const auto p = j.at("prime").get<std::uint32_t>();
      if (!is_prime(p)) throw InvalidInput("tensor prime is not prime");
      std::vector<ModP> v;
      for (const auto& e : entries) v.emplace_back(e.get<std::int64_t>(), p);
      return ModPTensor(shape, std::move(v));
    }
    throw InvalidInput("unknown tensor field '" + field + "'");
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed tensor JSON: ") + e.what());
  }
}

Json to_json(const SparsePoly& f) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) {
    terms.push_back({{"exponents", m.exponent_vector(f.num_vars())}, {"coefficient", to_string(c)}});
  }
  return {{"terms", std::move(terms)}};
}

SparsePoly poly_from_json(const Shape& shape, const Json& j) {
  try {
    SparsePoly f(shape);
    for (const auto& t : j.at("terms")) {
      const auto e = t.at("exponents").get<std::vector<int>>();
      if (e.size() != shape.volume()) throw InvalidInput("exponent vector has the wrong length");
      std::vector<std::uint32_t> vars;
      for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] < 0) throw InvalidInput("negative exponent");
        vars.insert(vars.end(), static_cast<std::size_t>(e[v]), static_cast<std::uint32_t>(v));
      }
      f.add_term(Monomial(vars), parse_rational(t.at("coefficient").get<std::string>()));
    }
    return f;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed polynomial JSON: ") + e.what());
  }
}

Json to_json(const GeneratorSet& set) {
  Json gens = Json::array();
  for (const auto& g : set.generators) {
    Json jg = to_json(g.poly);
    jg["provenance"] = g.provenance;
    jg["substitution"] = g.substitution ? Json(*g.substitution) : Json(nullptr);
    gens.push_back(std::move(jg));
  }
  Json subs = Json::array();
  for (const auto& s : set.substitutions) {
    Json maps = Json::array();
    for (const auto& m : s.maps) {
      Json rows = Json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (const auto& e : m.row(i)) row.push_back(to_string(e));
        rows.push_back(std::move(row));
      }
      maps.push_back(std::move(rows));
    }
    subs.push_back({{"note", s.note}, {"maps", std::move(maps)}});
  }
  return {{"shape", set.shape.dims()}, {"label", set.label}, {"r", set.r},
          {"b", set.b},                {"generators", std::move(gens)}, {"substitutions", std::move(subs)}};
}

GeneratorSet generator_set_from_json(const Json& j) {
  try {
    GeneratorSet set;
    set.shape = Shape(j.at("shape").get<std::vector<int>>());
    set.label = j.at("label");
    set.r = j.at("r");
    set.b = j.at("b").get<std::vector<int>>();
    for (const auto& s : j.at("substitutions")) {
      Substitution sub;
      sub.note = s.at("note");
      for (const auto& m : s.at("maps")) {
        std::vector<Rational> entries;
        std::size_t cols = 0;
        for (const auto& row : m) {
          cols = row.size();
          for (const auto& e : row) entries.push_back(parse_rational(e.get<std::string>()));
        }
        const std::size_t rows = m.size();
        sub.maps.emplace_back(rows, cols, std::move(entries));
      }
      set.substitutions.push_back(std::move(sub));
    }
    for (const auto& g : j.at("generators")) {
      std::optional<std::size_t> sid;
      Shape base = set.shape;
      if (!g.at("substitution").is_null()) {
        sid = g.at("substitution").get<std::size_t>();
        if (*sid >= set.substitutions.size()) throw InvalidInput("substitution index out of range");
        std::vector<int> dims;
        for (const auto& m : set.substitutions[*sid].maps) dims.push_back(static_cast<int>(m.rows()));
        base = Shape(dims);
      }
      set.generators.push_back({poly_from_json(base, g), sid, g.value("provenance", "")});
    }
    return set;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed generator set JSON: ") + e.what());
  }
}

std::string fingerprint(const GeneratorSet& set) { return "fnv1a64:" + hex64(fnv1a64(to_json(set).dump())); }

Json to_json(const BettiNumbers& b) {
  Json out = Json::array();
  for (const auto& [key, rank] : b) out.push_back({{"j", key.first}, {"twist", key.second}, {"rank", rank.get_si()}});
  return out;
}

}  // namespace secant
