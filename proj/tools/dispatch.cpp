#include "dispatch.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "secant/bott.hpp"
#include "secant/equations.hpp"
#include "secant/error.hpp"
#include "secant/hilbert.hpp"
#include "secant/parallel.hpp"
#include "secant/resolution.hpp"
#include "secant/serialize.hpp"
#include "secant/symrep.hpp"

namespace secant::cli {

namespace {

/// Thrown by command bodies for bad option combinations detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json big(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

std::uint32_t env_default_prime() {
  const char* text = std::getenv("SECANT_PRIME");
  if (text == nullptr || *text == '\0') return kDefaultPrime;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(text, &end, 10);
  if (*end != '\0' || v < 3 || v >= (1ull << 31) || !is_prime(v)) {
    throw UsageError("SECANT_PRIME must be an odd prime below 2^31");
  }
  return static_cast<std::uint32_t>(v);
}

std::uint32_t companion_prime(std::uint32_t p) { return p == kSecondPrime ? kDefaultPrime : kSecondPrime; }

void check_prime(std::uint32_t p, const char* flag) {
  if (p < 3 || p >= (1u << 31) || !is_prime(p)) {
    throw UsageError(std::string(flag) + " must be an odd prime below 2^31");
  }
}

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

Json envelope(const Context& ctx, const std::string& command, Json config) {
  config["seed"] = ctx.seed;
  return {{"tool", "secant"}, {"version", SECANT_VERSION}, {"command", command}, {"config", std::move(config)}};
}

void emit(const Context& ctx, const Json& report) { ctx.out << report.dump(2) << '\n'; }

Json parse_json_stream(std::istream& is, const std::string& source) {
  try {
    return Json::parse(is);
  } catch (const Json::exception& e) {
    throw InvalidInput("cannot parse JSON from " + source + ": " + e.what());
  }
}

AnyTensor read_tensor(const Context& ctx, const std::string& path) {
  Json doc;
  if (path.empty() || path == "-") {
    doc = parse_json_stream(ctx.in, "standard input");
  } else {
    std::ifstream f(path);
    if (!f) throw InvalidInput("cannot open tensor file '" + path + "'");
    doc = parse_json_stream(f, path);
  }
  if (doc.is_object() && doc.contains("tensor")) return tensor_from_json(doc.at("tensor"));
  return tensor_from_json(doc);
}

ScalarDomain domain_from_flags(const std::string& field, std::uint32_t p) {
  if (field == "Q") return RationalField{};
  if (field == "Fp") {
    check_prime(p, "--prime");
    return PrimeField{p};
  }
  throw UsageError("--field must be Q or Fp");
}

GeneratorSet family_set(const std::string& family, const Shape& shape, int r, const std::string& split,
                        const std::string& b) {
  if (family == "secant") return secant_generators(shape, r);
  if (family == "strassen") {
    if (shape == Shape({3, 3, 3})) return strassen_polys();
    return inherited_strassen(shape);
  }
  if (family == "flat") {
    if (split.empty()) throw UsageError("--family flat needs --split");
    return flattening_minor_polys(shape, parse_int_list(split), r + 1);
  }
  if (family == "subspace") {
    if (b.empty()) throw UsageError("--family subspace needs --b");
    return subspace_variety_generators(shape, parse_int_list(b));
  }
  throw UsageError("--family must be one of flat, subspace, strassen, secant");
}

Json generator_summary(const GeneratorSet& set) {
  std::map<int, std::size_t> by_degree;
  for (std::size_t i = 0; i < set.size(); ++i) ++by_degree[set.degree(i)];
  Json degrees = Json::array();
  for (const auto& [d, c] : by_degree) degrees.push_back({{"degree", d}, {"count", c}});
  return {{"label", set.label},
          {"count", set.size()},
          {"degrees", degrees},
          {"pulled_back", set.size() - static_cast<std::size_t>(std::count_if(
                                          set.generators.begin(), set.generators.end(),
                                          [](const Generator& g) { return !g.substitution; }))},
          {"fingerprint", fingerprint(set)}};
}

template <class F>
Json matrix_json(const DenseMatrix<F>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (const auto& e : m.row(i)) row.push_back(scalar_text(e));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json acyclicity_json(const AcyclicityReport& rep) {
  Json summands = Json::array();
  for (const auto& s : rep.summands) {
    Json parts = Json::array();
    for (const auto& p : s.parts) parts.push_back(to_json(p));
    summands.push_back({{"parts", parts},
                        {"multiplicity", big(s.multiplicity)},
                        {"vanishes", s.vanishes},
                        {"degree", s.degree}});
  }
  return {{"d", rep.d}, {"summands", summands}, {"all_degree_zero", rep.all_degree_zero},
          {"higher_cohomology", rep.any_higher}};
}

Json twisted_json(const TwistedDualReport& rep) {
  Json factors = Json::array();
  for (const auto& f : rep.factors) {
    Json normalized = Json::array();
    for (const auto& q : f.normalized) normalized.push_back(to_string(q));
    factors.push_back({{"partition", to_json(f.pi)},
                       {"transformed", f.transformed},
                       {"normalized_weight", normalized},
                       {"literal_bound", f.literal_bound},
                       {"literal_holds", f.literal_holds},
                       {"exact_bound", f.exact_bound},
                       {"hypothesis_holds", f.hypothesis_holds}});
  }
  Json j{{"factors", factors},
         {"hypothesis_holds", rep.hypothesis_holds},
         {"max_sym_degree", rep.max_sym_degree},
         {"summands_checked", rep.summands_checked},
         {"acyclic", rep.acyclic}};
  if (!rep.first_failure.empty()) j["first_failure"] = rep.first_failure;
  return j;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Context ctx{in, out, err};
  CLI::App app{"Exact checks for equations and resolutions of secant varieties of Segre varieties"};
  app.name("secant");
  app.set_version_flag("--version", SECANT_VERSION);
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--threads", ctx.threads, "Worker threads (0 = hardware concurrency)");
  app.add_option("--seed", ctx.seed, "Seed for randomized commands (always echoed)");

  std::function<int()> action;
  std::uint32_t prime = 0;
  std::uint32_t prime2 = 0;
  try {
    prime = env_default_prime();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  prime2 = companion_prime(prime);

  // multiplicity
  int mult_d = 0;
  std::vector<std::string> mult_parts;
  auto* multiplicity = app.add_subcommand("multiplicity", "dim of S_d-invariants in [π_1]⊗…⊗[π_n]");
  multiplicity->add_option("--d", mult_d, "Degree d")->required();
  multiplicity->add_option("--parts", mult_parts, "Partitions such as \"[2,1,1]\"")->required()->expected(1, -1);
  multiplicity->callback([&] {
    action = [&] {
      std::vector<Partition> pis;
      for (const auto& s : mult_parts) pis.push_back(parse_partition(s));
      for (const auto& p : pis) {
        if (p.weight() != mult_d) throw InvalidInput("partition " + p.to_string() + " is not a partition of d");
      }
      const auto rep = invariant_multiplicity_report(pis);
      Json parts = Json::array();
      for (const auto& p : pis) parts.push_back(to_json(p));
      Json report = envelope(ctx, "multiplicity", {{"d", mult_d}, {"parts", parts}});
      Json classes = Json::array();
      for (const auto& t : rep.terms) {
        classes.push_back({{"cycle_type", to_json(t.cycle_type)},
                           {"class_size", big(t.class_size)},
                           {"characters", t.characters},
                           {"term", big(t.term)}});
      }
      report["classes"] = classes;
      report["numerator"] = big(rep.numerator);
      report["multiplicity"] = big(rep.multiplicity);
      emit(ctx, report);
      return kExitOk;
    };
  });

  // decompose
  int dec_d = 0;
  std::string dec_dims;
  auto* decompose = app.add_subcommand("decompose", "Isotypic decomposition of S^d(A_1⊗…⊗A_n)");
  decompose->add_option("--d", dec_d, "Degree d")->required();
  decompose->add_option("--dims", dec_dims, "Factor dimensions, e.g. 2,2,2")->required();
  decompose->callback([&] {
    action = [&] {
      const auto dims = parse_int_list(dec_dims);
      Json comps = Json::array();
      Integer total = 0;
      for (const auto& c : isotypic_decomposition(dec_d, dims)) {
        Json parts = Json::array();
        for (const auto& p : c.parts) parts.push_back(to_json(p));
        comps.push_back({{"parts", parts},
                         {"multiplicity", big(c.multiplicity)},
                         {"module_dimension", big(c.module_dimension)}});
        total += c.multiplicity * c.module_dimension;
      }
      Json report = envelope(ctx, "decompose", {{"d", dec_d}, {"dims", dims}});
      report["components"] = comps;
      report["total_dimension"] = big(total);
      emit(ctx, report);
      return kExitOk;
    };
  });

  // tensor random|flatten|mrank
  std::string t_shape, t_field = "Q", t_tensor, t_split;
  int t_rank = 1;
  std::uint32_t t_prime = prime;
  bool t_generic = false;
  auto* tensor = app.add_subcommand("tensor", "Tensor utilities");
  tensor->require_subcommand(1);
  auto* t_random = tensor->add_subcommand("random", "Seeded random tensor of rank at most r");
  t_random->add_option("--shape", t_shape, "Shape, e.g. 3,3,3")->required();
  t_random->add_option("--rank", t_rank, "Number of rank-one summands");
  t_random->add_flag("--generic", t_generic, "Draw every entry independently instead");
  t_random->add_option("--field", t_field, "Q or Fp");
  t_random->add_option("--prime", t_prime, "Prime for --field Fp");
  t_random->callback([&] {
    action = [&] {
      const Shape shape = parse_shape(t_shape);
      const auto domain = domain_from_flags(t_field, t_prime);
      const AnyTensor t = t_generic ? random_generic_tensor(shape, ctx.seed, domain)
                                    : random_rank_tensor(shape, t_rank, ctx.seed, domain);
      Json config{{"shape", shape.dims()}, {"field", t_field}, {"generic", t_generic}};
      if (!t_generic) config["rank"] = t_rank;
      if (t_field == "Fp") config["prime"] = t_prime;
      Json report = envelope(ctx, "tensor random", config);
      report["tensor"] = to_json(t);
      emit(ctx, report);
      return kExitOk;
    };
  });
  auto* t_flatten = tensor->add_subcommand("flatten", "Flattening matrix and its rank");
  t_flatten->add_option("--tensor", t_tensor, "Tensor JSON file (default: standard input)");
  t_flatten->add_option("--split", t_split, "Row factors, e.g. 1,2")->required();
  t_flatten->callback([&] {
    action = [&] {
      const AnyTensor t = read_tensor(ctx, t_tensor);
      const auto split = parse_int_list(t_split);
      Json report = envelope(ctx, "tensor flatten", {{"split", split}, {"tensor", t_tensor.empty() ? "-" : t_tensor}});
      std::visit(
          [&](const auto& tt) {
            const auto m = flatten(tt, split);
            report["rows"] = m.rows();
            report["cols"] = m.cols();
            report["matrix"] = matrix_json(m);
            report["rank"] = rank(m);
          },
          t);
      emit(ctx, report);
      return kExitOk;
    };
  });
  auto* t_mrank = tensor->add_subcommand("mrank", "Multilinear rank and all flattening ranks");
  t_mrank->add_option("--tensor", t_tensor, "Tensor JSON file (default: standard input)");
  t_mrank->add_option("--r", t_rank, "Bound r for the flattening test");
  t_mrank->callback([&] {
    action = [&] {
      const AnyTensor t = read_tensor(ctx, t_tensor);
      Json report = envelope(ctx, "tensor mrank", {{"r", t_rank}, {"tensor", t_tensor.empty() ? "-" : t_tensor}});
      std::visit(
          [&](const auto& tt) {
            report["multilinear_rank"] = multilinear_rank(tt);
            Json splits = Json::array();
            bool all = true;
            for (const auto& v : flattening_rank_test(tt, t_rank)) {
              splits.push_back({{"split", v.split},
                                {"rows", v.rows},
                                {"cols", v.cols},
                                {"rank", v.rank},
                                {"within_bound", v.within_bound}});
              all = all && v.within_bound;
            }
            report["flattenings"] = splits;
            report["all_within_bound"] = all;
          },
          t);
      emit(ctx, report);
      return kExitOk;
    };
  });

  // equations gen|eval|jacobian
  std::string e_shape, e_family = "secant", e_split, e_b, e_tensor;
  int e_r = 0;
  bool e_summary = false;
  std::uint32_t e_prime = prime;
  std::uint32_t e_prime2 = prime2;
  auto* equations = app.add_subcommand("equations", "Generator sets and their evaluation");
  equations->require_subcommand(1);
  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", e_family, "flat | subspace | strassen | secant");
    sub->add_option("--r", e_r, "Secant order r (minors of size r+1 for flat)");
    sub->add_option("--split", e_split, "Row factors for --family flat, e.g. 1,2");
    sub->add_option("--b", e_b, "Subspace bounds for --family subspace, e.g. 2,2,2");
  };
  auto resolve_r = [&] {
    if (e_r > 0) return e_r;
    if (e_family == "strassen") return 3;
    if (e_family == "subspace") return 0;
    throw UsageError("--r is required for --family " + e_family);
  };
  auto family_config = [&](const Shape& shape) {
    Json c{{"shape", shape.dims()}, {"family", e_family}, {"r", e_r}};
    if (!e_split.empty()) c["split"] = parse_int_list(e_split);
    if (!e_b.empty()) c["b"] = parse_int_list(e_b);
    return c;
  };
  auto* e_gen = equations->add_subcommand("gen", "Build a generator set");
  e_gen->add_option("--shape", e_shape, "Shape, e.g. 2,2,2,2")->required();
  add_family(e_gen);
  e_gen->add_flag("--summary", e_summary, "Only counts, degrees and fingerprint");
  e_gen->callback([&] {
    action = [&] {
      const Shape shape = parse_shape(e_shape);
      const int r = resolve_r();
      const auto set = family_set(e_family, shape, r, e_split, e_b);
      Json report = envelope(ctx, "equations gen", family_config(shape));
      report["summary"] = generator_summary(set);
      if (!e_summary) report["generators"] = to_json(set);
      emit(ctx, report);
      return kExitOk;
    };
  });
  auto* e_eval = equations->add_subcommand("eval", "Evaluate a generator set at a tensor");
  e_eval->add_option("--tensor", e_tensor, "Tensor JSON file (default: standard input)");
  add_family(e_eval);
  e_eval->callback([&] {
    action = [&] {
      const AnyTensor t = read_tensor(ctx, e_tensor);
      const Shape& shape = shape_of(t);
      const auto set = family_set(e_family, shape, resolve_r(), e_split, e_b);
      Json report = envelope(ctx, "equations eval", family_config(shape));
      std::visit(
          [&](const auto& tt) {
            using F = std::decay_t<decltype(tt[0])>;
            GeneratorEvaluator<F> eval(set, field_of(tt[0]));
            Json values = Json::array();
            std::size_t nonzero = 0;
            for (const auto& v : eval.evaluate_all(tt)) {
              values.push_back(scalar_text(v));
              nonzero += !is_zero(v);
            }
            report["fingerprint"] = fingerprint(set);
            report["values"] = values;
            report["nonzero_count"] = nonzero;
            report["all_zero"] = nonzero == 0;
          },
          t);
      emit(ctx, report);
      return kExitOk;
    };
  });
  auto* e_jac = equations->add_subcommand("jacobian", "Rank of the differentials at a tensor over two primes");
  e_jac->add_option("--tensor", e_tensor, "Tensor JSON file (default: standard input)");
  add_family(e_jac);
  e_jac->add_option("--prime", e_prime, "First prime");
  e_jac->add_option("--prime2", e_prime2, "Second prime");
  e_jac->callback([&] {
    action = [&] {
      check_prime(e_prime, "--prime");
      check_prime(e_prime2, "--prime2");
      if (e_prime == e_prime2) throw UsageError("--prime and --prime2 must differ");
      const AnyTensor t = read_tensor(ctx, e_tensor);
      const Shape& shape = shape_of(t);
      const auto set = family_set(e_family, shape, resolve_r(), e_split, e_b);
      const auto r1 = jacobian_rank_at(set, t, e_prime);
      const auto r2 = jacobian_rank_at(set, t, e_prime2);
      Json config = family_config(shape);
      config["primes"] = {e_prime, e_prime2};
      Json report = envelope(ctx, "equations jacobian", config);
      report["ranks"] = {{{"prime", e_prime}, {"rank", r1}}, {{"prime", e_prime2}, {"rank", r2}}};
      report["agree"] = r1 == r2;
      report["codim"] = big(codimension(shape, set.r));
      emit(ctx, report);
      return r1 == r2 ? kExitOk : kExitCheckFailed;
    };
  });

  // membership
  std::string m_tensor;
  int m_r = 0;
  auto* membership = app.add_subcommand("membership", "Test a tensor against the implemented equations of σ_r");
  membership->add_option("--tensor", m_tensor, "Tensor JSON file (default: standard input)");
  membership->add_option("--r", m_r, "Secant order r")->required();
  membership->callback([&] {
    action = [&] {
      const AnyTensor t = read_tensor(ctx, m_tensor);
      const auto set = secant_generators(shape_of(t), m_r);
      const auto v = membership_verdict(t, set);
      Json report = envelope(ctx, "membership", {{"shape", shape_of(t).dims()}, {"r", m_r}});
      report["fingerprint"] = fingerprint(set);
      report["verdict"] = v.violates ? "violates-equations" : "passes-all-implemented-equations";
      report["generators_checked"] = v.generators_checked;
      if (v.violates) {
        report["witness"] = {{"index", *v.witness}, {"provenance", v.witness_provenance}, {"value", v.witness_value}};
      } else {
        report["meaning"] = MembershipVerdict::kPassMeaning;
      }
      emit(ctx, report);
      return kExitOk;
    };
  });

  // hilbert / hilbert-compare
  std::string h_ideal, h_case;
  int h_dmax = 6;
  std::uint32_t h_prime = prime;
  std::uint32_t h_prime2 = prime2;
  auto ideal_generators = [](const std::string& name) {
    if (name == "strassen" || name == "3factor") return strassen_polys().explicit_polys();
    if (name == "flat4" || name == "4factor") return secant_generators(Shape({2, 2, 2, 2}), 2).explicit_polys();
    throw UsageError("unknown ideal '" + name + "'");
  };
  auto two_prime_hilbert = [&](const std::vector<SparsePoly>& gens, Json& report) {
    check_prime(h_prime, "--prime");
    check_prime(h_prime2, "--prime2");
    if (h_prime == h_prime2) throw UsageError("--prime and --prime2 must differ");
    if (h_dmax < 0) throw UsageError("--dmax must be non-negative");
    HilbertOptions opts{ctx.threads, &ctx.err};
    const std::size_t n = gens.front().num_vars();
    const auto h1 = hilbert_function(n, gens, h_dmax, h_prime, opts);
    const auto h2 = hilbert_function(n, gens, h_dmax, h_prime2, opts);
    report["variables"] = n;
    report["generators"] = gens.size();
    return std::make_pair(h1, h2);
  };
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of a built-in ideal over two primes");
  hilbert->add_option("--ideal", h_ideal, "strassen | flat4")->required();
  hilbert->add_option("--dmax", h_dmax, "Largest degree");
  hilbert->add_option("--prime", h_prime, "First prime");
  hilbert->add_option("--prime2", h_prime2, "Second prime");
  hilbert->callback([&] {
    action = [&] {
      const auto gens = ideal_generators(h_ideal);
      Json report = envelope(ctx, "hilbert", {{"ideal", h_ideal}, {"dmax", h_dmax}, {"primes", {h_prime, h_prime2}}});
      const auto [h1, h2] = two_prime_hilbert(gens, report);
      Json values = Json::array();
      bool agree = true;
      for (std::size_t i = 0; i < h1.size(); ++i) {
        values.push_back({{"d", h1[i].first}, {"H", big(h1[i].second)}, {"H_prime2", big(h2[i].second)}});
        agree = agree && h1[i].second == h2[i].second;
      }
      report["hilbert"] = values;
      report["primes_agree"] = agree;
      emit(ctx, report);
      return agree ? kExitOk : kExitCheckFailed;
    };
  });
  auto* hcompare = app.add_subcommand("hilbert-compare", "Compare the ideal's Hilbert function with the resolution");
  hcompare->add_option("--case", h_case, "4factor | 3factor")->required();
  hcompare->add_option("--dmax", h_dmax, "Largest degree");
  hcompare->add_option("--prime", h_prime, "First prime");
  hcompare->add_option("--prime2", h_prime2, "Second prime");
  hcompare->callback([&] {
    action = [&] {
      const auto& table = table_by_case(h_case);
      const auto gens = ideal_generators(h_case);
      Json report =
          envelope(ctx, "hilbert-compare", {{"case", h_case}, {"dmax", h_dmax}, {"primes", {h_prime, h_prime2}}});
      const auto [h1, h2] = two_prime_hilbert(gens, report);
      const auto betti = betti_numbers(table, Shape(table.reference_dims));
      const long n = static_cast<long>(gens.front().num_vars());
      Json rows = Json::array();
      bool all = true;
      for (std::size_t i = 0; i < h1.size(); ++i) {
        const int d = h1[i].first;
        const Integer expected = hilbert_from_resolution(betti, n, d);
        const bool ok = h1[i].second == expected && h2[i].second == expected;
        all = all && ok;
        rows.push_back({{"d", d},
                        {"from_resolution", big(expected)},
                        {"from_ideal", big(h1[i].second)},
                        {"from_ideal_prime2", big(h2[i].second)},
                        {"agree", ok}});
      }
      report["degrees"] = rows;
      report["all_agree"] = all;
      emit(ctx, report);
      return all ? kExitOk : kExitCheckFailed;
    };
  });

  // betti-check
  std::string b_case;
  auto* betti = app.add_subcommand("betti-check", "Expand an equivariant table and compare with its ranks");
  betti->add_option("--case", b_case, "4factor | 3factor")->required();
  betti->callback([&] {
    action = [&] {
      const auto& table = table_by_case(b_case);
      const Shape dims(table.reference_dims);
      const auto computed = betti_numbers(table, dims);
      Json rows = Json::array();
      bool all = computed.size() == table.displayed.size();
      for (const auto& [key, rank] : table.displayed) {
        const auto it = computed.find(key);
        const Integer got = it == computed.end() ? Integer(0) : it->second;
        rows.push_back({{"j", key.first}, {"twist", key.second}, {"expected", big(rank)}, {"computed", big(got)},
                        {"agree", got == rank}});
        all = all && got == rank;
      }
      int top = 1;
      const int r = table.factors == 4 ? 2 : 3;
      for (std::size_t k = 0; k + 1 < table.factors; ++k) top *= r;
      const auto cap = partition_cap_check(table, top - r);
      Json report = envelope(ctx, "betti-check", {{"case", b_case}, {"dims", dims.dims()}});
      report["table"] = {{"name", table.name}, {"version", table.version}};
      report["betti"] = rows;
      report["all_agree"] = all;
      report["partition_cap"] = {{"cap", cap.cap},
                                 {"largest_first_part", cap.largest_first_part},
                                 {"partitions_checked", cap.partitions_checked},
                                 {"passed", cap.passed()}};
      emit(ctx, report);
      return all && cap.passed() ? kExitOk : kExitCheckFailed;
    };
  });

  // bott
  std::string bo_shape;
  int bo_r = 0, bo_d = 0, bo_sym = 2;
  std::vector<std::string> bo_twisted;
  auto* bott = app.add_subcommand("bott", "Cohomology of S^d(η) and twisted duals on products of Grassmannians");
  bott->add_option("--shape", bo_shape, "Shape, e.g. 3,3,3")->required();
  bott->add_option("--r", bo_r, "Subspace rank r")->required();
  bott->add_option("--d", bo_d, "Largest symmetric power")->required();
  bott->add_option("--twisted", bo_twisted, "One partition per factor for the twisted-dual check")->expected(1, -1);
  bott->add_option("--sym-degree", bo_sym, "Largest S^d(η) tensored onto the twisted dual");
  bott->callback([&] {
    action = [&] {
      const Shape shape = parse_shape(bo_shape);
      Json config{{"shape", shape.dims()}, {"r", bo_r}, {"d", bo_d}};
      Json degrees = Json::array();
      bool ok = true;
      for (int d = 0; d <= bo_d; ++d) {
        const auto rep = check_acyclic_Sd_eta(shape, bo_r, d);
        ok = ok && rep.all_degree_zero;
        degrees.push_back(acyclicity_json(rep));
      }
      Json report;
      if (!bo_twisted.empty()) {
        std::vector<Partition> pis;
        Json parts = Json::array();
        for (const auto& s : bo_twisted) {
          pis.push_back(parse_partition(s));
          parts.push_back(to_json(pis.back()));
        }
        config["twisted"] = parts;
        config["sym_degree"] = bo_sym;
        const auto tw = twisted_dual_acyclicity(pis, shape, bo_r, bo_sym);
        report = envelope(ctx, "bott", config);
        report["twisted_dual"] = twisted_json(tw);
        ok = ok && tw.hypothesis_holds && tw.acyclic;
      } else {
        report = envelope(ctx, "bott", config);
      }
      report["symmetric_powers"] = degrees;
      report["passed"] = ok;
      emit(ctx, report);
      return ok ? kExitOk : kExitCheckFailed;
    };
  });

  // codim / length-budget
  std::string c_shape;
  int c_r = 0;
  auto* codim = app.add_subcommand("codim", "Expected codimension of σ_r");
  codim->add_option("--shape", c_shape, "Shape")->required();
  codim->add_option("--r", c_r, "Secant order r")->required();
  codim->callback([&] {
    action = [&] {
      const Shape shape = parse_shape(c_shape);
      Json report = envelope(ctx, "codim", {{"shape", shape.dims()}, {"r", c_r}});
      report["codim"] = big(codimension(shape, c_r));
      emit(ctx, report);
      return kExitOk;
    };
  });
  auto* budget = app.add_subcommand("length-budget", "Resolution length bookkeeping for inheritance");
  budget->add_option("--shape", c_shape, "Shape")->required();
  budget->add_option("--r", c_r, "Secant order r")->required();
  budget->callback([&] {
    action = [&] {
      const Shape shape = parse_shape(c_shape);
      Json report = envelope(ctx, "length-budget", {{"shape", shape.dims()}, {"r", c_r}});
      try {
        const auto b = resolution_length_budget(shape, c_r);
        report["rank_xi"] = big(b.rank_xi);
        report["dim_B"] = big(b.dim_b);
        report["basic_codim"] = big(b.basic_codim);
        report["budget"] = big(b.budget);
        report["ambient_codim"] = big(b.ambient_codim);
        report["identity_holds"] = true;
      } catch (const InternalError& e) {
        report["identity_holds"] = false;
        report["error"] = e.what();
        emit(ctx, report);
        return kExitCheckFailed;
      }
      emit(ctx, report);
      return kExitOk;
    };
  });

  try {
    // CLI11 expands "[a,b]" into separate values; partitions are written that
    // way, so keep each one intact by switching to parentheses.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    for (auto& a : reversed) {
      if (a.size() >= 2 && a.front() == '[' && a.back() == ']') {
        a.front() = '(';
        a.back() = ')';
      }
    }
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << SECANT_VERSION << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  if (!action) {
    err << app.help();
    return kExitUsage;
  }
  set_default_threads(ctx.threads);
  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotImplemented& e) {
    err << "not implemented: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace secant::cli
