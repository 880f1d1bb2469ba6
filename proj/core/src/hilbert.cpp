#include "secant/hilbert.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>

#include "secant/linalg.hpp"
#include "secant/parallel.hpp"
#include "secant/symrep.hpp"

namespace secant {

namespace {

using MultiDegree = std::vector<std::uint8_t>;

class MultiDegreeMap {
 public:
  explicit MultiDegreeMap(const Shape& shape) : width_(0) {
    std::vector<int> offsets;
    for (int a : shape.dims()) {
      offsets.push_back(static_cast<int>(width_));
      width_ += static_cast<std::size_t>(a);
    }
    slots_.resize(shape.volume());
    for (std::size_t v = 0; v < shape.volume(); ++v) {
      const auto idx = shape.multi_index(v);
      for (std::size_t j = 0; j < idx.size(); ++j) slots_[v].push_back(offsets[j] + idx[j]);
    }
  }

  MultiDegree of(const Monomial& m) const {
    MultiDegree key(width_, 0);
    for (auto v : m.vars()) {
      for (int s : slots_[v]) ++key[s];
    }
    return key;
  }

 private:
  std::size_t width_;
  std::vector<std::vector<int>> slots_;
};

struct ReducedGenerator {
  int degree = 0;
  std::vector<std::pair<Monomial, std::uint32_t>> terms;
};

struct RowSpec {
  std::size_t generator;
  std::size_t multiplier;
};

}  // namespace

bool is_multihomogeneous(const SparsePoly& f) {
  if (f.is_zero()) return true;
  MultiDegreeMap md(f.shape());
  const auto first = md.of(f.terms().begin()->first);
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const auto& t) { return md.of(t.first) == first; });
}

std::size_t graded_ideal_dimension(std::span<const SparsePoly> gens, int d, std::uint32_t p,
                                   const HilbertOptions& options) {
  if (gens.empty() || d < 0) return 0;
  if (!is_prime(p)) throw InvalidInput("graded_ideal_dimension: modulus is not prime");
  const Shape& shape = gens.front().shape();
  const Residues field{p};

  std::vector<ReducedGenerator> reduced;
  bool blockwise = true;
  for (const auto& g : gens) {
    if (g.shape() != shape) throw InvalidInput("graded_ideal_dimension: generators from different rings");
    if (!g.is_homogeneous()) throw InvalidInput("graded_ideal_dimension: generator is not homogeneous");
    if (g.is_zero() || g.degree() > d) continue;
    ReducedGenerator rg;
    rg.degree = g.degree();
    for (const auto& [m, c] : g.terms()) {
      const auto r = field.reduce(c);
      if (r != 0) rg.terms.emplace_back(m, r);
    }
    if (rg.terms.empty()) continue;
    blockwise = blockwise && is_multihomogeneous(g);
    reduced.push_back(std::move(rg));
  }
  if (reduced.empty()) return 0;

  std::map<int, std::vector<Monomial>> multipliers;
  for (const auto& g : reduced) {
    if (!multipliers.contains(d - g.degree)) multipliers[d - g.degree] = monomials_of_degree(shape.volume(), d - g.degree);
  }

  // Bucket the products m·g by the torus multidegree of their leading term.
  MultiDegreeMap md(shape);
  std::map<MultiDegree, std::vector<RowSpec>> buckets;
  for (std::size_t gi = 0; gi < reduced.size(); ++gi) {
    const auto& mults = multipliers.at(d - reduced[gi].degree);
    const Monomial& lead = reduced[gi].terms.front().first;
    for (std::size_t mi = 0; mi < mults.size(); ++mi) {
      MultiDegree key = blockwise ? md.of(mults[mi] * lead) : MultiDegree{};
      buckets[key].push_back({gi, mi});
    }
  }

  std::vector<const std::vector<RowSpec>*> blocks;
  blocks.reserve(buckets.size());
  for (const auto& [key, rows] : buckets) blocks.push_back(&rows);
  std::vector<std::size_t> ranks(blocks.size(), 0);

  parallel_for(blocks.size(), options.threads, [&](std::size_t b) {
    const auto& specs = *blocks[b];
    std::map<Monomial, std::uint32_t, GrevlexLess> columns;
    for (const auto& s : specs) {
      const auto& mult = multipliers.at(d - reduced[s.generator].degree)[s.multiplier];
      for (const auto& [m, c] : reduced[s.generator].terms) columns.emplace(mult * m, 0);
    }
    std::uint32_t next = 0;
    for (auto& [m, idx] : columns) idx = next++;

    SparseRowSet rows(columns.size(), p);
    for (const auto& s : specs) {
      const auto& mult = multipliers.at(d - reduced[s.generator].degree)[s.multiplier];
      SparseRow row;
      row.reserve(reduced[s.generator].terms.size());
      for (const auto& [m, c] : reduced[s.generator].terms) row.emplace_back(columns.at(mult * m), c);
      rows.add_row(std::move(row));
    }
    ranks[b] = row_space_dimension(rows, p);
  });

  const std::size_t total = std::accumulate(ranks.begin(), ranks.end(), std::size_t{0});
  if (options.progress != nullptr) {
    *options.progress << "degree " << d << ": " << blocks.size() << " block(s), ideal dimension " << total << '\n';
  }
  return total;
}

std::vector<std::pair<int, Integer>> hilbert_function(std::size_t num_vars, std::span<const SparsePoly> gens,
                                                      int d_max, std::uint32_t p, const HilbertOptions& options) {
  if (d_max < 0) throw InvalidInput("hilbert_function: negative degree cap");
  if (num_vars == 0) throw InvalidInput("hilbert_function: ring without variables");
  for (const auto& g : gens) {
    if (g.num_vars() != num_vars) throw InvalidInput("hilbert_function: generator ring does not match");
  }
  const long n = static_cast<long>(num_vars);
  std::vector<std::pair<int, Integer>> out;
  for (int d = 0; d <= d_max; ++d) {
    const Integer ambient = binomial(n + d - 1, d);
    const auto ideal = graded_ideal_dimension(gens, d, p, options);
    out.emplace_back(d, ambient - Integer(static_cast<unsigned long>(ideal)));
  }
  return out;
}

}  // namespace secant
