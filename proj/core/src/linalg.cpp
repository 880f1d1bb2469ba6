#include "secant/linalg.hpp"

#include <algorithm>

namespace secant {

namespace {

// Scales each row by the lcm of its denominators so every entry is an integer.
std::vector<std::vector<Integer>> integer_rows(const DenseMatrix<Rational>& m) {
  std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
  }
  return rows;
}

// Fraction-free elimination with row pivoting; returns rank and, for square
// input, the determinant as the last leading minor.
std::pair<std::size_t, Integer> bareiss(std::vector<std::vector<Integer>> a, std::size_t cols) {
  const std::size_t n_rows = a.size();
  std::size_t rank = 0;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t col = 0; col < cols && rank < n_rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < n_rows && a[pivot][col] == 0) ++pivot;
    if (pivot == n_rows) continue;
    if (pivot != rank) {
      std::swap(a[pivot], a[rank]);
      sign = -sign;
    }
    for (std::size_t i = rank + 1; i < n_rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Integer v = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        // Sylvester's identity guarantees exactness.
        if (v % prev != 0) throw InternalError("Bareiss step is not exact");
        a[i][j] = v / prev;
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  Integer det = 0;
  if (rank == n_rows && rank == cols) det = sign * prev;
  return {rank, det};
}

}  // namespace

std::size_t rank(const DenseMatrix<Rational>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss(integer_rows(m), m.cols()).first;
}

Rational determinant(const DenseMatrix<Rational>& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  if (m.rows() == 0) return Rational(1);
  Integer scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    scale *= l;
  }
  Rational det(bareiss(integer_rows(m), m.cols()).second, scale);
  det.canonicalize();
  return det;
}

std::size_t rank(const DenseMatrix<ModP>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const std::uint32_t p = m(0, 0).modulus();
  Residues f{p};
  std::vector<std::vector<std::uint32_t>> a(m.rows(), std::vector<std::uint32_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).modulus() != p) throw InvalidInput("rank: entries from different prime fields");
      a[i][j] = m(i, j).value();
    }
  }
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.rows() && a[pivot][col] == 0) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[pivot], a[r]);
    const std::uint32_t inv = f.inv(a[r][col]);
    for (std::size_t j = col; j < m.cols(); ++j) a[r][j] = f.mul(a[r][j], inv);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const std::uint32_t factor = a[i][col];
      if (factor == 0) continue;
      for (std::size_t j = col; j < m.cols(); ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
    }
    ++r;
  }
  return r;
}

SparseRowSet::SparseRowSet(std::size_t columns, std::uint32_t prime) : columns_(columns), prime_(prime) {
  if (!is_prime(prime)) throw InvalidInput("SparseRowSet: modulus " + std::to_string(prime) + " is not prime");
}

void SparseRowSet::add_row(SparseRow row) {
  Residues f{prime_};
  std::sort(row.begin(), row.end());
  SparseRow clean;
  for (const auto& [col, val] : row) {
    if (col >= columns_) throw InvalidInput("SparseRowSet: column index out of range");
    if (!clean.empty() && clean.back().first == col) {
      clean.back().second = f.add(clean.back().second, val % prime_);
    } else {
      clean.emplace_back(col, val % prime_);
    }
  }
  std::erase_if(clean, [](const auto& e) { return e.second == 0; });
  rows_.push_back(std::move(clean));
}

SparseEchelon::SparseEchelon(std::uint32_t prime) : field_{prime} {}

bool SparseEchelon::insert(SparseRow row) {
  SparseRow scratch;
  while (!row.empty()) {
    const std::uint32_t lead = row.front().first;
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) break;
    const std::uint32_t factor = row.front().second;
    const SparseRow& piv = it->second;
    // row <- row - factor * piv, merging two sorted sparse vectors.
    scratch.clear();
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < piv.size()) {
      if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
        scratch.push_back(row[i++]);
      } else if (i == row.size() || piv[j].first < row[i].first) {
        scratch.emplace_back(piv[j].first, field_.neg(field_.mul(factor, piv[j].second)));
        ++j;
      } else {
        std::uint32_t v = field_.sub(row[i].second, field_.mul(factor, piv[j].second));
        if (v != 0) scratch.emplace_back(row[i].first, v);
        ++i;
        ++j;
      }
    }
    row.swap(scratch);
  }
  if (row.empty()) return false;
  const std::uint32_t inv = field_.inv(row.front().second);
  for (auto& e : row) e.second = field_.mul(e.second, inv);
  const std::uint32_t lead = row.front().first;
  pivots_.emplace(lead, std::move(row));
  insertion_order_.push_back(lead);
  return true;
}

std::vector<std::uint32_t> SparseEchelon::pivot_columns() const { return insertion_order_; }

std::size_t row_space_dimension(const SparseRowSet& rows, std::uint32_t prime) {
  if (prime != rows.prime()) throw InvalidInput("row_space_dimension: rows were reduced modulo a different prime");
  SparseEchelon ech(prime);
  for (const auto& r : rows.rows()) ech.insert(r);
  return ech.rank();
}

}  // namespace secant
