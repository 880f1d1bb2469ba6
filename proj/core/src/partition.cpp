#include "secant/partition.hpp"

#include <algorithm>
#include <functional>

#include "secant/error.hpp"

namespace secant {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidInput("partition parts must be positive: " + to_string());
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw InvalidInput("partition parts must be weakly decreasing: " + to_string());
    }
    weight_ += parts_[i];
  }
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  if (!parts_.empty()) {
    cols.assign(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_) {
      for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
    }
  }
  return Partition(std::move(cols));
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (std::size_t i = 0; i < other.parts_.size(); ++i) {
    if (other.parts_[i] > parts_[i]) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<HookContent> hook_content_data(const Partition& pi) {
  const Partition conj = pi.conjugate();
  std::vector<HookContent> out;
  out.reserve(static_cast<std::size_t>(pi.weight()));
  for (int i = 0; i < pi.length(); ++i) {
    for (int j = 0; j < pi[static_cast<std::size_t>(i)]; ++j) {
      int arm = pi[static_cast<std::size_t>(i)] - j - 1;
      int leg = conj[static_cast<std::size_t>(j)] - i - 1;
      out.push_back({i + 1, j + 1, arm + leg + 1, j - i});
    }
  }
  return out;
}

namespace {

void enumerate_rec(int remaining, int max_part, int rows_left, std::vector<int>& prefix,
                   std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (rows_left == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    // Remaining weight must fit in the rows still available.
    if (static_cast<long>(part) * rows_left < remaining) break;
    prefix.push_back(part);
    enumerate_rec(remaining - part, part, rows_left - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int d, std::optional<int> max_rows) {
  if (d < 0) throw InvalidInput("partition weight must be non-negative");
  int rows = max_rows.value_or(d);
  if (rows < 0) throw InvalidInput("max_rows must be non-negative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_rec(d, d, std::min(rows, std::max(d, 0)), prefix, out);
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int max_part) {
  if (rows < 0 || max_part < 0) throw InvalidInput("box dimensions must be non-negative");
  std::vector<Partition> out;
  for (int d = 0; d <= rows * max_part; ++d) {
    for (auto& p : enumerate_partitions(d, rows)) {
      if (p[0] <= max_part) out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace secant
