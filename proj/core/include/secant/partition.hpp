#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace secant {

/// A weakly decreasing sequence of positive integers. The empty partition
/// (weight zero) is valid and is what a trivial twist carries.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; anything else that is not weakly
  /// decreasing and positive throws InvalidInput.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  /// l(π): number of nonzero parts.
  int length() const { return static_cast<int>(parts_.size()); }
  /// |π|: sum of parts.
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }
  /// i-th part, zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  Partition conjugate() const;
  /// Contains the diagram of other.
  bool contains(const Partition& other) const;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  /// Lexicographic on parts; reverse of this is the canonical listing order.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

struct HookContent {
  int row;  ///< 1-based
  int col;  ///< 1-based
  int hook;
  int content;
};

/// One entry per cell, rows top to bottom, cells left to right.
std::vector<HookContent> hook_content_data(const Partition& pi);

/// All partitions of d with at most max_rows rows, reverse-lexicographic
/// ((d) first). d = 0 yields the single empty partition.
std::vector<Partition> enumerate_partitions(int d, std::optional<int> max_rows = std::nullopt);

/// All partitions fitting in a rows x max_part box (every weight), reverse-lex
/// within each weight, weights ascending.
std::vector<Partition> partitions_in_box(int rows, int max_part);

}  // namespace secant
