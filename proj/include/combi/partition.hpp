#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "combi/checked.hpp"

namespace combi {

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// Trailing zeros are stripped on construction, so two partitions compare
/// equal exactly when they have the same nonzero parts. The empty partition is
/// the unique partition of 0. Ordering (`<=>`) is plain lexicographic on the
/// parts; use `RevLex` for the enumeration order used everywhere in output.
class Partition {
 public:
  Partition() = default;

  /// Throws InvalidArgument on a negative entry or an increase.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Parses `9,6,5,4,3,2,1`; the empty string is the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int size() const noexcept { return size_; }

  /// Part i, or 0 past the end.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Reverse-lexicographic order: (5) < (4,1) < (3,2) < (3,1,1) < ...
struct RevLex {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

/// A skew shape outer/inner. Construction checks inclusion.
struct SkewShape {
  Partition inner;
  Partition outer;

  SkewShape(Partition inner_, Partition outer_);

  /// Number of (possibly empty) rows, which is the length of the outer shape.
  std::size_t rows() const noexcept { return outer.length(); }
  int row_length(std::size_t r) const noexcept { return outer[r] - inner[r]; }
};

bool is_partition(std::span<const int> seq);

inline constexpr int kDefaultPartitionBound = 64;

/// All partitions of n in reverse-lexicographic order.
std::vector<Partition> partitions_of(int n, int bound = kDefaultPartitionBound);

Partition conjugate(const Partition& p);

bool included(const Partition& inner, const Partition& outer);

int skew_size(const SkewShape& s);

/// Prefix-sum dominance. Throws InvalidArgument if |p| != |q|.
bool dominates(const Partition& p, const Partition& q);

/// hooks[r][c] = arm + leg + 1 for the cell in row r (bottom row 0), column c.
std::vector<std::vector<int>> hook_lengths(const Partition& p);

/// Number of standard tableaux via the hook-length formula; |p| <= 20.
Count count_syt(const Partition& p);

/// z_mu = prod_i i^{m_i} m_i!; |mu| <= 20.
Count centralizer_order(const Partition& mu);

/// |mu|! / z_mu, the size of the conjugacy class of cycle type mu.
Count class_size(const Partition& mu);

/// True iff outer/inner is a nonempty ribbon, judged by the rule that the
/// occupied rows are consecutive and each adjacent pair overlaps in exactly
/// one column.
bool is_ribbon(const SkewShape& s);

struct Ribbon {
  Partition remainder;  ///< the partition left after removing the ribbon
  int height = 0;       ///< rows spanned minus one

  friend bool operator==(const Ribbon&, const Ribbon&) = default;
};

/// Every way to remove a ribbon of k cells from p, ordered by the lowest row
/// the ribbon touches.
std::vector<Ribbon> removable_ribbons(const Partition& p, int k);

}  // namespace combi
