#pragma once

#include <optional>
#include <string>
#include <vector>

#include "combi/partition.hpp"
#include "combi/word.hpp"

namespace combi {

/// Rows of a filling, bottom (longest) row first.
using Rows = std::vector<Word>;

/// A semistandard tableau. Rows are weakly increasing, nonempty, and each row
/// strictly dominates the one below it.
class Tableau {
 public:
  Tableau() = default;
  /// Throws InvalidArgument unless is_tableau(rows).
  explicit Tableau(Rows rows);

  const Rows& rows() const noexcept { return rows_; }
  Partition shape() const;
  int size() const noexcept;

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau& a, const Tableau& b) { return a.rows_ <=> b.rows_; }

 private:
  Rows rows_;
};

/// A filling of a skew shape. Row r holds only the outer[r] - inner[r] filled
/// cells; column offsets come from the inner shape.
class SkewTableau {
 public:
  /// Throws InvalidArgument unless is_skew_tableau(shape, rows).
  SkewTableau(SkewShape shape, Rows rows);

  const SkewShape& shape() const noexcept { return shape_; }
  const Rows& rows() const noexcept { return rows_; }

 private:
  SkewShape shape_;
  Rows rows_;
};

bool is_row(const Word& w);

/// u has at most as many cells as v and sits strictly above it column by column.
bool row_dominates(const Word& u, const Word& v);

bool is_tableau(const Rows& rows);

/// Row lengths; throws InvalidArgument if they are not a partition.
Partition shape_of(const Rows& rows);

/// Row reading: top row first, each row left to right.
Word to_word(const Rows& rows);
inline Word to_word(const Tableau& t) { return to_word(t.rows()); }
inline Word to_word(const SkewTableau& t) { return to_word(t.rows()); }

/// Cuts w into rows of the skew shape so that to_word of the result is w.
/// Throws InvalidArgument on a length mismatch.
Rows skew_reshape(const Partition& inner, const Partition& outer, const Word& w);

/// Row lengths must match the shape (InvalidArgument otherwise).
bool is_skew_tableau(const SkewShape& shape, const Rows& rows);

/// Row-wise concatenation; the shorter list is padded with empty rows.
Rows join_tab(const Rows& s, const Rows& t);

inline constexpr int kTableauEnumBound = 12;
inline constexpr int kStandardEnumBound = 9;

/// All semistandard tableaux of `shape` over {0..max_letter}. When `content`
/// is given only tableaux with exactly that evaluation are produced.
std::vector<Tableau> enum_ssyt(const Partition& shape, int max_letter,
                               const std::optional<std::vector<int>>& content = std::nullopt);

/// All standard tableaux of `shape` (letters 0..n-1 once each).
std::vector<Tableau> enum_syt(const Partition& shape);

/// One row per line, bottom row first, letters comma-separated.
std::string format_rows(const Rows& rows);

}  // namespace combi
