#pragma once

#include <optional>
#include <utility>

#include "combi/tableau.hpp"

namespace combi {

/// Insertion tableau P(w) and its standard recording tableau Q(w).
struct RSPair {
  Tableau p;
  Tableau q;

  friend bool operator==(const RSPair&, const RSPair&) = default;
};

/// Result of inserting a letter into a row.
struct RowInsertion {
  Word row;
  std::optional<Letter> bumped;
};

/// Replaces the first entry strictly larger than `letter`, or appends.
RowInsertion insert_row(Word row, Letter letter);

/// Bottom row of P(w).
Word schensted_row(const Word& w);

RSPair rs(const Word& w);

/// Inverse of rs. Throws InvalidArgument when the shapes differ, q is not
/// standard, or p is not a tableau.
Word rs_inverse(const Rows& p, const Rows& q);
inline Word rs_inverse(const RSPair& pair) { return rs_inverse(pair.p.rows(), pair.q.rows()); }

bool is_standard(const Rows& rows);

/// Sum of the first k rows of shape(P(w)).
int greene_row(const Word& w, int k);

/// Sum of the first k columns of shape(P(w)).
int greene_col(const Word& w, int k);

inline constexpr int kGreeneOracleBound = 10;

/// Largest number of positions covered by k disjoint weakly increasing
/// subsequences, found by exhaustive search. |w| <= 10.
int greene_row_oracle(const Word& w, int k);

/// Same for strictly decreasing subsequences. |w| <= 10.
int greene_col_oracle(const Word& w, int k);

}  // namespace combi
