#pragma once

#include <cstddef>
#include <vector>

#include "combi/word.hpp"

namespace combi {

/// One elementary Knuth rewrite on the window starting at `position`.
///
///   BcaBac: b c a <-> b a c   for a < b <= c
///   AcbCab: a c b <-> c a b   for a <= b < c
///
/// `forward` rewrites the left-hand pattern into the right-hand one.
struct KnuthMove {
  enum class Rule { BcaBac, AcbCab };

  std::size_t position = 0;
  Rule rule = Rule::BcaBac;
  bool forward = true;

  friend bool operator==(const KnuthMove&, const KnuthMove&) = default;
};

/// Every move applicable to w, in window order.
std::vector<KnuthMove> knuth_moves(const Word& w);

/// Throws InvalidArgument if the move's pattern does not match w.
Word apply_move(const Word& w, const KnuthMove& move);

/// Distinct words one Knuth move away from w, sorted.
std::vector<Word> knuth_neighbors(const Word& w);

/// Equality of insertion tableaux.
bool plactic_equiv(const Word& u, const Word& v);

inline constexpr int kPlacticClassBound = 9;

/// Breadth-first closure of w under Knuth moves, sorted. |w| <= 9.
std::vector<Word> plactic_class_oracle(const Word& w);

/// Row reading of P(w).
Word plactic_normal_form(const Word& w);

}  // namespace combi
