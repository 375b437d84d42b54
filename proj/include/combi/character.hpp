#pragma once

#include <map>
#include <utility>
#include <vector>

#include "combi/checked.hpp"
#include "combi/partition.hpp"

namespace combi {

/// A permutation of {0..n-1} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument unless images is a bijection of {0..n-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  std::size_t degree() const noexcept { return images_.size(); }
  const std::vector<int>& images() const noexcept { return images_; }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i)); }

  /// (this * other)(i) = this(other(i)).
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Cycle lengths, fixed points included, sorted decreasingly.
Partition cycle_type(const Permutation& p);

/// Murnaghan-Nakayama evaluator with a memo on (shape, cycle lengths still to
/// peel). Not thread-safe; use one per thread.
class CharacterEvaluator {
 public:
  /// chi^lambda on the class of cycle type mu. Throws InvalidArgument if
  /// |lambda| != |mu|, Overflow on wraparound.
  Count operator()(const Partition& lambda, const Partition& mu);

  void clear() { memo_.clear(); }

 private:
  Count eval(const Partition& lambda, const Partition& mu, std::size_t consumed);

  std::map<std::pair<Partition, std::vector<int>>, Count> memo_;
};

/// chi^lambda(mu) with a fresh memo.
Count mn_coeff(const Partition& lambda, const Partition& mu);

inline constexpr int kCharTableBound = 12;

struct CharacterTable {
  std::vector<Partition> labels;  ///< rows (lambda) and columns (mu), reverse-lex
  std::vector<std::vector<Count>> values;
};

CharacterTable char_table(int n);

/// chi^lambda(1^n), the degree of the irreducible character.
Count first_column(const Partition& lambda);

}  // namespace combi
