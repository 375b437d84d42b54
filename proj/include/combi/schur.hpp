#pragma once

#include <map>
#include <vector>

#include "combi/checked.hpp"
#include "combi/partition.hpp"
#include "combi/word.hpp"

namespace combi {

/// Linear combination of basis elements indexed by partitions of one degree.
/// Terms iterate in reverse-lexicographic order; zero coefficients are never
/// stored.
class Expansion {
 public:
  using Terms = std::map<Partition, Count, RevLex>;

  explicit Expansion(int degree = 0) : degree_(degree) {}

  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  Count coefficient(const Partition& key) const;

  /// Adds c to the coefficient of key (checked). Throws InvalidArgument if
  /// |key| differs from the degree.
  void add(const Partition& key, Count c);
  /// Adds every term of other (degrees must match).
  void merge(const Expansion& other);

  friend bool operator==(const Expansion&, const Expansion&) = default;

 private:
  int degree_;
  Terms terms_;
};

/// Expansion in the Schur basis.
class SchurExpansion : public Expansion {
 public:
  using Expansion::Expansion;
};

/// Expansion in the monomial basis of symmetric polynomials in num_vars
/// variables; keys have length at most num_vars.
class MonomialExpansion : public Expansion {
 public:
  MonomialExpansion(int degree, int num_vars) : Expansion(degree), num_vars_(num_vars) {}
  int num_vars() const noexcept { return num_vars_; }

 private:
  int num_vars_;
};

inline constexpr int kSchurTableauBound = 12;
inline constexpr int kSchurProductBound = 40;
inline constexpr int kMonomialOracleBound = 10;

/// Number of semistandard tableaux of shape lambda and content mu.
Count kostka(const Partition& lambda, const Partition& mu);

/// s_lambda in the monomial basis: the coefficient of m_mu is kostka(lambda, mu).
MonomialExpansion schur_to_monomial(const Partition& lambda, int num_vars);

/// Yamanouchi words of evaluation mu whose reshape on outer/inner is a skew
/// tableau, in lexicographic order. Definitional filter; small sizes only.
std::vector<Word> lr_enum_yam(const Partition& outer, const Partition& inner, const Partition& mu);

/// Cardinality of lr_enum_yam.
Count lr_coeff_slow(const Partition& outer, const Partition& inner, const Partition& mu);

/// C^outer_{inner, mu} by backtracking over the skew cells in reverse reading
/// order. Zero (not an error) when sizes or inclusion do not fit.
Count lr_coeff(const Partition& outer, const Partition& inner, const Partition& mu);

/// Same words as lr_enum_yam, produced by the backtracking search.
std::vector<Word> lr_words(const Partition& outer, const Partition& inner, const Partition& mu);

/// s_lambda * s_mu in the Schur basis by a single search over LR fillings
/// with a growing outer shape. Work is split over `threads` workers; the
/// result does not depend on the thread count.
SchurExpansion schur_product(const Partition& lambda, const Partition& mu, unsigned threads = 1);

/// s_lambda * s_(k): sum over horizontal strips of size k.
SchurExpansion pieri_row(const Partition& lambda, int k);

/// s_lambda * s_(1^k): sum over vertical strips of size k.
SchurExpansion pieri_col(const Partition& lambda, int k);

/// Exponent-vector polynomial in a fixed number of variables.
using Polynomial = std::map<std::vector<int>, Count>;

/// s_lambda(x_0..x_{n-1}) as a sum of tableau monomials.
Polynomial schur_polynomial(const Partition& lambda, int num_vars);

/// s_lambda * s_mu computed by multiplying explicit polynomials and peeling
/// off Schur functions from the dominance-maximal monomial. Throws
/// InternalError if the residual does not vanish.
SchurExpansion monomial_product_oracle(const Partition& lambda, const Partition& mu, int num_vars);

}  // namespace combi
