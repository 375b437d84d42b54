#include "combi/schur.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <thread>

#include "combi/error.hpp"
#include "combi/tableau.hpp"

namespace combi {

Count Expansion::coefficient(const Partition& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? 0 : it->second;
}

void Expansion::add(const Partition& key, Count c) {
  if (key.size() != degree_) throw InvalidArgument("expansion term " + key.to_string() + " has the wrong degree");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

void Expansion::merge(const Expansion& other) {
  if (other.degree_ != degree_) throw InvalidArgument("cannot merge expansions of different degrees");
  for (const auto& [key, c] : other.terms_) add(key, c);
}

// ---------------------------------------------------------------------------
// Kostka numbers and the monomial expansion

Count kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw InvalidArgument("kostka: |lambda| != |mu|");
  if (lambda.size() > kSchurTableauBound) throw BoundExceeded("kostka: size exceeds 12");
  if (mu.empty()) return 1;
  auto tableaux = enum_ssyt(lambda, static_cast<int>(mu.length()) - 1, mu.parts());
  return static_cast<Count>(tableaux.size());
}

MonomialExpansion schur_to_monomial(const Partition& lambda, int num_vars) {
  if (num_vars < 0) throw InvalidArgument("schur_to_monomial: negative number of variables");
  if (lambda.size() > kSchurTableauBound) throw BoundExceeded("schur_to_monomial: size exceeds 12");
  MonomialExpansion out(lambda.size(), num_vars);
  if (lambda.length() > static_cast<std::size_t>(num_vars)) return out;
  for (const auto& mu : partitions_of(lambda.size())) {
    if (mu.length() > static_cast<std::size_t>(num_vars)) continue;
    if (!dominates(lambda, mu)) continue;
    out.add(mu, kostka(lambda, mu));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson coefficients

namespace {

void check_lr_args(const Partition& outer, const Partition& inner, const Partition& mu) {
  if (outer.size() != inner.size() + mu.size()) throw InvalidArgument("LR: |outer| != |inner| + |mu|");
  if (!included(inner, outer)) throw InvalidArgument("LR: inner shape is not included in outer shape");
}

// Fills the cells of outer/inner one at a time in reverse reading order
// (bottom row first, right to left), so every placement prepends a letter to
// the reading word and the Yamanouchi condition is checked on the new suffix.
class LrSearch {
 public:
  LrSearch(const Partition& outer, const Partition& inner, const Partition& mu) : mu_(mu.parts()) {
    grid_.resize(outer.length());
    for (std::size_t r = 0; r < outer.length(); ++r) {
      inner_.push_back(inner[r]);
      outer_.push_back(outer[r]);
      grid_[r].assign(outer[r], -1);
      for (int c = outer[r] - 1; c >= inner[r]; --c) cells_.push_back({static_cast<int>(r), c});
    }
    counts_.assign(mu_.size(), 0);
    word_.assign(cells_.size(), 0);
  }

  template <typename Leaf>
  void run(Leaf&& leaf) {
    if (mu_.empty()) {
      if (cells_.empty()) leaf(word_);
      return;
    }
    fill(0, leaf);
  }

 private:
  struct Cell {
    int row;
    int col;
  };

  template <typename Leaf>
  void fill(std::size_t idx, Leaf& leaf) {
    if (idx == cells_.size()) {
      leaf(word_);
      return;
    }
    const auto [r, c] = cells_[idx];
    int lo = 0;
    if (r > 0 && c >= inner_[r - 1] && c < outer_[r - 1]) lo = grid_[r - 1][c] + 1;
    // Letters in row r never exceed r in a Yamanouchi filling.
    int hi = std::min<int>(static_cast<int>(mu_.size()) - 1, r);
    if (c + 1 < outer_[r]) hi = std::min(hi, grid_[r][c + 1]);
    for (int x = lo; x <= hi; ++x) {
      if (counts_[x] == mu_[x]) continue;
      if (x > 0 && counts_[x] + 1 > counts_[x - 1]) continue;
      ++counts_[x];
      grid_[r][c] = x;
      word_[cells_.size() - 1 - idx] = x;
      fill(idx + 1, leaf);
      --counts_[x];
    }
    grid_[r][c] = -1;
  }

  std::vector<int> mu_;
  std::vector<int> inner_;
  std::vector<int> outer_;
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> grid_;
  std::vector<int> counts_;
  Word word_;
};

}  // namespace

std::vector<Word> lr_enum_yam(const Partition& outer, const Partition& inner, const Partition& mu) {
  check_lr_args(outer, inner, mu);
  SkewShape shape(inner, outer);
  std::vector<Word> out;
  for (auto& w : enum_yameval(mu)) {
    if (is_skew_tableau(shape, skew_reshape(inner, outer, w))) out.push_back(std::move(w));
  }
  return out;
}

Count lr_coeff_slow(const Partition& outer, const Partition& inner, const Partition& mu) {
  return static_cast<Count>(lr_enum_yam(outer, inner, mu).size());
}

Count lr_coeff(const Partition& outer, const Partition& inner, const Partition& mu) {
  if (outer.size() != inner.size() + mu.size() || !included(inner, outer)) return 0;
  if (!included(mu, outer)) return 0;
  Count total = 0;
  LrSearch(outer, inner, mu).run([&](const Word&) {
    if (total == std::numeric_limits<Count>::max()) throw Overflow("lr_coeff: count overflows int64");
    ++total;
  });
  return total;
}

std::vector<Word> lr_words(const Partition& outer, const Partition& inner, const Partition& mu) {
  check_lr_args(outer, inner, mu);
  std::vector<Word> out;
  LrSearch(outer, inner, mu).run([&](const Word& w) { out.push_back(w); });
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Full products: LR fillings built one letter at a time, each letter a
// horizontal strip on the current shape.

namespace {

class ProductSearch {
 public:
  ProductSearch(const Partition& lambda, const Partition& mu) : mu_(mu.parts()), degree_(lambda.size() + mu.size()) {
    shape_ = lambda.parts();
  }

  // A strip for one letter: cells added per row.
  using Strip = std::vector<int>;

  // Strips of letter 0 on the starting shape; these are the top-level branches.
  std::vector<Strip> first_strips() const { return strips(shape_, {}, 0); }

  void run_from(const Strip& first, SchurExpansion& out) const {
    std::vector<int> shape = apply(shape_, first);
    descend(shape, first, 1, out);
  }

  SchurExpansion empty_result() const { return SchurExpansion(degree_); }

  bool trivial() const { return mu_.empty(); }
  Partition start() const { return Partition(shape_); }

 private:
  static std::vector<int> apply(std::vector<int> shape, const Strip& strip) {
    if (strip.size() > shape.size()) shape.resize(strip.size(), 0);
    for (std::size_t r = 0; r < strip.size(); ++r) shape[r] += strip[r];
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    return shape;
  }

  void descend(const std::vector<int>& shape, const Strip& prev, std::size_t letter, SchurExpansion& out) const {
    if (letter == mu_.size()) {
      out.add(Partition(shape), 1);
      return;
    }
    for (const auto& strip : strips(shape, prev, letter)) descend(apply(shape, strip), strip, letter + 1, out);
  }

  // Horizontal strips of mu[letter] cells on `shape`. For letter > 0 the
  // running total of this letter through row r may not exceed the total of
  // the previous letter strictly below row r.
  std::vector<Strip> strips(const std::vector<int>& shape, const Strip& prev, std::size_t letter) const {
    std::vector<Strip> out;
    Strip cur(shape.size() + 1, 0);
    strip_rec(shape, prev, letter, 0, mu_[letter], 0, 0, cur, out);
    return out;
  }

  void strip_rec(const std::vector<int>& shape, const Strip& prev, std::size_t letter, std::size_t row, int left,
                 int placed, int prev_below, Strip& cur, std::vector<Strip>& out) const {
    if (left == 0) {
      Strip s = cur;
      while (!s.empty() && s.back() == 0) s.pop_back();
      out.push_back(std::move(s));
      return;
    }
    if (row > shape.size()) return;
    int have = row < shape.size() ? shape[row] : 0;
    int room = left;
    if (row > 0) room = std::min(room, shape[row - 1] - have);
    if (letter > 0) room = std::min(room, prev_below - placed);
    int prev_here = row < prev.size() ? prev[row] : 0;
    for (int a = room; a >= 0; --a) {
      cur[row] = a;
      strip_rec(shape, prev, letter, row + 1, left - a, placed + a, prev_below + prev_here, cur, out);
    }
    cur[row] = 0;
  }

  std::vector<int> mu_;
  int degree_;
  std::vector<int> shape_;
};

}  // namespace

SchurExpansion schur_product(const Partition& lambda, const Partition& mu, unsigned threads) {
  if (lambda.size() + mu.size() > kSchurProductBound)
    throw BoundExceeded("schur_product: |lambda| + |mu| exceeds 40");
  ProductSearch search(lambda, mu);
  SchurExpansion out = search.empty_result();
  if (search.trivial()) {
    out.add(search.start(), 1);
    return out;
  }
  auto branches = search.first_strips();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(branches.size())));
  if (threads == 1) {
    for (const auto& b : branches) search.run_from(b, out);
    return out;
  }
  // Branch i goes to worker i % threads; partial maps are merged in worker
  // order, and map merging is order-independent anyway.
  std::vector<std::future<SchurExpansion>> parts;
  for (unsigned t = 0; t < threads; ++t) {
    parts.push_back(std::async(std::launch::async, [&, t] {
      SchurExpansion local = search.empty_result();
      for (std::size_t i = t; i < branches.size(); i += threads) search.run_from(branches[i], local);
      return local;
    }));
  }
  for (auto& f : parts) out.merge(f.get());
  return out;
}

namespace {

void horizontal_rec(const Partition& lambda, std::size_t row, int left, std::vector<int>& shape, SchurExpansion& out) {
  if (left == 0) {
    out.add(Partition(shape), 1);
    return;
  }
  if (row > lambda.length()) return;
  if (shape.size() <= row) shape.push_back(0);
  int room = row == 0 ? left : std::min(left, lambda[row - 1] - lambda[row]);
  for (int a = 0; a <= room; ++a) {
    shape[row] = lambda[row] + a;
    horizontal_rec(lambda, row + 1, left - a, shape, out);
  }
  shape[row] = lambda[row];
  if (row == lambda.length()) shape.pop_back();
}

void vertical_rec(const Partition& lambda, std::size_t row, int left, std::vector<int>& shape, SchurExpansion& out) {
  if (left == 0) {
    out.add(Partition(shape), 1);
    return;
  }
  if (shape.size() <= row) shape.push_back(0);
  // Below lambda a row can only be started under a nonempty one, and rows
  // there cannot be skipped, so the recursion ends on its own.
  // Add one cell in this row if the result stays a partition.
  if (row == 0 || shape[row - 1] >= lambda[row] + 1) {
    shape[row] = lambda[row] + 1;
    vertical_rec(lambda, row + 1, left - 1, shape, out);
  }
  shape[row] = lambda[row];
  if (row < lambda.length()) vertical_rec(lambda, row + 1, left, shape, out);
  if (row >= lambda.length()) shape.pop_back();
}

}  // namespace

SchurExpansion pieri_row(const Partition& lambda, int k) {
  if (k < 0) throw InvalidArgument("pieri_row: negative strip size");
  SchurExpansion out(lambda.size() + k);
  std::vector<int> shape(lambda.parts());
  horizontal_rec(lambda, 0, k, shape, out);
  return out;
}

SchurExpansion pieri_col(const Partition& lambda, int k) {
  if (k < 0) throw InvalidArgument("pieri_col: negative strip size");
  SchurExpansion out(lambda.size() + k);
  std::vector<int> shape(lambda.parts());
  vertical_rec(lambda, 0, k, shape, out);
  return out;
}

// ---------------------------------------------------------------------------
// Monomial oracle

Polynomial schur_polynomial(const Partition& lambda, int num_vars) {
  Polynomial poly;
  for (const auto& t : enum_ssyt(lambda, num_vars - 1)) {
    std::vector<int> exponents(num_vars, 0);
    for (Letter x : to_word(t)) ++exponents[x];
    auto& c = poly[exponents];
    c = checked_add(c, 1);
  }
  return poly;
}

namespace {

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto& c = out[e];
      c = checked_add(c, checked_mul(ca, cb));
    }
  }
  return out;
}

bool weakly_decreasing(const std::vector<int>& e) { return std::is_sorted(e.rbegin(), e.rend()); }

}  // namespace

SchurExpansion monomial_product_oracle(const Partition& lambda, const Partition& mu, int num_vars) {
  const int degree = lambda.size() + mu.size();
  if (degree > kMonomialOracleBound) throw BoundExceeded("monomial_product_oracle: |lambda| + |mu| exceeds 10");
  if (num_vars < degree) throw InvalidArgument("monomial_product_oracle: need at least |lambda| + |mu| variables");

  Polynomial residual = multiply(schur_polynomial(lambda, num_vars), schur_polynomial(mu, num_vars));
  SchurExpansion out(degree);
  while (true) {
    // The lexicographically largest sorted exponent is dominance-maximal
    // among the remaining ones, so s_nu has no other term above it.
    const std::vector<int>* top = nullptr;
    for (auto it = residual.rbegin(); it != residual.rend(); ++it) {
      if (it->second != 0 && weakly_decreasing(it->first)) {
        top = &it->first;
        break;
      }
    }
    if (top == nullptr) break;
    Partition nu(*top);
    Count c = residual.at(*top);
    out.add(nu, c);
    for (const auto& [e, k] : schur_polynomial(nu, num_vars)) {
      auto& r = residual[e];
      r = checked_sub(r, checked_mul(c, k));
    }
  }
  for (const auto& [e, k] : residual)
    if (k != 0) throw InternalError("monomial_product_oracle: nonzero residual after Schur extraction");
  return out;
}

}  // namespace combi
