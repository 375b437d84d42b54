#include "combi/rs.hpp"

#include <algorithm>
#include <unordered_map>

#include "combi/error.hpp"

namespace combi {

RowInsertion insert_row(Word row, Letter letter) {
  auto it = std::upper_bound(row.begin(), row.end(), letter);
  if (it == row.end()) {
    row.push_back(letter);
    return {std::move(row), std::nullopt};
  }
  Letter bumped = *it;
  *it = letter;
  return {std::move(row), bumped};
}

namespace {

// Inserts `letter` into rows bottom-up; returns the index of the row that grew.
std::size_t insert_cascade(Rows& rows, Letter letter) {
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({letter});
      return r;
    }
    auto it = std::upper_bound(rows[r].begin(), rows[r].end(), letter);
    if (it == rows[r].end()) {
      rows[r].push_back(letter);
      return r;
    }
    std::swap(*it, letter);
  }
}

}  // namespace

Word schensted_row(const Word& w) {
  Word row;
  for (Letter x : w) {
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end())
      row.push_back(x);
    else
      *it = x;
  }
  return row;
}

RSPair rs(const Word& w) {
  Rows p;
  Rows q;
  for (std::size_t step = 0; step < w.size(); ++step) {
    std::size_t r = insert_cascade(p, w[step]);
    if (r == q.size()) q.emplace_back();
    q[r].push_back(static_cast<Letter>(step));
  }
  return {Tableau(std::move(p)), Tableau(std::move(q))};
}

bool is_standard(const Rows& rows) {
  if (!is_tableau(rows)) return false;
  Word all = to_word(rows);
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] != static_cast<Letter>(i)) return false;
  return true;
}

Word rs_inverse(const Rows& p, const Rows& q) {
  if (!is_tableau(p)) throw InvalidArgument("rs_inverse: P is not a tableau");
  if (!is_standard(q)) throw InvalidArgument("rs_inverse: Q is not a standard tableau");
  if (shape_of(p) != shape_of(q)) throw InvalidArgument("rs_inverse: P and Q have different shapes");

  const std::size_t n = to_word(q).size();
  // Row holding each recording label.
  std::vector<std::size_t> row_of(n);
  for (std::size_t r = 0; r < q.size(); ++r)
    for (Letter label : q[r]) row_of[label] = r;

  Rows rows = p;
  Word w(n);
  for (std::size_t step = n; step-- > 0;) {
    std::size_t r = row_of[step];
    Letter letter = rows[r].back();
    rows[r].pop_back();
    if (rows[r].empty()) rows.pop_back();
    while (r-- > 0) {
      // The letter came from the rightmost entry strictly smaller than it.
      auto it = std::lower_bound(rows[r].begin(), rows[r].end(), letter);
      --it;
      std::swap(*it, letter);
    }
    w[step] = letter;
  }
  return w;
}

int greene_row(const Word& w, int k) {
  Partition sh = rs(w).p.shape();
  int total = 0;
  for (int i = 0; i < k; ++i) total += sh[static_cast<std::size_t>(i)];
  return total;
}

int greene_col(const Word& w, int k) {
  Partition sh = conjugate(rs(w).p.shape());
  int total = 0;
  for (int i = 0; i < k; ++i) total += sh[static_cast<std::size_t>(i)];
  return total;
}

namespace {

// Exhaustive k-support search. A family of k disjoint chains is built by
// deciding, for the lowest undecided position, whether it is left uncovered or
// opens a new chain; the chain is any admissible subset of the undecided
// positions containing it. Memoized on (chains left, undecided mask).
template <typename Related>
int max_k_support(const Word& w, int k, Related related) {
  if (w.size() > static_cast<std::size_t>(kGreeneOracleBound))
    throw BoundExceeded("Greene oracle is limited to words of length <= 10");
  if (k <= 0 || w.empty()) return 0;
  const unsigned n = static_cast<unsigned>(w.size());
  const unsigned full = (1u << n) - 1;

  std::vector<char> chain(full + 1, 0);
  for (unsigned mask = 0; mask <= full; ++mask) {
    bool ok = true;
    int prev = -1;
    for (unsigned i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      if (prev >= 0 && !related(w[prev], w[i])) ok = false;
      prev = static_cast<int>(i);
    }
    chain[mask] = ok;
  }

  k = std::min<int>(k, static_cast<int>(n));
  std::vector<std::unordered_map<unsigned, int>> memo(k + 1);
  auto best = [&](auto&& self, int chains, unsigned undecided) -> int {
    if (chains == 0 || undecided == 0) return 0;
    auto found = memo[chains].find(undecided);
    if (found != memo[chains].end()) return found->second;
    unsigned low = undecided & (~undecided + 1);
    unsigned rest = undecided ^ low;
    int result = self(self, chains, rest);
    for (unsigned sub = rest;; sub = (sub - 1) & rest) {
      unsigned c = sub | low;
      if (chain[c]) result = std::max(result, __builtin_popcount(c) + self(self, chains - 1, rest & ~sub));
      if (sub == 0) break;
    }
    memo[chains].emplace(undecided, result);
    return result;
  };
  return best(best, k, full);
}

}  // namespace

int greene_row_oracle(const Word& w, int k) {
  return max_k_support(w, k, [](Letter a, Letter b) { return a <= b; });
}

int greene_col_oracle(const Word& w, int k) {
  return max_k_support(w, k, [](Letter a, Letter b) { return a > b; });
}

}  // namespace combi
