#include "combi/tableau.hpp"

#include <algorithm>

#include "combi/error.hpp"

namespace combi {

Tableau::Tableau(Rows rows) : rows_(std::move(rows)) {
  if (!is_tableau(rows_)) throw InvalidArgument("rows do not form a tableau");
}

Partition Tableau::shape() const { return shape_of(rows_); }

int Tableau::size() const noexcept {
  int n = 0;
  for (const auto& r : rows_) n += static_cast<int>(r.size());
  return n;
}

SkewTableau::SkewTableau(SkewShape shape, Rows rows) : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (!is_skew_tableau(shape_, rows_)) throw InvalidArgument("rows do not form a skew tableau of the given shape");
}

bool is_row(const Word& w) { return std::is_sorted(w.begin(), w.end()); }

bool row_dominates(const Word& u, const Word& v) {
  if (u.size() > v.size()) return false;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!(u[i] > v[i])) return false;
  return true;
}

bool is_tableau(const Rows& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty() || !is_row(rows[i])) return false;
    // Dominance is transitive on rows, so adjacent pairs suffice.
    if (i > 0 && !row_dominates(rows[i], rows[i - 1])) return false;
  }
  return true;
}

Partition shape_of(const Rows& rows) {
  std::vector<int> lengths;
  lengths.reserve(rows.size());
  for (const auto& r : rows) lengths.push_back(static_cast<int>(r.size()));
  if (!is_partition(lengths)) throw InvalidArgument("row lengths are not a partition");
  return Partition(std::move(lengths));
}

Word to_word(const Rows& rows) {
  Word w;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

Rows skew_reshape(const Partition& inner, const Partition& outer, const Word& w) {
  SkewShape shape(inner, outer);
  if (static_cast<int>(w.size()) != skew_size(shape))
    throw InvalidArgument("skew_reshape: word length does not match the skew shape");
  Rows rows(shape.rows());
  auto end = w.end();
  for (std::size_t r = 0; r < shape.rows(); ++r) {
    auto begin = end - shape.row_length(r);
    rows[r].assign(begin, end);
    end = begin;
  }
  return rows;
}

bool is_skew_tableau(const SkewShape& shape, const Rows& rows) {
  // Trailing empty rows beyond the outer shape are tolerated; anything else
  // must match row for row.
  for (std::size_t r = 0; r < std::max(rows.size(), shape.rows()); ++r) {
    std::size_t have = r < rows.size() ? rows[r].size() : 0;
    if (static_cast<int>(have) != shape.row_length(r))
      throw InvalidArgument("is_skew_tableau: row " + std::to_string(r) + " length does not match the shape");
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!is_row(rows[r])) return false;
    if (r == 0) continue;
    const int off = shape.inner[r];
    const int below_off = shape.inner[r - 1];
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      int col = off + static_cast<int>(i);
      if (col < below_off || col >= shape.outer[r - 1]) continue;
      if (!(rows[r][i] > rows[r - 1][col - below_off])) return false;
    }
  }
  return true;
}

Rows join_tab(const Rows& s, const Rows& t) {
  Rows out(std::max(s.size(), t.size()));
  for (std::size_t r = 0; r < out.size(); ++r) {
    if (r < s.size()) out[r] = s[r];
    if (r < t.size()) out[r].insert(out[r].end(), t[r].begin(), t[r].end());
  }
  return out;
}

namespace {

struct SsytSearch {
  const Partition& shape;
  Partition conj;
  int max_letter;
  const std::vector<int>* content;
  std::vector<int> used;
  Rows rows;
  std::vector<Tableau> out;

  // Cells are filled column by column, bottom to top, so the left and lower
  // neighbours of each cell are already placed.
  void fill(int col, int row) {
    if (col == shape[0]) {
      if (content) {
        for (std::size_t k = 0; k < content->size(); ++k)
          if (used[k] != (*content)[k]) return;
      }
      out.emplace_back(rows);
      return;
    }
    if (row == conj[static_cast<std::size_t>(col)]) {
      fill(col + 1, 0);
      return;
    }
    int lo = 0;
    if (col > 0) lo = rows[row][col - 1];
    if (row > 0) lo = std::max(lo, rows[row - 1][col] + 1);
    // Column strictness: the cells still to come above need distinct larger letters.
    int hi = max_letter - (conj[static_cast<std::size_t>(col)] - row - 1);
    for (int x = lo; x <= hi; ++x) {
      if (content) {
        if (static_cast<std::size_t>(x) >= content->size() || used[x] == (*content)[x]) continue;
      }
      ++used[x];
      rows[row].push_back(x);
      fill(col, row + 1);
      rows[row].pop_back();
      --used[x];
    }
  }
};

void syt_rec(const Partition& shape, Rows& rows, int next, int n, std::vector<Tableau>& out) {
  if (next == n) {
    out.emplace_back(rows);
    return;
  }
  for (std::size_t r = 0; r < shape.length(); ++r) {
    int len = static_cast<int>(rows[r].size());
    if (len == shape[r]) continue;
    if (r > 0 && static_cast<int>(rows[r - 1].size()) <= len) continue;
    rows[r].push_back(next);
    syt_rec(shape, rows, next + 1, n, out);
    rows[r].pop_back();
  }
}

}  // namespace

std::vector<Tableau> enum_ssyt(const Partition& shape, int max_letter, const std::optional<std::vector<int>>& content) {
  if (shape.size() > kTableauEnumBound)
    throw BoundExceeded("enum_ssyt: shape size " + std::to_string(shape.size()) + " exceeds bound " +
                        std::to_string(kTableauEnumBound));
  if (shape.empty()) {
    if (content && std::any_of(content->begin(), content->end(), [](int c) { return c != 0; })) return {};
    return {Tableau()};
  }
  if (max_letter < 0) return {};
  SsytSearch search{shape, conjugate(shape), max_letter, content ? &*content : nullptr, {}, {}, {}};
  search.used.assign(std::max<std::size_t>(max_letter + 1, content ? content->size() : 0), 0);
  search.rows.assign(shape.length(), Word{});
  search.fill(0, 0);
  // Column order differs from row-major lexicographic order; normalize.
  std::sort(search.out.begin(), search.out.end());
  return std::move(search.out);
}

std::vector<Tableau> enum_syt(const Partition& shape) {
  if (shape.size() > kStandardEnumBound)
    throw BoundExceeded("enum_syt: shape size " + std::to_string(shape.size()) + " exceeds bound " +
                        std::to_string(kStandardEnumBound));
  std::vector<Tableau> out;
  Rows rows(shape.length());
  syt_rec(shape, rows, 0, shape.size(), out);
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_rows(const Rows& rows) {
  std::string out;
  for (const auto& r : rows) {
    out += format_word(r);
    out += '\n';
  }
  return out;
}

}  // namespace combi
