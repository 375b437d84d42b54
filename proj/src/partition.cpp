#include "combi/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "combi/error.hpp"

namespace combi {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidArgument("partition has a non-positive part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidArgument("partition is not weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return Partition();
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || value < 0)
      throw InvalidArgument("malformed number '" + std::string(field) + "'");
    if (value == 0) throw InvalidArgument("zero part");
    if (!parts.empty() && value > parts.back()) throw InvalidArgument("not weakly decreasing");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

SkewShape::SkewShape(Partition inner_, Partition outer_) : inner(std::move(inner_)), outer(std::move(outer_)) {
  if (!included(inner, outer)) throw InvalidArgument("inner shape is not included in outer shape");
}

bool is_partition(std::span<const int> seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] <= 0) return false;
    if (i > 0 && seq[i] > seq[i - 1]) return false;
  }
  return true;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int bound) {
  if (n < 0) throw InvalidArgument("partitions_of: negative size");
  if (n > bound) throw BoundExceeded("partitions_of: n=" + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

Partition conjugate(const Partition& p) {
  std::vector<int> result(p.empty() ? 0 : p.parts()[0], 0);
  for (int part : p.parts())
    for (int i = 0; i < part; ++i) ++result[i];
  return Partition(std::move(result));
}

bool included(const Partition& inner, const Partition& outer) {
  if (inner.length() > outer.length()) return false;
  for (std::size_t i = 0; i < inner.length(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

int skew_size(const SkewShape& s) { return s.outer.size() - s.inner.size(); }

bool dominates(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw InvalidArgument("dominates: partitions of different sizes");
  int sp = 0;
  int sq = 0;
  for (std::size_t i = 0; i < std::max(p.length(), q.length()); ++i) {
    sp += p[i];
    sq += q[i];
    if (sp < sq) return false;
  }
  return true;
}

std::vector<std::vector<int>> hook_lengths(const Partition& p) {
  Partition conj = conjugate(p);
  std::vector<std::vector<int>> hooks(p.length());
  for (std::size_t r = 0; r < p.length(); ++r) {
    for (int c = 0; c < p[r]; ++c) {
      int arm = p[r] - c - 1;
      int leg = conj[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1;
      hooks[r].push_back(arm + leg + 1);
    }
  }
  return hooks;
}

Count count_syt(const Partition& p) {
  if (p.size() > 20) throw Overflow("count_syt: |p| > 20 overflows 64-bit factorial");
  Count numerator = checked_factorial(p.size());
  Count hook_product = 1;
  for (const auto& row : hook_lengths(p))
    for (int h : row) hook_product = checked_mul(hook_product, h);
  if (numerator % hook_product != 0) throw InternalError("hook-length quotient is not exact");
  return numerator / hook_product;
}

Count centralizer_order(const Partition& mu) {
  if (mu.size() > 20) throw Overflow("centralizer_order: |mu| > 20");
  std::map<int, int> multiplicity;
  for (int part : mu.parts()) ++multiplicity[part];
  Count z = 1;
  for (auto [part, m] : multiplicity) {
    for (int j = 0; j < m; ++j) z = checked_mul(z, part);
    z = checked_mul(z, checked_factorial(m));
  }
  return z;
}

Count class_size(const Partition& mu) {
  if (mu.size() > 20) throw Overflow("class_size: |mu| > 20");
  return checked_factorial(mu.size()) / centralizer_order(mu);
}

bool is_ribbon(const SkewShape& s) {
  std::vector<std::size_t> occupied;
  for (std::size_t r = 0; r < s.rows(); ++r)
    if (s.row_length(r) > 0) occupied.push_back(r);
  if (occupied.empty()) return false;
  for (std::size_t i = 0; i + 1 < occupied.size(); ++i) {
    std::size_t lo = occupied[i];
    std::size_t hi = occupied[i + 1];
    if (hi != lo + 1) return false;
    // Row hi sits on row lo; their column ranges meet in outer[hi] - inner[lo] cells.
    if (s.outer[hi] - s.inner[lo] != 1) return false;
  }
  return true;
}

std::vector<Ribbon> removable_ribbons(const Partition& p, int k) {
  std::vector<Ribbon> out;
  if (k <= 0 || k > p.size()) return out;
  const std::size_t len = p.length();
  // A ribbon spanning rows low..high is forced along the rim: each row below
  // `high` keeps cells up to one column past the end of the row above it.
  for (std::size_t low = 0; low < len; ++low) {
    int cells_below_top = 0;
    for (std::size_t high = low; high < len; ++high) {
      int top_cells = k - cells_below_top;
      int top_remaining = p[high] - top_cells;
      if (top_cells >= 1 && top_remaining >= p[high + 1]) {
        std::vector<int> rest(p.parts());
        for (std::size_t i = low; i < high; ++i) rest[i] = p[i + 1] - 1;
        rest[high] = top_remaining;
        Partition q(std::move(rest));
        if (!is_ribbon(SkewShape(q, p))) throw InternalError("rim construction produced a non-ribbon");
        out.push_back({std::move(q), static_cast<int>(high - low)});
      }
      cells_below_top += p[high] - p[high + 1] + 1;
      if (cells_below_top >= k) break;
    }
  }
  return out;
}

}  // namespace combi
