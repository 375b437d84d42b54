#include "combi/word.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "combi/error.hpp"

namespace combi {

Word parse_word(std::string_view text) {
  Word w;
  if (text.empty()) return w;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || value < 0)
      throw InvalidArgument("malformed letter '" + std::string(field) + "'");
    w.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

std::vector<int> evaluation(const Word& w) {
  std::vector<int> counts;
  for (Letter x : w) {
    if (x < 0) throw InvalidArgument("evaluation: negative letter");
    if (static_cast<std::size_t>(x) >= counts.size()) counts.resize(x + 1, 0);
    ++counts[x];
  }
  return counts;
}

bool is_yamanouchi(const Word& w) {
  std::vector<int> counts;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    Letter x = *it;
    if (static_cast<std::size_t>(x) >= counts.size()) counts.resize(x + 1, 0);
    ++counts[x];
    if (x > 0 && counts[x] > counts[x - 1]) return false;
  }
  return true;
}

namespace {

// A word is Yamanouchi iff the content of every suffix is a partition. Reading
// left to right, the letters still to be written are a suffix, so letter k may
// be emitted exactly when the remaining content stays weakly decreasing.
void yam_rec(std::vector<int>& remaining, int left, Word& prefix, std::vector<Word>& out) {
  if (left == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t k = 0; k < remaining.size(); ++k) {
    int next = k + 1 < remaining.size() ? remaining[k + 1] : 0;
    if (remaining[k] <= next) continue;
    --remaining[k];
    prefix.push_back(static_cast<Letter>(k));
    yam_rec(remaining, left - 1, prefix, out);
    prefix.pop_back();
    ++remaining[k];
  }
}

}  // namespace

std::vector<Word> enum_yameval(const Partition& mu, int bound) {
  if (mu.size() > bound)
    throw BoundExceeded("enum_yameval: |mu|=" + std::to_string(mu.size()) + " exceeds bound " + std::to_string(bound));
  std::vector<int> remaining(mu.parts());
  std::vector<Word> out;
  Word prefix;
  prefix.reserve(mu.size());
  yam_rec(remaining, mu.size(), prefix, out);
  return out;
}

Word standardize(const Word& w) {
  std::vector<std::size_t> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
  Word labels(w.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) labels[order[rank]] = static_cast<Letter>(rank);
  return labels;
}

bool same_versions(const Word& u, const Word& v) {
  if (u.size() != v.size()) return false;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i; j < u.size(); ++j)
      if ((u[i] <= u[j]) != (v[i] <= v[j])) return false;
  return true;
}

}  // namespace combi
