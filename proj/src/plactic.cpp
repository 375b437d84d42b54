#include "combi/plactic.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "combi/error.hpp"
#include "combi/rs.hpp"

namespace combi {

namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = w.size();
    for (Letter x : w) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

bool matches(Letter x, Letter y, Letter z, const KnuthMove& m) {
  using Rule = KnuthMove::Rule;
  if (m.rule == Rule::BcaBac) {
    // forward: (b, c, a) with a < b <= c; backward: (b, a, c) with a < b <= c
    return m.forward ? (z < x && x <= y) : (y < x && x <= z);
  }
  // forward: (a, c, b) with a <= b < c; backward: (c, a, b) with a <= b < c
  return m.forward ? (x <= z && z < y) : (y <= z && z < x);
}

}  // namespace

std::vector<KnuthMove> knuth_moves(const Word& w) {
  std::vector<KnuthMove> moves;
  for (std::size_t i = 0; i + 2 < w.size(); ++i) {
    for (auto rule : {KnuthMove::Rule::BcaBac, KnuthMove::Rule::AcbCab}) {
      for (bool forward : {true, false}) {
        KnuthMove m{i, rule, forward};
        if (matches(w[i], w[i + 1], w[i + 2], m)) moves.push_back(m);
      }
    }
  }
  return moves;
}

Word apply_move(const Word& w, const KnuthMove& move) {
  if (move.position + 2 >= w.size() || !matches(w[move.position], w[move.position + 1], w[move.position + 2], move))
    throw InvalidArgument("Knuth move does not apply at this position");
  Word out = w;
  const std::size_t i = move.position;
  if (move.rule == KnuthMove::Rule::BcaBac)
    std::swap(out[i + 1], out[i + 2]);
  else
    std::swap(out[i], out[i + 1]);
  return out;
}

std::vector<Word> knuth_neighbors(const Word& w) {
  std::vector<Word> out;
  for (const auto& m : knuth_moves(w)) out.push_back(apply_move(w, m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool plactic_equiv(const Word& u, const Word& v) {
  if (u.size() != v.size()) return false;
  return rs(u).p == rs(v).p;
}

std::vector<Word> plactic_class_oracle(const Word& w) {
  if (w.size() > static_cast<std::size_t>(kPlacticClassBound))
    throw BoundExceeded("plactic_class_oracle: word length exceeds 9");
  std::unordered_set<Word, WordHash> seen{w};
  std::deque<Word> frontier{w};
  while (!frontier.empty()) {
    Word cur = std::move(frontier.front());
    frontier.pop_front();
    for (auto& next : knuth_neighbors(cur))
      if (seen.insert(next).second) frontier.push_back(std::move(next));
  }
  std::vector<Word> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

Word plactic_normal_form(const Word& w) { return to_word(rs(w).p); }

}  // namespace combi
