#pragma once

// Shared brute-force enumerators for the tests. Nothing here calls into the
// algorithms under test.

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "combi/partition.hpp"
#include "combi/word.hpp"

namespace combi::testing {

// Calls f on every word of the given length over {0..alphabet-1}.
inline void for_each_word(int length, int alphabet, const std::function<void(const Word&)>& f) {
  Word w(length, 0);
  while (true) {
    f(w);
    int i = length - 1;
    while (i >= 0 && w[i] == alphabet - 1) w[i--] = 0;
    if (i < 0) return;
    ++w[i];
  }
}

inline void for_each_word_upto(int max_length, int alphabet, const std::function<void(const Word&)>& f) {
  for (int len = 0; len <= max_length; ++len) for_each_word(len, alphabet, f);
}

// Every partition of every size 0..n.
inline std::vector<Partition> partitions_upto(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto ps = partitions_of(k);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

// Distinct rearrangements of the word with the given evaluation.
inline std::vector<Word> rearrangements(const std::vector<int>& content) {
  Word w;
  for (std::size_t k = 0; k < content.size(); ++k) w.insert(w.end(), content[k], static_cast<Letter>(k));
  std::vector<Word> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline Partition ones(int n) { return Partition(std::vector<int>(n, 1)); }

inline long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline Word random_word(std::mt19937_64& rng, int length, int alphabet) {
  std::uniform_int_distribution<int> letter(0, alphabet - 1);
  Word w(length);
  for (auto& x : w) x = letter(rng);
  return w;
}

}  // namespace combi::testing
