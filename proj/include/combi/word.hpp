#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "combi/partition.hpp"

namespace combi {

/// A finite word over the naturals with their usual order.
using Letter = int;
using Word = std::vector<Letter>;

/// Parses `0,2,3,1`; the empty string is the empty word.
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

/// evaluation(w)[i] = number of occurrences of i, for i in 0..max(w).
std::vector<int> evaluation(const Word& w);

/// Every suffix holds at least as many k's as (k+1)'s, for every k.
bool is_yamanouchi(const Word& w);

inline constexpr int kDefaultYamanouchiBound = 25;

/// Yamanouchi words of evaluation mu, lexicographically ordered.
std::vector<Word> enum_yameval(const Partition& mu, int bound = kDefaultYamanouchiBound);

/// Stable standardization to a permutation of 0..len-1.
Word standardize(const Word& w);

/// Same length and the same pairwise (u_i <= u_j) pattern for i <= j.
bool same_versions(const Word& u, const Word& v);

}  // namespace combi
