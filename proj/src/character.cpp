#include "combi/character.hpp"

#include <algorithm>
#include <numeric>

#include "combi/error.hpp"

namespace combi {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[x])
      throw InvalidArgument("not a permutation of {0..n-1}");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (degree() != other.degree()) throw InvalidArgument("composing permutations of different degrees");
  std::vector<int> out(degree());
  for (std::size_t i = 0; i < degree(); ++i) out[i] = images_[other.images_[i]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(degree());
  for (std::size_t i = 0; i < degree(); ++i) out[images_[i]] = static_cast<int>(i);
  return Permutation(std::move(out));
}

Partition cycle_type(const Permutation& p) {
  std::vector<char> seen(p.degree(), 0);
  std::vector<int> lengths;
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(p.images()[i])) {
      seen[i] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(std::move(lengths));
}

Count CharacterEvaluator::operator()(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw InvalidArgument("mn_coeff: |lambda| != |mu|");
  return eval(lambda, mu, 0);
}

// Peels the largest remaining cycle length as a ribbon, signed by its height.
Count CharacterEvaluator::eval(const Partition& lambda, const Partition& mu, std::size_t consumed) {
  if (consumed == mu.length()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, std::vector<int>(mu.parts().begin() + static_cast<std::ptrdiff_t>(consumed), mu.parts().end()));
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  Count total = 0;
  for (const auto& ribbon : removable_ribbons(lambda, mu[consumed])) {
    Count sub = eval(ribbon.remainder, mu, consumed + 1);
    total = ribbon.height % 2 == 0 ? checked_add(total, sub) : checked_sub(total, sub);
  }
  memo_.emplace(std::move(key), total);
  return total;
}

Count mn_coeff(const Partition& lambda, const Partition& mu) { return CharacterEvaluator{}(lambda, mu); }

CharacterTable char_table(int n) {
  if (n < 0) throw InvalidArgument("char_table: negative n");
  if (n > kCharTableBound) throw BoundExceeded("char_table: n exceeds 12");
  CharacterTable table;
  table.labels = partitions_of(n);
  table.values.assign(table.labels.size(), std::vector<Count>(table.labels.size(), 0));
  CharacterEvaluator chi;
  for (std::size_t j = 0; j < table.labels.size(); ++j) {
    for (std::size_t i = 0; i < table.labels.size(); ++i) table.values[i][j] = chi(table.labels[i], table.labels[j]);
  }
  return table;
}

Count first_column(const Partition& lambda) {
  return mn_coeff(lambda, Partition(std::vector<int>(lambda.size(), 1)));
}

}  // namespace combi
