#include "syt/permutation.hpp"

#include <algorithm>

#include "syt/errors.hpp"

namespace syt {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  int n = static_cast<int>(word_.size());
  pos_.assign(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    int v = word_[static_cast<std::size_t>(i - 1)];
    if (v < 1 || v > n)
      throw InvalidInput("permutation value " + std::to_string(v) + " out of range 1.." +
                         std::to_string(n));
    if (pos_[static_cast<std::size_t>(v - 1)] != 0)
      throw InvalidInput("permutation value " + std::to_string(v) + " repeats");
    pos_[static_cast<std::size_t>(v - 1)] = i;
  }
}

Permutation Permutation::inverse() const { return Permutation(pos_); }

Permutation perm_rp(const Permutation& pi) {
  std::vector<int> w(pi.word().rbegin(), pi.word().rend());
  return Permutation(std::move(w));
}

Permutation perm_rv(const Permutation& pi) {
  std::vector<int> w = pi.word();
  for (int& x : w) x = pi.n() + 1 - x;
  return Permutation(std::move(w));
}

Permutation perm_evac(const Permutation& pi) { return perm_rv(perm_rp(pi)); }

std::vector<int> descent_set_left(const Permutation& pi) {
  std::vector<int> des;
  for (int i = 1; i < pi.n(); ++i)
    if (pi.position_of(i) > pi.position_of(i + 1)) des.push_back(i);
  return des;
}

std::set<std::pair<int, int>> inversions_left(const Permutation& pi) {
  std::set<std::pair<int, int>> inv;
  for (int i = 1; i <= pi.n(); ++i)
    for (int j = i + 1; j <= pi.n(); ++j)
      if (pi.position_of(i) > pi.position_of(j)) inv.emplace(i, j);
  return inv;
}

int inversion_count(const Permutation& pi) {
  int count = 0;
  for (int i = 1; i <= pi.n(); ++i)
    for (int j = i + 1; j <= pi.n(); ++j)
      if (pi.position_of(i) > pi.position_of(j)) ++count;
  return count;
}

}  // namespace syt
