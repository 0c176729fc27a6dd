#pragma once

#include <set>
#include <utility>
#include <vector>

namespace syt {

/// A permutation of {1..n} in one-line notation.  The empty permutation
/// (n = 0) is permitted.
class Permutation {
 public:
  Permutation() = default;
  /// Validates that `word` is a rearrangement of 1..n; throws InvalidInput.
  explicit Permutation(std::vector<int> word);

  const std::vector<int>& word() const { return word_; }
  int n() const { return static_cast<int>(word_.size()); }

  /// Value at 1-based position i.
  int at(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  /// 1-based position of value v.
  int position_of(int v) const { return pos_[static_cast<std::size_t>(v - 1)]; }

  Permutation inverse() const;

  bool operator==(const Permutation& other) const { return word_ == other.word_; }
  bool operator<(const Permutation& other) const { return word_ < other.word_; }

 private:
  std::vector<int> word_;
  std::vector<int> pos_;  // pos_[v-1] = 1-based position of value v
};

/// Reverse positions: the word read right to left.
Permutation perm_rp(const Permutation& pi);

/// Reverse values: each value x replaced by n+1-x.
Permutation perm_rv(const Permutation& pi);

/// Both reversals composed (in either order; they commute).
Permutation perm_evac(const Permutation& pi);

/// Left descent set: { i in [n-1] : i appears after i+1 in the word }.
std::vector<int> descent_set_left(const Permutation& pi);

/// Left inversion set: pairs (i, j), i < j, with i appearing after j.
std::set<std::pair<int, int>> inversions_left(const Permutation& pi);

/// Count of left inversions (= length in the weak Bruhat order).
int inversion_count(const Permutation& pi);

}  // namespace syt
