#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "syt/permutation.hpp"

namespace syt {

/// A set of descent positions: a subset of {1..n-1} attached to its n.
struct DescentSet {
  int n = 0;
  std::vector<int> members;  // sorted, distinct, each in 1..n-1

  bool operator==(const DescentSet&) const = default;
};

/// Validates and normalizes a descent set; throws InvalidInput.
DescentSet make_descent_set(int n, std::vector<int> members);

/// True when every member of `a` is a member of `b` (requires equal n).
bool descent_subset(const DescentSet& a, const DescentSet& b);

/// An ordered partition of {1..n} into blocks of consecutive integers,
/// listed left to right: ((1..b1), (b1+1..b2), ...).  n = 0 gives the empty
/// sequence.  This is the shape of a tableau's horizontal-strip growth chain.
class StripSequence {
 public:
  StripSequence() = default;
  /// Blocks as inclusive intervals; validated to tile 1..n in order.
  explicit StripSequence(std::vector<std::pair<int, int>> blocks);

  const std::vector<std::pair<int, int>>& blocks() const { return blocks_; }
  int size() const { return static_cast<int>(blocks_.size()); }
  int n() const { return blocks_.empty() ? 0 : blocks_.back().second; }

  bool operator==(const StripSequence& other) const = default;

 private:
  std::vector<std::pair<int, int>> blocks_;
};

/// Forgets the ordering: the blocks as a set partition of {1..n}, each block
/// sorted ascending, blocks sorted by their least element.
std::vector<std::vector<int>> sp(const StripSequence& s);

/// True when sp(s) refines sp(t): every block of s lies inside a block of t.
/// Requires equal n; throws InvalidInput otherwise.
bool refines(const StripSequence& s, const StripSequence& t);

/// size(s) - size(t) when s refines t, empty otherwise.
std::optional<int> refinement_steps(const StripSequence& s, const StripSequence& t);

/// The reverse sequence: i and i+1 share a block exactly when they do not
/// share one in s.
StripSequence reverse_shs(const StripSequence& s);

/// The evacuation image: each value i is replaced by n+1-i and the blocks are
/// re-sorted into consecutive order.
StripSequence evac_shs(const StripSequence& s);

/// The maxima of every block except the last, as a descent set.
DescentSet phi(const StripSequence& s);

/// Sequence of intervals of a permutation: maximal runs of consecutive
/// integers i, i+1, ... whose positions in the word increase.
StripSequence si(const Permutation& pi);

}  // namespace syt
