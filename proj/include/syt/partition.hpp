#pragma once

#include <compare>
#include <vector>

namespace syt {

/// An integer partition: a weakly decreasing list of positive parts.
/// The empty partition (weight 0) is permitted.
class Partition {
 public:
  Partition() = default;
  /// Validates monotonicity and positivity; throws InvalidInput otherwise.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }

  /// Part at 0-based index i, or 0 when i is beyond the last part.
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// Conjugate (transpose) partition: column lengths of the diagram.
  Partition conjugate() const;

  bool operator==(const Partition& other) const = default;
  auto operator<=>(const Partition& other) const = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Opposite dominance: lam <= mu iff they have equal weight and every prefix
/// sum of lam is >= the corresponding prefix sum of mu (shorter partition
/// padded with zeros).  Throws InvalidInput when the weights differ.
bool opp_dominance_leq(const Partition& lam, const Partition& mu);

/// Strict opposite dominance: opp_dominance_leq and lam != mu.
bool opp_dominance_lt(const Partition& lam, const Partition& mu);

/// All partitions of n in canonical order: descending lexicographic, i.e.
/// (n) first and (1,...,1) last.  n = 0 yields the empty partition only.
std::vector<Partition> partitions_of(int n);

/// Canonical ordering used to enumerate shapes: a before b iff a is
/// lexicographically larger (both must have equal weight for this to be a
/// total order over partitions of one n, but the comparison itself is total).
bool partition_canonical_less(const Partition& a, const Partition& b);

}  // namespace syt
