#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace syt {

/// A finite poset on labelled elements, stored as a dense reachability bit
/// matrix (the full reflexive-transitive relation).
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Builds the poset generated by directed edges a -> b (meaning a <= b):
  /// takes the reflexive-transitive closure and rejects input whose closure
  /// would break antisymmetry, naming a witness cycle (NotAPartialOrder).
  static FinitePoset from_edges(std::vector<std::string> labels,
                                const std::vector<std::pair<int, int>>& edges);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& elements() const { return labels_; }

  /// Index of a label, or -1 when absent.
  int index_of(const std::string& label) const;

  /// a <= b in the order.  Indices must be in range (InvalidInput).
  bool leq(int a, int b) const;

  /// The covering pairs (a, b): a < b with nothing strictly between,
  /// sorted lexicographically by index pair.
  std::vector<std::pair<int, int>> covers() const;

  /// All x with a <= x <= b, ascending by index.
  std::vector<int> interval(int a, int b) const;

  /// All strict pairs (a, b) with a < b in the order (not by index),
  /// sorted lexicographically by index pair.
  std::vector<std::pair<int, int>> comparabilities() const;

 private:
  std::vector<std::string> labels_;
  std::size_t words_ = 0;                 // 64-bit words per row
  std::vector<std::uint64_t> bits_;       // size() * words_, row-major
  bool bit(int a, int b) const {
    return (bits_[static_cast<std::size_t>(a) * words_ + static_cast<std::size_t>(b) / 64] >>
            (static_cast<std::size_t>(b) % 64)) & 1;
  }
};

/// Strict pairs present in exactly one of the posets, which must have
/// identical element lists: (only in p, only in q).
std::pair<std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>> poset_diff(
    const FinitePoset& p, const FinitePoset& q);

enum class MapKind { preserving, automorphism, anti_automorphism };

struct MapCheck {
  bool ok = false;
  /// On failure: an index pair witnessing the violation (an order pair that
  /// the map mistreats, or two elements mapped to one target).
  std::optional<std::pair<int, int>> witness;
  std::string reason;
};

/// Checks that the index map f (f[i] in q for element i of p) is
/// order-preserving, an order isomorphism, or an order anti-isomorphism.
MapCheck check_map(const FinitePoset& p, const FinitePoset& q, const std::vector<int>& f,
                   MapKind kind);

}  // namespace syt
