#pragma once

#include <vector>

#include "syt/partition.hpp"

namespace syt {

/// 0-based cell coordinates inside a Young diagram.
struct Cell {
  int row = 0;
  int col = 0;
  bool operator==(const Cell&) const = default;
};

/// A tableau of partition shape whose entries are distinct positive integers,
/// strictly increasing along rows and down columns (entries need not be
/// contiguous -- this is the working type for insertion algorithms).
class PartialTableau {
 public:
  PartialTableau() = default;
  /// Validates shape and monotonicity; throws InvalidInput.
  explicit PartialTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const;
  bool contains(int value) const;

  bool operator==(const PartialTableau& other) const { return rows_ == other.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
};

/// A standard Young tableau: a PartialTableau whose entries are exactly 1..n.
/// The empty tableau (n = 0) is permitted.
class StandardTableau {
 public:
  StandardTableau() = default;
  /// Validates standardness; throws InvalidInput.
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int n() const { return static_cast<int>(cells_.size()); }
  Partition shape() const;

  /// Cell holding `entry` (1 <= entry <= n).
  Cell cell_of(int entry) const { return cells_[static_cast<std::size_t>(entry - 1)]; }
  int entry_at(int row, int col) const {
    return rows_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
  }

  PartialTableau as_partial() const { return PartialTableau(rows_); }

  bool operator==(const StandardTableau& other) const { return rows_ == other.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
  std::vector<Cell> cells_;  // cells_[e-1] = cell of entry e
};

/// A skew tableau: entries occupy outer/inner where both are partitions and
/// inner is contained in outer.  rows()[r] lists the entries of row r, which
/// sit at columns inner.part(r) .. outer.part(r)-1.  Entries must strictly
/// increase along rows and down columns.
class SkewTableau {
 public:
  SkewTableau() = default;
  /// Validates the skew shape and monotonicity; throws InvalidInput.
  SkewTableau(Partition inner, std::vector<std::vector<int>> rows);

  const Partition& inner() const { return inner_; }
  const Partition& outer() const { return outer_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const;

  /// True when the inner shape is empty (the tableau is straight).
  bool is_straight() const { return inner_.empty(); }

  bool operator==(const SkewTableau& other) const {
    return inner_ == other.inner_ && rows_ == other.rows_;
  }

 private:
  Partition inner_;
  Partition outer_;
  std::vector<std::vector<int>> rows_;
};

/// Shape of the entries 1..k of T (always a straight partition shape).
Partition prefix_shape(const StandardTableau& t, int k);

/// The tableau formed by the entries 1..k of T, as a StandardTableau.
StandardTableau prefix_tableau(const StandardTableau& t, int k);

/// Canonical ordering used for enumeration and element labels: first by shape
/// (descending lexicographic partitions), then lexicographically by the
/// row-concatenated entry list.
bool tableau_canonical_less(const StandardTableau& a, const StandardTableau& b);

}  // namespace syt
