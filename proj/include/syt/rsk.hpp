#pragma once

#include <vector>

#include "syt/permutation.hpp"
#include "syt/tableau.hpp"

namespace syt {

/// Row word of a tableau: rows read bottom to top, each left to right.
/// For a standard tableau this is a permutation of 1..n.
Permutation row_word(const StandardTableau& t);

/// Row-insert `a` into T (bump the leftmost larger entry to the next row).
/// Throws InvalidInput when `a` already occurs in T.
PartialTableau row_insert(const PartialTableau& t, int a);

/// Column-insert `a` into T (bump the topmost larger entry to the next
/// column).  Throws InvalidInput when `a` already occurs in T.
PartialTableau column_insert(const PartialTableau& t, int a);

struct RskPair {
  StandardTableau p;  // insertion tableau
  StandardTableau q;  // recording tableau
};

/// Row-insertion correspondence: P from successive insertions of the word,
/// Q recording the cell added at each step.  P and Q share their shape.
RskPair rsk(const Permutation& pi);

/// Inverse correspondence: recovers the word from (P, Q).  Throws
/// InvalidInput when the shapes differ.
Permutation rsk_inverse(const RskPair& pq);

/// All permutations whose insertion tableau is T, in lexicographic order.
/// Capacity: n <= 8 (throws CapacityError beyond).
std::vector<Permutation> knuth_class(const StandardTableau& t);

/// Words reachable from `pi` by a single elementary Knuth transformation:
/// adjacent values may swap when one of their outside neighbours lies
/// strictly between them.
std::vector<Permutation> knuth_neighbors(const Permutation& pi);

}  // namespace syt
