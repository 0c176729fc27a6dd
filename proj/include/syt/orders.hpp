#pragma once

#include <vector>

#include "syt/poset.hpp"
#include "syt/tableau.hpp"

namespace syt {

/// Right weak Bruhat order on S_n: generated by adjacent-position swaps that
/// add an inversion; its comparability equals left-inversion-set containment.
/// Elements in lexicographic word order.  Capacity: n <= 8.
FinitePoset weak_bruhat_poset(int n);

/// Weak order on SYT_n: the projection of weak Bruhat covers through the
/// insertion tableau, transitively closed.  Elements are the canonical
/// enumeration of SYT_n, labelled by their text form.  Capacity: n <= 7.
FinitePoset weak_order_syt(int n);

/// Chain condition: for every interval [i, j], the restriction of S either
/// equals that of T or has strictly smaller shape in opposite dominance.
/// The resulting relation is a partial order (transitivity composes
/// interval-by-interval).  Requires equal n.
bool chain_leq(const StandardTableau& s, const StandardTableau& t);

/// The chain order on SYT_n as a poset.  Capacity: n <= 7.
FinitePoset chain_poset(int n);

/// One generating step of the chain-strip order: the chain condition holds
/// and the strip sequence of T refines that of S by at most `max_steps`
/// splits (0 steps = equal sequences).  Requires equal n; max_steps 1 or 2.
bool chain_strip_base_leq(const StandardTableau& s, const StandardTableau& t, int max_steps);

/// The chain-strip order: transitive closure of the base relation.
/// Capacity: n <= 7; max_steps 1 or 2.
FinitePoset chain_strip_poset(int n, int max_steps);

/// Product of tableaux: the interval between the two concatenation tableaux
/// of S and T in the chain-strip order on SYT_{|S|+|T|}, endpoints oriented
/// by their computed comparability.  Capacity: |S| + |T| <= 7.
std::vector<StandardTableau> pr_product(const StandardTableau& s, const StandardTableau& t);

/// The same set computed independently: insert every shuffle of every word
/// of S's class with every shifted word of T's class and collect the
/// distinct insertion tableaux.  Capacity: |S| + |T| <= 7.
std::vector<StandardTableau> pr_product_oracle(const StandardTableau& s, const StandardTableau& t);

}  // namespace syt
