#pragma once

#include <vector>

#include "syt/permutation.hpp"
#include "syt/rsk.hpp"
#include "syt/strip_sequence.hpp"
#include "syt/tableau.hpp"

namespace syt {

/// Horizontal-strip growth sequence of T: scanning 1..n, entry e+1 extends
/// the current strip exactly when its cell lies in a later column than the
/// cell of e (so each strip, read left to right, carries its consecutive
/// integers in order); otherwise a new strip begins.
StripSequence shs(const StandardTableau& t);

/// Descents of T: entries i whose successor i+1 lies in a strictly lower row.
DescentSet descent_set(const StandardTableau& t);

/// Left descents of a word, as a DescentSet.
DescentSet descent_set_left_of(const Permutation& pi);

/// Reflection along the main diagonal.
StandardTableau transpose(const StandardTableau& t);

/// Evacuation, computed through the word route: insert the
/// reversed-and-complemented row word and take the insertion tableau.
StandardTableau evacuate(const StandardTableau& t);

/// Append n+1 at the right end of the first row.
StandardTableau omega1(const StandardTableau& t);

/// Append n+1 at the bottom of the first column.
StandardTableau omega2(const StandardTableau& t);

/// Column concatenation S/T: stack the columns of T (entries shifted up by
/// |S|) below the corresponding columns of S.
StandardTableau slash_concat(const StandardTableau& s, const StandardTableau& t);

/// Row concatenation S\T: append the rows of T (entries shifted up by |S|)
/// to the right of the corresponding rows of S.
StandardTableau backslash_concat(const StandardTableau& s, const StandardTableau& t);

/// Shift every entry >= a up by one, freeing the value a.  Requires
/// 1 <= a <= n+1.  The result is partial (entries 1..n+1 minus a).
PartialTableau bar_shift(const StandardTableau& t, int a);

/// Row-insert a into the shifted tableau: a standard tableau on n+1 entries.
StandardTableau insert_shifted_row(const StandardTableau& t, int a);

/// Column-insert a into the shifted tableau.
StandardTableau insert_shifted_col(const StandardTableau& t, int a);

/// Dual Knuth move on the consecutive value triple (i-1, i, i+1) of a word:
/// when the middle value i sits positionally outside the other two, the two
/// positionally outer values swap; otherwise the word is returned unchanged.
Permutation dual_knuth_on_word(const Permutation& pi, int i);

/// Dual Knuth move on a tableau, computed through a representative word:
/// apply the move to the row word and re-insert.  Requires 2 <= i <= n-1.
/// The result has the same shape as T (and does not depend on which word of
/// T's class is used; tests confirm this).
StandardTableau dual_knuth_move(const StandardTableau& t, int i);

/// Replace the entries 1..k of S (k = R.n()) with the same-shape tableau R.
/// Requires k < n and sh(R) equal to the shape of S's entries 1..k.
StandardTableau inner_translate(const StandardTableau& s, const StandardTableau& r);

/// All standard Young tableaux with n cells, in canonical order: shapes in
/// descending lexicographic order, then tableaux lexicographically by their
/// row-concatenated entries.  Capacity: n <= 10.
std::vector<StandardTableau> enumerate_syt(int n);

/// All standard Young tableaux of one shape, lexicographic by rows.
/// Capacity: weight <= 10.
std::vector<StandardTableau> enumerate_syt(const Partition& shape);

}  // namespace syt
