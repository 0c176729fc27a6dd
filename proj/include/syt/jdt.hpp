#pragma once

#include <functional>

#include "syt/tableau.hpp"

namespace syt {

/// Selects which removable inner corner to slide next: called with the number
/// of currently available corners (sorted by row), returns an index below it.
/// An empty function means "always the first".  The rectified result does not
/// depend on the choice; tests exercise random choosers to confirm that.
using CornerChooser = std::function<std::size_t(std::size_t)>;

/// Rectifies a skew tableau to straight shape by backward jeu de taquin
/// slides (one slide per inner cell).
PartialTableau jdt_rectify(const SkewTableau& skew, const CornerChooser& choose = {});

/// The interval restriction T_[i,j]: keep the entries of T lying in [i, j],
/// rectify, and relabel by subtracting i-1.  Requires 1 <= i < j <= n.
StandardTableau restrict_tableau(const StandardTableau& t, int i, int j,
                                 const CornerChooser& choose = {});

}  // namespace syt
