#pragma once

#include <string>

#include "syt/poset.hpp"

namespace syt {

/// JSON document for a tableau order: {"n", "order", "elements", "covers"},
/// with "comparabilities" (all strict pairs) added when `full` is set.
/// Pair lists are sorted lexicographically; output is deterministic.
std::string poset_to_json(const FinitePoset& p, const std::string& order_name, int n, bool full);

struct LoadedPoset {
  FinitePoset poset;  // reconstructed by closing the stored covers
  std::string order_name;
  int n = 0;
};

/// Parses a document produced by poset_to_json.  Throws InvalidInput on
/// malformed documents.
LoadedPoset poset_from_json(const std::string& text);

/// Hasse diagram in DOT format: one node per element (indexed, labelled),
/// one edge per cover, drawn bottom-to-top.  Deterministic.
std::string poset_to_dot(const FinitePoset& p, const std::string& order_name);

}  // namespace syt
