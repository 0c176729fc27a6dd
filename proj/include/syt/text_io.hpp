#pragma once

#include <string>

#include "syt/partition.hpp"
#include "syt/permutation.hpp"
#include "syt/strip_sequence.hpp"
#include "syt/tableau.hpp"

namespace syt {

// Text formats (all strict -- no whitespace is accepted):
//   tableau        rows joined by '/', entries by ',':  "1,2,4,6/3,5/7/8"
//   permutation    one-line word:                       "5,3,6,9,1,2,4,7,8"
//   strip sequence blocks joined by '|', "a-b" or "a":  "1-2|3-4|5-6|7|8"
//   partition      parts joined by ',':                 "3,2,1"
//   descent set    braces around members:               "{2,4,6,7}", "{}"
// The empty string denotes the empty (n = 0) tableau/permutation/sequence.
// Parsers throw ParseError with the 1-based offset of the offending spot.

StandardTableau parse_tableau(const std::string& text);
Permutation parse_permutation(const std::string& text);
StripSequence parse_strip_sequence(const std::string& text);
Partition parse_partition(const std::string& text);

std::string to_string(const StandardTableau& t);
std::string to_string(const Permutation& pi);
std::string to_string(const StripSequence& s);
std::string to_string(const Partition& p);
std::string to_string(const DescentSet& d);

}  // namespace syt
