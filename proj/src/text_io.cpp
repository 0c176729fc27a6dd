#include "syt/text_io.hpp"

#include <cctype>
#include <map>
#include <utility>
#include <vector>

#include "syt/errors.hpp"

namespace syt {

namespace {

// Cursor over the input keeping 1-based positions for error reporting.
struct Scanner {
  const std::string& text;
  std::size_t i = 0;

  std::size_t pos() const { return i + 1; }
  bool done() const { return i >= text.size(); }
  char peek() const { return text[i]; }

  // Reads a positive integer, remembering where it started.
  std::pair<int, std::size_t> integer() {
    std::size_t start = pos();
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected digit", pos());
    long value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (text[i] - '0');
      if (value > 1000000) throw ParseError("number too large", start);
      ++i;
    }
    if (value == 0) throw ParseError("expected positive integer", start);
    return {static_cast<int>(value), start};
  }

  void expect_end() const {
    if (!done()) throw ParseError(std::string("unexpected character '") + peek() + "'", pos());
  }

  bool take(char c) {
    if (!done() && peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
};

// Integers separated by `sep`; returns values with their positions.
std::vector<std::pair<int, std::size_t>> integer_list(Scanner& s, char sep) {
  std::vector<std::pair<int, std::size_t>> out;
  out.push_back(s.integer());
  while (s.take(sep)) out.push_back(s.integer());
  return out;
}

}  // namespace

StandardTableau parse_tableau(const std::string& text) {
  if (text.empty()) return StandardTableau();
  Scanner s{text};
  std::vector<std::vector<std::pair<int, std::size_t>>> rows;
  rows.push_back(integer_list(s, ','));
  while (s.take('/')) rows.push_back(integer_list(s, ','));
  s.expect_end();

  // Invariant checks, pointing at the offending entry.
  int n = 0;
  for (const auto& row : rows) n += static_cast<int>(row.size());
  std::map<int, std::size_t> seen;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r > 0 && rows[r].size() > rows[r - 1].size())
      throw ParseError("row longer than the row above it", rows[r].front().second);
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      auto [v, at] = rows[r][c];
      if (v > n)
        throw ParseError("entry " + std::to_string(v) + " exceeds the entry count " +
                             std::to_string(n), at);
      if (!seen.emplace(v, at).second)
        throw ParseError("entry " + std::to_string(v) + " repeats", at);
      if (c > 0 && rows[r][c - 1].first >= v)
        throw ParseError("entries must increase along rows", at);
      if (r > 0 && rows[r - 1][c].first >= v)
        throw ParseError("entries must increase down columns", at);
    }
  }
  // n distinct entries in 1..n are exactly 1..n; assemble.
  std::vector<std::vector<int>> plain;
  for (const auto& row : rows) {
    std::vector<int> vals;
    for (auto [v, at] : row) vals.push_back(v);
    plain.push_back(std::move(vals));
  }
  return StandardTableau(std::move(plain));
}

Permutation parse_permutation(const std::string& text) {
  if (text.empty()) return Permutation();
  Scanner s{text};
  auto vals = integer_list(s, ',');
  s.expect_end();
  int n = static_cast<int>(vals.size());
  std::map<int, std::size_t> seen;
  for (auto [v, at] : vals) {
    if (v > n)
      throw ParseError("value " + std::to_string(v) + " exceeds the word length " +
                           std::to_string(n), at);
    if (!seen.emplace(v, at).second)
      throw ParseError("value " + std::to_string(v) + " repeats", at);
  }
  std::vector<int> word;
  for (auto [v, at] : vals) word.push_back(v);
  return Permutation(std::move(word));
}

StripSequence parse_strip_sequence(const std::string& text) {
  if (text.empty()) return StripSequence();
  Scanner s{text};
  std::vector<std::pair<int, int>> blocks;
  int expected = 1;
  while (true) {
    auto [a, a_at] = s.integer();
    int b = a;
    std::size_t b_at = a_at;
    if (s.take('-')) {
      auto parsed = s.integer();
      b = parsed.first;
      b_at = parsed.second;
    }
    if (a != expected)
      throw ParseError("block must start at " + std::to_string(expected), a_at);
    if (b < a) throw ParseError("block end precedes its start", b_at);
    blocks.emplace_back(a, b);
    expected = b + 1;
    if (!s.take('|')) break;
  }
  s.expect_end();
  return StripSequence(std::move(blocks));
}

Partition parse_partition(const std::string& text) {
  if (text.empty()) return Partition();
  Scanner s{text};
  auto vals = integer_list(s, ',');
  s.expect_end();
  std::vector<int> parts;
  for (std::size_t k = 0; k < vals.size(); ++k) {
    if (k > 0 && vals[k].first > vals[k - 1].first)
      throw ParseError("parts must be weakly decreasing", vals[k].second);
    parts.push_back(vals[k].first);
  }
  return Partition(std::move(parts));
}

namespace {
std::string join_ints(const std::vector<int>& vals, char sep) {
  std::string out;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(vals[i]);
  }
  return out;
}
}  // namespace

std::string to_string(const StandardTableau& t) {
  std::string out;
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    if (r > 0) out += '/';
    out += join_ints(t.rows()[r], ',');
  }
  return out;
}

std::string to_string(const Permutation& pi) { return join_ints(pi.word(), ','); }

std::string to_string(const StripSequence& s) {
  std::string out;
  for (std::size_t k = 0; k < s.blocks().size(); ++k) {
    if (k > 0) out += '|';
    auto [a, b] = s.blocks()[k];
    out += std::to_string(a);
    if (b != a) out += '-' + std::to_string(b);
  }
  return out;
}

std::string to_string(const Partition& p) { return join_ints(p.parts(), ','); }

std::string to_string(const DescentSet& d) {
  return "{" + join_ints(d.members, ',') + "}";
}

}  // namespace syt
