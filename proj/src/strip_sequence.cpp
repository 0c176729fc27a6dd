#include "syt/strip_sequence.hpp"

#include <algorithm>
#include <string>

#include "syt/errors.hpp"

namespace syt {

DescentSet make_descent_set(int n, std::vector<int> members) {
  if (n < 0) throw InvalidInput("descent set requires n >= 0");
  std::sort(members.begin(), members.end());
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] < 1 || members[i] > n - 1)
      throw InvalidInput("descent " + std::to_string(members[i]) + " out of range 1.." +
                         std::to_string(n - 1));
    if (i > 0 && members[i] == members[i - 1])
      throw InvalidInput("descent " + std::to_string(members[i]) + " repeats");
  }
  return DescentSet{n, std::move(members)};
}

bool descent_subset(const DescentSet& a, const DescentSet& b) {
  if (a.n != b.n) throw InvalidInput("descent sets must share the same n");
  return std::includes(b.members.begin(), b.members.end(), a.members.begin(), a.members.end());
}

StripSequence::StripSequence(std::vector<std::pair<int, int>> blocks)
    : blocks_(std::move(blocks)) {
  int expected = 1;
  for (const auto& [a, b] : blocks_) {
    if (a != expected)
      throw InvalidInput("strip blocks must tile 1..n in order; expected block starting at " +
                         std::to_string(expected) + ", got " + std::to_string(a));
    if (b < a) throw InvalidInput("strip block end precedes its start");
    expected = b + 1;
  }
}

std::vector<std::vector<int>> sp(const StripSequence& s) {
  std::vector<std::vector<int>> blocks;
  for (const auto& [a, b] : s.blocks()) {
    std::vector<int> block;
    for (int v = a; v <= b; ++v) block.push_back(v);
    blocks.push_back(std::move(block));
  }
  // Blocks of a strip sequence are already sorted by least element.
  return blocks;
}

bool refines(const StripSequence& s, const StripSequence& t) {
  if (s.n() != t.n()) throw InvalidInput("strip sequences must share the same n");
  auto sa = sp(s), sb = sp(t);
  for (const auto& block : sa) {
    bool inside = false;
    for (const auto& host : sb) {
      if (std::includes(host.begin(), host.end(), block.begin(), block.end())) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

std::optional<int> refinement_steps(const StripSequence& s, const StripSequence& t) {
  if (!refines(s, t)) return std::nullopt;
  return s.size() - t.size();
}

StripSequence reverse_shs(const StripSequence& s) {
  int n = s.n();
  if (n == 0) return StripSequence();
  // Membership of the break set {i : i+1 starts a new block} is complemented.
  std::vector<bool> breaks(static_cast<std::size_t>(n), false);
  for (std::size_t k = 0; k + 1 < s.blocks().size(); ++k)
    breaks[static_cast<std::size_t>(s.blocks()[k].second - 1)] = true;
  std::vector<std::pair<int, int>> blocks;
  int start = 1;
  for (int i = 1; i < n; ++i)
    if (!breaks[static_cast<std::size_t>(i - 1)]) {  // complemented: break where s had none
      blocks.emplace_back(start, i);
      start = i + 1;
    }
  blocks.emplace_back(start, n);
  return StripSequence(std::move(blocks));
}

StripSequence evac_shs(const StripSequence& s) {
  int n = s.n();
  std::vector<std::pair<int, int>> blocks;
  for (auto it = s.blocks().rbegin(); it != s.blocks().rend(); ++it)
    blocks.emplace_back(n + 1 - it->second, n + 1 - it->first);
  return StripSequence(std::move(blocks));
}

DescentSet phi(const StripSequence& s) {
  std::vector<int> members;
  for (std::size_t k = 0; k + 1 < s.blocks().size(); ++k)
    members.push_back(s.blocks()[k].second);
  return make_descent_set(s.n(), std::move(members));
}

StripSequence si(const Permutation& pi) {
  int n = pi.n();
  if (n == 0) return StripSequence();
  std::vector<std::pair<int, int>> blocks;
  int start = 1;
  for (int i = 1; i < n; ++i)
    if (pi.position_of(i) > pi.position_of(i + 1)) {
      blocks.emplace_back(start, i);
      start = i + 1;
    }
  blocks.emplace_back(start, n);
  return StripSequence(std::move(blocks));
}

}  // namespace syt
