#include "syt/poset.hpp"

#include <algorithm>
#include <string>

#include "syt/errors.hpp"

namespace syt {

namespace {

// Recovers one directed cycle among `alive` nodes for the error message.
// When Kahn stalls, every alive node has a positive indegree from alive
// nodes, so walking predecessors never runs dry and must eventually loop.
std::string describe_cycle(const std::vector<std::vector<int>>& succ,
                           const std::vector<bool>& alive, int start,
                           const std::vector<std::string>& labels) {
  std::vector<std::vector<int>> pred(labels.size());
  for (std::size_t v = 0; v < succ.size(); ++v)
    for (int w : succ[v])
      if (alive[v] && alive[static_cast<std::size_t>(w)])
        pred[static_cast<std::size_t>(w)].push_back(static_cast<int>(v));

  std::vector<int> walk{start};
  std::vector<int> seen_at(labels.size(), -1);
  seen_at[static_cast<std::size_t>(start)] = 0;
  int cur = start;
  while (true) {
    int next = pred[static_cast<std::size_t>(cur)].front();
    if (seen_at[static_cast<std::size_t>(next)] >= 0) {
      // The walk went backwards along edges; reversed it reads forward, and
      // walk[seen_at[next]] == next, so the text starts and ends alike.
      std::string out = labels[static_cast<std::size_t>(next)];
      for (std::size_t k = walk.size(); k-- > static_cast<std::size_t>(seen_at[static_cast<std::size_t>(next)]);)
        out += " -> " + labels[static_cast<std::size_t>(walk[k])];
      return out;
    }
    seen_at[static_cast<std::size_t>(next)] = static_cast<int>(walk.size());
    walk.push_back(next);
    cur = next;
  }
}

}  // namespace

FinitePoset FinitePoset::from_edges(std::vector<std::string> labels,
                                    const std::vector<std::pair<int, int>>& edges) {
  int n = static_cast<int>(labels.size());
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
  std::vector<int> indegree(static_cast<std::size_t>(n), 0);
  {
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto [a, b] : sorted) {
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw InvalidInput("edge endpoint out of range: (" + std::to_string(a) + ", " +
                           std::to_string(b) + ")");
      if (a == b) continue;  // self-loops are the reflexive part; harmless
      succ[static_cast<std::size_t>(a)].push_back(b);
      ++indegree[static_cast<std::size_t>(b)];
    }
  }

  // Kahn topological sort; a stall exposes a cycle (antisymmetry failure).
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<int> stack;
  for (int v = 0; v < n; ++v)
    if (indegree[static_cast<std::size_t>(v)] == 0) stack.push_back(v);
  auto degree = indegree;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : succ[static_cast<std::size_t>(v)])
      if (--degree[static_cast<std::size_t>(w)] == 0) stack.push_back(w);
  }
  if (static_cast<int>(order.size()) < n) {
    std::vector<bool> alive(static_cast<std::size_t>(n), true);
    for (int v : order) alive[static_cast<std::size_t>(v)] = false;
    int start = 0;
    while (!alive[static_cast<std::size_t>(start)]) ++start;
    throw NotAPartialOrder("edges are not antisymmetric; witness cycle: " +
                           describe_cycle(succ, alive, start, labels));
  }

  FinitePoset p;
  p.labels_ = std::move(labels);
  p.words_ = (static_cast<std::size_t>(n) + 63) / 64;
  p.bits_.assign(static_cast<std::size_t>(n) * p.words_, 0);
  // Accumulate reachability against topological order: successors first.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    auto* row = &p.bits_[static_cast<std::size_t>(v) * p.words_];
    row[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (static_cast<std::size_t>(v) % 64);
    for (int w : succ[static_cast<std::size_t>(v)]) {
      const auto* wrow = &p.bits_[static_cast<std::size_t>(w) * p.words_];
      for (std::size_t k = 0; k < p.words_; ++k) row[k] |= wrow[k];
    }
  }
  return p;
}

int FinitePoset::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

bool FinitePoset::leq(int a, int b) const {
  if (a < 0 || a >= size() || b < 0 || b >= size())
    throw InvalidInput("poset index out of range");
  return bit(a, b);
}

std::vector<std::pair<int, int>> FinitePoset::covers() const {
  int n = size();
  std::vector<std::pair<int, int>> out;
  std::vector<std::uint64_t> through(words_);
  for (int a = 0; a < n; ++a) {
    // OR of the strict up-sets of everything strictly above a: anything in
    // there is reachable through an intermediate, hence not a cover of a.
    std::fill(through.begin(), through.end(), 0);
    for (int c = 0; c < n; ++c) {
      if (c == a || !bit(a, c)) continue;
      const auto* crow = &bits_[static_cast<std::size_t>(c) * words_];
      for (std::size_t k = 0; k < words_; ++k) {
        std::uint64_t word = crow[k];
        // strip c's own reflexive bit, but keep c if an earlier row added it
        if (k == static_cast<std::size_t>(c) / 64)
          word &= ~(std::uint64_t{1} << (static_cast<std::size_t>(c) % 64));
        through[k] |= word;
      }
    }
    for (int b = 0; b < n; ++b)
      if (b != a && bit(a, b) &&
          !((through[static_cast<std::size_t>(b) / 64] >> (static_cast<std::size_t>(b) % 64)) & 1))
        out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> FinitePoset::interval(int a, int b) const {
  if (a < 0 || a >= size() || b < 0 || b >= size())
    throw InvalidInput("poset index out of range");
  std::vector<int> out;
  for (int x = 0; x < size(); ++x)
    if (bit(a, x) && bit(x, b)) out.push_back(x);
  return out;
}

std::vector<std::pair<int, int>> FinitePoset::comparabilities() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (a != b && bit(a, b)) out.emplace_back(a, b);
  return out;  // already lexicographic by construction
}

std::pair<std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>> poset_diff(
    const FinitePoset& p, const FinitePoset& q) {
  if (p.elements() != q.elements())
    throw InvalidInput("poset diff requires identical element lists");
  std::vector<std::pair<int, int>> only_p, only_q;
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      if (a == b) continue;
      bool in_p = p.leq(a, b), in_q = q.leq(a, b);
      if (in_p && !in_q) only_p.emplace_back(a, b);
      if (in_q && !in_p) only_q.emplace_back(a, b);
    }
  return {only_p, only_q};
}

MapCheck check_map(const FinitePoset& p, const FinitePoset& q, const std::vector<int>& f,
                   MapKind kind) {
  if (static_cast<int>(f.size()) != p.size())
    throw InvalidInput("index map must assign every element of the source poset");
  for (int v : f)
    if (v < 0 || v >= q.size()) throw InvalidInput("index map target out of range");

  if (kind != MapKind::preserving) {
    if (p.size() != q.size())
      return {false, std::nullopt, "posets differ in size, no bijection exists"};
    std::vector<int> hit(f.size(), -1);
    for (int a = 0; a < p.size(); ++a) {
      int& slot = hit[static_cast<std::size_t>(f[static_cast<std::size_t>(a)])];
      if (slot >= 0)
        return {false, std::pair<int, int>{slot, a}, "map is not injective"};
      slot = a;
    }
  }

  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      if (a == b) continue;
      bool before = p.leq(a, b);
      int fa = f[static_cast<std::size_t>(a)], fb = f[static_cast<std::size_t>(b)];
      bool after = kind == MapKind::anti_automorphism ? q.leq(fb, fa) : q.leq(fa, fb);
      bool bad = kind == MapKind::preserving ? (before && !after) : (before != after);
      if (bad) return {false, std::pair<int, int>{a, b}, "order relation not respected"};
    }
  return {true, std::nullopt, ""};
}

}  // namespace syt
