#include "syt/orders.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "syt/errors.hpp"
#include "syt/jdt.hpp"
#include "syt/rsk.hpp"
#include "syt/strip_sequence.hpp"
#include "syt/tableau_ops.hpp"
#include "syt/text_io.hpp"

namespace syt {

FinitePoset weak_bruhat_poset(int n) {
  if (n < 0) throw InvalidInput("weak Bruhat order requires n >= 0");
  if (n > 8)
    throw CapacityError("weak Bruhat order supports n <= 8, got n = " + std::to_string(n));

  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  std::vector<std::string> labels;
  std::map<std::vector<int>, int> rank;
  do {
    rank.emplace(word, static_cast<int>(labels.size()));
    labels.push_back(to_string(Permutation(word)));
  } while (std::next_permutation(word.begin(), word.end()));

  std::vector<std::pair<int, int>> edges;
  for (const auto& [w, r] : rank)
    for (int i = 0; i + 1 < n; ++i)
      if (w[static_cast<std::size_t>(i)] < w[static_cast<std::size_t>(i + 1)]) {
        auto swapped = w;
        std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(i + 1)]);
        edges.emplace_back(r, rank.at(swapped));
      }
  return FinitePoset::from_edges(std::move(labels), edges);
}

namespace {

// Canonical SYT_n enumeration with labels and a rows -> index lookup.
struct SytUniverse {
  std::vector<StandardTableau> tabs;
  std::vector<std::string> labels;
  std::map<std::vector<std::vector<int>>, int> index;

  explicit SytUniverse(int n) : tabs(enumerate_syt(n)) {
    for (std::size_t k = 0; k < tabs.size(); ++k) {
      labels.push_back(to_string(tabs[k]));
      index.emplace(tabs[k].rows(), static_cast<int>(k));
    }
  }
};

void check_poset_capacity(const char* what, int n) {
  if (n < 0) throw InvalidInput(std::string(what) + " requires n >= 0");
  if (n > 7)
    throw CapacityError(std::string(what) + " supports n <= 7, got n = " + std::to_string(n));
}

// All interval restrictions of each tableau, shapes alongside, in a fixed
// interval enumeration shared by all tableaux of one n.
struct RestrictionTable {
  std::vector<std::vector<std::vector<int>>> rows;  // [tab][interval] -> rows
  std::vector<Partition> shape;                     // [tab * intervals + interval]
  int intervals = 0;

  RestrictionTable(const std::vector<StandardTableau>& tabs, int n) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) ++intervals;
    rows.reserve(tabs.size());
    shape.reserve(tabs.size() * static_cast<std::size_t>(intervals));
    for (const auto& t : tabs) {
      std::vector<std::vector<int>> per_interval;
      per_interval.reserve(static_cast<std::size_t>(intervals));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          StandardTableau r = restrict_tableau(t, i, j);
          shape.push_back(r.shape());
          // Flatten rows for cheap equality comparison.
          std::vector<int> flat;
          for (const auto& row : r.rows()) {
            flat.push_back(static_cast<int>(row.size()));
            flat.insert(flat.end(), row.begin(), row.end());
          }
          per_interval.push_back(std::move(flat));
        }
      rows.push_back(std::move(per_interval));
    }
  }

  bool chain_pair(std::size_t s, std::size_t t) const {
    for (int iv = 0; iv < intervals; ++iv) {
      const auto& rs = rows[s][static_cast<std::size_t>(iv)];
      const auto& rt = rows[t][static_cast<std::size_t>(iv)];
      if (rs == rt) continue;
      const Partition& ps = shape[s * static_cast<std::size_t>(intervals) + static_cast<std::size_t>(iv)];
      const Partition& pt = shape[t * static_cast<std::size_t>(intervals) + static_cast<std::size_t>(iv)];
      if (!opp_dominance_lt(ps, pt)) return false;
    }
    return true;
  }
};

}  // namespace

FinitePoset weak_order_syt(int n) {
  check_poset_capacity("weak order on tableaux", n);
  SytUniverse u(n);

  std::vector<std::pair<int, int>> edges;
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    Permutation pi(word);
    int from = u.index.at(rsk(pi).p.rows());
    for (int i = 0; i + 1 < n; ++i)
      if (word[static_cast<std::size_t>(i)] < word[static_cast<std::size_t>(i + 1)]) {
        auto swapped = word;
        std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(i + 1)]);
        int to = u.index.at(rsk(Permutation(swapped)).p.rows());
        if (from != to) edges.emplace_back(from, to);
      }
  } while (std::next_permutation(word.begin(), word.end()));
  return FinitePoset::from_edges(std::move(u.labels), edges);
}

bool chain_leq(const StandardTableau& s, const StandardTableau& t) {
  int n = s.n();
  if (t.n() != n) throw InvalidInput("chain condition requires tableaux of equal n");
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      StandardTableau rs = restrict_tableau(s, i, j);
      StandardTableau rt = restrict_tableau(t, i, j);
      if (rs == rt) continue;
      if (!opp_dominance_lt(rs.shape(), rt.shape())) return false;
    }
  return true;
}

FinitePoset chain_poset(int n) {
  check_poset_capacity("chain order", n);
  SytUniverse u(n);
  RestrictionTable table(u.tabs, n);

  std::vector<std::pair<int, int>> pairs;
  for (std::size_t a = 0; a < u.tabs.size(); ++a)
    for (std::size_t b = 0; b < u.tabs.size(); ++b)
      if (a != b && table.chain_pair(a, b))
        pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));

  FinitePoset p = FinitePoset::from_edges(std::move(u.labels), pairs);
  // The relation composes interval-by-interval, so closure must add nothing.
  if (p.comparabilities() != pairs)
    throw InternalError("chain relation was not transitive before closure");
  return p;
}

bool chain_strip_base_leq(const StandardTableau& s, const StandardTableau& t, int max_steps) {
  if (max_steps != 1 && max_steps != 2)
    throw InvalidInput("chain-strip refinement allows at most 1 or 2 steps");
  auto steps = refinement_steps(shs(t), shs(s));
  if (!steps || *steps > max_steps) return false;
  return chain_leq(s, t);
}

FinitePoset chain_strip_poset(int n, int max_steps) {
  check_poset_capacity("chain-strip order", n);
  if (max_steps != 1 && max_steps != 2)
    throw InvalidInput("chain-strip refinement allows at most 1 or 2 steps");
  SytUniverse u(n);
  RestrictionTable table(u.tabs, n);
  std::vector<StripSequence> strips;
  strips.reserve(u.tabs.size());
  for (const auto& t : u.tabs) strips.push_back(shs(t));

  std::vector<std::pair<int, int>> edges;
  for (std::size_t a = 0; a < u.tabs.size(); ++a)
    for (std::size_t b = 0; b < u.tabs.size(); ++b) {
      if (a == b) continue;
      auto steps = refinement_steps(strips[b], strips[a]);
      if (!steps || *steps > max_steps) continue;
      if (table.chain_pair(a, b)) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  return FinitePoset::from_edges(std::move(u.labels), edges);
}

namespace {

void append_shuffles(const std::vector<int>& u, const std::vector<int>& v, std::size_t iu,
                     std::size_t iv, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (iu == u.size() && iv == v.size()) {
    out.push_back(prefix);
    return;
  }
  if (iu < u.size()) {
    prefix.push_back(u[iu]);
    append_shuffles(u, v, iu + 1, iv, prefix, out);
    prefix.pop_back();
  }
  if (iv < v.size()) {
    prefix.push_back(v[iv]);
    append_shuffles(u, v, iu, iv + 1, prefix, out);
    prefix.pop_back();
  }
}

void check_product_capacity(const StandardTableau& s, const StandardTableau& t) {
  if (s.n() + t.n() > 7)
    throw CapacityError("tableau product supports |S| + |T| <= 7, got " +
                        std::to_string(s.n() + t.n()));
}

}  // namespace

std::vector<StandardTableau> pr_product(const StandardTableau& s, const StandardTableau& t) {
  check_product_capacity(s, t);
  int n = s.n() + t.n();
  SytUniverse u(n);
  FinitePoset poset = chain_strip_poset(n, 1);
  int e1 = u.index.at(slash_concat(s, t).rows());
  int e2 = u.index.at(backslash_concat(s, t).rows());
  int bottom, top;
  if (poset.leq(e2, e1)) {
    bottom = e2;
    top = e1;
  } else if (poset.leq(e1, e2)) {
    bottom = e1;
    top = e2;
  } else {
    throw InternalError("concatenation tableaux are incomparable in the chain-strip order");
  }
  std::vector<StandardTableau> out;
  for (int x : poset.interval(bottom, top)) out.push_back(u.tabs[static_cast<std::size_t>(x)]);
  return out;  // interval indices ascend, so this is canonical order
}

std::vector<StandardTableau> pr_product_oracle(const StandardTableau& s, const StandardTableau& t) {
  check_product_capacity(s, t);
  // The class-sum product: shuffles of a single word per class miss tableaux
  // (1 with 1,2/3: the word 4,2,3 never yields 1,3/2,4 but 2,4,3 does), so
  // every pair of class words contributes.
  std::vector<StandardTableau> out;
  std::map<std::vector<std::vector<int>>, bool> seen;
  for (const Permutation& su : knuth_class(s))
    for (const Permutation& tv : knuth_class(t)) {
      std::vector<int> u = su.word();
      std::vector<int> v = tv.word();
      for (int& x : v) x += s.n();

      std::vector<std::vector<int>> shuffles;
      std::vector<int> prefix;
      append_shuffles(u, v, 0, 0, prefix, shuffles);
      for (const auto& word : shuffles) {
        StandardTableau p = rsk(Permutation(word)).p;
        if (seen.emplace(p.rows(), true).second) out.push_back(std::move(p));
      }
    }
  std::sort(out.begin(), out.end(), tableau_canonical_less);
  return out;
}

}  // namespace syt
