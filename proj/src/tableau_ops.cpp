#include "syt/tableau_ops.hpp"

#include <algorithm>
#include <string>

#include "syt/errors.hpp"

namespace syt {

StripSequence shs(const StandardTableau& t) {
  int n = t.n();
  if (n == 0) return StripSequence();
  std::vector<std::pair<int, int>> blocks;
  int start = 1;
  for (int e = 1; e < n; ++e)
    if (t.cell_of(e + 1).col <= t.cell_of(e).col) {
      blocks.emplace_back(start, e);
      start = e + 1;
    }
  blocks.emplace_back(start, n);
  return StripSequence(std::move(blocks));
}

DescentSet descent_set(const StandardTableau& t) {
  std::vector<int> members;
  for (int i = 1; i < t.n(); ++i)
    if (t.cell_of(i + 1).row > t.cell_of(i).row) members.push_back(i);
  return make_descent_set(t.n(), std::move(members));
}

DescentSet descent_set_left_of(const Permutation& pi) {
  return make_descent_set(pi.n(), descent_set_left(pi));
}

StandardTableau transpose(const StandardTableau& t) {
  std::size_t cols = t.rows().empty() ? 0 : t.rows()[0].size();
  std::vector<std::vector<int>> out(cols);
  for (const auto& row : t.rows())
    for (std::size_t c = 0; c < row.size(); ++c) out[c].push_back(row[c]);
  return StandardTableau(std::move(out));
}

StandardTableau evacuate(const StandardTableau& t) {
  return rsk(perm_evac(row_word(t))).p;
}

StandardTableau omega1(const StandardTableau& t) {
  auto rows = t.rows();
  if (rows.empty()) rows.push_back({});
  rows[0].push_back(t.n() + 1);
  return StandardTableau(std::move(rows));
}

StandardTableau omega2(const StandardTableau& t) {
  auto rows = t.rows();
  rows.push_back({t.n() + 1});
  return StandardTableau(std::move(rows));
}

namespace {

std::vector<std::vector<int>> columns_of(const StandardTableau& t) {
  std::size_t cols = t.rows().empty() ? 0 : t.rows()[0].size();
  std::vector<std::vector<int>> out(cols);
  for (const auto& row : t.rows())
    for (std::size_t c = 0; c < row.size(); ++c) out[c].push_back(row[c]);
  return out;
}

}  // namespace

StandardTableau slash_concat(const StandardTableau& s, const StandardTableau& t) {
  int k = s.n();
  auto cols_s = columns_of(s);
  auto cols_t = columns_of(t);
  std::size_t width = std::max(cols_s.size(), cols_t.size());
  std::vector<std::vector<int>> cols(width);
  for (std::size_t c = 0; c < width; ++c) {
    if (c < cols_s.size()) cols[c] = cols_s[c];
    if (c < cols_t.size())
      for (int v : cols_t[c]) cols[c].push_back(v + k);
  }
  // Re-read the stacked columns as rows.
  std::size_t height = cols.empty() ? 0 : cols[0].size();
  std::vector<std::vector<int>> rows(height);
  for (std::size_t c = 0; c < width; ++c)
    for (std::size_t r = 0; r < cols[c].size(); ++r) rows[r].push_back(cols[c][r]);
  return StandardTableau(std::move(rows));
}

StandardTableau backslash_concat(const StandardTableau& s, const StandardTableau& t) {
  int k = s.n();
  std::size_t height = std::max(s.rows().size(), t.rows().size());
  std::vector<std::vector<int>> rows(height);
  for (std::size_t r = 0; r < height; ++r) {
    if (r < s.rows().size()) rows[r] = s.rows()[r];
    if (r < t.rows().size())
      for (int v : t.rows()[r]) rows[r].push_back(v + k);
  }
  return StandardTableau(std::move(rows));
}

PartialTableau bar_shift(const StandardTableau& t, int a) {
  if (a < 1 || a > t.n() + 1)
    throw InvalidInput("bar shift threshold must lie in 1..n+1, got " + std::to_string(a));
  auto rows = t.rows();
  for (auto& row : rows)
    for (int& v : row)
      if (v >= a) ++v;
  return PartialTableau(std::move(rows));
}

StandardTableau insert_shifted_row(const StandardTableau& t, int a) {
  return StandardTableau(row_insert(bar_shift(t, a), a).rows());
}

StandardTableau insert_shifted_col(const StandardTableau& t, int a) {
  return StandardTableau(column_insert(bar_shift(t, a), a).rows());
}

Permutation dual_knuth_on_word(const Permutation& pi, int i) {
  if (i < 2 || i > pi.n() - 1)
    throw InvalidInput("dual Knuth move needs a value triple (i-1, i, i+1) inside 1..n");
  int p1 = pi.position_of(i - 1), p2 = pi.position_of(i), p3 = pi.position_of(i + 1);
  bool middle_between = (p1 < p2 && p2 < p3) || (p3 < p2 && p2 < p1);
  if (middle_between) return pi;  // monotone pattern: no move
  auto word = pi.word();
  if ((p2 < p1 && p1 < p3) || (p3 < p1 && p1 < p2)) {
    // i-1 sits between: the outer values i and i+1 swap.
    std::swap(word[static_cast<std::size_t>(p2 - 1)], word[static_cast<std::size_t>(p3 - 1)]);
  } else {
    // i+1 sits between: the outer values i-1 and i swap.
    std::swap(word[static_cast<std::size_t>(p1 - 1)], word[static_cast<std::size_t>(p2 - 1)]);
  }
  return Permutation(std::move(word));
}

StandardTableau dual_knuth_move(const StandardTableau& t, int i) {
  if (i < 2 || i > t.n() - 1)
    throw InvalidInput("dual Knuth move requires 2 <= i <= n-1, got i = " + std::to_string(i) +
                       " with n = " + std::to_string(t.n()));
  return rsk(dual_knuth_on_word(row_word(t), i)).p;
}

StandardTableau inner_translate(const StandardTableau& s, const StandardTableau& r) {
  int k = r.n();
  if (k >= s.n())
    throw InvalidInput("inner translation needs a proper prefix: k < n");
  if (r.shape() != prefix_shape(s, k))
    throw InvalidInput("inner translation shape mismatch: replacement tableau must match the "
                       "shape of the host's entries 1..k");
  auto rows = s.rows();
  for (std::size_t row = 0; row < r.rows().size(); ++row)
    for (std::size_t col = 0; col < r.rows()[row].size(); ++col)
      rows[row][col] = r.rows()[row][col];
  return StandardTableau(std::move(rows));
}

namespace {

// All tableaux of `shape`, generated by choosing which removable corner
// holds the largest entry and recursing.
void fill_shape(std::vector<int>& shape, int entry, std::vector<std::vector<int>>& cells,
                std::vector<StandardTableau>& out) {
  if (entry == 0) {
    std::vector<std::vector<int>> rows;
    for (const auto& row : cells)
      if (!row.empty()) rows.push_back(row);
    out.emplace_back(std::move(rows));
    return;
  }
  for (std::size_t r = 0; r < shape.size(); ++r) {
    if (shape[r] == 0) break;
    bool removable = (r + 1 == shape.size()) || shape[r + 1] < shape[r];
    if (!removable) continue;
    shape[r] -= 1;
    cells[r][static_cast<std::size_t>(shape[r])] = entry;
    fill_shape(shape, entry - 1, cells, out);
    shape[r] += 1;
  }
}

}  // namespace

std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
  if (shape.weight() > 10)
    throw CapacityError("tableau enumeration supports weight <= 10, got " +
                        std::to_string(shape.weight()));
  std::vector<int> lens(shape.parts());
  std::vector<std::vector<int>> cells;
  for (int len : lens) cells.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<StandardTableau> out;
  fill_shape(lens, shape.weight(), cells, out);
  if (shape.weight() == 0) out = {StandardTableau()};
  std::sort(out.begin(), out.end(),
            [](const StandardTableau& a, const StandardTableau& b) { return a.rows() < b.rows(); });
  return out;
}

std::vector<StandardTableau> enumerate_syt(int n) {
  if (n < 0) throw InvalidInput("tableau enumeration requires n >= 0");
  if (n > 10)
    throw CapacityError("tableau enumeration supports n <= 10, got " + std::to_string(n));
  std::vector<StandardTableau> out;
  for (const Partition& shape : partitions_of(n))
    for (auto& t : enumerate_syt(shape)) out.push_back(std::move(t));
  return out;
}

}  // namespace syt
