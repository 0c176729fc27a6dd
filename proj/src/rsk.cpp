#include "syt/rsk.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "syt/errors.hpp"

namespace syt {

Permutation row_word(const StandardTableau& t) {
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(t.n()));
  for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it)
    word.insert(word.end(), it->begin(), it->end());
  return Permutation(std::move(word));
}

namespace {

// Insert into raw rows, returning the cell created.  No validation.
Cell row_insert_raw(std::vector<std::vector<int>>& rows, int a) {
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({a});
      return Cell{static_cast<int>(r), 0};
    }
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), a);
    if (it == row.end()) {
      row.push_back(a);
      return Cell{static_cast<int>(r), static_cast<int>(row.size()) - 1};
    }
    std::swap(a, *it);  // bump the leftmost entry larger than a
  }
}

// Column insertion on raw rows: symmetric to row insertion, bumping the
// topmost larger entry of each column into the next column.
Cell column_insert_raw(std::vector<std::vector<int>>& rows, int a) {
  for (std::size_t c = 0;; ++c) {
    // Entries of column c are rows[r][c] for r while the row is long enough.
    std::size_t r = 0;
    while (r < rows.size() && rows[r].size() > c && rows[r][c] < a) ++r;
    if (r == rows.size() || rows[r].size() <= c) {
      // a goes to the bottom of column c.
      if (r == rows.size()) rows.push_back({});
      rows[r].push_back(a);
      return Cell{static_cast<int>(r), static_cast<int>(c)};
    }
    std::swap(a, rows[r][c]);  // bump the topmost entry larger than a
  }
}

void check_absent(const PartialTableau& t, int a) {
  if (a <= 0) throw InvalidInput("inserted entry must be positive");
  if (t.contains(a))
    throw InvalidInput("entry " + std::to_string(a) + " already occurs in the tableau");
}

}  // namespace

PartialTableau row_insert(const PartialTableau& t, int a) {
  check_absent(t, a);
  auto rows = t.rows();
  row_insert_raw(rows, a);
  return PartialTableau(std::move(rows));
}

PartialTableau column_insert(const PartialTableau& t, int a) {
  check_absent(t, a);
  auto rows = t.rows();
  column_insert_raw(rows, a);
  return PartialTableau(std::move(rows));
}

RskPair rsk(const Permutation& pi) {
  std::vector<std::vector<int>> p, q;
  for (int k = 1; k <= pi.n(); ++k) {
    Cell cell = row_insert_raw(p, pi.at(k));
    if (cell.row == static_cast<int>(q.size())) q.push_back({});
    q[static_cast<std::size_t>(cell.row)].push_back(k);
  }
  return RskPair{StandardTableau(std::move(p)), StandardTableau(std::move(q))};
}

Permutation rsk_inverse(const RskPair& pq) {
  if (pq.p.shape() != pq.q.shape())
    throw InvalidInput("insertion and recording tableaux must share their shape");
  auto rows = pq.p.rows();
  int n = pq.p.n();
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  for (int k = n; k >= 1; --k) {
    Cell cell = pq.q.cell_of(k);
    // The cell of k is a corner of the current shape; reverse-bump from it.
    int carry = rows[static_cast<std::size_t>(cell.row)].back();
    rows[static_cast<std::size_t>(cell.row)].pop_back();
    if (rows[static_cast<std::size_t>(cell.row)].empty()) rows.pop_back();
    for (int r = cell.row - 1; r >= 0; --r) {
      auto& row = rows[static_cast<std::size_t>(r)];
      auto it = std::lower_bound(row.begin(), row.end(), carry);
      if (it == row.begin())
        throw InvalidInput("recording tableau does not match the insertion tableau");
      --it;  // rightmost entry smaller than carry
      std::swap(carry, *it);
    }
    word[static_cast<std::size_t>(k - 1)] = carry;
  }
  return Permutation(std::move(word));
}

std::vector<Permutation> knuth_neighbors(const Permutation& pi) {
  std::vector<Permutation> out;
  const auto& w = pi.word();
  int n = pi.n();
  for (int i = 0; i + 1 < n; ++i) {
    int x = w[static_cast<std::size_t>(i)], y = w[static_cast<std::size_t>(i + 1)];
    int lo = std::min(x, y), hi = std::max(x, y);
    bool movable = false;
    if (i - 1 >= 0 && w[static_cast<std::size_t>(i - 1)] > lo && w[static_cast<std::size_t>(i - 1)] < hi)
      movable = true;
    if (i + 2 < n && w[static_cast<std::size_t>(i + 2)] > lo && w[static_cast<std::size_t>(i + 2)] < hi)
      movable = true;
    if (movable) {
      auto copy = w;
      std::swap(copy[static_cast<std::size_t>(i)], copy[static_cast<std::size_t>(i + 1)]);
      out.emplace_back(std::move(copy));
    }
  }
  return out;
}

std::vector<Permutation> knuth_class(const StandardTableau& t) {
  if (t.n() > 8)
    throw CapacityError("knuth_class supports n <= 8, got n = " + std::to_string(t.n()));
  std::set<Permutation> seen;
  std::vector<Permutation> queue{row_word(t)};
  seen.insert(queue.front());
  while (!queue.empty()) {
    Permutation cur = std::move(queue.back());
    queue.pop_back();
    for (auto& next : knuth_neighbors(cur))
      if (seen.insert(next).second) queue.push_back(std::move(next));
  }
  return {seen.begin(), seen.end()};
}

}  // namespace syt
