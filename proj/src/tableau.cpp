#include "syt/tableau.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "syt/errors.hpp"

namespace syt {

namespace {

// Shared monotonicity checks for straight-shape tableaux with distinct
// positive entries.  Throws InvalidInput naming the first offence.
void validate_rows(const std::vector<std::vector<int>>& rows) {
  std::set<int> seen;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) throw InvalidInput("tableau rows must be non-empty");
    if (r > 0 && rows[r].size() > rows[r - 1].size())
      throw InvalidInput("row lengths must be weakly decreasing");
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      int v = rows[r][c];
      if (v <= 0) throw InvalidInput("tableau entries must be positive");
      if (!seen.insert(v).second)
        throw InvalidInput("entry " + std::to_string(v) + " repeats");
      if (c > 0 && rows[r][c - 1] >= v)
        throw InvalidInput("entries must increase along rows");
      if (r > 0 && rows[r - 1][c] >= v)
        throw InvalidInput("entries must increase down columns");
    }
  }
}

}  // namespace

PartialTableau::PartialTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  validate_rows(rows_);
}

Partition PartialTableau::shape() const {
  std::vector<int> lens;
  lens.reserve(rows_.size());
  for (const auto& row : rows_) lens.push_back(static_cast<int>(row.size()));
  return Partition(std::move(lens));
}

int PartialTableau::size() const {
  int total = 0;
  for (const auto& row : rows_) total += static_cast<int>(row.size());
  return total;
}

bool PartialTableau::contains(int value) const {
  for (const auto& row : rows_)
    if (std::binary_search(row.begin(), row.end(), value)) return true;
  return false;
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  validate_rows(rows_);
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  cells_.assign(static_cast<std::size_t>(n), Cell{});
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      int v = rows_[r][c];
      if (v > n)
        throw InvalidInput("entries must be exactly 1.." + std::to_string(n) + ", got " +
                           std::to_string(v));
      cells_[static_cast<std::size_t>(v - 1)] = Cell{static_cast<int>(r), static_cast<int>(c)};
    }
}

Partition StandardTableau::shape() const {
  std::vector<int> lens;
  lens.reserve(rows_.size());
  for (const auto& row : rows_) lens.push_back(static_cast<int>(row.size()));
  return Partition(std::move(lens));
}

SkewTableau::SkewTableau(Partition inner, std::vector<std::vector<int>> rows)
    : inner_(std::move(inner)), rows_(std::move(rows)) {
  std::vector<int> outer_lens;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    int len = inner_.part(r) + static_cast<int>(rows_[r].size());
    outer_lens.push_back(len);
  }
  while (!outer_lens.empty() && outer_lens.back() == 0) outer_lens.pop_back();
  outer_ = Partition(std::move(outer_lens));  // throws if not weakly decreasing
  if (inner_.length() > outer_.length())
    throw InvalidInput("skew inner shape must be contained in the outer shape");

  std::set<int> seen;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      int v = rows_[r][c];
      int col = inner_.part(r) + static_cast<int>(c);
      if (v <= 0) throw InvalidInput("tableau entries must be positive");
      if (!seen.insert(v).second)
        throw InvalidInput("entry " + std::to_string(v) + " repeats");
      if (c > 0 && rows_[r][c - 1] >= v)
        throw InvalidInput("entries must increase along rows");
      if (r > 0 && col >= inner_.part(r - 1) && col < outer_.part(r - 1)) {
        int above = rows_[r - 1][static_cast<std::size_t>(col - inner_.part(r - 1))];
        if (above >= v) throw InvalidInput("entries must increase down columns");
      }
    }
  }
}

int SkewTableau::size() const {
  int total = 0;
  for (const auto& row : rows_) total += static_cast<int>(row.size());
  return total;
}

Partition prefix_shape(const StandardTableau& t, int k) {
  if (k < 0 || k > t.n()) throw InvalidInput("prefix length out of range");
  std::vector<int> lens(t.rows().size(), 0);
  for (int e = 1; e <= k; ++e) ++lens[static_cast<std::size_t>(t.cell_of(e).row)];
  while (!lens.empty() && lens.back() == 0) lens.pop_back();
  return Partition(std::move(lens));
}

StandardTableau prefix_tableau(const StandardTableau& t, int k) {
  Partition shape = prefix_shape(t, k);
  std::vector<std::vector<int>> rows;
  for (std::size_t r = 0; r < shape.length(); ++r) {
    const auto& src = t.rows()[r];
    rows.emplace_back(src.begin(), src.begin() + shape.part(r));
  }
  return StandardTableau(std::move(rows));
}

bool tableau_canonical_less(const StandardTableau& a, const StandardTableau& b) {
  Partition sa = a.shape(), sb = b.shape();
  if (sa != sb) return partition_canonical_less(sa, sb);
  return a.rows() < b.rows();  // same shape: lexicographic on row-concatenation
}

}  // namespace syt
