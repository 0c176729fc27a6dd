#include "syt/partition.hpp"

#include <algorithm>
#include <numeric>

#include "syt/errors.hpp"

namespace syt {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw InvalidInput("partition parts must be positive, got " + std::to_string(parts_[i]));
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InvalidInput("partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  std::vector<int> cols(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int c = 0; c < p; ++c) ++cols[static_cast<std::size_t>(c)];
  return Partition(std::move(cols));
}

bool opp_dominance_leq(const Partition& lam, const Partition& mu) {
  if (lam.weight() != mu.weight())
    throw InvalidInput("opposite dominance requires equal weights, got " +
                       std::to_string(lam.weight()) + " and " + std::to_string(mu.weight()));
  std::size_t rows = std::max(lam.length(), mu.length());
  int sum_lam = 0, sum_mu = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    sum_lam += lam.part(i);
    sum_mu += mu.part(i);
    if (sum_lam < sum_mu) return false;
  }
  return true;
}

bool opp_dominance_lt(const Partition& lam, const Partition& mu) {
  return lam != mu && opp_dominance_leq(lam, mu);
}

namespace {
void extend_partitions(std::vector<int>& prefix, int remaining, int cap,
                       std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  // Trying larger first parts first yields descending lexicographic order.
  for (int p = std::min(cap, remaining); p >= 1; --p) {
    prefix.push_back(p);
    extend_partitions(prefix, remaining - p, p, out);
    prefix.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw InvalidInput("partitions_of requires n >= 0");
  std::vector<Partition> out;
  std::vector<int> prefix;
  extend_partitions(prefix, n, n, out);
  return out;
}

bool partition_canonical_less(const Partition& a, const Partition& b) {
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                      a.parts().begin(), a.parts().end());
}

}  // namespace syt
