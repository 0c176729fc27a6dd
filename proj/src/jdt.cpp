#include "syt/jdt.hpp"

#include <string>
#include <vector>

#include "syt/errors.hpp"

namespace syt {

PartialTableau jdt_rectify(const SkewTableau& skew, const CornerChooser& choose) {
  std::size_t height = skew.outer().length();
  std::vector<int> inner(height, 0), outer(height, 0);
  std::vector<std::vector<int>> grid(height);
  for (std::size_t r = 0; r < height; ++r) {
    inner[r] = skew.inner().part(r);
    outer[r] = skew.outer().part(r);
    grid[r].assign(static_cast<std::size_t>(outer[r]), 0);
    for (std::size_t c = 0; c < skew.rows()[r].size(); ++c)
      grid[r][static_cast<std::size_t>(inner[r]) + c] = skew.rows()[r][c];
  }

  auto filled = [&](int r, int c) {
    return r >= 0 && r < static_cast<int>(height) && c >= inner[static_cast<std::size_t>(r)] &&
           c < outer[static_cast<std::size_t>(r)];
  };

  int remaining = skew.inner().weight();
  while (remaining > 0) {
    // Removable corners of the current inner shape, top row first.
    std::vector<int> corners;
    for (std::size_t r = 0; r < height; ++r)
      if (inner[r] > 0 && (r + 1 == height || inner[r + 1] < inner[r]))
        corners.push_back(static_cast<int>(r));
    std::size_t pick = choose ? choose(corners.size()) : 0;
    if (pick >= corners.size()) throw InvalidInput("corner chooser returned an invalid index");

    int hr = corners[pick];
    int hc = inner[static_cast<std::size_t>(hr)] - 1;
    inner[static_cast<std::size_t>(hr)] -= 1;
    // Slide the hole outward, always pulling in the smaller neighbour.
    while (true) {
      bool right = filled(hr, hc + 1);
      bool below = filled(hr + 1, hc);
      if (!right && !below) {
        outer[static_cast<std::size_t>(hr)] -= 1;
        grid[static_cast<std::size_t>(hr)].pop_back();
        break;
      }
      bool move_right = right && (!below || grid[static_cast<std::size_t>(hr)][static_cast<std::size_t>(hc + 1)] <
                                                grid[static_cast<std::size_t>(hr + 1)][static_cast<std::size_t>(hc)]);
      if (move_right) {
        grid[static_cast<std::size_t>(hr)][static_cast<std::size_t>(hc)] =
            grid[static_cast<std::size_t>(hr)][static_cast<std::size_t>(hc + 1)];
        hc += 1;
      } else {
        grid[static_cast<std::size_t>(hr)][static_cast<std::size_t>(hc)] =
            grid[static_cast<std::size_t>(hr + 1)][static_cast<std::size_t>(hc)];
        hr += 1;
      }
    }
    --remaining;
  }

  std::vector<std::vector<int>> rows;
  for (std::size_t r = 0; r < height; ++r)
    if (!grid[r].empty()) rows.push_back(grid[r]);
  return PartialTableau(std::move(rows));
}

StandardTableau restrict_tableau(const StandardTableau& t, int i, int j,
                                 const CornerChooser& choose) {
  if (i < 1 || j > t.n() || i >= j)
    throw InvalidInput("restriction interval requires 1 <= i < j <= n, got [" +
                       std::to_string(i) + "," + std::to_string(j) + "] with n = " +
                       std::to_string(t.n()));
  Partition inner = prefix_shape(t, i - 1);
  Partition outer = prefix_shape(t, j);
  std::vector<std::vector<int>> rows;
  for (std::size_t r = 0; r < outer.length(); ++r) {
    const auto& src = t.rows()[r];
    rows.emplace_back(src.begin() + inner.part(r), src.begin() + outer.part(r));
  }
  PartialTableau straight = jdt_rectify(SkewTableau(std::move(inner), std::move(rows)), choose);
  std::vector<std::vector<int>> relabeled = straight.rows();
  for (auto& row : relabeled)
    for (int& v : row) v -= i - 1;
  return StandardTableau(std::move(relabeled));
}

}  // namespace syt
