#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace cylrsk {

/// Integer type for parts, entries and widths.
using Int = std::int64_t;

/// A unit cell of a Young diagram, addressed by column x and row y (both
/// 1-based, row 1 sits on the x-axis).  Also reused for lattice points,
/// where coordinates start at 0.
struct Cell {
  int x = 0;
  int y = 0;

  auto operator<=>(const Cell&) const = default;
};

using Witness = std::vector<Cell>;

}  // namespace cylrsk
