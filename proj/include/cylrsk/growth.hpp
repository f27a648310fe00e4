#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cylrsk/filling.hpp"
#include "cylrsk/partition.hpp"
#include "cylrsk/tableau.hpp"

namespace cylrsk {

enum class RuleKind { Rsk, Drsk, SkewDrsk };

struct Rule {
  RuleKind kind = RuleKind::Rsk;
  int d = 0;  // unused for Rsk

  static Rule rsk() { return {RuleKind::Rsk, 0}; }
  static Rule drsk(int d);
  static Rule skew(int d);
  /// "rsk", "drsk" or "skew"
  std::string name() const;
  /// Inverse of name(); FormatError on anything else.
  static Rule parse(std::string_view name, int d);

  bool operator==(const Rule&) const = default;
};

// Single cell -----------------------------------------------------------------
// Corners: κ bottom-left, μ top-left, ν bottom-right, ρ top-right; m the entry.

/// Local rule check.  Partition labels for Rsk/Drsk, staircases for SkewDrsk;
/// the wrong kind throws DomainError.
bool check_cell(const Rule& rule, const Partition& kappa, const Partition& mu, const Partition& nu,
                const Partition& rho, Int m);
bool check_cell(const Rule& rule, const DStaircase& kappa, const DStaircase& mu, const DStaircase& nu,
                const DStaircase& rho, Int m);

/// The unique ρ completing the cell.  Throws DomainError unless μ ≻ κ ≺ ν
/// (and for Drsk: d-partitions with m = 0 or κ_d = 0; for SkewDrsk: m = 0).
Partition grow_forward_cell(const Rule& rule, const Partition& kappa, const Partition& mu, const Partition& nu,
                            Int m);
DStaircase grow_forward_cell(const Rule& rule, const DStaircase& kappa, const DStaircase& mu,
                             const DStaircase& nu, Int m);

template <class Label>
struct BackwardCell {
  Label kappa;
  Int m = 0;
};

/// The unique (κ, m) completing the cell.  Throws DomainError unless μ ≺ ρ ≻ ν.
BackwardCell<Partition> grow_backward_cell(const Rule& rule, const Partition& mu, const Partition& nu,
                                           const Partition& rho);
BackwardCell<DStaircase> grow_backward_cell(const Rule& rule, const DStaircase& mu, const DStaircase& nu,
                                            const DStaircase& rho);

// Diagrams --------------------------------------------------------------------

/// Labels at every lattice point of a shape plus a filling, every cell obeying
/// the rule.  Partition labels for Rsk/Drsk (axes ∅), staircase labels for
/// SkewDrsk (rectangles only, zero filling).
template <class Label>
class BasicGrowthDiagram {
 public:
  /// labels[y][x] for 0 <= y <= rows, 0 <= x <= shape.lattice_width(y).
  /// Validates everything; throws DomainError naming the first bad cell.
  BasicGrowthDiagram(Rule rule, Filling filling, std::vector<std::vector<Label>> labels);

  const Rule& rule() const noexcept { return rule_; }
  const Shape& shape() const noexcept { return filling_.shape(); }
  const Filling& filling() const noexcept { return filling_; }
  const Label& label(int x, int y) const { return labels_.at(y).at(x); }
  const std::vector<std::vector<Label>>& labels() const noexcept { return labels_; }

  bool operator==(const BasicGrowthDiagram&) const = default;

 private:
  Rule rule_;
  Filling filling_;
  std::vector<std::vector<Label>> labels_;
};

using GrowthDiagram = BasicGrowthDiagram<Partition>;
using SkewGrowthDiagram = BasicGrowthDiagram<DStaircase>;

/// Forward growth in row-major order from ∅ axes.  For Drsk, a filling that
/// contains d...1(d+1) throws DomainError whose witness is the pattern
/// occurrence ending at the first cell where growth is impossible.
GrowthDiagram grow_from_filling(const Rule& rule, const Filling& f);

/// Backward growth from labels on the outer boundary of `s`.  The tableau's
/// type sequence must be the boundary word of `s`.
GrowthDiagram grow_from_boundary(const Rule& rule, const Shape& s, const OscillatingTableau& t);

/// Skew diagram on the rectangle with one row per '+' and one column per '-'
/// of t's word.  The labels sit on the path P^w that starts at the
/// bottom-right corner and steps up on '+' and left on '-'; cells below the
/// path grow backward, cells above it forward.
SkewGrowthDiagram grow_skew(const SkewOscillatingTableau& t);

/// Labels along the outer boundary of the sub-shape, from the x-axis.
OscillatingTableau extract_boundary(const GrowthDiagram& g, const Shape& sub);
OscillatingTableau extract_boundary(const GrowthDiagram& g);
/// Labels along P^v; v must have as many '+' as rows and '-' as columns.
SkewOscillatingTableau extract_path(const SkewGrowthDiagram& g, const TypeSequence& v);

/// Reflection across y = x: labels and filling transposed.
GrowthDiagram reflect(const GrowthDiagram& g);
SkewGrowthDiagram reflect(const SkewGrowthDiagram& g);

// Unit-step cells -------------------------------------------------------------

enum class RsCase {
  Static,      // all corners equal, m = 0
  LeftEdge,    // μ = ρ = κ+(i), ν = κ
  BottomEdge,  // ν = ρ = κ+(i), μ = κ
  Distinct,    // μ = κ+(i), ν = κ+(j), ρ = κ+(i)+(j), i != j
  Bump,        // μ = ν = κ+(i), ρ = κ+(i)+(i+1)
  CyclicBump,  // μ = ν = κ+(d), ρ = κ+(d)+(1)
  NewBox,      // m = 1, μ = ν = κ, ρ = κ+(1)
};

std::string to_string(RsCase c);

/// Which configuration of the unit-step rule table the cell matches.
/// Throws DomainError if adjacent corner sizes differ by more than 1 and
/// InvariantError if no configuration matches.
RsCase classify_rs_cell(const Rule& rule, const Partition& kappa, const Partition& mu, const Partition& nu,
                        const Partition& rho, Int m);
RsCase classify_rs_cell(const Rule& rule, const DStaircase& kappa, const DStaircase& mu, const DStaircase& nu,
                        const DStaircase& rho, Int m);

// Text formats ----------------------------------------------------------------

/// Header `rule d rows cols`, the filling block (`to_text(filling)`), then one
/// line of bracket labels per lattice row, top row first.
std::string to_dump(const GrowthDiagram& g);
std::string to_dump(const SkewGrowthDiagram& g);
GrowthDiagram parse_dump(std::string_view text);
SkewGrowthDiagram parse_skew_dump(std::string_view text);
std::string to_json(const GrowthDiagram& g);
std::string to_json(const SkewGrowthDiagram& g);

/// Monospace grid: compact labels on lattice points, nonzero entries in cells.
std::string render(const GrowthDiagram& g);
std::string render(const SkewGrowthDiagram& g);

}  // namespace cylrsk
