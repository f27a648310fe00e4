#include "cylrsk/growth.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <type_traits>

#include <json.hpp>

#include "cylrsk/errors.hpp"

namespace cylrsk {

// Rule ------------------------------------------------------------------------

Rule Rule::drsk(int d) {
  if (d < 1) throw DomainError("the d-RSK rule needs d >= 1");
  return {RuleKind::Drsk, d};
}

Rule Rule::skew(int d) {
  if (d < 1) throw DomainError("the skew d-RSK rule needs d >= 1");
  return {RuleKind::SkewDrsk, d};
}

std::string Rule::name() const {
  switch (kind) {
    case RuleKind::Rsk:
      return "rsk";
    case RuleKind::Drsk:
      return "drsk";
    case RuleKind::SkewDrsk:
      return "skew";
  }
  return "?";
}

Rule Rule::parse(std::string_view name, int d) {
  if (name == "rsk") return rsk();
  if (name == "drsk") return drsk(d);
  if (name == "skew") return skew(d);
  throw FormatError("unknown rule '" + std::string(name) + "' (expected rsk, drsk or skew)");
}

namespace {

std::string cell_name(int x, int y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

std::vector<Int> pad(const Partition& p, int n) { return p.padded(n); }

Partition partition_or_invariant(std::vector<Int> parts, const char* who) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0 || (i > 0 && parts[i] > parts[i - 1])) {
      throw InvariantError(std::string(who) + " produced a non-partition");
    }
  }
  return Partition(std::move(parts));
}

void require_partition_rule(const Rule& rule) {
  if (rule.kind == RuleKind::SkewDrsk) throw DomainError("the skew rule works on d-staircases, not partitions");
}

void require_staircase_rule(const Rule& rule, int degree) {
  if (rule.kind != RuleKind::SkewDrsk) throw DomainError("the " + rule.name() + " rule works on partitions");
  if (degree != rule.d) {
    throw DomainError("expected " + std::to_string(rule.d) + "-staircases, got degree " + std::to_string(degree));
  }
}

bool fits(const Rule& rule, const Partition& p) { return rule.kind != RuleKind::Drsk || p.length() <= rule.d; }

// Shared arithmetic on zero-padded vectors of length n.  `cyclic` selects the
// d-RSK wrap-around in the first coordinate.

std::vector<Int> forward_parts(const std::vector<Int>& k, const std::vector<Int>& mu, const std::vector<Int>& nu,
                               Int m, bool cyclic) {
  const std::size_t n = k.size();
  std::vector<Int> rho(n);
  rho[0] = m + std::max(mu[0], nu[0]);
  if (cyclic) rho[0] += std::min(mu[n - 1], nu[n - 1]) - k[n - 1];
  for (std::size_t i = 1; i < n; ++i) rho[i] = std::min(mu[i - 1], nu[i - 1]) + std::max(mu[i], nu[i]) - k[i - 1];
  return rho;
}

// Returns κ and the right-hand side κ_n - m of the first equation (cyclic) or
// m (non-cyclic).
std::pair<std::vector<Int>, Int> backward_parts(const std::vector<Int>& mu, const std::vector<Int>& nu,
                                                const std::vector<Int>& rho, bool cyclic) {
  const std::size_t n = rho.size();
  std::vector<Int> k(n, 0);
  for (std::size_t i = 0; i + 1 < n; ++i) k[i] = std::min(mu[i], nu[i]) + std::max(mu[i + 1], nu[i + 1]) - rho[i + 1];
  Int first = 0;
  if (cyclic) {
    first = std::min(mu[n - 1], nu[n - 1]) + std::max(mu[0], nu[0]) - rho[0];
  } else {
    first = rho[0] - std::max(mu[0], nu[0]);
  }
  return {k, first};
}

int width_for(const Rule& rule, std::initializer_list<const Partition*> ps) {
  if (rule.kind == RuleKind::Drsk) return rule.d;
  int n = 0;
  for (const Partition* p : ps) n = std::max(n, p->length());
  return n + 1;
}

}  // namespace

// Single cell -----------------------------------------------------------------

bool check_cell(const Rule& rule, const Partition& kappa, const Partition& mu, const Partition& nu,
                const Partition& rho, Int m) {
  require_partition_rule(rule);
  if (m < 0) return false;
  if (!fits(rule, kappa) || !fits(rule, mu) || !fits(rule, nu) || !fits(rule, rho)) return false;
  if (!interlaces(kappa, mu) || !interlaces(kappa, nu) || !interlaces(mu, rho) || !interlaces(nu, rho)) return false;
  const bool cyclic = rule.kind == RuleKind::Drsk;
  if (cyclic && m > 0 && kappa[rule.d] > 0) return false;
  const int n = width_for(rule, {&kappa, &mu, &nu, &rho});
  return forward_parts(pad(kappa, n), pad(mu, n), pad(nu, n), m, cyclic) == pad(rho, n);
}

bool check_cell(const Rule& rule, const DStaircase& kappa, const DStaircase& mu, const DStaircase& nu,
                const DStaircase& rho, Int m) {
  require_staircase_rule(rule, kappa.degree());
  if (mu.degree() != rule.d || nu.degree() != rule.d || rho.degree() != rule.d) return false;
  if (m != 0) return false;
  if (!interlaces(kappa, mu) || !interlaces(kappa, nu) || !interlaces(mu, rho) || !interlaces(nu, rho)) return false;
  return forward_parts(kappa.parts(), mu.parts(), nu.parts(), 0, true) == rho.parts();
}

Partition grow_forward_cell(const Rule& rule, const Partition& kappa, const Partition& mu, const Partition& nu,
                            Int m) {
  require_partition_rule(rule);
  if (m < 0) throw DomainError("negative filling entry");
  if (!fits(rule, kappa) || !fits(rule, mu) || !fits(rule, nu)) {
    throw DomainError("labels must be " + std::to_string(rule.d) + "-partitions");
  }
  if (!interlaces(kappa, mu) || !interlaces(kappa, nu)) {
    throw DomainError("forward growth needs " + to_string(mu) + " ≻ " + to_string(kappa) + " ≺ " + to_string(nu));
  }
  const bool cyclic = rule.kind == RuleKind::Drsk;
  if (cyclic && m > 0 && kappa[rule.d] > 0) {
    throw DomainError("d-RSK forbids a nonzero entry when kappa_d > 0 (kappa = " + to_string(kappa) + ")");
  }
  const int n = width_for(rule, {&kappa, &mu, &nu});
  Partition rho = partition_or_invariant(forward_parts(pad(kappa, n), pad(mu, n), pad(nu, n), m, cyclic),
                                         "forward growth");
  if (!check_cell(rule, kappa, mu, nu, rho, m)) throw InvariantError("forward growth produced an invalid cell");
  return rho;
}

DStaircase grow_forward_cell(const Rule& rule, const DStaircase& kappa, const DStaircase& mu, const DStaircase& nu,
                             Int m) {
  require_staircase_rule(rule, kappa.degree());
  if (mu.degree() != rule.d || nu.degree() != rule.d) throw DomainError("staircase degrees differ");
  if (m != 0) throw DomainError("the skew rule requires m = 0");
  if (!interlaces(kappa, mu) || !interlaces(kappa, nu)) {
    throw DomainError("forward growth needs " + to_string(mu) + " ≻ " + to_string(kappa) + " ≺ " + to_string(nu));
  }
  auto parts = forward_parts(kappa.parts(), mu.parts(), nu.parts(), 0, true);
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
    throw InvariantError("forward growth produced a non-staircase");
  }
  DStaircase rho(std::move(parts));
  if (!check_cell(rule, kappa, mu, nu, rho, 0)) throw InvariantError("forward growth produced an invalid cell");
  return rho;
}

BackwardCell<Partition> grow_backward_cell(const Rule& rule, const Partition& mu, const Partition& nu,
                                           const Partition& rho) {
  require_partition_rule(rule);
  if (!fits(rule, mu) || !fits(rule, nu) || !fits(rule, rho)) {
    throw DomainError("labels must be " + std::to_string(rule.d) + "-partitions");
  }
  if (!interlaces(mu, rho) || !interlaces(nu, rho)) {
    throw DomainError("backward growth needs " + to_string(mu) + " ≺ " + to_string(rho) + " ≻ " + to_string(nu));
  }
  const bool cyclic = rule.kind == RuleKind::Drsk;
  const int n = width_for(rule, {&mu, &nu, &rho});
  auto [k, first] = backward_parts(pad(mu, n), pad(nu, n), pad(rho, n), cyclic);
  Int m = first;
  if (cyclic) {
    // first = κ_d - m with one of the two zero.
    k[static_cast<std::size_t>(n - 1)] = std::max<Int>(first, 0);
    m = std::max<Int>(-first, 0);
  }
  BackwardCell<Partition> out{partition_or_invariant(std::move(k), "backward growth"), m};
  if (!check_cell(rule, out.kappa, mu, nu, rho, out.m)) throw InvariantError("backward growth produced an invalid cell");
  return out;
}

BackwardCell<DStaircase> grow_backward_cell(const Rule& rule, const DStaircase& mu, const DStaircase& nu,
                                            const DStaircase& rho) {
  require_staircase_rule(rule, mu.degree());
  if (nu.degree() != rule.d || rho.degree() != rule.d) throw DomainError("staircase degrees differ");
  if (!interlaces(mu, rho) || !interlaces(nu, rho)) {
    throw DomainError("backward growth needs " + to_string(mu) + " ≺ " + to_string(rho) + " ≻ " + to_string(nu));
  }
  auto [k, first] = backward_parts(mu.parts(), nu.parts(), rho.parts(), true);
  k.back() = first;
  if (!std::is_sorted(k.begin(), k.end(), std::greater<>())) {
    throw InvariantError("backward growth produced a non-staircase");
  }
  BackwardCell<DStaircase> out{DStaircase(std::move(k)), 0};
  if (!check_cell(rule, out.kappa, mu, nu, rho, 0)) throw InvariantError("backward growth produced an invalid cell");
  return out;
}

// Diagrams --------------------------------------------------------------------

namespace {

bool is_empty_label(const Partition& p) { return p.empty(); }

template <class Label>
void check_label_kind(const Rule& rule, const Label& label, int x, int y) {
  if constexpr (std::is_same_v<Label, Partition>) {
    if (!fits(rule, label)) {
      throw DomainError("label at " + cell_name(x, y) + " is not a " + std::to_string(rule.d) + "-partition",
                        {{x, y}});
    }
  } else {
    if (label.degree() != rule.d) {
      throw DomainError("label at " + cell_name(x, y) + " is not a " + std::to_string(rule.d) + "-staircase",
                        {{x, y}});
    }
  }
}

}  // namespace

template <class Label>
BasicGrowthDiagram<Label>::BasicGrowthDiagram(Rule rule, Filling filling, std::vector<std::vector<Label>> labels)
    : rule_(rule), filling_(std::move(filling)), labels_(std::move(labels)) {
  constexpr bool skew = std::is_same_v<Label, DStaircase>;
  if (skew) {
    require_staircase_rule(rule_, rule_.d);
    if (shape().empty() || !shape().is_rectangle()) throw DomainError("skew diagrams live on nonempty rectangles");
    if (filling_.total() != 0) throw DomainError("skew diagrams have an all-zero filling");
  } else {
    require_partition_rule(rule_);
  }
  const Shape& s = shape();
  if (static_cast<int>(labels_.size()) != s.num_rows() + 1) {
    throw DomainError("diagram needs " + std::to_string(s.num_rows() + 1) + " label rows");
  }
  for (int y = 0; y <= s.num_rows(); ++y) {
    if (static_cast<int>(labels_[y].size()) != s.lattice_width(y) + 1) {
      throw DomainError("label row " + std::to_string(y) + " needs " + std::to_string(s.lattice_width(y) + 1) +
                        " labels");
    }
    for (int x = 0; x <= s.lattice_width(y); ++x) {
      check_label_kind(rule_, labels_[y][x], x, y);
      if constexpr (!skew) {
        if ((x == 0 || y == 0) && !is_empty_label(labels_[y][x])) {
          throw DomainError("axis label at " + cell_name(x, y) + " must be empty", {{x, y}});
        }
      }
    }
  }
  for (const Cell& c : s.cells()) {
    const int x = c.x;
    const int y = c.y;
    if (!check_cell(rule_, labels_[y - 1][x - 1], labels_[y][x - 1], labels_[y - 1][x], labels_[y][x],
                    filling_.at(x, y))) {
      throw DomainError("cell " + cell_name(x, y) + " violates the " + rule_.name() + " local rule", {c});
    }
  }
}

template class BasicGrowthDiagram<Partition>;
template class BasicGrowthDiagram<DStaircase>;

namespace {

template <class Label>
using Grid = std::vector<std::vector<std::optional<Label>>>;

template <class Label>
Grid<Label> make_grid(const Shape& s) {
  Grid<Label> g(static_cast<std::size_t>(s.num_rows() + 1));
  for (int y = 0; y <= s.num_rows(); ++y) g[y].resize(static_cast<std::size_t>(s.lattice_width(y) + 1));
  return g;
}

template <class Label>
std::vector<std::vector<Label>> unwrap(const Grid<Label>& g) {
  std::vector<std::vector<Label>> out;
  for (const auto& row : g) {
    std::vector<Label> r;
    for (const auto& v : row) {
      if (!v) throw InvariantError("growth left a lattice point unlabelled");
      r.push_back(*v);
    }
    out.push_back(std::move(r));
  }
  return out;
}

template <class Label>
const Label& at(const Grid<Label>& g, int x, int y) {
  const auto& v = g.at(y).at(x);
  if (!v) throw InvariantError("growth order reached an unlabelled point " + cell_name(x, y));
  return *v;
}

template <class Label>
void forward(const Rule& rule, Grid<Label>& g, int x, int y, Int m) {
  g[y][x] = grow_forward_cell(rule, at(g, x - 1, y - 1), at(g, x - 1, y), at(g, x, y - 1), m);
}

template <class Label>
Int backward(const Rule& rule, Grid<Label>& g, int x, int y) {
  auto cell = grow_backward_cell(rule, at(g, x - 1, y), at(g, x, y - 1), at(g, x, y));
  g[y - 1][x - 1] = std::move(cell.kappa);
  return cell.m;
}

void require_nonskew(const Rule& rule) {
  if (rule.kind == RuleKind::SkewDrsk) throw DomainError("use grow_skew for the skew rule");
}

}  // namespace

GrowthDiagram grow_from_filling(const Rule& rule, const Filling& f) {
  require_nonskew(rule);
  const Shape& s = f.shape();
  Grid<Partition> g = make_grid<Partition>(s);
  for (int y = 0; y <= s.num_rows(); ++y) g[y][0] = Partition{};
  for (int x = 0; x <= s.lattice_width(0); ++x) g[0][x] = Partition{};
  for (const Cell& c : s.cells()) {
    const Int m = f.at(c.x, c.y);
    if (rule.kind == RuleKind::Drsk && m > 0 && at(g, c.x - 1, c.y - 1).length() == rule.d) {
      Witness chain = longest_se_chain_cells(f, rect_at(c.x - 1, c.y - 1));
      if (static_cast<int>(chain.size()) < rule.d) {
        throw InvariantError("label length exceeds the se-chain bound at " + cell_name(c.x, c.y));
      }
      chain.resize(static_cast<std::size_t>(rule.d));
      chain.push_back(c);
      throw DomainError("filling contains the pattern " + std::to_string(rule.d) + "...1(" +
                            std::to_string(rule.d + 1) + "); growth stops at cell " + cell_name(c.x, c.y),
                        std::move(chain));
    }
    forward(rule, g, c.x, c.y, m);
  }
  return GrowthDiagram(rule, f, unwrap(g));
}

GrowthDiagram grow_from_boundary(const Rule& rule, const Shape& s, const OscillatingTableau& t) {
  require_nonskew(rule);
  if (!(t.word() == boundary_type_sequence(s))) {
    throw DomainError("tableau type " + t.word().str() + " is not the boundary word " +
                      boundary_type_sequence(s).str() + " of shape " + to_string(s.rows()));
  }
  if (rule.kind == RuleKind::Drsk && t.max_length() > rule.d) {
    throw DomainError("tableau entries must be " + std::to_string(rule.d) + "-partitions");
  }
  Grid<Partition> g = make_grid<Partition>(s);
  const auto points = s.boundary_points();
  for (std::size_t i = 0; i < points.size(); ++i) g[points[i].y][points[i].x] = t.seq()[i];
  Filling f(s);
  auto cells = s.cells();
  for (auto it = cells.rbegin(); it != cells.rend(); ++it) f.set(it->x, it->y, backward(rule, g, it->x, it->y));
  for (int y = 0; y <= s.num_rows(); ++y) {
    if (!at(g, 0, y).empty()) throw InvariantError("backward growth left a nonempty label on the y-axis");
  }
  for (int x = 0; x <= s.lattice_width(0); ++x) {
    if (!at(g, x, 0).empty()) throw InvariantError("backward growth left a nonempty label on the x-axis");
  }
  return GrowthDiagram(rule, std::move(f), unwrap(g));
}

SkewGrowthDiagram grow_skew(const SkewOscillatingTableau& t) {
  const int d = t.degree();
  const Rule rule = Rule::skew(d);
  const int rows = t.word().count_plus();
  const int cols = t.word().count_minus();
  if (rows == 0 || cols == 0) throw DomainError("skew growth needs at least one '+' and one '-'");
  const Shape rect = Shape::rectangle(rows, cols);
  Grid<DStaircase> g = make_grid<DStaircase>(rect);
  // up[y] is the x-coordinate of the path's step from height y-1 to y.
  std::vector<int> up(static_cast<std::size_t>(rows + 1), 0);
  int x = cols;
  int y = 0;
  g[0][cols] = t.seq()[0];
  for (std::size_t i = 0; i < t.word().size(); ++i) {
    if (t.word()[i] == Sign::Plus) {
      up[static_cast<std::size_t>(++y)] = x;
    } else {
      --x;
    }
    g[y][x] = t.seq()[i + 1];
  }
  for (int yy = rows; yy >= 1; --yy) {
    for (int xx = up[yy]; xx >= 1; --xx) backward(rule, g, xx, yy);
  }
  for (int yy = 1; yy <= rows; ++yy) {
    for (int xx = up[yy] + 1; xx <= cols; ++xx) forward(rule, g, xx, yy, Int{0});
  }
  return SkewGrowthDiagram(rule, Filling(rect), unwrap(g));
}

OscillatingTableau extract_boundary(const GrowthDiagram& g, const Shape& sub) {
  if (!g.shape().contains(sub)) {
    throw DomainError("shape " + to_string(sub.rows()) + " does not fit in the diagram");
  }
  std::vector<Partition> seq;
  for (const Cell& p : sub.boundary_points()) seq.push_back(g.label(p.x, p.y));
  return OscillatingTableau(boundary_type_sequence(sub), std::move(seq));
}

OscillatingTableau extract_boundary(const GrowthDiagram& g) { return extract_boundary(g, g.shape()); }

SkewOscillatingTableau extract_path(const SkewGrowthDiagram& g, const TypeSequence& v) {
  const int rows = g.shape().num_rows();
  const int cols = g.shape().num_cols();
  if (v.count_plus() != rows || v.count_minus() != cols) {
    throw DomainError("path " + v.str() + " does not cross the " + std::to_string(rows) + "x" + std::to_string(cols) +
                      " rectangle");
  }
  int x = cols;
  int y = 0;
  std::vector<DStaircase> seq{g.label(x, y)};
  for (Sign s : v.word()) {
    if (s == Sign::Plus) {
      ++y;
    } else {
      --x;
    }
    seq.push_back(g.label(x, y));
  }
  return SkewOscillatingTableau(g.rule().d, v, std::move(seq));
}

namespace {

template <class Label>
BasicGrowthDiagram<Label> reflect_impl(const BasicGrowthDiagram<Label>& g) {
  Filling f = reflect(g.filling());
  const Shape& s = f.shape();
  std::vector<std::vector<Label>> labels(static_cast<std::size_t>(s.num_rows() + 1));
  for (int y = 0; y <= s.num_rows(); ++y) {
    for (int x = 0; x <= s.lattice_width(y); ++x) labels[y].push_back(g.label(y, x));
  }
  return BasicGrowthDiagram<Label>(g.rule(), std::move(f), std::move(labels));
}

}  // namespace

GrowthDiagram reflect(const GrowthDiagram& g) { return reflect_impl(g); }
SkewGrowthDiagram reflect(const SkewGrowthDiagram& g) { return reflect_impl(g); }

// Unit-step cells -------------------------------------------------------------

std::string to_string(RsCase c) {
  switch (c) {
    case RsCase::Static:
      return "static";
    case RsCase::LeftEdge:
      return "left-edge";
    case RsCase::BottomEdge:
      return "bottom-edge";
    case RsCase::Distinct:
      return "distinct";
    case RsCase::Bump:
      return "bump";
    case RsCase::CyclicBump:
      return "cyclic-bump";
    case RsCase::NewBox:
      return "new-box";
  }
  return "?";
}

namespace {

// Index (0-based) of the single coordinate where b exceeds a by one, -1 when
// equal, -2 otherwise.
int added_box(const std::vector<Int>& a, const std::vector<Int>& b) {
  int where = -1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Int diff = b[i] - a[i];
    if (diff == 0) continue;
    if (diff != 1 || where != -1) return -2;
    where = static_cast<int>(i);
  }
  return where;
}

std::vector<Int> plus_box(std::vector<Int> v, std::size_t i) {
  ++v[i];
  return v;
}

RsCase classify(const Rule& rule, const std::vector<Int>& k, const std::vector<Int>& mu, const std::vector<Int>& nu,
                const std::vector<Int>& rho, Int m) {
  auto total = [](const std::vector<Int>& v) {
    Int s = 0;
    for (Int x : v) s += x;
    return s;
  };
  auto unit = [](Int diff) { return diff == 0 || diff == 1; };
  if (!unit(total(mu) - total(k)) || !unit(total(nu) - total(k)) || !unit(total(rho) - total(mu)) ||
      !unit(total(rho) - total(nu))) {
    throw DomainError("adjacent corner sizes differ by more than 1; not a unit-step cell");
  }
  const int i = added_box(k, mu);
  const int j = added_box(k, nu);
  const bool cyclic = rule.kind != RuleKind::Rsk;
  const std::size_t n = k.size();
  std::optional<RsCase> match;
  auto offer = [&](RsCase c, bool ok) {
    if (!ok) return;
    if (match) throw InvariantError("cell matches two unit-step configurations");
    match = c;
  };
  if (m == 1) {
    const bool corner_ok = rule.kind != RuleKind::Drsk || k[n - 1] == 0;
    offer(RsCase::NewBox,
          rule.kind != RuleKind::SkewDrsk && corner_ok && mu == k && nu == k && rho == plus_box(k, 0));
  } else if (m == 0) {
    offer(RsCase::Static, i == -1 && j == -1 && rho == k);
    offer(RsCase::LeftEdge, i >= 0 && j == -1 && rho == mu);
    offer(RsCase::BottomEdge, i == -1 && j >= 0 && rho == nu);
    if (i >= 0 && j >= 0 && i != j) offer(RsCase::Distinct, rho == plus_box(plus_box(k, i), j));
    if (i >= 0 && i == j) {
      const auto ui = static_cast<std::size_t>(i);
      if (ui + 1 < n) offer(RsCase::Bump, rho == plus_box(plus_box(k, ui), ui + 1));
      if (cyclic && ui + 1 == n) offer(RsCase::CyclicBump, rho == plus_box(plus_box(k, ui), 0));
    }
  }
  if (!match) throw InvariantError("cell matches no unit-step configuration");
  return *match;
}

}  // namespace

RsCase classify_rs_cell(const Rule& rule, const Partition& kappa, const Partition& mu, const Partition& nu,
                        const Partition& rho, Int m) {
  require_partition_rule(rule);
  const int n = width_for(rule, {&kappa, &mu, &nu, &rho});
  return classify(rule, pad(kappa, n), pad(mu, n), pad(nu, n), pad(rho, n), m);
}

RsCase classify_rs_cell(const Rule& rule, const DStaircase& kappa, const DStaircase& mu, const DStaircase& nu,
                        const DStaircase& rho, Int m) {
  require_staircase_rule(rule, kappa.degree());
  if (mu.degree() != rule.d || nu.degree() != rule.d || rho.degree() != rule.d) {
    throw DomainError("staircase degrees differ");
  }
  return classify(rule, kappa.parts(), mu.parts(), nu.parts(), rho.parts(), m);
}

// Text formats ----------------------------------------------------------------

namespace {

template <class Label>
std::string dump_impl(const BasicGrowthDiagram<Label>& g) {
  std::ostringstream out;
  const Shape& s = g.shape();
  out << g.rule().name() << ' ' << g.rule().d << ' ' << s.num_rows() << ' ' << s.num_cols() << '\n';
  out << to_text(g.filling());
  for (int y = s.num_rows(); y >= 0; --y) {
    for (int x = 0; x <= s.lattice_width(y); ++x) out << (x ? " " : "") << to_string(g.label(x, y));
    out << '\n';
  }
  return out.str();
}

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    out.push_back(line.substr(b, line.find_last_not_of(" \t\r") - b + 1));
  }
  return out;
}

template <class Label>
BasicGrowthDiagram<Label> parse_dump_impl(std::string_view text, Label (*parse_label)(std::string_view, int)) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw FormatError("empty diagram dump");
  std::istringstream header(lines[0]);
  std::string name;
  int d = 0;
  int rows = -1;
  int cols = -1;
  if (!(header >> name >> d >> rows >> cols) || rows < 0 || cols < 0) {
    throw FormatError("dump header must read `rule d rows cols`");
  }
  const Rule rule = Rule::parse(name, d);
  if (lines.size() < 2) throw FormatError("dump is missing the filling block");
  const Shape shape(parse_partition(lines[1]));
  if (shape.num_rows() != rows || shape.num_cols() != cols) {
    throw FormatError("dump header disagrees with the filling shape");
  }
  const std::size_t filling_end = 2 + static_cast<std::size_t>(rows);
  if (lines.size() != filling_end + static_cast<std::size_t>(rows) + 1) {
    throw FormatError("dump needs " + std::to_string(rows + 1) + " label rows after the filling");
  }
  std::string block;
  for (std::size_t i = 1; i < filling_end; ++i) block += lines[i] + "\n";
  Filling f = parse_filling(block);
  std::vector<std::vector<Label>> labels(static_cast<std::size_t>(rows + 1));
  for (int y = 0; y <= rows; ++y) {
    std::istringstream row(lines[filling_end + static_cast<std::size_t>(rows - y)]);
    std::string tok;
    while (row >> tok) labels[y].push_back(parse_label(tok, rule.kind == RuleKind::SkewDrsk ? d : -1));
  }
  return BasicGrowthDiagram<Label>(rule, std::move(f), std::move(labels));
}

Partition parse_partition_label(std::string_view text, int) { return parse_partition(text); }
DStaircase parse_staircase_label(std::string_view text, int d) { return parse_staircase(text, d); }

template <class Label>
std::string json_impl(const BasicGrowthDiagram<Label>& g) {
  nlohmann::json j = nlohmann::json::parse(to_json(g.filling()));
  j["rule"] = g.rule().name();
  j["d"] = g.rule().d;
  j["labels"] = nlohmann::json::array();
  for (int y = g.shape().num_rows(); y >= 0; --y) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& l : g.labels()[y]) row.push_back(l.parts());
    j["labels"].push_back(row);
  }
  return j.dump();
}

std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

std::string pad_right(const std::string& s, std::size_t width) {
  const std::size_t w = display_width(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

std::string label_text(const Partition& p) { return compact_string(p); }
std::string label_text(const DStaircase& s) { return to_string(s); }

template <class Label>
std::string render_impl(const BasicGrowthDiagram<Label>& g) {
  const Shape& s = g.shape();
  std::size_t width = 2;
  for (const auto& row : g.labels()) {
    for (const auto& l : row) width = std::max(width, display_width(label_text(l)));
  }
  for (const auto& row : g.filling().rows_bottom_up()) {
    for (Int v : row) width = std::max(width, std::to_string(v).size());
  }
  width += 2;
  const std::size_t half = width / 2;
  std::ostringstream out;
  for (int y = s.num_rows(); y >= 0; --y) {
    std::string line;
    for (int x = 0; x <= s.lattice_width(y); ++x) line += pad_right(label_text(g.label(x, y)), width);
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << '\n';
    if (y == 0) break;
    std::string cells(half, ' ');
    for (int x = 1; x <= s.row_length(y); ++x) {
      const Int v = g.filling().at(x, y);
      cells += pad_right(v ? std::to_string(v) : ".", width);
    }
    cells.erase(cells.find_last_not_of(' ') + 1);
    out << cells << '\n';
  }
  return out.str();
}

}  // namespace

std::string to_dump(const GrowthDiagram& g) { return dump_impl(g); }
std::string to_dump(const SkewGrowthDiagram& g) { return dump_impl(g); }
GrowthDiagram parse_dump(std::string_view text) { return parse_dump_impl<Partition>(text, parse_partition_label); }
SkewGrowthDiagram parse_skew_dump(std::string_view text) {
  return parse_dump_impl<DStaircase>(text, parse_staircase_label);
}
std::string to_json(const GrowthDiagram& g) { return json_impl(g); }
std::string to_json(const SkewGrowthDiagram& g) { return json_impl(g); }
std::string render(const GrowthDiagram& g) { return render_impl(g); }
std::string render(const SkewGrowthDiagram& g) { return render_impl(g); }

}  // namespace cylrsk
