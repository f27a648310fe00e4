#pragma once

// Shared fixtures for the test binaries: worked examples, random
// generators and slow reference implementations.

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cylrsk/filling.hpp"
#include "cylrsk/partition.hpp"
#include "cylrsk/tableau.hpp"

namespace testsupport {

using namespace cylrsk;

// Worked examples -------------------------------------------------------------

/// 7x7 filling of the d = 3 growth diagram example.
inline Filling square7_filling() {
  struct Entry {
    int x, y;
    Int v;
  };
  const Entry entries[] = {{1, 4, 1}, {1, 6, 1}, {1, 7, 1}, {2, 3, 1}, {2, 5, 2}, {3, 3, 1}, {3, 7, 2},
                           {4, 4, 1}, {4, 5, 1}, {5, 1, 1}, {5, 2, 1}, {5, 4, 1}, {5, 6, 2}, {6, 1, 1},
                           {6, 2, 3}, {6, 3, 1}, {6, 4, 1}, {7, 1, 1}};
  Filling f(Shape::rectangle(7, 7));
  for (const auto& e : entries) f.set(e.x, e.y, e.v);
  return f;
}

inline Partition from_digits(const std::string& s) {
  std::vector<Int> parts;
  for (char c : s) parts.push_back(c - '0');
  return Partition(parts);
}

/// labels[y][x] of the d = 3 example, as printed.
inline std::vector<std::vector<Partition>> square7_labels() {
  // Column x from bottom (y = 0) to top (y = 7); "" is the empty partition.
  const std::vector<std::vector<std::string>> columns = {
      {"", "", "", "", "", "", "", ""},
      {"", "", "", "", "1", "1", "2", "3"},
      {"", "", "", "1", "11", "31", "32", "33"},
      {"", "", "", "2", "21", "32", "321", "531"},
      {"", "", "", "2", "31", "43", "431", "542"},
      {"", "1", "2", "22", "421", "442", "742", "853"},
      {"", "2", "51", "621", "841", "844", "874", "985"},
      {"", "3", "52", "622", "842", "944", "974", "995"},
  };
  std::vector<std::vector<Partition>> labels(8, std::vector<Partition>(8));
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) labels[y][x] = from_digits(columns[x][y]);
  }
  return labels;
}

/// Filling of shape (7,6,6,6,3,2) used for the chain and pattern pictures.
inline Filling shaped_filling() {
  return Filling(Shape(Partition{7, 6, 6, 6, 3, 2}), {{2, 1, 0, 3, 1, 2, 2},
                                                      {1, 2, 4, 2, 3, 2},
                                                      {0, 0, 1, 2, 0, 1},
                                                      {1, 4, 0, 3, 5, 0},
                                                      {1, 2, 1},
                                                      {1, 0}});
}

/// Semistandard tableau with weight (1,3,4,0,3,1,3).
inline SemistandardTableau sample_tableau() {
  return SemistandardTableau({Partition{}, Partition{1}, Partition{3, 1}, Partition{4, 3, 1}, Partition{4, 3, 1},
                              Partition{5, 3, 3}, Partition{6, 3, 3}, Partition{6, 6, 3}});
}

// Random generators -----------------------------------------------------------

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Partition with at most max_rows parts, each at most max_cols.
inline Partition random_partition(Rng& rng, int max_rows, int max_cols) {
  std::vector<Int> parts;
  Int cap = max_cols;
  const int rows = uniform(rng, 0, max_rows);
  for (int i = 0; i < rows; ++i) {
    cap = uniform(rng, 0, static_cast<int>(cap));
    if (cap == 0) break;
    parts.push_back(cap);
  }
  return Partition(parts);
}

inline Shape random_shape(Rng& rng, int max_rows, int max_cols) {
  Partition p;
  while (p.empty()) p = random_partition(rng, max_rows, max_cols);
  return Shape(p);
}

/// Entries in [0, max_entry], each cell nonzero with probability `density`.
inline Filling random_filling(Rng& rng, const Shape& s, Int max_entry, double density = 0.4) {
  Filling f(s);
  std::bernoulli_distribution nonzero(density);
  for (const Cell& c : s.cells()) {
    if (nonzero(rng)) f.set(c.x, c.y, uniform(rng, 1, static_cast<int>(max_entry)));
  }
  return f;
}

/// Random filling, then zero the top cell of pattern occurrences until none is
/// left.
inline Filling random_avoiding_filling(Rng& rng, const Shape& s, Int max_entry, int d, double density = 0.4) {
  Filling f = random_filling(rng, s, max_entry, density);
  while (auto w = find_pattern(f, d)) f.set(w->back().x, w->back().y, 0);
  return f;
}

inline Permutation random_permutation(Rng& rng, int n) {
  Permutation p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline std::vector<Permutation> all_permutations(int n) {
  Permutation p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Reference implementations ---------------------------------------------------

/// Nonzero cells of f inside sub.
inline std::vector<Cell> nonzero_cells(const Filling& f, const Shape& sub) {
  std::vector<Cell> out;
  for (const Cell& c : sub.cells()) {
    if (f.at(c.x, c.y) != 0) out.push_back(c);
  }
  return out;
}

/// Every subset of the nonzero cells, checked pairwise.  Exponential.
inline Int naive_ne_chain(const Filling& f, const Shape& sub) {
  const auto cells = nonzero_cells(f, sub);
  const std::size_t n = cells.size();
  Int best = 0;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    std::vector<Cell> chosen;
    Int sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) chosen.push_back(cells[i]), sum += f.at(cells[i].x, cells[i].y);
    }
    std::sort(chosen.begin(), chosen.end(), [](Cell a, Cell b) { return a.x + a.y < b.x + b.y; });
    bool ok = true;
    for (std::size_t i = 1; i < chosen.size() && ok; ++i) {
      ok = chosen[i].x >= chosen[i - 1].x && chosen[i].y >= chosen[i - 1].y;
    }
    if (ok) best = std::max(best, sum);
  }
  return best;
}

inline int naive_se_chain(const Filling& f, const Shape& sub) {
  const auto cells = nonzero_cells(f, sub);
  const std::size_t n = cells.size();
  int best = 0;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    std::vector<Cell> chosen;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) chosen.push_back(cells[i]);
    }
    std::sort(chosen.begin(), chosen.end());
    bool ok = true;
    for (std::size_t i = 1; i < chosen.size() && ok; ++i) {
      ok = chosen[i].x > chosen[i - 1].x && chosen[i].y < chosen[i - 1].y;
    }
    if (ok) best = std::max(best, static_cast<int>(chosen.size()));
  }
  return best;
}

/// Pattern d...1(d+1) by trying every candidate top cell and every d-subset
/// strictly below-left of it.
inline bool naive_contains_pattern(const Filling& f, int d) {
  const auto cells = nonzero_cells(f, f.shape());
  for (const Cell& top : cells) {
    std::vector<Cell> below;
    for (const Cell& c : cells) {
      if (c.x < top.x && c.y < top.y) below.push_back(c);
    }
    Filling sub(f.shape());
    for (const Cell& c : below) sub.set(c.x, c.y, 1);
    if (naive_se_chain(sub, sub.shape()) >= d) return true;
  }
  return false;
}

/// Naive pattern test on a permutation: every (d+1)-subset of positions.
inline bool naive_perm_avoids(const Permutation& p, int d) {
  const int n = static_cast<int>(p.size());
  std::vector<int> idx(static_cast<std::size_t>(d + 1));
  std::function<bool(int, int)> rec = [&](int pos, int start) -> bool {
    if (pos == d + 1) {
      for (int k = 1; k < d; ++k) {
        if (p[idx[k]] >= p[idx[k - 1]]) return false;
      }
      return p[idx[d]] > p[idx[0]];
    }
    for (int i = start; i < n; ++i) {
      idx[pos] = i;
      if (rec(pos + 1, i + 1)) return true;
    }
    return false;
  };
  return !rec(0, 0);
}

inline int naive_lis(const Permutation& p) {
  const std::size_t n = p.size();
  int best = 0;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    int last = 0, len = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (mask >> i & 1) {
        ok = p[i] > last;
        last = p[i];
        ++len;
      }
    }
    if (ok) best = std::max(best, len);
  }
  return best;
}

inline bool in_class(const Permutation& p, int d, Int L) {
  return naive_perm_avoids(p, d) && naive_lis(p) <= L;
}

/// Random (d,L)-staircase with parts in [-range, range].
inline DStaircase random_staircase(Rng& rng, int d, Int L, int range = 6) {
  std::vector<Int> parts(static_cast<std::size_t>(d));
  const Int top = uniform(rng, -range, range);
  parts[0] = top;
  for (int i = 1; i < d; ++i) parts[i] = parts[i - 1] - uniform(rng, 0, static_cast<int>(L));
  // squeeze into the width bound
  for (auto& v : parts) v = std::max(v, top - L);
  return DStaircase(parts);
}

/// Random μ with κ ≺ μ and μ_1 - κ_1 <= 3, same number of entries as κ.
inline std::vector<Int> random_above(Rng& rng, const std::vector<Int>& k) {
  std::vector<Int> mu(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    const Int hi = i == 0 ? k[0] + 3 : k[i - 1];
    mu[i] = k[i] + uniform(rng, 0, static_cast<int>(hi - k[i]));
  }
  return mu;
}

inline std::vector<Int> random_below(Rng& rng, const std::vector<Int>& r, bool allow_negative) {
  std::vector<Int> mu(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Int lo = i + 1 < r.size() ? r[i + 1] : (allow_negative ? r[i] - 3 : 0);
    mu[i] = lo + uniform(rng, 0, static_cast<int>(r[i] - lo));
  }
  return mu;
}

inline std::vector<Int> random_parts(Rng& rng, int len, bool allow_negative) {
  std::vector<Int> top(static_cast<std::size_t>(len));
  Int cur = uniform(rng, allow_negative ? -3 : 0, 6);
  for (auto& v : top) {
    v = cur;
    cur -= uniform(rng, 0, 2);
    if (!allow_negative) cur = std::max<Int>(cur, 0);
  }
  return top;
}


/// Skew tableau over w from a random start, with random interlacing moves.
inline SkewOscillatingTableau random_skew_tableau(Rng& rng, int d, const TypeSequence& w) {
  std::vector<DStaircase> seq{DStaircase(random_parts(rng, d, true))};
  for (Sign s : w.word()) {
    const auto& cur = seq.back().parts();
    seq.emplace_back(s == Sign::Plus ? random_above(rng, cur) : random_below(rng, cur, true));
  }
  return SkewOscillatingTableau(d, w, std::move(seq));
}

inline TypeSequence random_word(Rng& rng, int len) {
  std::vector<Sign> w;
  for (int i = 0; i < len; ++i) w.push_back(uniform(rng, 0, 1) ? Sign::Plus : Sign::Minus);
  return TypeSequence(std::move(w));
}

/// Same letters as w in random order.
inline TypeSequence shuffled(Rng& rng, const TypeSequence& w) {
  std::vector<Sign> v = w.word();
  std::shuffle(v.begin(), v.end(), rng);
  return TypeSequence(std::move(v));
}

}  // namespace testsupport
