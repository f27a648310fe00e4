#include <doctest.h>

#include <algorithm>

#include "cylrsk/errors.hpp"
#include "cylrsk/growth.hpp"
#include "support.hpp"

using namespace cylrsk;
using namespace testsupport;

namespace {

// Schensted row insertion; returns the shape after each insertion.
std::vector<Partition> insertion_shapes(const std::vector<int>& word) {
  std::vector<std::vector<int>> rows;
  std::vector<Partition> shapes{Partition{}};
  for (int v : word) {
    for (std::size_t r = 0;; ++r) {
      if (r == rows.size()) {
        rows.push_back({v});
        break;
      }
      auto it = std::upper_bound(rows[r].begin(), rows[r].end(), v);
      if (it == rows[r].end()) {
        rows[r].push_back(v);
        break;
      }
      std::swap(*it, v);
    }
    std::vector<Int> parts;
    for (const auto& row : rows) parts.push_back(static_cast<Int>(row.size()));
    shapes.push_back(Partition(parts));
  }
  return shapes;
}

}  // namespace

TEST_CASE("rule names") {
  CHECK(Rule::parse("drsk", 3) == Rule::drsk(3));
  CHECK(Rule::drsk(3).name() == "drsk");
  CHECK(Rule::parse("rsk", 0) == Rule::rsk());
  CHECK_THROWS_AS(Rule::parse("bogus", 1), FormatError);
  CHECK_THROWS_AS(Rule::drsk(0), DomainError);
}

TEST_CASE("single cell rules") {
  // RSK: ρ1 = m + max(μ1, ν1), then the interlacing recursion
  CHECK(grow_forward_cell(Rule::rsk(), Partition{1}, Partition{2}, Partition{2}, 3) == Partition{5, 1});
  CHECK(grow_forward_cell(Rule::rsk(), Partition{}, Partition{}, Partition{}, 1) == Partition{1});
  CHECK(grow_forward_cell(Rule::drsk(2), Partition{}, Partition{}, Partition{}, 1) == Partition{1});
  // a d-RSK cell taken from the d = 3 example
  CHECK(check_cell(Rule::drsk(3), Partition{4, 2, 1}, Partition{4, 4, 2}, Partition{8, 4, 1}, Partition{8, 4, 4}, 0));
  CHECK_FALSE(check_cell(Rule::drsk(3), Partition{4, 2, 1}, Partition{4, 4, 2}, Partition{8, 4, 1}, Partition{8, 4, 3}, 0));
  const auto back = grow_backward_cell(Rule::drsk(3), Partition{4, 4, 2}, Partition{8, 4, 1}, Partition{8, 4, 4});
  CHECK(back.kappa == Partition{4, 2, 1});
  CHECK(back.m == 0);
  // wrong label kind
  CHECK_THROWS_AS(check_cell(Rule::skew(1), Partition{}, Partition{}, Partition{}, Partition{}, 0), DomainError);
  // nonzero entry with a full-length κ
  CHECK_THROWS_AS(grow_forward_cell(Rule::drsk(1), Partition{1}, Partition{1}, Partition{1}, 1), DomainError);
  CHECK_THROWS_AS(grow_forward_cell(Rule::rsk(), Partition{2}, Partition{1}, Partition{2}, 0), DomainError);
  // skew d = 1: μ = ν = (0), ρ = (1) forces κ = (-1)
  const auto sk = grow_backward_cell(Rule::skew(1), DStaircase{0}, DStaircase{0}, DStaircase{1});
  CHECK(sk.kappa == DStaircase{-1});
  CHECK(sk.m == 0);
  CHECK_THROWS_AS(grow_forward_cell(Rule::skew(1), DStaircase{0}, DStaircase{0}, DStaircase{0}, 1), DomainError);
}

TEST_CASE("forward and backward cell growth are inverse") {
  Rng rng(41);
  for (int t = 0; t < 3000; ++t) {
    const int kind = uniform(rng, 0, 2);
    const int d = uniform(rng, 1, 4);
    if (kind == 2) {
      const Rule rule = Rule::skew(d);
      const DStaircase k(random_parts(rng, d, true));
      const DStaircase mu(random_above(rng, k.parts()));
      const DStaircase nu(random_above(rng, k.parts()));
      const DStaircase rho = grow_forward_cell(rule, k, mu, nu, 0);
      CHECK(check_cell(rule, k, mu, nu, rho, 0));
      const auto back = grow_backward_cell(rule, mu, nu, rho);
      CHECK(back.kappa == k);
      const DStaircase r2(random_parts(rng, d, true));
      const DStaircase a(random_below(rng, r2.parts(), true));
      const DStaircase b(random_below(rng, r2.parts(), true));
      const auto kb = grow_backward_cell(rule, a, b, r2);
      CHECK(grow_forward_cell(rule, kb.kappa, a, b, 0) == r2);
      continue;
    }
    const Rule rule = kind == 0 ? Rule::rsk() : Rule::drsk(d);
    const int len = kind == 0 ? 5 : d;
    std::vector<Int> kp = random_parts(rng, len, false);
    if (kind == 0) kp.back() = 0;  // leave room for a new row
    const Partition k(kp);
    const Partition mu(random_above(rng, kp));
    const Partition nu(random_above(rng, kp));
    const Int m = (kind == 1 && k[d] > 0) ? 0 : uniform(rng, 0, 3);
    const Partition rho = grow_forward_cell(rule, k, mu, nu, m);
    CHECK(check_cell(rule, k, mu, nu, rho, m));
    CHECK_FALSE(check_cell(rule, k, mu, nu, rho, m + 1));
    const auto back = grow_backward_cell(rule, mu, nu, rho);
    CHECK(back.kappa == k);
    CHECK(back.m == m);
    if (kind == 1) CHECK(rho.length() <= d);
  }
}

TEST_CASE("d-RSK growth of the 7x7 example") {
  const Filling f = square7_filling();
  const GrowthDiagram g = grow_from_filling(Rule::drsk(3), f);
  const auto expected = square7_labels();
  for (int y = 0; y <= 7; ++y) {
    for (int x = 0; x <= 7; ++x) {
      INFO("x=" << x << " y=" << y);
      CHECK(g.label(x, y) == expected[y][x]);
    }
  }
  const OscillatingTableau t = extract_boundary(g);
  CHECK(t.seq().size() == 15);
  CHECK(mcw_tableau(t, 3) == 7);
  const GrowthDiagram back = grow_from_boundary(Rule::drsk(3), f.shape(), t);
  CHECK(back == g);
  CHECK(back.filling() == f);
  // plain RSK disagrees with d-RSK on this filling
  CHECK_FALSE(grow_from_filling(Rule::rsk(), f).label(7, 7) == Partition{9, 9, 5});
}

TEST_CASE("RSK growth of permutations matches row insertion") {
  Rng rng(42);
  for (int t = 0; t < 200; ++t) {
    const int n = uniform(rng, 1, 8);
    const Permutation p = random_permutation(rng, n);
    const GrowthDiagram g = grow_from_filling(Rule::rsk(), permutation_to_filling(p));
    const auto q_shapes = insertion_shapes(p);
    const auto p_shapes = insertion_shapes(inverse(p));
    for (int k = 0; k <= n; ++k) {
      CHECK(g.label(k, n) == q_shapes[static_cast<std::size_t>(k)]);
      CHECK(g.label(n, k) == p_shapes[static_cast<std::size_t>(k)]);
    }
  }
}

TEST_CASE("RSK labels record chain lengths") {
  Rng rng(43);
  for (int t = 0; t < 200; ++t) {
    const Shape s = random_shape(rng, 5, 5);
    const Filling f = random_filling(rng, s, 3);
    const GrowthDiagram g = grow_from_filling(Rule::rsk(), f);
    for (int y = 0; y <= s.num_rows(); ++y) {
      for (int x = 0; x <= s.lattice_width(y); ++x) {
        const Partition& lam = g.label(x, y);
        CHECK(lam[1] == longest_ne_chain(f, rect_at(x, y)));
        CHECK(lam.length() == longest_se_chain(f, rect_at(x, y)));
      }
    }
    CHECK(grow_from_boundary(Rule::rsk(), s, extract_boundary(g)) == g);
  }
}

TEST_CASE("d-RSK labels record chain lengths on avoiding fillings") {
  Rng rng(44);
  for (int t = 0; t < 300; ++t) {
    const int d = uniform(rng, 1, 3);
    const Shape s = random_shape(rng, 5, 5);
    const Filling f = random_avoiding_filling(rng, s, 3, d);
    const GrowthDiagram g = grow_from_filling(Rule::drsk(d), f);
    for (int y = 0; y <= s.num_rows(); ++y) {
      for (int x = 0; x <= s.lattice_width(y); ++x) {
        CHECK(g.label(x, y).length() == std::min(d, longest_se_chain(f, rect_at(x, y))));
      }
    }
    CHECK(longest_ne_chain(f) == mcw_tableau(extract_boundary(g), d));
    const OscillatingTableau tb = extract_boundary(g);
    CHECK(grow_from_boundary(Rule::drsk(d), s, tb).filling() == f);
    // weights are the row and column sums
    CHECK(wt_plus(tb) == row_sums(f));
    CHECK(wt_minus(tb) == col_sums(f));
  }
}

TEST_CASE("d-RSK refuses pattern occurrences with a witness") {
  Rng rng(45);
  int refused = 0;
  for (int t = 0; t < 300; ++t) {
    const int d = uniform(rng, 1, 3);
    const Filling f = random_filling(rng, random_shape(rng, 5, 5), 2, 0.5);
    if (!contains_pattern(f, d)) {
      CHECK_NOTHROW(grow_from_filling(Rule::drsk(d), f));
      continue;
    }
    ++refused;
    try {
      grow_from_filling(Rule::drsk(d), f);
      FAIL("expected a refusal");
    } catch (const DomainError& e) {
      const Witness& w = e.witness();
      REQUIRE(static_cast<int>(w.size()) == d + 1);
      const Cell top = w.back();
      for (int i = 0; i < d; ++i) {
        CHECK(f.at(w[i].x, w[i].y) > 0);
        CHECK((w[i].x < top.x && w[i].y < top.y));
        if (i) CHECK((w[i].x > w[i - 1].x && w[i].y < w[i - 1].y));
      }
    }
  }
  CHECK(refused > 20);
}

TEST_CASE("symmetric fillings give palindromic tableaux") {
  Rng rng(46);
  for (int t = 0; t < 200; ++t) {
    const int n = uniform(rng, 1, 5);
    const int d = uniform(rng, 1, 3);
    Filling f(Shape::rectangle(n, n));
    for (int x = 1; x <= n; ++x) {
      for (int y = x; y <= n; ++y) {
        const Int v = uniform(rng, 0, 3) == 0 ? uniform(rng, 1, 2) : 0;
        f.set(x, y, v);
        f.set(y, x, v);
      }
    }
    while (auto w = find_pattern(f, d)) {
      const Cell c = w->back();
      f.set(c.x, c.y, 0);
      f.set(c.y, c.x, 0);
    }
    const GrowthDiagram g = grow_from_filling(Rule::drsk(d), f);
    const OscillatingTableau tb = extract_boundary(g);
    CHECK(reverse(tb) == tb);
    CHECK(reflect(g) == g);
  }
}

TEST_CASE("unit-step cell configurations") {
  const Rule rsk = Rule::rsk();
  CHECK(classify_rs_cell(rsk, Partition{1}, Partition{1}, Partition{1}, Partition{1}, 0) == RsCase::Static);
  CHECK(classify_rs_cell(rsk, Partition{1}, Partition{2}, Partition{1}, Partition{2}, 0) == RsCase::LeftEdge);
  CHECK(classify_rs_cell(rsk, Partition{1}, Partition{1}, Partition{1, 1}, Partition{1, 1}, 0) == RsCase::BottomEdge);
  CHECK(classify_rs_cell(rsk, Partition{1}, Partition{2}, Partition{1, 1}, Partition{2, 1}, 0) == RsCase::Distinct);
  CHECK(classify_rs_cell(rsk, Partition{1}, Partition{2}, Partition{2}, Partition{2, 1}, 0) == RsCase::Bump);
  CHECK(classify_rs_cell(rsk, Partition{1}, Partition{1}, Partition{1}, Partition{2}, 1) == RsCase::NewBox);
  const Rule d2 = Rule::drsk(2);
  CHECK(classify_rs_cell(d2, Partition{2, 1}, Partition{2, 2}, Partition{2, 2}, Partition{3, 2}, 0) ==
        RsCase::CyclicBump);
  CHECK(classify_rs_cell(Rule::skew(1), DStaircase{0}, DStaircase{1}, DStaircase{1}, DStaircase{2}, 0) ==
        RsCase::CyclicBump);
  CHECK_THROWS_AS(classify_rs_cell(rsk, Partition{}, Partition{2}, Partition{}, Partition{2}, 0), DomainError);
  CHECK(to_string(RsCase::NewBox) == "new-box");

  // every cell of a standard d-RSK growth is one of the configurations
  Rng rng(47);
  for (int t = 0; t < 100; ++t) {
    const int d = uniform(rng, 1, 3);
    const int n = uniform(rng, 1, 7);
    const Filling f = permutation_to_filling(random_permutation(rng, n));
    if (contains_pattern(f, d)) continue;
    const GrowthDiagram g = grow_from_filling(Rule::drsk(d), f);
    for (const Cell& c : f.shape().cells()) {
      CHECK_NOTHROW(classify_rs_cell(g.rule(), g.label(c.x - 1, c.y - 1), g.label(c.x - 1, c.y),
                                     g.label(c.x, c.y - 1), g.label(c.x, c.y), f.at(c.x, c.y)));
    }
  }
}

TEST_CASE("skew growth and the d = 1 example") {
  const SkewOscillatingTableau t(1, TypeSequence::parse("+-"), {DStaircase{0}, DStaircase{1}, DStaircase{0}});
  const SkewGrowthDiagram g = grow_skew(t);
  CHECK(g.label(0, 0) == DStaircase{-1});
  const SkewOscillatingTableau v = extract_path(g, TypeSequence::parse("-+"));
  CHECK(v.seq() == std::vector<DStaircase>{DStaircase{0}, DStaircase{-1}, DStaircase{0}});
  CHECK(extract_path(g, t.word()) == t);
  CHECK_THROWS_AS(grow_skew(SkewOscillatingTableau(1, TypeSequence::parse("++"),
                                                   {DStaircase{0}, DStaircase{1}, DStaircase{2}})),
                  DomainError);
  CHECK_THROWS_AS(extract_path(g, TypeSequence::parse("+")), DomainError);
}

TEST_CASE("diagram text round trips") {
  const GrowthDiagram g = grow_from_filling(Rule::drsk(3), square7_filling());
  const std::string dump = to_dump(g);
  CHECK(dump.substr(0, dump.find('\n')) == "drsk 3 7 7");
  CHECK(parse_dump(dump) == g);
  CHECK(to_json(g).find("\"rule\":\"drsk\"") != std::string::npos);
  const std::string pic = render(g);
  CHECK(pic.substr(0, pic.find('\n')).find("995") != std::string::npos);
  CHECK_THROWS_AS(parse_dump("drsk 3 1 1\n[1]\n0\n[] [1]\n[] []\n"), DomainError);
  CHECK_THROWS_AS(parse_dump("nonsense"), FormatError);

  const SkewOscillatingTableau t(1, TypeSequence::parse("+-"), {DStaircase{0}, DStaircase{1}, DStaircase{0}});
  const SkewGrowthDiagram sg = grow_skew(t);
  CHECK(parse_skew_dump(to_dump(sg)) == sg);
  CHECK(render(sg).find("[-1]") != std::string::npos);
}
