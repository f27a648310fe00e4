#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cylrsk/filling.hpp"
#include "cylrsk/types.hpp"

namespace cylrsk {

using BigInt = boost::multiprecision::cpp_int;

/// Largest n accepted by the exhaustive routes.
inline constexpr int kBruteMaxN = 10;

/// One-line pattern tests (no filling involved).
bool avoids_decreasing_then_larger(const Permutation& p, int d);  // d...1(d+1)
int longest_increasing(const Permutation& p);

/// |S_n^(d,L)| by scanning S_n; shards by first value over `threads` workers.
/// Throws DomainError when n > kBruteMaxN.
BigInt brute_count(int n, int d, Int L, int threads = 1);
/// Same over involutions.
BigInt brute_count_involutions(int n, int d, Int L, int threads = 1);

/// Σ f_λ² over |λ| = n, f_λ the number of (d,L)-cylindric standard tableaux
/// of shape λ.
BigInt tableau_pair_count(int n, int d, Int L);
/// Σ f_λ over |λ| = n.
BigInt cylindric_syt_count(int n, int d, Int L);

/// The root-of-unity sum for the pair count, evaluated in floating point over
/// d-subsets of Z/(d+L).  Throws NumericError if the nearest integer is more
/// than 1e-6 (relative) away, or the value exceeds 2^52.
BigInt trig_count(int n, int d, Int L);

struct Asymptotic {
  double rate = 0;      // (sin(πd/M) / sin(π/M))²
  double constant = 0;  // C_{d,L}
};
Asymptotic asymptotic(int d, Int L);

enum class Route { Brute, Pairs, Trig };
std::string to_string(Route r);
/// "brute", "pairs", "trig"; FormatError otherwise.
Route parse_route(const std::string& name);

struct CountRow {
  int n = 0;
  std::vector<std::optional<BigInt>> values;  // one per route; nullopt if n/a
  bool agree = true;
};

struct CountTable {
  int d = 0;
  Int L = 0;
  bool involutions = false;
  std::vector<Route> routes;
  std::vector<CountRow> rows;
};

/// Rows n = 1..n_max.  For involutions the trig route does not apply and its
/// column stays empty.
CountTable count_table(int d, Int L, int n_max, const std::vector<Route>& routes, bool involutions = false,
                       int threads = 1);

}  // namespace cylrsk
