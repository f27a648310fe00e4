#include "cylrsk/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <numeric>
#include <thread>

#include "cylrsk/errors.hpp"

namespace cylrsk {

namespace {

void require_params(int n, int d, Int L) {
  if (n < 0) throw DomainError("n must be nonnegative");
  if (d < 1 || L < 1) throw DomainError("d and L must be positive");
}

bool is_involution_fast(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[static_cast<std::size_t>(p[i] - 1)] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

// Counts permutations in S_n passing the two pattern tests, optionally only
// involutions.  Work is split by the value in position 1.
BigInt scan(int n, int d, Int L, int threads, bool involutions_only) {
  require_params(n, d, L);
  if (n > kBruteMaxN) {
    throw DomainError("exhaustive scan refused for n = " + std::to_string(n) + " > " + std::to_string(kBruteMaxN));
  }
  if (n == 0) return 1;
  threads = std::clamp(threads, 1, n);
  std::vector<std::uint64_t> partial(static_cast<std::size_t>(threads), 0);
  auto work = [&](int shard) {
    std::uint64_t count = 0;
    for (int first = 1 + shard; first <= n; first += threads) {
      Permutation p{first};
      for (int v = 1; v <= n; ++v) {
        if (v != first) p.push_back(v);
      }
      do {
        if (involutions_only && !is_involution_fast(p)) continue;
        if (longest_increasing(p) <= L && avoids_decreasing_then_larger(p, d)) ++count;
      } while (std::next_permutation(p.begin() + 1, p.end()));
    }
    partial[static_cast<std::size_t>(shard)] = count;
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work, t);
  work(0);
  for (auto& th : pool) th.join();
  BigInt total = 0;
  for (auto c : partial) total += c;
  return total;
}

// f_λ for every (d,L)-cylindric-reachable d-partition of size n.  Only shapes
// reachable from ∅ by single-box (d,L)-interlacing steps are ever stored.
std::map<std::vector<Int>, BigInt> cylindric_syt_layer(int n, int d, Int L) {
  require_params(n, d, L);
  std::map<std::vector<Int>, BigInt> layer{{std::vector<Int>(static_cast<std::size_t>(d), 0), BigInt(1)}};
  for (int step = 0; step < n; ++step) {
    std::map<std::vector<Int>, BigInt> next;
    for (const auto& [lambda, f] : layer) {
      for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (i > 0 && lambda[i - 1] == lambda[i]) continue;
        std::vector<Int> mu = lambda;
        ++mu[i];
        if (mu.front() - lambda.back() > L) continue;
        next[mu] += f;
      }
    }
    layer = std::move(next);
  }
  return layer;
}

}  // namespace

bool avoids_decreasing_then_larger(const Permutation& p, int d) {
  if (d < 1) throw DomainError("d must be positive");
  constexpr int kNone = std::numeric_limits<int>::max();
  const std::size_t n = p.size();
  // first[i][k-1]: least possible leading value of a decreasing subsequence of
  // length k ending at position i.
  std::vector<std::vector<int>> first(n, std::vector<int>(static_cast<std::size_t>(d), kNone));
  int best = kNone;  // least leading value over completed length-d runs so far
  for (std::size_t j = 0; j < n; ++j) {
    if (best < p[j]) return false;
    first[j][0] = p[j];
    for (std::size_t i = 0; i < j; ++i) {
      if (p[i] <= p[j]) continue;
      for (std::size_t k = 1; k < static_cast<std::size_t>(d); ++k) first[j][k] = std::min(first[j][k], first[i][k - 1]);
    }
    best = std::min(best, first[j][static_cast<std::size_t>(d - 1)]);
  }
  return true;
}

int longest_increasing(const Permutation& p) {
  std::vector<int> tails;
  for (int v : p) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end()) {
      tails.push_back(v);
    } else {
      *it = v;
    }
  }
  return static_cast<int>(tails.size());
}

BigInt brute_count(int n, int d, Int L, int threads) { return scan(n, d, L, threads, false); }

BigInt brute_count_involutions(int n, int d, Int L, int threads) { return scan(n, d, L, threads, true); }

BigInt tableau_pair_count(int n, int d, Int L) {
  BigInt total = 0;
  for (const auto& [lambda, f] : cylindric_syt_layer(n, d, L)) total += f * f;
  return total;
}

BigInt cylindric_syt_count(int n, int d, Int L) {
  BigInt total = 0;
  for (const auto& [lambda, f] : cylindric_syt_layer(n, d, L)) total += f;
  return total;
}

BigInt trig_count(int n, int d, Int L) {
  require_params(n, d, L);
  using Real = long double;
  using Complex = std::complex<Real>;
  const int M = d + static_cast<int>(L);
  // C(M, d) subsets; each ordered tuple of distinct values appears d! times in
  // the full M^d sum and tuples with repeats vanish.
  constexpr double kTermBudget = 5e7;
  double subsets = 1;
  for (int i = 1; i <= d; ++i) subsets = subsets * (M - d + i) / i;
  if (subsets > kTermBudget) {
    throw NumericError("trig route refused: " + std::to_string(subsets) + " terms exceed the budget");
  }
  const Real pi = std::acos(Real(-1));
  std::vector<Complex> root(static_cast<std::size_t>(M));
  for (int t = 0; t < M; ++t) root[static_cast<std::size_t>(t)] = std::polar(Real(1), 2 * pi * t / M);

  std::vector<int> idx(static_cast<std::size_t>(d));
  std::iota(idx.begin(), idx.end(), 0);
  Real sum = 0;
  while (true) {
    Complex s = 0;
    Real vandermonde = 1;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      s += root[static_cast<std::size_t>(idx[a])];
      for (std::size_t b = 0; b < a; ++b) {
        vandermonde *= std::norm(root[static_cast<std::size_t>(idx[a])] - root[static_cast<std::size_t>(idx[b])]);
      }
    }
    sum += std::pow(std::norm(s), n) * vandermonde;
    // next combination
    int k = d - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == M - d + k) --k;
    if (k < 0) break;
    ++idx[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < d; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  const Real value = sum / std::pow(Real(M), d);
  if (!(value < std::ldexp(Real(1), 52))) {
    throw NumericError("trig route value " + std::to_string(static_cast<double>(value)) +
                       " exceeds the exactly representable range");
  }
  const Real rounded = std::round(value);
  const Real residual = std::fabs(value - rounded) / std::max(Real(1), std::fabs(value));
  if (residual >= Real(1e-6)) {
    throw NumericError("trig route rounding residual " + std::to_string(static_cast<double>(residual)) +
                       " is too large");
  }
  return BigInt(static_cast<long long>(rounded));
}

Asymptotic asymptotic(int d, Int L) {
  if (d < 1 || L < 1) throw DomainError("d and L must be positive");
  const double M = static_cast<double>(d + L);
  const double pi = std::acos(-1.0);
  Asymptotic a;
  const double r = std::sin(pi * d / M) / std::sin(pi / M);
  a.rate = r * r;
  double c = 1.0 / std::pow(M, d - 1);
  for (int j = 1; j <= d - 1; ++j) {
    const double s = std::sin(pi * j / M);
    c *= std::pow(4 * s * s, d - j);
  }
  a.constant = c;
  return a;
}

std::string to_string(Route r) {
  switch (r) {
    case Route::Brute:
      return "brute";
    case Route::Pairs:
      return "pairs";
    case Route::Trig:
      return "trig";
  }
  return "?";
}

Route parse_route(const std::string& name) {
  if (name == "brute") return Route::Brute;
  if (name == "pairs") return Route::Pairs;
  if (name == "trig") return Route::Trig;
  throw FormatError("unknown route '" + name + "' (expected brute, pairs or trig)");
}

CountTable count_table(int d, Int L, int n_max, const std::vector<Route>& routes, bool involutions, int threads) {
  CountTable table{d, L, involutions, routes, {}};
  for (int n = 1; n <= n_max; ++n) {
    CountRow row{n, {}, true};
    for (Route r : routes) {
      switch (r) {
        case Route::Brute:
          row.values.emplace_back(involutions ? brute_count_involutions(n, d, L, threads)
                                              : brute_count(n, d, L, threads));
          break;
        case Route::Pairs:
          row.values.emplace_back(involutions ? cylindric_syt_count(n, d, L) : tableau_pair_count(n, d, L));
          break;
        case Route::Trig:
          if (involutions) {
            row.values.emplace_back(std::nullopt);
          } else {
            row.values.emplace_back(trig_count(n, d, L));
          }
          break;
      }
    }
    const std::optional<BigInt>* ref = nullptr;
    for (const auto& v : row.values) {
      if (!v) continue;
      if (ref && **ref != *v) row.agree = false;
      if (!ref) ref = &v;
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace cylrsk
