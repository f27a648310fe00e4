#include "cylrsk/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

#include "cylrsk/errors.hpp"

namespace cylrsk {

namespace {

bool weakly_decreasing(const std::vector<Int>& v) {
  return std::is_sorted(v.begin(), v.end(), std::greater<>());
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void require_degree(const DStaircase& s, int d, const char* who) {
  if (s.degree() != d) {
    throw DomainError(std::string(who) + ": staircase " + to_string(s) +
                      " does not have degree " + std::to_string(d));
  }
}

void require_d_partition(const Partition& p, int d, const char* who) {
  if (d < 1) throw DomainError(std::string(who) + ": d must be positive");
  if (p.length() > d) {
    throw DomainError(std::string(who) + ": partition " + to_string(p) +
                      " has more than " + std::to_string(d) + " parts");
  }
}

}  // namespace

// Partition -------------------------------------------------------------------

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (Int p : parts_) {
    if (p < 0) throw DomainError("partition with a negative part");
  }
  if (!weakly_decreasing(parts_)) throw DomainError("partition parts must be weakly decreasing");
}

Partition::Partition(std::initializer_list<Int> parts) : Partition(std::vector<Int>(parts)) {}

Int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), Int{0}); }

std::vector<Int> Partition::padded(int n) const {
  std::vector<Int> out(parts_);
  if (n > length()) out.resize(static_cast<std::size_t>(n), 0);
  return out;
}

// DStaircase ------------------------------------------------------------------

DStaircase::DStaircase(std::vector<Int> parts) : parts_(std::move(parts)) {
  if (!weakly_decreasing(parts_)) throw DomainError("staircase parts must be weakly decreasing");
}

DStaircase::DStaircase(std::initializer_list<Int> parts) : DStaircase(std::vector<Int>(parts)) {}

DStaircase DStaircase::from_partition(const Partition& p, int d) {
  require_d_partition(p, d, "from_partition");
  return DStaircase(p.padded(d));
}

Int DStaircase::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), Int{0}); }

Int DStaircase::spread() const noexcept { return parts_.empty() ? 0 : parts_.front() - parts_.back(); }

Partition DStaircase::to_partition() const {
  if (!parts_.empty() && parts_.back() < 0) {
    throw DomainError("staircase " + to_string(*this) + " has negative parts");
  }
  return Partition(parts_);
}

// Relations -------------------------------------------------------------------

bool interlaces(const Partition& a, const Partition& b) noexcept {
  const int n = std::max(a.length(), b.length());
  for (int i = 1; i <= n; ++i) {
    if (b[i] < a[i] || a[i] < b[i + 1]) return false;
  }
  return true;
}

bool interlaces(const DStaircase& a, const DStaircase& b) noexcept {
  if (a.degree() != b.degree()) return false;
  const int d = a.degree();
  for (int i = 1; i <= d; ++i) {
    if (b[i] < a[i]) return false;
    if (i < d && a[i] < b[i + 1]) return false;
  }
  return true;
}

bool dl_interlaces(const Partition& a, const Partition& b, int d, Int L) {
  require_d_partition(a, d, "dl_interlaces");
  require_d_partition(b, d, "dl_interlaces");
  return interlaces(a, b) && b[1] - a[d] <= L;
}

bool dl_interlaces(const DStaircase& a, const DStaircase& b, int d, Int L) {
  require_degree(a, d, "dl_interlaces");
  require_degree(b, d, "dl_interlaces");
  return interlaces(a, b) && b[1] - a[d] <= L;
}

bool cointerlaces(const Partition& a, const Partition& b) noexcept {
  const int n = std::max(a.length(), b.length());
  for (int i = 1; i <= n; ++i) {
    const Int diff = b[i] - a[i];
    if (diff != 0 && diff != 1) return false;
  }
  return true;
}

bool cointerlaces(const DStaircase& a, const DStaircase& b) noexcept {
  if (a.degree() != b.degree()) return false;
  for (int i = 1; i <= a.degree(); ++i) {
    const Int diff = b[i] - a[i];
    if (diff != 0 && diff != 1) return false;
  }
  return true;
}

bool dl_cointerlaces(const Partition& a, const Partition& b, int d, Int L) {
  return dl_cointerlaces(DStaircase::from_partition(a, d), DStaircase::from_partition(b, d), d, L);
}

bool dl_cointerlaces(const DStaircase& a, const DStaircase& b, int d, Int L) {
  require_degree(a, d, "dl_cointerlaces");
  require_degree(b, d, "dl_cointerlaces");
  return a.is_dl_staircase(L) && b.is_dl_staircase(L) && cointerlaces(a, b);
}

bool contained_in(const Partition& a, const Partition& b) noexcept {
  if (a.length() > b.length()) return false;
  for (int i = 1; i <= a.length(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool contained_in(const DStaircase& a, const DStaircase& b) noexcept {
  if (a.degree() != b.degree()) return false;
  for (int i = 1; i <= a.degree(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Int mcw_pair(const Partition& a, const Partition& b, int d) {
  require_d_partition(a, d, "mcw_pair");
  require_d_partition(b, d, "mcw_pair");
  if (interlaces(a, b)) return b[1] - a[d];
  if (interlaces(b, a)) return a[1] - b[d];
  throw DomainError("mcw_pair: " + to_string(a) + " and " + to_string(b) + " do not interlace");
}

Int mcw_pair(const DStaircase& a, const DStaircase& b) {
  if (a.degree() != b.degree() || a.degree() < 1) {
    throw DomainError("mcw_pair: staircases of different or zero degree");
  }
  const int d = a.degree();
  if (interlaces(a, b)) return b[1] - a[d];
  if (interlaces(b, a)) return a[1] - b[d];
  throw DomainError("mcw_pair: " + to_string(a) + " and " + to_string(b) + " do not interlace");
}

// Conjugation -----------------------------------------------------------------

Partition conjugate(const Partition& p) {
  std::vector<Int> cols(static_cast<std::size_t>(p[1]), 0);
  for (Int row : p.parts()) {
    for (Int j = 0; j < row; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(cols));
}

DStaircase cyl_conjugate(const DStaircase& a, int d, Int L) {
  if (d < 1 || L < 1) throw DomainError("cyl_conjugate: d and L must be positive");
  require_degree(a, d, "cyl_conjugate");
  if (!a.is_dl_staircase(L)) {
    throw DomainError("cyl_conjugate: " + to_string(a) + " is not a (" + std::to_string(d) + "," +
                      std::to_string(L) + ")-staircase");
  }
  // Index x = r + q*d (r in 1..d) carries a_r - q*L; the largest such x with
  // value >= j has q = floor((a_r - j) / L).
  std::vector<Int> mu;
  mu.reserve(static_cast<std::size_t>(L));
  for (Int j = 1; j <= L; ++j) {
    Int best = std::numeric_limits<Int>::min();
    for (int r = 1; r <= d; ++r) {
      best = std::max(best, r + d * floor_div(a[r] - j, L));
    }
    mu.push_back(best);
  }
  return DStaircase(std::move(mu));
}

// Text ------------------------------------------------------------------------

namespace {

std::string join_parts(const std::vector<Int>& parts) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out << ',';
    out << parts[i];
  }
  out << ']';
  return out.str();
}

}  // namespace

std::string to_string(const Partition& p) { return join_parts(p.parts()); }
std::string to_string(const DStaircase& s) { return join_parts(s.parts()); }

std::string compact_string(const Partition& p) {
  if (p.empty()) return "∅";
  if (p[1] > 9) return to_string(p);
  std::string out;
  for (Int part : p.parts()) out += static_cast<char>('0' + part);
  return out;
}

std::vector<Int> parse_int_list(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view body = trim(text);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    throw FormatError("expected bracketed list, got '" + std::string(text) + "'");
  }
  body = trim(body.substr(1, body.size() - 2));
  std::vector<Int> out;
  if (body.empty()) return out;
  while (true) {
    const auto comma = body.find(',');
    std::string_view item = trim(body.substr(0, comma));
    Int value = 0;
    const char* first = item.data();
    const char* last = item.data() + item.size();
    if (!item.empty() && item.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (item.empty() || ec != std::errc() || ptr != last) {
      throw FormatError("bad integer '" + std::string(item) + "' in '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

Partition parse_partition(std::string_view text) { return Partition(parse_int_list(text)); }

DStaircase parse_staircase(std::string_view text, int degree) {
  DStaircase s(parse_int_list(text));
  if (degree >= 0 && s.degree() != degree) {
    throw DomainError("staircase " + to_string(s) + " does not have degree " + std::to_string(degree));
  }
  return s;
}

}  // namespace cylrsk
