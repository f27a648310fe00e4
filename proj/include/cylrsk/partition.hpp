#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cylrsk/types.hpp"

namespace cylrsk {

/// Integer partition in canonical form: weakly decreasing positive parts.
/// Parts past the length read as 0.
class Partition {
 public:
  Partition() = default;
  /// Accepts trailing zeros and strips them; throws DomainError on negative
  /// or increasing parts.
  explicit Partition(std::vector<Int> parts);
  Partition(std::initializer_list<Int> parts);

  /// 1-based part access, 0 beyond the length.
  Int operator[](int i) const noexcept {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
  }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  Int size() const noexcept;
  const std::vector<Int>& parts() const noexcept { return parts_; }

  /// Parts padded with zeros to exactly `n` entries (n >= length()).
  std::vector<Int> padded(int n) const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<Int> parts_;
};

/// Weakly decreasing list of exactly d integers, negatives allowed.
class DStaircase {
 public:
  DStaircase() = default;
  explicit DStaircase(std::vector<Int> parts);
  DStaircase(std::initializer_list<Int> parts);

  /// Zero-padding of a partition; throws DomainError when length > d.
  static DStaircase from_partition(const Partition& p, int d);

  int degree() const noexcept { return static_cast<int>(parts_.size()); }
  /// 1-based part access, i in [1, degree()].
  Int operator[](int i) const { return parts_.at(static_cast<std::size_t>(i - 1)); }
  Int size() const noexcept;
  const std::vector<Int>& parts() const noexcept { return parts_; }

  /// parts[0] - parts[d-1]; 0 for degree 0.
  Int spread() const noexcept;
  bool is_dl_staircase(Int L) const noexcept { return spread() <= L; }

  /// Throws DomainError if some part is negative.
  Partition to_partition() const;

  bool operator==(const DStaircase&) const = default;
  auto operator<=>(const DStaircase&) const = default;

 private:
  std::vector<Int> parts_;
};

// Interlacing family -------------------------------------------------------

/// a ≺ b :  b_1 >= a_1 >= b_2 >= a_2 >= ...
bool interlaces(const Partition& a, const Partition& b) noexcept;
/// Staircase version; false when degrees differ.
bool interlaces(const DStaircase& a, const DStaircase& b) noexcept;

/// a ≺_(d,L) b.  Throws DomainError if either partition is longer than d.
bool dl_interlaces(const Partition& a, const Partition& b, int d, Int L);
/// Throws DomainError if a staircase degree is not d.
bool dl_interlaces(const DStaircase& a, const DStaircase& b, int d, Int L);

/// a ≺' b : every b_i - a_i is 0 or 1.
bool cointerlaces(const Partition& a, const Partition& b) noexcept;
bool cointerlaces(const DStaircase& a, const DStaircase& b) noexcept;

/// a ≺'_(d,L) b : both are (d,L)-staircases and a ≺' b.
bool dl_cointerlaces(const Partition& a, const Partition& b, int d, Int L);
bool dl_cointerlaces(const DStaircase& a, const DStaircase& b, int d, Int L);

bool contained_in(const Partition& a, const Partition& b) noexcept;
bool contained_in(const DStaircase& a, const DStaircase& b) noexcept;

/// Minimum cylindric width of an interlacing pair (either direction).
/// Throws DomainError if neither interlaces the other or a length exceeds d.
Int mcw_pair(const Partition& a, const Partition& b, int d);
Int mcw_pair(const DStaircase& a, const DStaircase& b);

// Conjugation --------------------------------------------------------------

/// Transpose of the Young diagram.
Partition conjugate(const Partition& p);

/// Cylindric conjugation tr_(d,L): (d,L)-staircase -> (L,d)-staircase.
///
/// Extends `a` bi-infinitely with a_{x+d} = a_x - L and returns
/// mu_j = max{x : a_x >= j} for j = 1..L.  Throws DomainError if a has
/// degree != d or spread > L, or if d, L < 1.
DStaircase cyl_conjugate(const DStaircase& a, int d, Int L);

// Text form -----------------------------------------------------------------

/// "[4,3,1]", "[]" for the empty partition.
std::string to_string(const Partition& p);
std::string to_string(const DStaircase& s);
/// Concatenated parts ("431") when every part is a single digit, otherwise the
/// bracket form; "∅" for the empty partition.
std::string compact_string(const Partition& p);

/// Parse the bracket form.  Throws FormatError on malformed text and
/// DomainError on a non-partition.
Partition parse_partition(std::string_view text);
/// Parse the bracket form.  If `degree` >= 0 the length must match.
DStaircase parse_staircase(std::string_view text, int degree = -1);
/// Raw list of integers from the bracket form (no ordering checks).
std::vector<Int> parse_int_list(std::string_view text);

}  // namespace cylrsk
