#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cylrsk/filling.hpp"
#include "cylrsk/partition.hpp"

namespace cylrsk {

/// Why a raw sequence was refused.  `step` is the 1-based index i of the
/// offending transition seq[i-1] -> seq[i]; 0 means the endpoints or the
/// sequence length are at fault.
struct Rejection {
  int step = 0;
  std::string reason;
};

/// Optional (d,L)-cylindric refinement for the validators below.
struct CylindricBound {
  int d = 0;
  Int L = 0;
};

// Validators ------------------------------------------------------------------
// All return nullopt on success.  A positive `d` additionally demands
// d-partitions (length <= d); a bound demands (d,L)-interlacing steps, or for
// the row-strict kinds (d,L)-cointerlacing steps.

std::optional<Rejection> validate_semistandard(const std::vector<Partition>& seq,
                                               std::optional<CylindricBound> bound = {});
std::optional<Rejection> validate_row_strict(const std::vector<Partition>& seq,
                                             std::optional<CylindricBound> bound = {});
std::optional<Rejection> validate_oscillating(const TypeSequence& w, const std::vector<Partition>& seq,
                                              int d = 0, std::optional<Int> L = {});
std::optional<Rejection> validate_skew_oscillating(const TypeSequence& w, const std::vector<DStaircase>& seq,
                                                   int d, std::optional<Int> L = {});
std::optional<Rejection> validate_skew_row_strict(const TypeSequence& w, const std::vector<DStaircase>& seq,
                                                  int d, std::optional<Int> L = {});

// Tableau values --------------------------------------------------------------
// Constructors validate and throw DomainError carrying the rejection text.

/// ∅ = seq[0] ≺ seq[1] ≺ ... ≺ seq[k].
class SemistandardTableau {
 public:
  SemistandardTableau() : seq_{Partition{}} {}
  explicit SemistandardTableau(std::vector<Partition> seq);

  const std::vector<Partition>& seq() const noexcept { return seq_; }
  int steps() const noexcept { return static_cast<int>(seq_.size()) - 1; }
  const Partition& shape() const { return seq_.back(); }
  std::vector<Int> weight() const;
  bool is_cylindric(int d, Int L) const;

  bool operator==(const SemistandardTableau&) const = default;

 private:
  std::vector<Partition> seq_;
};

/// ∅ = seq[0] ≺' seq[1] ≺' ... ≺' seq[k].
class RowStrictTableau {
 public:
  RowStrictTableau() : seq_{Partition{}} {}
  explicit RowStrictTableau(std::vector<Partition> seq);

  const std::vector<Partition>& seq() const noexcept { return seq_; }
  int steps() const noexcept { return static_cast<int>(seq_.size()) - 1; }
  const Partition& shape() const { return seq_.back(); }
  std::vector<Int> weight() const;
  bool is_cylindric(int d, Int L) const;

  bool operator==(const RowStrictTableau&) const = default;

 private:
  std::vector<Partition> seq_;
};

/// Semistandard w-oscillating tableau: ∅ to ∅, stepping up on '+' and down
/// on '-'.
class OscillatingTableau {
 public:
  OscillatingTableau() : seq_{Partition{}} {}
  OscillatingTableau(TypeSequence w, std::vector<Partition> seq);

  const TypeSequence& word() const noexcept { return w_; }
  const std::vector<Partition>& seq() const noexcept { return seq_; }
  /// Largest length of a constituent partition.
  int max_length() const noexcept;

  bool operator==(const OscillatingTableau&) const = default;

 private:
  TypeSequence w_;
  std::vector<Partition> seq_;
};

/// Skew d-semistandard w-oscillating tableau; endpoints are free.
class SkewOscillatingTableau {
 public:
  SkewOscillatingTableau(int d, TypeSequence w, std::vector<DStaircase> seq);

  int degree() const noexcept { return d_; }
  const TypeSequence& word() const noexcept { return w_; }
  const std::vector<DStaircase>& seq() const noexcept { return seq_; }
  const DStaircase& inner() const { return seq_.front(); }
  const DStaircase& outer() const { return seq_.back(); }

  bool operator==(const SkewOscillatingTableau&) const = default;

 private:
  int d_;
  TypeSequence w_;
  std::vector<DStaircase> seq_;
};

/// Skew d-row-strict w-oscillating tableau: cointerlacing steps, up on '+'
/// and down on '-'.
class SkewRowStrictTableau {
 public:
  SkewRowStrictTableau(int d, TypeSequence w, std::vector<DStaircase> seq);

  int degree() const noexcept { return d_; }
  const TypeSequence& word() const noexcept { return w_; }
  const std::vector<DStaircase>& seq() const noexcept { return seq_; }
  const DStaircase& inner() const { return seq_.front(); }
  const DStaircase& outer() const { return seq_.back(); }

  bool operator==(const SkewRowStrictTableau&) const = default;

 private:
  int d_;
  TypeSequence w_;
  std::vector<DStaircase> seq_;
};

// Statistics ------------------------------------------------------------------

/// wt+_i = |λ^(a_i)| - |λ^(a_i - 1)| with a_i the i-th '+';
/// wt-_i = |λ^(b_i - 1)| - |λ^(b_i)| with b_i the i-th-to-last '-'.
std::vector<Int> wt_plus(const OscillatingTableau& t);
std::vector<Int> wt_minus(const OscillatingTableau& t);
std::vector<Int> wt_plus(const SkewOscillatingTableau& t);
std::vector<Int> wt_minus(const SkewOscillatingTableau& t);
std::vector<Int> wt_plus(const SkewRowStrictTableau& t);
std::vector<Int> wt_minus(const SkewRowStrictTableau& t);

/// Smallest L making the tableau (d,L)-cylindric: the max of mcw_pair over
/// consecutive entries, 0 for fewer than two entries.  Throws DomainError if
/// a partition is longer than d.
Int mcw_tableau(const OscillatingTableau& t, int d);
Int mcw_tableau(const SemistandardTableau& t, int d);
Int mcw_tableau(const SkewOscillatingTableau& t);

/// Row-strict width notion: every entry is a (d,L)-partition (resp.
/// (d,L)-staircase).  Not the same as mcw_tableau <= L.
bool all_dl_partitions(const RowStrictTableau& t, int d, Int L);
bool all_dl_staircases(const SkewRowStrictTableau& t, Int L);

/// Both weight vectors consist of 1's.
bool is_standard(const OscillatingTableau& t);
bool is_standard(const SemistandardTableau& t);

// Structure -------------------------------------------------------------------

/// w = +^n -^m splits into P (first n+1 entries) and Q (last m+1, reversed).
std::pair<SemistandardTableau, SemistandardTableau> split_pair(const OscillatingTableau& t);
/// Inverse of split_pair; throws DomainError on different shapes.
OscillatingTableau join_pair(const SemistandardTableau& p, const SemistandardTableau& q);

/// Sequence reversed; w reversed with '+' and '-' swapped.
OscillatingTableau reverse(const OscillatingTableau& t);
SkewOscillatingTableau reverse(const SkewOscillatingTableau& t);
SkewRowStrictTableau reverse(const SkewRowStrictTableau& t);

/// Elementwise tr_(d,W) with d = t.degree().  A (d,W)-cylindric semistandard
/// tableau becomes a (W,d)-cylindric row-strict one and vice versa; throws
/// DomainError if the input is not (d,W)-cylindric of its kind.
SkewRowStrictTableau cyl_conjugate(const SkewOscillatingTableau& t, Int width);
SkewOscillatingTableau cyl_conjugate(const SkewRowStrictTableau& t, Int width);

/// Zero-padded copy at degree d; the tableau must be d-semistandard.
SkewOscillatingTableau to_skew(const OscillatingTableau& t, int d);

// Text formats ----------------------------------------------------------------

/// Raw tableau as read from text: `kind` is "SSYT", "RSYT" or a type word.
struct TableauText {
  std::string kind;
  std::vector<std::vector<Int>> seq;
};

/// Line 1: kind; then one bracket list per line.  Also accepts the JSON
/// mirror {"type": kind, "seq": [[...], ...]}.
TableauText parse_tableau_text(std::string_view text);

OscillatingTableau to_oscillating(const TableauText& raw);
SemistandardTableau to_semistandard(const TableauText& raw);
/// Degree inferred from the entries when `d` < 0.
SkewOscillatingTableau to_skew_oscillating(const TableauText& raw, int d = -1);
SkewRowStrictTableau to_skew_row_strict(const TableauText& raw, int d = -1);

std::string to_text(const OscillatingTableau& t);
std::string to_text(const SemistandardTableau& t);
std::string to_text(const SkewOscillatingTableau& t);
std::string to_text(const SkewRowStrictTableau& t);
std::string to_json(const OscillatingTableau& t);
std::string to_json(const SemistandardTableau& t);
std::string to_json(const SkewOscillatingTableau& t);
std::string to_json(const SkewRowStrictTableau& t);

}  // namespace cylrsk
