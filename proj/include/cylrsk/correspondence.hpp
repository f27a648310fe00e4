#pragma once

#include <utility>

#include "cylrsk/filling.hpp"
#include "cylrsk/growth.hpp"
#include "cylrsk/tableau.hpp"

namespace cylrsk {

/// P read up the right side, Q read leftward along the top.
struct TableauPair {
  SemistandardTableau p;
  SemistandardTableau q;

  bool operator==(const TableauPair&) const = default;
};

// Oscillating correspondences -------------------------------------------------

OscillatingTableau rsk(const Filling& f);
Filling rsk_inverse(const Shape& s, const OscillatingTableau& t);

/// Throws DomainError with the pattern occurrence as witness if f contains
/// d...1(d+1).
OscillatingTableau drsk(const Filling& f, int d);
/// t must be d-semistandard with the boundary word of s.
Filling drsk_inverse(const Shape& s, const OscillatingTableau& t, int d);

// Cylindric RSK and RS --------------------------------------------------------

/// f lives on a rectangle, avoids d...1(d+1) and has no NE-chain longer than L
/// (otherwise DomainError; the witness is the offending pattern or chain).
TableauPair cylindric_rsk(const Filling& f, int d, Int L);
/// Both tableaux must be (d,L)-cylindric with a common shape.
Filling cylindric_rsk_inverse(const TableauPair& pq, int d, Int L);

/// Standard pair of π, which must avoid d...1(d+1) and 1...(L+1).  Witness
/// cells are (j, π(j)).
TableauPair cylindric_rs(const Permutation& pi, int d, Int L);
/// Both tableaux must be standard, (d,L)-cylindric, of a common shape.
Permutation cylindric_rs_inverse(const TableauPair& pq, int d, Int L);

// Skew re-typing --------------------------------------------------------------

/// The tableau read along P^v in the skew diagram grown from t.  v needs the
/// same numbers of '+' and '-' as t's word.
SkewOscillatingTableau skew_retype(const SkewOscillatingTableau& t, const TypeSequence& v);

/// Row-strict analogue through cylindric conjugation: t must be a skew
/// (d,L)-cylindric row-strict tableau.
SkewRowStrictTableau rowstrict_retype(const SkewRowStrictTableau& t, Int L, const TypeSequence& v);

// Filling-to-filling maps -----------------------------------------------------

/// d-RSK followed by inverse RSK on the same shape.  The image has no
/// se-chain longer than d inside any Rect_p.
Filling bwx_map(const Filling& f, int d);
/// RSK followed by inverse d-RSK; DomainError if some Rect_p holds a se-chain
/// longer than d.
Filling bwx_inverse(const Filling& g, int d);
/// True iff no Rect_p of f holds a se-chain of length d+1.
bool rect_se_bounded(const Filling& f, int d);

/// S_n^(d,L) -> S_n^(L,d): cylindric RS, elementwise tr_(d,L), inverse
/// cylindric RS at (L,d).
Permutation wilf_bijection(const Permutation& pi, int d, Int L);

}  // namespace cylrsk
