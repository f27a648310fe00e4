#include "cylrsk/correspondence.hpp"

#include "cylrsk/errors.hpp"

namespace cylrsk {

OscillatingTableau rsk(const Filling& f) { return extract_boundary(grow_from_filling(Rule::rsk(), f)); }

Filling rsk_inverse(const Shape& s, const OscillatingTableau& t) {
  return grow_from_boundary(Rule::rsk(), s, t).filling();
}

OscillatingTableau drsk(const Filling& f, int d) { return extract_boundary(grow_from_filling(Rule::drsk(d), f)); }

Filling drsk_inverse(const Shape& s, const OscillatingTableau& t, int d) {
  return grow_from_boundary(Rule::drsk(d), s, t).filling();
}

// Cylindric RSK and RS --------------------------------------------------------

namespace {

void require_width(Int L) {
  if (L < 1) throw DomainError("L must be positive");
}

void require_chain_bound(const Filling& f, Int L) {
  Witness chain = longest_ne_chain_cells(f, f.shape());
  Int length = 0;
  for (const Cell& c : chain) length += f.at(c.x, c.y);
  if (length > L) {
    throw DomainError("filling has a NE-chain of length " + std::to_string(length) + " > L = " + std::to_string(L),
                      std::move(chain));
  }
}

Shape pair_rectangle(const TableauPair& pq) { return Shape::rectangle(pq.p.steps(), pq.q.steps()); }

void require_cylindric(const TableauPair& pq, int d, Int L) {
  if (pq.p.shape() != pq.q.shape()) throw DomainError("P and Q have different shapes");
  if (!pq.p.is_cylindric(d, L)) throw DomainError("P is not (" + std::to_string(d) + "," + std::to_string(L) + ")-cylindric");
  if (!pq.q.is_cylindric(d, L)) throw DomainError("Q is not (" + std::to_string(d) + "," + std::to_string(L) + ")-cylindric");
}

}  // namespace

TableauPair cylindric_rsk(const Filling& f, int d, Int L) {
  require_width(L);
  if (!f.shape().is_rectangle()) throw DomainError("cylindric RSK needs a rectangular filling");
  const OscillatingTableau t = drsk(f, d);
  require_chain_bound(f, L);
  auto [p, q] = split_pair(t);
  return {std::move(p), std::move(q)};
}

Filling cylindric_rsk_inverse(const TableauPair& pq, int d, Int L) {
  require_width(L);
  require_cylindric(pq, d, L);
  const Shape rect = pair_rectangle(pq);
  // An empty side leaves an empty rectangle; the pair is then (∅), (∅, ∅, ...).
  if (rect.empty()) {
    if (!pq.p.shape().empty()) throw DomainError("nonempty shape on an empty rectangle");
    return Filling(rect);
  }
  return drsk_inverse(rect, join_pair(pq.p, pq.q), d);
}

TableauPair cylindric_rs(const Permutation& pi, int d, Int L) {
  const Filling f = permutation_to_filling(pi);
  if (auto w = find_pattern(f, d)) {
    throw DomainError("permutation contains the pattern " + std::to_string(d) + "...1(" + std::to_string(d + 1) + ")",
                      std::move(*w));
  }
  return cylindric_rsk(f, d, L);
}

Permutation cylindric_rs_inverse(const TableauPair& pq, int d, Int L) {
  if (!is_standard(pq.p) || !is_standard(pq.q)) throw DomainError("cylindric RS needs standard tableaux");
  return filling_to_permutation(cylindric_rsk_inverse(pq, d, L));
}

// Skew re-typing --------------------------------------------------------------

SkewOscillatingTableau skew_retype(const SkewOscillatingTableau& t, const TypeSequence& v) {
  const TypeSequence& w = t.word();
  if (w.count_plus() != v.count_plus() || w.count_minus() != v.count_minus()) {
    throw DomainError("type sequences " + w.str() + " and " + v.str() + " have different letter counts");
  }
  // With only one kind of letter both words coincide.
  if (w.count_plus() == 0 || w.count_minus() == 0) return t;
  return extract_path(grow_skew(t), v);
}

SkewRowStrictTableau rowstrict_retype(const SkewRowStrictTableau& t, Int L, const TypeSequence& v) {
  require_width(L);
  const int d = t.degree();
  return cyl_conjugate(skew_retype(cyl_conjugate(t, L), v), d);
}

// Filling-to-filling maps -----------------------------------------------------

Filling bwx_map(const Filling& f, int d) { return rsk_inverse(f.shape(), drsk(f, d)); }

Filling bwx_inverse(const Filling& g, int d) {
  const OscillatingTableau t = rsk(g);
  if (t.max_length() > d) {
    throw DomainError("filling has a se-chain longer than " + std::to_string(d) + " inside some Rect_p");
  }
  return drsk_inverse(g.shape(), t, d);
}

bool rect_se_bounded(const Filling& f, int d) {
  const Shape& s = f.shape();
  for (int y = 1; y <= s.num_rows(); ++y) {
    for (int x = 1; x <= s.row_length(y); ++x) {
      if (longest_se_chain(f, rect_at(x, y)) > d) return false;
    }
  }
  return true;
}

Permutation wilf_bijection(const Permutation& pi, int d, Int L) {
  const TableauPair pq = cylindric_rs(pi, d, L);
  auto conj = [d, L](const SemistandardTableau& t) {
    std::vector<Partition> seq;
    for (const Partition& p : t.seq()) {
      seq.push_back(cyl_conjugate(DStaircase::from_partition(p, d), d, L).to_partition());
    }
    // Unit steps: the row-strict image is also semistandard.
    return SemistandardTableau(std::move(seq));
  };
  return cylindric_rs_inverse({conj(pq.p), conj(pq.q)}, static_cast<int>(L), d);
}

}  // namespace cylrsk
