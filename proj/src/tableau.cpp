#include "cylrsk/tableau.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "cylrsk/errors.hpp"

namespace cylrsk {

namespace {

std::string bound_name(int d, Int L) {
  return "(" + std::to_string(d) + "," + std::to_string(L) + ")";
}

Rejection reject(int step, std::string reason) { return Rejection{step, std::move(reason)}; }

template <class Label>
std::string arrow(const Label& a, const Label& b) {
  return to_string(a) + " -> " + to_string(b);
}

std::optional<Rejection> check_lengths(const std::vector<Partition>& seq, int d) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i].length() > d) {
      return reject(static_cast<int>(i), to_string(seq[i]) + " has more than " + std::to_string(d) + " parts");
    }
  }
  return std::nullopt;
}

std::optional<Rejection> check_degrees(const std::vector<DStaircase>& seq, int d) {
  if (d < 1) throw DomainError("skew tableaux need a positive degree");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i].degree() != d) {
      return reject(static_cast<int>(i), to_string(seq[i]) + " is not a " + std::to_string(d) + "-staircase");
    }
  }
  return std::nullopt;
}

std::optional<Rejection> check_word_length(const TypeSequence& w, std::size_t entries) {
  if (entries != w.size() + 1) {
    return reject(0, "type sequence " + w.str() + " needs " + std::to_string(w.size() + 1) + " entries, got " +
                         std::to_string(entries));
  }
  return std::nullopt;
}

// Ascending or oscillating chain check shared by all kinds.  `up(a, b)` is
// the relation a -> b required for a '+' step.
template <class Label, class Up>
std::optional<Rejection> check_steps(const TypeSequence* w, const std::vector<Label>& seq, Up up,
                                     const std::string& relation) {
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const bool plus = w == nullptr || (*w)[i - 1] == Sign::Plus;
    const bool ok = plus ? up(seq[i - 1], seq[i]) : up(seq[i], seq[i - 1]);
    if (!ok) {
      return reject(static_cast<int>(i), arrow(seq[i - 1], seq[i]) + " is not a" + (plus ? "n upward " : " downward ") +
                                             relation + " step");
    }
  }
  return std::nullopt;
}

std::vector<Int> sizes(const std::vector<Partition>& seq) {
  std::vector<Int> out;
  for (const auto& p : seq) out.push_back(p.size());
  return out;
}

std::vector<Int> sizes(const std::vector<DStaircase>& seq) {
  std::vector<Int> out;
  for (const auto& p : seq) out.push_back(p.size());
  return out;
}

std::vector<Int> plus_weights(const TypeSequence& w, const std::vector<Int>& size) {
  std::vector<Int> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == Sign::Plus) out.push_back(size[i + 1] - size[i]);
  }
  return out;
}

std::vector<Int> minus_weights(const TypeSequence& w, const std::vector<Int>& size) {
  std::vector<Int> out;
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] == Sign::Minus) out.push_back(size[i] - size[i + 1]);
  }
  return out;
}

std::vector<Int> ascending_weights(const std::vector<Partition>& seq) {
  std::vector<Int> out;
  for (std::size_t i = 1; i < seq.size(); ++i) out.push_back(seq[i].size() - seq[i - 1].size());
  return out;
}

void raise(const std::optional<Rejection>& r, const std::string& what) {
  if (r) {
    throw DomainError("not a " + what + ": step " + std::to_string(r->step) + ": " + r->reason);
  }
}

bool all_ones(const std::vector<Int>& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 1; });
}

}  // namespace

// Validators ------------------------------------------------------------------

std::optional<Rejection> validate_semistandard(const std::vector<Partition>& seq, std::optional<CylindricBound> bound) {
  if (seq.empty()) return reject(0, "empty sequence");
  if (!seq.front().empty()) return reject(0, "does not start at the empty partition");
  if (!bound) {
    return check_steps(nullptr, seq, [](const Partition& a, const Partition& b) { return interlaces(a, b); },
                       "interlacing");
  }
  if (bound->d < 1) throw DomainError("cylindric bound needs d >= 1");
  if (auto r = check_lengths(seq, bound->d)) return r;
  const auto [d, L] = *bound;
  return check_steps(
      nullptr, seq, [d, L](const Partition& a, const Partition& b) { return dl_interlaces(a, b, d, L); },
      bound_name(d, L) + "-interlacing");
}

std::optional<Rejection> validate_row_strict(const std::vector<Partition>& seq, std::optional<CylindricBound> bound) {
  if (seq.empty()) return reject(0, "empty sequence");
  if (!seq.front().empty()) return reject(0, "does not start at the empty partition");
  if (!bound) {
    return check_steps(nullptr, seq, [](const Partition& a, const Partition& b) { return cointerlaces(a, b); },
                       "cointerlacing");
  }
  if (bound->d < 1) throw DomainError("cylindric bound needs d >= 1");
  if (auto r = check_lengths(seq, bound->d)) return r;
  const auto [d, L] = *bound;
  return check_steps(
      nullptr, seq, [d, L](const Partition& a, const Partition& b) { return dl_cointerlaces(a, b, d, L); },
      bound_name(d, L) + "-cointerlacing");
}

std::optional<Rejection> validate_oscillating(const TypeSequence& w, const std::vector<Partition>& seq, int d,
                                              std::optional<Int> L) {
  if (auto r = check_word_length(w, seq.size())) return r;
  if (!seq.front().empty()) return reject(0, "does not start at the empty partition");
  if (!seq.back().empty()) return reject(0, "does not end at the empty partition");
  if (L && d < 1) throw DomainError("a cylindric bound needs d >= 1");
  if (d > 0) {
    if (auto r = check_lengths(seq, d)) return r;
  }
  if (!L) {
    return check_steps(&w, seq, [](const Partition& a, const Partition& b) { return interlaces(a, b); },
                       "interlacing");
  }
  const Int width = *L;
  return check_steps(
      &w, seq, [d, width](const Partition& a, const Partition& b) { return dl_interlaces(a, b, d, width); },
      bound_name(d, width) + "-interlacing");
}

std::optional<Rejection> validate_skew_oscillating(const TypeSequence& w, const std::vector<DStaircase>& seq, int d,
                                                   std::optional<Int> L) {
  if (auto r = check_word_length(w, seq.size())) return r;
  if (auto r = check_degrees(seq, d)) return r;
  if (!L) {
    return check_steps(&w, seq, [](const DStaircase& a, const DStaircase& b) { return interlaces(a, b); },
                       "interlacing");
  }
  const Int width = *L;
  return check_steps(
      &w, seq, [d, width](const DStaircase& a, const DStaircase& b) { return dl_interlaces(a, b, d, width); },
      bound_name(d, width) + "-interlacing");
}

std::optional<Rejection> validate_skew_row_strict(const TypeSequence& w, const std::vector<DStaircase>& seq, int d,
                                                  std::optional<Int> L) {
  if (auto r = check_word_length(w, seq.size())) return r;
  if (auto r = check_degrees(seq, d)) return r;
  if (!L) {
    return check_steps(&w, seq, [](const DStaircase& a, const DStaircase& b) { return cointerlaces(a, b); },
                       "cointerlacing");
  }
  const Int width = *L;
  return check_steps(
      &w, seq, [d, width](const DStaircase& a, const DStaircase& b) { return dl_cointerlaces(a, b, d, width); },
      bound_name(d, width) + "-cointerlacing");
}

// Tableau values --------------------------------------------------------------

SemistandardTableau::SemistandardTableau(std::vector<Partition> seq) : seq_(std::move(seq)) {
  raise(validate_semistandard(seq_), "semistandard tableau");
}

std::vector<Int> SemistandardTableau::weight() const { return ascending_weights(seq_); }

bool SemistandardTableau::is_cylindric(int d, Int L) const {
  return !validate_semistandard(seq_, CylindricBound{d, L});
}

RowStrictTableau::RowStrictTableau(std::vector<Partition> seq) : seq_(std::move(seq)) {
  raise(validate_row_strict(seq_), "row-strict tableau");
}

std::vector<Int> RowStrictTableau::weight() const { return ascending_weights(seq_); }

bool RowStrictTableau::is_cylindric(int d, Int L) const { return !validate_row_strict(seq_, CylindricBound{d, L}); }

OscillatingTableau::OscillatingTableau(TypeSequence w, std::vector<Partition> seq)
    : w_(std::move(w)), seq_(std::move(seq)) {
  raise(validate_oscillating(w_, seq_), "semistandard " + w_.str() + "-oscillating tableau");
}

int OscillatingTableau::max_length() const noexcept {
  int out = 0;
  for (const auto& p : seq_) out = std::max(out, p.length());
  return out;
}

SkewOscillatingTableau::SkewOscillatingTableau(int d, TypeSequence w, std::vector<DStaircase> seq)
    : d_(d), w_(std::move(w)), seq_(std::move(seq)) {
  raise(validate_skew_oscillating(w_, seq_, d_), "skew " + std::to_string(d_) + "-semistandard tableau");
}

SkewRowStrictTableau::SkewRowStrictTableau(int d, TypeSequence w, std::vector<DStaircase> seq)
    : d_(d), w_(std::move(w)), seq_(std::move(seq)) {
  raise(validate_skew_row_strict(w_, seq_, d_), "skew " + std::to_string(d_) + "-row-strict tableau");
}

// Statistics ------------------------------------------------------------------

std::vector<Int> wt_plus(const OscillatingTableau& t) { return plus_weights(t.word(), sizes(t.seq())); }
std::vector<Int> wt_minus(const OscillatingTableau& t) { return minus_weights(t.word(), sizes(t.seq())); }
std::vector<Int> wt_plus(const SkewOscillatingTableau& t) { return plus_weights(t.word(), sizes(t.seq())); }
std::vector<Int> wt_minus(const SkewOscillatingTableau& t) { return minus_weights(t.word(), sizes(t.seq())); }
std::vector<Int> wt_plus(const SkewRowStrictTableau& t) { return plus_weights(t.word(), sizes(t.seq())); }
std::vector<Int> wt_minus(const SkewRowStrictTableau& t) { return minus_weights(t.word(), sizes(t.seq())); }

Int mcw_tableau(const OscillatingTableau& t, int d) {
  Int out = 0;
  for (std::size_t i = 1; i < t.seq().size(); ++i) out = std::max(out, mcw_pair(t.seq()[i - 1], t.seq()[i], d));
  return out;
}

Int mcw_tableau(const SemistandardTableau& t, int d) {
  Int out = 0;
  for (std::size_t i = 1; i < t.seq().size(); ++i) out = std::max(out, mcw_pair(t.seq()[i - 1], t.seq()[i], d));
  return out;
}

Int mcw_tableau(const SkewOscillatingTableau& t) {
  Int out = 0;
  for (std::size_t i = 1; i < t.seq().size(); ++i) out = std::max(out, mcw_pair(t.seq()[i - 1], t.seq()[i]));
  return out;
}

bool all_dl_partitions(const RowStrictTableau& t, int d, Int L) {
  return std::all_of(t.seq().begin(), t.seq().end(), [&](const Partition& p) {
    return p.length() <= d && DStaircase::from_partition(p, d).is_dl_staircase(L);
  });
}

bool all_dl_staircases(const SkewRowStrictTableau& t, Int L) {
  return std::all_of(t.seq().begin(), t.seq().end(), [L](const DStaircase& s) { return s.is_dl_staircase(L); });
}

bool is_standard(const OscillatingTableau& t) { return all_ones(wt_plus(t)) && all_ones(wt_minus(t)); }
bool is_standard(const SemistandardTableau& t) { return all_ones(t.weight()); }

// Structure -------------------------------------------------------------------

std::pair<SemistandardTableau, SemistandardTableau> split_pair(const OscillatingTableau& t) {
  const TypeSequence& w = t.word();
  const int n = w.count_plus();
  if (!(w == TypeSequence::split(n, w.count_minus()))) {
    throw DomainError("split_pair needs a type sequence +^n -^m, got " + w.str());
  }
  const auto& seq = t.seq();
  std::vector<Partition> p(seq.begin(), seq.begin() + n + 1);
  std::vector<Partition> q(seq.rbegin(), seq.rend() - n);
  return {SemistandardTableau(std::move(p)), SemistandardTableau(std::move(q))};
}

OscillatingTableau join_pair(const SemistandardTableau& p, const SemistandardTableau& q) {
  if (p.shape() != q.shape()) {
    throw DomainError("join_pair: shapes " + to_string(p.shape()) + " and " + to_string(q.shape()) + " differ");
  }
  std::vector<Partition> seq(p.seq());
  seq.insert(seq.end(), q.seq().rbegin() + 1, q.seq().rend());
  return OscillatingTableau(TypeSequence::split(p.steps(), q.steps()), std::move(seq));
}

OscillatingTableau reverse(const OscillatingTableau& t) {
  return OscillatingTableau(t.word().reversed(), std::vector<Partition>(t.seq().rbegin(), t.seq().rend()));
}

SkewOscillatingTableau reverse(const SkewOscillatingTableau& t) {
  return SkewOscillatingTableau(t.degree(), t.word().reversed(),
                                std::vector<DStaircase>(t.seq().rbegin(), t.seq().rend()));
}

SkewRowStrictTableau reverse(const SkewRowStrictTableau& t) {
  return SkewRowStrictTableau(t.degree(), t.word().reversed(),
                              std::vector<DStaircase>(t.seq().rbegin(), t.seq().rend()));
}

SkewRowStrictTableau cyl_conjugate(const SkewOscillatingTableau& t, Int width) {
  const int d = t.degree();
  raise(validate_skew_oscillating(t.word(), t.seq(), d, width), bound_name(d, width) + "-cylindric skew tableau");
  std::vector<DStaircase> out;
  for (const auto& s : t.seq()) out.push_back(cyl_conjugate(s, d, width));
  return SkewRowStrictTableau(static_cast<int>(width), t.word(), std::move(out));
}

SkewOscillatingTableau cyl_conjugate(const SkewRowStrictTableau& t, Int width) {
  const int d = t.degree();
  raise(validate_skew_row_strict(t.word(), t.seq(), d, width),
        bound_name(d, width) + "-cylindric skew row-strict tableau");
  std::vector<DStaircase> out;
  for (const auto& s : t.seq()) out.push_back(cyl_conjugate(s, d, width));
  return SkewOscillatingTableau(static_cast<int>(width), t.word(), std::move(out));
}

SkewOscillatingTableau to_skew(const OscillatingTableau& t, int d) {
  std::vector<DStaircase> out;
  for (const auto& p : t.seq()) out.push_back(DStaircase::from_partition(p, d));
  return SkewOscillatingTableau(d, t.word(), std::move(out));
}

// Text formats ----------------------------------------------------------------

TableauText parse_tableau_text(std::string_view text) {
  TableauText raw;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    try {
      const auto j = nlohmann::json::parse(text);
      raw.kind = j.at("type").get<std::string>();
      raw.seq = j.at("seq").get<std::vector<std::vector<Int>>>();
    } catch (const nlohmann::json::exception& e) {
      throw FormatError(std::string("tableau JSON: ") + e.what());
    }
  } else {
    std::istringstream in{std::string(text)};
    std::string line;
    bool have_kind = false;
    while (std::getline(in, line)) {
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      const auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos) continue;
      line = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
      if (!have_kind) {
        raw.kind = line;
        have_kind = true;
      } else {
        raw.seq.push_back(parse_int_list(line));
      }
    }
    if (!have_kind) throw FormatError("empty tableau");
  }
  if (raw.kind != "SSYT" && raw.kind != "RSYT") TypeSequence::parse(raw.kind);
  return raw;
}

namespace {

std::vector<Partition> partitions_of(const TableauText& raw) {
  std::vector<Partition> out;
  for (const auto& parts : raw.seq) out.emplace_back(parts);
  return out;
}

std::vector<DStaircase> staircases_of(const TableauText& raw, int& d) {
  if (raw.seq.empty()) throw FormatError("skew tableau without entries");
  if (d < 0) d = static_cast<int>(raw.seq.front().size());
  std::vector<DStaircase> out;
  for (const auto& parts : raw.seq) out.emplace_back(parts);
  return out;
}

TypeSequence word_of(const TableauText& raw) {
  if (raw.kind == "SSYT" || raw.kind == "RSYT") {
    throw FormatError("expected a type sequence on the first line, got " + raw.kind);
  }
  return TypeSequence::parse(raw.kind);
}

template <class Label>
std::string seq_text(const std::string& kind, const std::vector<Label>& seq) {
  std::string out = kind + "\n";
  for (const auto& s : seq) out += to_string(s) + "\n";
  return out;
}

template <class Label>
std::string seq_json(const std::string& kind, const std::vector<Label>& seq) {
  nlohmann::json j;
  j["type"] = kind;
  j["seq"] = nlohmann::json::array();
  for (const auto& s : seq) j["seq"].push_back(s.parts());
  return j.dump();
}

}  // namespace

OscillatingTableau to_oscillating(const TableauText& raw) { return OscillatingTableau(word_of(raw), partitions_of(raw)); }

SemistandardTableau to_semistandard(const TableauText& raw) {
  if (raw.kind != "SSYT") throw FormatError("expected SSYT on the first line, got " + raw.kind);
  return SemistandardTableau(partitions_of(raw));
}

SkewOscillatingTableau to_skew_oscillating(const TableauText& raw, int d) {
  auto seq = staircases_of(raw, d);
  return SkewOscillatingTableau(d, word_of(raw), std::move(seq));
}

SkewRowStrictTableau to_skew_row_strict(const TableauText& raw, int d) {
  auto seq = staircases_of(raw, d);
  return SkewRowStrictTableau(d, word_of(raw), std::move(seq));
}

std::string to_text(const OscillatingTableau& t) { return seq_text(t.word().str(), t.seq()); }
std::string to_text(const SemistandardTableau& t) { return seq_text("SSYT", t.seq()); }
std::string to_text(const SkewOscillatingTableau& t) { return seq_text(t.word().str(), t.seq()); }
std::string to_text(const SkewRowStrictTableau& t) { return seq_text(t.word().str(), t.seq()); }
std::string to_json(const OscillatingTableau& t) { return seq_json(t.word().str(), t.seq()); }
std::string to_json(const SemistandardTableau& t) { return seq_json("SSYT", t.seq()); }
std::string to_json(const SkewOscillatingTableau& t) { return seq_json(t.word().str(), t.seq()); }
std::string to_json(const SkewRowStrictTableau& t) { return seq_json(t.word().str(), t.seq()); }

}  // namespace cylrsk
