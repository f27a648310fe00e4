// Command-line front end.  Every verb reads a file argument ("-" for stdin),
// writes text or, with --json, a JSON mirror, and exits with
//   0 success, 2 domain error (witness on stderr), 3 format error, 1 otherwise.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "cylrsk/correspondence.hpp"
#include "cylrsk/enumeration.hpp"
#include "cylrsk/errors.hpp"
#include "cylrsk/filling.hpp"
#include "cylrsk/growth.hpp"
#include "cylrsk/partition.hpp"
#include "cylrsk/tableau.hpp"

using namespace cylrsk;
using json = nlohmann::json;

namespace {

constexpr int kExitDomain = 2;
constexpr int kExitFormat = 3;
constexpr int kExitOther = 1;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool is_json(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '{';
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("JSON: ") + e.what());
  }
}

std::string witness_text(const Witness& w) {
  std::string out;
  for (const Cell& c : w) out += (out.empty() ? "" : " ") + ("(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")");
  return out;
}

json big_to_json(const BigInt& v) {
  if (v <= BigInt(std::numeric_limits<std::int64_t>::max())) return static_cast<std::int64_t>(v);
  return v.str();
}

// Tableau pairs -----------------------------------------------------------------
// Text: two SSYT blocks, P first.  JSON: {"P": {...}, "Q": {...}}.

std::string pair_text(const TableauPair& pq) { return "# P\n" + to_text(pq.p) + "# Q\n" + to_text(pq.q); }

json pair_json(const TableauPair& pq) {
  return {{"P", json::parse(to_json(pq.p))}, {"Q", json::parse(to_json(pq.q))}};
}

TableauPair parse_pair(const std::string& text) {
  if (is_json(text)) {
    const json j = parse_json(text);
    if (!j.contains("P") || !j.contains("Q")) throw FormatError("pair JSON needs keys 'P' and 'Q'");
    return {to_semistandard(parse_tableau_text(j["P"].dump())), to_semistandard(parse_tableau_text(j["Q"].dump()))};
  }
  std::vector<std::string> blocks;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string bare = line.substr(0, line.find('#'));
    bare.erase(0, bare.find_first_not_of(" \t\r"));
    if (bare.rfind("SSYT", 0) == 0) blocks.emplace_back();
    if (blocks.empty()) {
      if (bare.find_first_not_of(" \t\r") != std::string::npos) throw FormatError("pair text must start with SSYT");
      continue;
    }
    blocks.back() += line + "\n";
  }
  if (blocks.size() != 2) throw FormatError("expected two SSYT blocks, got " + std::to_string(blocks.size()));
  return {to_semistandard(parse_tableau_text(blocks[0])), to_semistandard(parse_tableau_text(blocks[1]))};
}

Rule rule_from(const std::string& name, int d) {
  if (name == "skew") throw FormatError("the skew rule is reached through skew-retype");
  return Rule::parse(name, d);
}

// Verbs ---------------------------------------------------------------------------

struct Common {
  std::string input = "-";
  bool as_json = false;
};

int cmd_grow(const Common& c, const std::string& rule_name, int d, bool boundary_only) {
  const Filling f = parse_filling(read_input(c.input));
  const GrowthDiagram g = grow_from_filling(rule_from(rule_name, d), f);
  const OscillatingTableau t = extract_boundary(g);
  if (c.as_json) {
    json j = boundary_only ? json::parse(to_json(t))
                           : json{{"diagram", json::parse(to_json(g))}, {"boundary", json::parse(to_json(t))}};
    std::cout << j.dump() << '\n';
  } else if (boundary_only) {
    std::cout << to_text(t);
  } else {
    std::cout << to_dump(g);
    std::istringstream lines(to_text(t));
    std::string line;
    std::cout << "# boundary\n";
    while (std::getline(lines, line)) std::cout << "# " << line << '\n';
  }
  return 0;
}

int cmd_ungrow(const Common& c, const std::string& rule_name, int d, const std::string& shape_text) {
  const OscillatingTableau t = to_oscillating(parse_tableau_text(read_input(c.input)));
  const Shape s = shape_text.empty() ? Shape::from_type_sequence(t.word()) : Shape(parse_partition(shape_text));
  const GrowthDiagram g = grow_from_boundary(rule_from(rule_name, d), s, t);
  std::cout << (c.as_json ? to_json(g.filling()) + "\n" : to_text(g.filling()));
  return 0;
}

int cmd_rs(const Common& c, int d, Int L, bool inverse) {
  if (inverse) {
    const Permutation p = cylindric_rs_inverse(parse_pair(read_input(c.input)), d, L);
    std::cout << (c.as_json ? json(p).dump() : to_string(p)) << '\n';
    return 0;
  }
  const TableauPair pq = cylindric_rs(parse_permutation(read_input(c.input)), d, L);
  std::cout << (c.as_json ? pair_json(pq).dump() + "\n" : pair_text(pq));
  return 0;
}

int cmd_rsk(const Common& c, int d, bool inverse, const std::string& shape_text) {
  if (inverse) {
    const OscillatingTableau t = to_oscillating(parse_tableau_text(read_input(c.input)));
    const Shape s = shape_text.empty() ? Shape::from_type_sequence(t.word()) : Shape(parse_partition(shape_text));
    const Filling f = d > 0 ? drsk_inverse(s, t, d) : rsk_inverse(s, t);
    std::cout << (c.as_json ? to_json(f) + "\n" : to_text(f));
    return 0;
  }
  const Filling f = parse_filling(read_input(c.input));
  const OscillatingTableau t = d > 0 ? drsk(f, d) : rsk(f);
  std::cout << (c.as_json ? to_json(t) + "\n" : to_text(t));
  return 0;
}

int cmd_cylrsk(const Common& c, int d, Int L, bool inverse) {
  if (inverse) {
    const Filling f = cylindric_rsk_inverse(parse_pair(read_input(c.input)), d, L);
    std::cout << (c.as_json ? to_json(f) + "\n" : to_text(f));
    return 0;
  }
  const TableauPair pq = cylindric_rsk(parse_filling(read_input(c.input)), d, L);
  std::cout << (c.as_json ? pair_json(pq).dump() + "\n" : pair_text(pq));
  return 0;
}

int cmd_skew_retype(const Common& c, const std::string& to, int d, bool row_strict, Int L) {
  TableauText raw = parse_tableau_text(read_input(c.input));
  // ordinary partitions become d-staircases by zero padding
  if (d > 0) {
    for (auto& parts : raw.seq) {
      if (static_cast<int>(parts.size()) < d) parts.resize(static_cast<std::size_t>(d), 0);
    }
  }
  const TypeSequence v = TypeSequence::parse(to);
  if (row_strict) {
    if (L < 1) throw DomainError("--row-strict needs --L");
    const SkewRowStrictTableau r = rowstrict_retype(to_skew_row_strict(raw, d > 0 ? d : -1), L, v);
    std::cout << (c.as_json ? to_json(r) + "\n" : to_text(r));
    return 0;
  }
  const SkewOscillatingTableau r = skew_retype(to_skew_oscillating(raw, d > 0 ? d : -1), v);
  std::cout << (c.as_json ? to_json(r) + "\n" : to_text(r));
  return 0;
}

int cmd_conjugate(const Common& c, int d, Int L) {
  std::string text = c.input == "-" ? read_input("-") : c.input;
  const DStaircase a = parse_staircase(text, d);
  const DStaircase b = cyl_conjugate(a, d, L);
  std::cout << (c.as_json ? json(b.parts()).dump() : to_string(b)) << '\n';
  return 0;
}

std::string value_text(const std::optional<BigInt>& v) { return v ? v->str() : "-"; }

int cmd_count(const Common& c, int d, Int L, int n_max, const std::string& routes_text, bool csv, bool involutions,
              int threads) {
  std::vector<Route> routes;
  std::stringstream ss(routes_text);
  std::string tok;
  while (std::getline(ss, tok, ',')) routes.push_back(parse_route(tok));
  if (routes.empty()) throw FormatError("no routes given");
  const CountTable t = count_table(d, L, n_max, routes, involutions, threads);

  if (c.as_json) {
    json rows = json::array();
    for (const auto& row : t.rows) {
      json r{{"n", row.n}, {"agree", row.agree}};
      for (std::size_t i = 0; i < routes.size(); ++i) {
        r[to_string(routes[i])] = row.values[i] ? big_to_json(*row.values[i]) : json(nullptr);
      }
      rows.push_back(r);
    }
    std::cout << json{{"d", d}, {"L", L}, {"involutions", involutions}, {"rows", rows}}.dump() << '\n';
    return 0;
  }
  std::vector<std::string> header{"n"};
  for (Route r : routes) header.push_back(to_string(r));
  header.push_back("agree");
  std::vector<std::vector<std::string>> cells{header};
  for (const auto& row : t.rows) {
    std::vector<std::string> line{std::to_string(row.n)};
    for (const auto& v : row.values) line.push_back(value_text(v));
    line.push_back(row.agree ? "yes" : "NO");
    cells.push_back(line);
  }
  if (csv) {
    for (const auto& line : cells) {
      for (std::size_t i = 0; i < line.size(); ++i) std::cout << (i ? "," : "") << line[i];
      std::cout << '\n';
    }
  } else {
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& line : cells) {
      for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    }
    for (const auto& line : cells) {
      std::string out;
      for (std::size_t i = 0; i < line.size(); ++i) {
        if (i) out += "  ";
        out += std::string(width[i] - line[i].size(), ' ') + line[i];
      }
      std::cout << out << '\n';
    }
  }
  bool agree = true;
  for (const auto& row : t.rows) agree = agree && row.agree;
  return agree ? 0 : kExitOther;
}

int cmd_asym(const Common& c, int d, Int L, int n_max) {
  const Asymptotic a = asymptotic(d, L);
  std::vector<std::pair<int, double>> ratios;
  for (int n = 1; n <= n_max; ++n) {
    const BigInt exact = tableau_pair_count(n, d, L);
    const double predicted = a.constant * std::pow(a.rate, n);
    ratios.emplace_back(n, exact.convert_to<double>() / predicted);
  }
  if (c.as_json) {
    json rows = json::array();
    for (auto [n, r] : ratios) rows.push_back({{"n", n}, {"ratio", r}});
    std::cout << json{{"d", d}, {"L", L}, {"rate", a.rate}, {"constant", a.constant}, {"ratios", rows}}.dump()
              << '\n';
    return 0;
  }
  std::cout << std::setprecision(15) << "rate " << a.rate << "\nconstant " << a.constant << '\n';
  for (auto [n, r] : ratios) std::cout << "n " << n << " ratio " << r << '\n';
  return 0;
}

// check: detect the artifact kind from its first meaningful line.
std::string first_content_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    const auto b = line.find_first_not_of(" \t\r");
    if (b != std::string::npos) return line.substr(b);
  }
  return {};
}

int content_lines(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) n += first_content_line(line).empty() ? 0 : 1;
  return n;
}

int cmd_check(const Common& c, int d, Int L) {
  const std::string text = read_input(c.input);
  json report;
  auto dl_note = [&](json& r, auto&& cylindric) {
    if (d > 0 && L > 0) r["cylindric"] = cylindric();
  };
  std::string kind;
  if (is_json(text)) {
    const json j = parse_json(text);
    kind = j.contains("rule") ? "dump" : j.contains("shape") ? "filling" : j.contains("P") ? "pair" : "tableau";
    if (kind == "dump") throw FormatError("diagram dumps are checked in their text form");
  } else {
    const std::string head = first_content_line(text);
    std::istringstream hs(head);
    std::string word;
    hs >> word;
    if (head.empty()) throw FormatError("empty input");
    if (head[0] == '[') {
      kind = content_lines(text) == 1 ? "permutation" : "filling";
    } else if (word == "rsk" || word == "drsk" || word == "skew") {
      kind = word == "skew" ? "skew-dump" : "dump";
    } else if (std::isdigit(static_cast<unsigned char>(head[0]))) {
      kind = "permutation";
    } else {
      int ssyt_blocks = 0;
      std::istringstream in(text);
      std::string line;
      while (std::getline(in, line)) {
        if (first_content_line(line).rfind("SSYT", 0) == 0) ++ssyt_blocks;
      }
      kind = ssyt_blocks >= 2 ? "pair" : "tableau";
    }
  }
  report["kind"] = kind;

  if (kind == "filling") {
    const Filling f = parse_filling(text);
    report["shape"] = f.shape().rows().parts();
    report["total"] = f.total();
    report["ne_chain"] = longest_ne_chain(f);
    report["se_chain"] = longest_se_chain(f);
    if (d > 0) report["avoids_pattern"] = !contains_pattern(f, d);
  } else if (kind == "permutation") {
    const Permutation p = parse_permutation(text);
    const Filling f = permutation_to_filling(p);
    report["n"] = p.size();
    report["involution"] = is_involution(p);
    report["longest_increasing"] = longest_ne_chain(f);
    report["longest_decreasing"] = longest_se_chain(f);
    if (d > 0) report["avoids_pattern"] = !contains_pattern(f, d);
  } else if (kind == "dump") {
    const GrowthDiagram g = parse_dump(text);
    report["rule"] = g.rule().name();
    report["shape"] = g.shape().rows().parts();
    if (g.rule().kind == RuleKind::Drsk) report["mcw"] = mcw_tableau(extract_boundary(g), g.rule().d);
  } else if (kind == "skew-dump") {
    const SkewGrowthDiagram g = parse_skew_dump(text);
    report["rule"] = g.rule().name();
    report["shape"] = g.shape().rows().parts();
  } else if (kind == "pair") {
    const TableauPair pq = parse_pair(text);
    report["same_shape"] = pq.p.shape() == pq.q.shape();
    report["shape_p"] = pq.p.shape().parts();
    report["shape_q"] = pq.q.shape().parts();
    dl_note(report, [&] { return pq.p.is_cylindric(d, L) && pq.q.is_cylindric(d, L); });
  } else {
    const TableauText raw = parse_tableau_text(text);
    report["type"] = raw.kind;
    if (raw.kind == "SSYT") {
      const SemistandardTableau t = to_semistandard(raw);
      report["shape"] = t.shape().parts();
      report["weight"] = t.weight();
      if (d > 0) report["mcw"] = mcw_tableau(t, d);
      dl_note(report, [&] { return t.is_cylindric(d, L); });
    } else if (raw.kind == "RSYT") {
      std::vector<Partition> seq;
      for (const auto& parts : raw.seq) seq.emplace_back(parts);
      const RowStrictTableau t(seq);
      report["shape"] = t.shape().parts();
      report["weight"] = t.weight();
      dl_note(report, [&] { return t.is_cylindric(d, L); });
    } else {
      bool partitions = !raw.seq.empty() && raw.seq.front().empty() && raw.seq.back().empty();
      for (const auto& parts : raw.seq) {
        for (Int v : parts) partitions = partitions && v >= 0;
      }
      if (partitions && d <= 0) {
        const OscillatingTableau t = to_oscillating(raw);
        report["oscillating"] = true;
        report["wt_plus"] = wt_plus(t);
        report["wt_minus"] = wt_minus(t);
      } else {
        const SkewOscillatingTableau t = to_skew_oscillating(raw, d > 0 ? d : -1);
        report["skew"] = true;
        report["degree"] = t.degree();
        report["wt_plus"] = wt_plus(t);
        report["wt_minus"] = wt_minus(t);
        report["mcw"] = mcw_tableau(t);
      }
    }
  }
  if (c.as_json) {
    std::cout << report.dump() << '\n';
  } else {
    std::cout << "ok " << kind << '\n';
    for (const auto& [key, value] : report.items()) {
      if (key != "kind") std::cout << key << ' ' << value.dump() << '\n';
    }
  }
  return 0;
}

int cmd_render(const Common& c, const std::string& rule_name, int d) {
  const std::string text = read_input(c.input);
  std::istringstream hs(first_content_line(text));
  std::string word;
  hs >> word;
  if (word == "skew") {
    const SkewGrowthDiagram g = parse_skew_dump(text);
    std::cout << (c.as_json ? json{{"render", render(g)}}.dump() + "\n" : render(g));
    return 0;
  }
  const GrowthDiagram g = (word == "rsk" || word == "drsk") ? parse_dump(text)
                                                            : grow_from_filling(rule_from(rule_name, d), parse_filling(text));
  std::cout << (c.as_json ? json{{"render", render(g)}}.dump() + "\n" : render(g));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Growth diagrams, cylindric tableaux and pattern-avoidance counts"};
  app.require_subcommand(1);
  Common common;
  int d = 0;
  Int L = 0;
  std::string rule_name = "drsk";
  std::string shape_text;
  std::string to;
  std::string routes = "brute,pairs,trig";
  int n_max = 8;
  int threads = 1;
  bool inverse = false;
  bool boundary_only = false;
  bool row_strict = false;
  bool csv = false;
  bool involutions = false;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("input", common.input, "input file, - for stdin")->capture_default_str();
    sub->add_flag("--json", common.as_json, "emit JSON");
  };

  auto* grow = app.add_subcommand("grow", "filling -> growth diagram dump and boundary tableau");
  add_io(grow);
  grow->add_option("--rule", rule_name, "rsk or drsk")->capture_default_str();
  grow->add_option("--d", d, "d for the d-RSK rule");
  grow->add_flag("--boundary-only", boundary_only, "print only the boundary tableau");

  auto* ungrow = app.add_subcommand("ungrow", "boundary tableau -> filling");
  add_io(ungrow);
  ungrow->add_option("--rule", rule_name, "rsk or drsk")->capture_default_str();
  ungrow->add_option("--d", d, "d for the d-RSK rule");
  ungrow->add_option("--shape", shape_text, "shape, e.g. [3,1]; default from the type sequence");

  auto* rs = app.add_subcommand("rs", "cylindric RS: permutation <-> pair of standard tableaux");
  add_io(rs);
  rs->add_option("--d", d, "pattern length bound d")->required();
  rs->add_option("--L", L, "increasing run bound L")->required();
  rs->add_flag("--inverse", inverse, "pair -> permutation");

  auto* rsk_cmd = app.add_subcommand("rsk", "oscillating RSK (or d-RSK with --d): filling <-> tableau");
  add_io(rsk_cmd);
  rsk_cmd->add_option("--d", d, "use d-RSK");
  rsk_cmd->add_flag("--inverse", inverse, "tableau -> filling");
  rsk_cmd->add_option("--shape", shape_text, "shape for --inverse; default from the type sequence");

  auto* cyl = app.add_subcommand("cylrsk", "cylindric RSK: rectangular filling <-> pair of cylindric tableaux");
  add_io(cyl);
  cyl->add_option("--d", d, "pattern length bound d")->required();
  cyl->add_option("--L", L, "NE-chain bound L")->required();
  cyl->add_flag("--inverse", inverse, "pair -> filling");

  auto* skew = app.add_subcommand("skew-retype", "re-type a skew tableau along another word");
  add_io(skew);
  skew->add_option("--to", to, "target type sequence")->required();
  skew->add_option("--d", d, "degree; default from the entries");
  skew->add_flag("--row-strict", row_strict, "input is a skew row-strict tableau");
  skew->add_option("--L", L, "cylindric width for --row-strict");

  auto* conj = app.add_subcommand("conjugate", "cylindric conjugation of a (d,L)-staircase");
  conj->add_option("staircase", common.input, "staircase, e.g. [5,4,2], or - for stdin")->required();
  conj->add_flag("--json", common.as_json, "emit JSON");
  conj->add_option("--d", d, "degree")->required();
  conj->add_option("--L", L, "width")->required();

  auto* count = app.add_subcommand("count", "count permutations avoiding d...1(d+1) and 1...(L+1)");
  count->add_flag("--json", common.as_json, "emit JSON");
  count->add_option("--d", d, "d")->required();
  count->add_option("--L", L, "L")->required();
  count->add_option("--n-max", n_max, "largest n")->capture_default_str();
  count->add_option("--routes", routes, "comma-separated: brute, pairs, trig")->capture_default_str();
  count->add_flag("--csv", csv, "CSV output");
  count->add_flag("--involutions", involutions, "count involutions (trig does not apply)");
  count->add_option("--threads", threads, "workers for the brute route")->capture_default_str();

  auto* asym = app.add_subcommand("asym", "growth rate and constant of the asymptotic formula");
  asym->add_flag("--json", common.as_json, "emit JSON");
  asym->add_option("--d", d, "d")->required();
  asym->add_option("--L", L, "L")->required();
  int asym_n = 0;
  asym->add_option("--n-max", asym_n, "also print exact/predicted for n = 1..n-max");

  auto* check = app.add_subcommand("check", "validate a filling, permutation, tableau, pair or dump");
  add_io(check);
  check->add_option("--d", d, "also test pattern avoidance / cylindric width");
  check->add_option("--L", L, "cylindric width");

  auto* rend = app.add_subcommand("render", "monospace picture of a growth diagram");
  add_io(rend);
  rend->add_option("--rule", rule_name, "rule when the input is a filling")->capture_default_str();
  rend->add_option("--d", d, "d when the input is a filling");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*grow) return cmd_grow(common, rule_name, d, boundary_only);
    if (*ungrow) return cmd_ungrow(common, rule_name, d, shape_text);
    if (*rs) return cmd_rs(common, d, L, inverse);
    if (*rsk_cmd) return cmd_rsk(common, d, inverse, shape_text);
    if (*cyl) return cmd_cylrsk(common, d, L, inverse);
    if (*skew) return cmd_skew_retype(common, to, d, row_strict, L);
    if (*conj) return cmd_conjugate(common, d, L);
    if (*count) return cmd_count(common, d, L, n_max, routes, csv, involutions, threads);
    if (*asym) return cmd_asym(common, d, L, asym_n);
    if (*check) return cmd_check(common, d, L);
    if (*rend) return cmd_render(common, rule_name, d);
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    if (!e.witness().empty()) std::cerr << "witness: " << witness_text(e.witness()) << '\n';
    return kExitDomain;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return kExitFormat;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kExitOther;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOther;
  }
  return kExitOther;
}
