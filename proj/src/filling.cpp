#include "cylrsk/filling.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "cylrsk/errors.hpp"

namespace cylrsk {

// TypeSequence ----------------------------------------------------------------

TypeSequence TypeSequence::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  std::vector<Sign> word;
  if (text == ".") return TypeSequence{};
  for (char c : text) {
    if (c == '+') {
      word.push_back(Sign::Plus);
    } else if (c == '-') {
      word.push_back(Sign::Minus);
    } else {
      throw FormatError("type sequence may only contain '+' and '-': '" + std::string(text) + "'");
    }
  }
  return TypeSequence(std::move(word));
}

TypeSequence TypeSequence::split(int plus, int minus) {
  std::vector<Sign> word(static_cast<std::size_t>(plus), Sign::Plus);
  word.insert(word.end(), static_cast<std::size_t>(minus), Sign::Minus);
  return TypeSequence(std::move(word));
}

int TypeSequence::count_plus() const noexcept {
  return static_cast<int>(std::count(word_.begin(), word_.end(), Sign::Plus));
}

int TypeSequence::count_minus() const noexcept {
  return static_cast<int>(std::count(word_.begin(), word_.end(), Sign::Minus));
}

TypeSequence TypeSequence::reversed() const {
  std::vector<Sign> out;
  out.reserve(word_.size());
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) {
    out.push_back(*it == Sign::Plus ? Sign::Minus : Sign::Plus);
  }
  return TypeSequence(std::move(out));
}

std::string TypeSequence::str() const {
  if (word_.empty()) return ".";
  std::string out;
  for (Sign s : word_) out += static_cast<char>(s);
  return out;
}

// Shape -----------------------------------------------------------------------

Shape Shape::rectangle(int num_rows, int num_cols) {
  if (num_rows < 0 || num_cols < 0) throw DomainError("rectangle with negative side");
  if (num_rows == 0 || num_cols == 0) return Shape{};
  return Shape(Partition(std::vector<Int>(static_cast<std::size_t>(num_rows), num_cols)));
}

Shape Shape::from_type_sequence(const TypeSequence& w) {
  if (w.empty()) return Shape{};
  if (w[0] != Sign::Plus || w[w.size() - 1] != Sign::Minus) {
    throw DomainError("type sequence " + w.str() + " is not the outer boundary of a Young diagram");
  }
  Int x = w.count_minus();
  std::vector<Int> rows;
  for (Sign s : w.word()) {
    if (s == Sign::Plus) {
      rows.push_back(x);
    } else {
      --x;
    }
  }
  return Shape(Partition(std::move(rows)));
}

bool Shape::is_rectangle() const noexcept {
  return empty() || rows_[num_rows()] == rows_[1];
}

std::vector<Cell> Shape::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(cell_count()));
  for (int y = 1; y <= num_rows(); ++y) {
    for (int x = 1; x <= row_length(y); ++x) out.push_back({x, y});
  }
  return out;
}

std::vector<Cell> Shape::boundary_points() const {
  std::vector<Cell> out;
  int x = num_cols();
  out.push_back({x, 0});
  for (int y = 1; y <= num_rows(); ++y) {
    out.push_back({x, y});
    const int next = row_length(y + 1);
    while (x > next) out.push_back({--x, y});
  }
  return out;
}

// Filling ---------------------------------------------------------------------

Filling::Filling(Shape shape) : shape_(std::move(shape)) {
  for (int y = 1; y <= shape_.num_rows(); ++y) {
    rows_.emplace_back(static_cast<std::size_t>(shape_.row_length(y)), 0);
  }
}

Filling::Filling(Shape shape, std::vector<std::vector<Int>> rows_bottom_up)
    : shape_(std::move(shape)), rows_(std::move(rows_bottom_up)) {
  if (static_cast<int>(rows_.size()) != shape_.num_rows()) {
    throw DomainError("filling has " + std::to_string(rows_.size()) + " rows, shape has " +
                      std::to_string(shape_.num_rows()));
  }
  for (int y = 1; y <= shape_.num_rows(); ++y) {
    const auto& row = rows_[static_cast<std::size_t>(y - 1)];
    if (static_cast<int>(row.size()) != shape_.row_length(y)) {
      throw DomainError("filling row " + std::to_string(y) + " has " + std::to_string(row.size()) +
                        " entries, shape expects " + std::to_string(shape_.row_length(y)));
    }
    for (Int v : row) {
      if (v < 0) throw DomainError("filling entries must be nonnegative");
    }
  }
}

void Filling::set(int x, int y, Int value) {
  if (!shape_.contains_cell(x, y)) throw DomainError("cell outside the shape");
  if (value < 0) throw DomainError("filling entries must be nonnegative");
  rows_[static_cast<std::size_t>(y - 1)][static_cast<std::size_t>(x - 1)] = value;
}

Int Filling::total() const noexcept {
  Int t = 0;
  for (const auto& row : rows_) t = std::accumulate(row.begin(), row.end(), t);
  return t;
}

// Operations ------------------------------------------------------------------

TypeSequence boundary_type_sequence(const Shape& s) {
  std::vector<Sign> word;
  for (int y = 1; y <= s.num_rows(); ++y) {
    word.push_back(Sign::Plus);
    for (int k = s.row_length(y + 1); k < s.row_length(y); ++k) word.push_back(Sign::Minus);
  }
  return TypeSequence(std::move(word));
}

Shape rect_at(int x, int y) { return Shape::rectangle(y, x); }

namespace {

void require_sub(const Filling& f, const Shape& sub) {
  if (!f.shape().contains(sub)) {
    throw DomainError("sub-shape " + to_string(sub.rows()) + " is not contained in " +
                      to_string(f.shape().rows()));
  }
}

}  // namespace

Witness longest_ne_chain_cells(const Filling& f, const Shape& sub) {
  require_sub(f, sub);
  // best[y][x]: heaviest NE-chain inside Rect_(x,y); sub is down-closed so the
  // rectangle lies in sub whenever (x, y) is a cell of it.
  const int rows = sub.num_rows();
  const int cols = sub.num_cols();
  std::vector<std::vector<Int>> best(static_cast<std::size_t>(rows + 1),
                                     std::vector<Int>(static_cast<std::size_t>(cols + 1), 0));
  Cell top{0, 0};
  Int top_value = 0;
  for (int y = 1; y <= rows; ++y) {
    for (int x = 1; x <= sub.row_length(y); ++x) {
      const Int v = f.at(x, y) + std::max(best[y - 1][x], best[y][x - 1]);
      best[y][x] = v;
      if (v > top_value) {
        top_value = v;
        top = {x, y};
      }
    }
  }
  Witness chain;
  int x = top.x;
  int y = top.y;
  while (x > 0 && y > 0 && best[y][x] > 0) {
    if (f.at(x, y) > 0) chain.push_back({x, y});
    if (best[y - 1][x] >= best[y][x - 1]) {
      --y;
    } else {
      --x;
    }
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

Int longest_ne_chain(const Filling& f, const Shape& sub) {
  Int total = 0;
  for (const Cell& c : longest_ne_chain_cells(f, sub)) total += f.at(c.x, c.y);
  return total;
}

Int longest_ne_chain(const Filling& f) { return longest_ne_chain(f, f.shape()); }

Witness longest_se_chain_cells(const Filling& f, const Shape& sub) {
  require_sub(f, sub);
  // Nonzero cells, top row first; a predecessor in a se-chain is strictly
  // above and strictly left.
  std::vector<Cell> nz;
  for (int y = sub.num_rows(); y >= 1; --y) {
    for (int x = 1; x <= sub.row_length(y); ++x) {
      if (f.at(x, y) != 0) nz.push_back({x, y});
    }
  }
  std::vector<int> len(nz.size(), 1);
  std::vector<int> prev(nz.size(), -1);
  int best = -1;
  for (std::size_t i = 0; i < nz.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (nz[j].y > nz[i].y && nz[j].x < nz[i].x && len[j] + 1 > len[i]) {
        len[i] = len[j] + 1;
        prev[i] = static_cast<int>(j);
      }
    }
    if (best < 0 || len[i] > len[static_cast<std::size_t>(best)]) best = static_cast<int>(i);
  }
  Witness chain;
  for (int i = best; i >= 0; i = prev[static_cast<std::size_t>(i)]) {
    chain.push_back(nz[static_cast<std::size_t>(i)]);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

int longest_se_chain(const Filling& f, const Shape& sub) {
  return static_cast<int>(longest_se_chain_cells(f, sub).size());
}

int longest_se_chain(const Filling& f) { return longest_se_chain(f, f.shape()); }

std::optional<Witness> find_pattern(const Filling& f, int d) {
  if (d < 1) throw DomainError("pattern length d must be positive");
  for (const Cell& c : f.shape().cells()) {
    if (f.at(c.x, c.y) == 0 || c.x == 1 || c.y == 1) continue;
    Witness chain = longest_se_chain_cells(f, rect_at(c.x - 1, c.y - 1));
    if (static_cast<int>(chain.size()) >= d) {
      chain.resize(static_cast<std::size_t>(d));
      chain.push_back(c);
      return chain;
    }
  }
  return std::nullopt;
}

bool contains_pattern(const Filling& f, int d) { return find_pattern(f, d).has_value(); }

Filling reflect(const Filling& f) {
  Filling out(f.shape().conjugate());
  for (const Cell& c : f.shape().cells()) out.set(c.y, c.x, f.at(c.x, c.y));
  return out;
}

std::vector<Int> row_sums(const Filling& f) {
  std::vector<Int> out;
  for (const auto& row : f.rows_bottom_up()) out.push_back(std::accumulate(row.begin(), row.end(), Int{0}));
  return out;
}

std::vector<Int> col_sums(const Filling& f) {
  std::vector<Int> out(static_cast<std::size_t>(f.shape().num_cols()), 0);
  for (const auto& row : f.rows_bottom_up()) {
    for (std::size_t x = 0; x < row.size(); ++x) out[x] += row[x];
  }
  return out;
}

void check_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size() + 1, false);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[static_cast<std::size_t>(v)]) {
      throw DomainError("not a permutation: " + to_string(p));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation inverse(const Permutation& p) {
  check_permutation(p);
  Permutation out(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) out[static_cast<std::size_t>(p[j] - 1)] = static_cast<int>(j + 1);
  return out;
}

bool is_involution(const Permutation& p) { return inverse(p) == p; }

Filling permutation_to_filling(const Permutation& p) {
  check_permutation(p);
  const int n = static_cast<int>(p.size());
  Filling f(Shape::rectangle(n, n));
  for (int j = 1; j <= n; ++j) f.set(j, p[static_cast<std::size_t>(j - 1)], 1);
  return f;
}

Permutation filling_to_permutation(const Filling& f) {
  const Shape& s = f.shape();
  const int n = s.num_rows();
  if (!s.is_rectangle() || s.num_cols() != n) throw DomainError("permutation fillings are square");
  Permutation p(static_cast<std::size_t>(n), 0);
  for (const Cell& c : s.cells()) {
    const Int v = f.at(c.x, c.y);
    if (v == 0) continue;
    if (v != 1 || p[static_cast<std::size_t>(c.x - 1)] != 0) {
      throw DomainError("filling is not a permutation matrix", {c});
    }
    p[static_cast<std::size_t>(c.x - 1)] = c.y;
  }
  for (int v : p) {
    if (v == 0) throw DomainError("filling is not a permutation matrix");
  }
  check_permutation(p);
  return p;
}

// Text formats ----------------------------------------------------------------

std::string to_text(const Filling& f) {
  std::ostringstream out;
  out << to_string(f.shape().rows()) << '\n';
  for (int y = f.shape().num_rows(); y >= 1; --y) {
    const auto& row = f.rows_bottom_up()[static_cast<std::size_t>(y - 1)];
    for (std::size_t x = 0; x < row.size(); ++x) out << (x ? " " : "") << row[x];
    out << '\n';
  }
  return out.str();
}

std::string to_json(const Filling& f) {
  nlohmann::json j;
  j["shape"] = f.shape().rows().parts();
  j["rows"] = nlohmann::json::array();
  for (int y = f.shape().num_rows(); y >= 1; --y) j["rows"].push_back(f.rows_bottom_up()[static_cast<std::size_t>(y - 1)]);
  return j.dump();
}

namespace {

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

std::vector<Int> parse_row(const std::string& line) {
  std::vector<Int> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    Int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) throw FormatError("bad filling entry '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

Filling filling_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("shape") || !j.contains("rows")) {
    throw FormatError("filling JSON needs keys 'shape' and 'rows'");
  }
  Shape shape(Partition(j["shape"].get<std::vector<Int>>()));
  auto rows = j["rows"].get<std::vector<std::vector<Int>>>();
  std::reverse(rows.begin(), rows.end());
  return Filling(std::move(shape), std::move(rows));
}

}  // namespace

Filling parse_filling(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    try {
      return filling_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
      throw FormatError(std::string("filling JSON: ") + e.what());
    }
  }
  const auto lines = content_lines(text);
  if (lines.empty()) throw FormatError("empty filling");
  Shape shape(parse_partition(lines[0]));
  if (static_cast<int>(lines.size()) != shape.num_rows() + 1) {
    throw FormatError("filling with shape " + lines[0] + " needs " + std::to_string(shape.num_rows()) +
                      " rows, got " + std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<Int>> rows;
  for (std::size_t i = lines.size() - 1; i >= 1; --i) {
    rows.push_back(parse_row(lines[i]));
    const int y = static_cast<int>(rows.size());
    if (static_cast<int>(rows.back().size()) != shape.row_length(y)) {
      throw FormatError("row " + std::to_string(y) + " of the filling should have " +
                        std::to_string(shape.row_length(y)) + " entries");
    }
  }
  return Filling(std::move(shape), std::move(rows));
}

Permutation parse_permutation(std::string_view text) {
  std::string cleaned;
  for (char c : text) cleaned += (c == '[' || c == ']' || c == ',') ? ' ' : c;
  Permutation p;
  for (const auto& v : parse_row(cleaned)) p.push_back(static_cast<int>(v));
  check_permutation(p);
  return p;
}

std::string to_string(const Permutation& p) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
  return out.str();
}

}  // namespace cylrsk
