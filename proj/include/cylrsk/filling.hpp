#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cylrsk/partition.hpp"
#include "cylrsk/types.hpp"

namespace cylrsk {

enum class Sign : char { Plus = '+', Minus = '-' };

/// Word over {+,-}.  '+' is a unit step up, '-' a unit step left.
class TypeSequence {
 public:
  TypeSequence() = default;
  explicit TypeSequence(std::vector<Sign> word) : word_(std::move(word)) {}
  /// "+-+--": throws FormatError on other characters.  "." is the empty word.
  static TypeSequence parse(std::string_view text);
  /// +^plus -^minus
  static TypeSequence split(int plus, int minus);

  std::size_t size() const noexcept { return word_.size(); }
  bool empty() const noexcept { return word_.empty(); }
  Sign operator[](std::size_t i) const { return word_.at(i); }
  const std::vector<Sign>& word() const noexcept { return word_; }
  int count_plus() const noexcept;
  int count_minus() const noexcept;

  /// Reverse the word and swap '+' with '-'.
  TypeSequence reversed() const;
  /// "." for the empty word.
  std::string str() const;

  bool operator==(const TypeSequence&) const = default;

 private:
  std::vector<Sign> word_;
};

/// Young diagram in the first quadrant; row y (1-based, from the x-axis up)
/// holds rows[y] cells.
class Shape {
 public:
  Shape() = default;
  explicit Shape(Partition rows) : rows_(std::move(rows)) {}
  static Shape rectangle(int num_rows, int num_cols);
  /// Inverse of boundary_type_sequence; throws DomainError unless the word is
  /// empty or starts with '+' and ends with '-'.
  static Shape from_type_sequence(const TypeSequence& w);

  const Partition& rows() const noexcept { return rows_; }
  int num_rows() const noexcept { return rows_.length(); }
  int num_cols() const noexcept { return static_cast<int>(rows_[1]); }
  int row_length(int y) const noexcept { return static_cast<int>(rows_[y]); }
  int cell_count() const noexcept { return static_cast<int>(rows_.size()); }
  bool empty() const noexcept { return rows_.empty(); }
  bool is_rectangle() const noexcept;

  bool contains_cell(int x, int y) const noexcept {
    return y >= 1 && y <= num_rows() && x >= 1 && x <= row_length(y);
  }
  /// Largest x of a lattice point on height y (0 <= y <= num_rows()).
  int lattice_width(int y) const noexcept { return row_length(y == 0 ? 1 : y); }
  bool contains_point(int x, int y) const noexcept {
    return y >= 0 && y <= num_rows() && x >= 0 && x <= lattice_width(y);
  }
  bool contains(const Shape& sub) const noexcept { return contained_in(sub.rows_, rows_); }

  /// Cells in row-major order, bottom row first, left to right.
  std::vector<Cell> cells() const;
  /// Lattice points of the outer boundary, from the positive x-axis to the
  /// positive y-axis; (0,0) alone for the empty shape.
  std::vector<Cell> boundary_points() const;

  Shape conjugate() const { return Shape(cylrsk::conjugate(rows_)); }

  bool operator==(const Shape&) const = default;

 private:
  Partition rows_;
};

/// Nonnegative integer entries on the cells of a shape.
class Filling {
 public:
  Filling() = default;
  /// All-zero filling.
  explicit Filling(Shape shape);
  /// `rows_bottom_up[y-1][x-1]` is the entry of cell (x, y).
  Filling(Shape shape, std::vector<std::vector<Int>> rows_bottom_up);

  const Shape& shape() const noexcept { return shape_; }
  Int at(int x, int y) const { return rows_.at(y - 1).at(x - 1); }
  void set(int x, int y, Int value);
  const std::vector<std::vector<Int>>& rows_bottom_up() const noexcept { return rows_; }
  Int total() const noexcept;

  bool operator==(const Filling&) const = default;

 private:
  Shape shape_;
  std::vector<std::vector<Int>> rows_;
};

/// One-line notation, values 1..n.
using Permutation = std::vector<int>;

// Operations ------------------------------------------------------------------

TypeSequence boundary_type_sequence(const Shape& s);

/// Max entry sum of a NE-chain inside `sub` (which must lie in f's shape).
Int longest_ne_chain(const Filling& f, const Shape& sub);
Int longest_ne_chain(const Filling& f);
/// Cells of one maximal NE-chain, in chain order.
Witness longest_ne_chain_cells(const Filling& f, const Shape& sub);

/// Max number of nonzero entries in a se-chain inside `sub`.
int longest_se_chain(const Filling& f, const Shape& sub);
int longest_se_chain(const Filling& f);
Witness longest_se_chain_cells(const Filling& f, const Shape& sub);

/// Sub-shape Rect_p for a lattice point p = (x, y).
Shape rect_at(int x, int y);

/// d+1 cells forming an occurrence of d...1(d+1), or nullopt.
std::optional<Witness> find_pattern(const Filling& f, int d);
bool contains_pattern(const Filling& f, int d);

/// Reflection across y = x; the shape is conjugated.
Filling reflect(const Filling& f);

/// Row sums bottom to top, column sums left to right.
std::vector<Int> row_sums(const Filling& f);
std::vector<Int> col_sums(const Filling& f);

/// Throws DomainError if p is not a permutation of 1..n.
void check_permutation(const Permutation& p);
Permutation inverse(const Permutation& p);
bool is_involution(const Permutation& p);

/// n x n filling with a 1 at (x = j, y = p(j)).
Filling permutation_to_filling(const Permutation& p);
/// Throws DomainError unless f is a square 0/1 filling with unit line sums.
Permutation filling_to_permutation(const Filling& f);

// Text formats ----------------------------------------------------------------

/// Line 1: shape; then one line per row, top row first.
std::string to_text(const Filling& f);
std::string to_json(const Filling& f);
/// Accepts the text form or the JSON mirror {"shape": [...], "rows": [...]}.
Filling parse_filling(std::string_view text);

/// "3 1 2", "[3,1,2]" or "3,1,2".
Permutation parse_permutation(std::string_view text);
std::string to_string(const Permutation& p);

}  // namespace cylrsk
