#pragma once

// Partitions, skew shapes and standard Young tableaux, together with the
// jeu de taquin operators built on them: slides, rectification, promotion,
// evacuation and folding.
//
// Cells are indexed (row, column) from 1. A tableau of size N always holds
// exactly the entries 1..N.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace webfold {

struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

/// The skew shape outer/inner. A straight shape has an empty inner partition.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<int> outer, std::vector<int> inner = {});

  static Shape rectangle(int rows, int cols);

  const std::vector<int>& outer() const { return outer_; }
  const std::vector<int>& inner() const { return inner_; }

  int rows() const { return static_cast<int>(outer_.size()); }
  int outer_length(int row) const;
  int inner_length(int row) const;
  int size() const;

  bool is_straight() const { return inner_.empty(); }
  bool is_rectangle() const;

  bool in_outer(Cell c) const;
  bool in_inner(Cell c) const;
  /// True for the cells of outer/inner.
  bool contains(Cell c) const { return in_outer(c) && !in_inner(c); }

  /// Cells of the inner partition whose right and lower neighbours are not
  /// in the inner partition.
  std::vector<Cell> inner_corners() const;

  std::string to_string() const;

  bool operator==(const Shape&) const = default;

 private:
  std::vector<int> outer_;
  std::vector<int> inner_;
};

class Tableau {
 public:
  Tableau() = default;

  /// grid[r] has outer_length(r+1) entries; inner cells hold 0.
  Tableau(Shape shape, std::vector<std::vector<int>> grid);

  /// Straight-shape tableau from its rows.
  static Tableau from_rows(std::vector<std::vector<int>> rows);

  /// Decodes a straight-shape row-index word. The shape is inferred from the
  /// letter counts and the lattice condition is enforced.
  static Tableau from_word(std::string_view word);

  /// Decodes a row-index word on an explicit (possibly skew) shape.
  static Tableau from_word(const Shape& shape, std::string_view word);

  const Shape& shape() const { return shape_; }
  int size() const { return static_cast<int>(position_.size()); }

  /// Entry at a cell of the shape; 0 for cells of the inner partition.
  int at(Cell c) const { return grid_[c.row - 1][c.col - 1]; }
  Cell position(int value) const { return position_[value - 1]; }
  int row_of(int value) const { return position_[value - 1].row; }

  const std::vector<std::vector<int>>& grid() const { return grid_; }

  /// Row-index word w_1 ... w_N as ASCII digits.
  std::string word() const;

  /// Rows joined by '/', entries by ',', inner cells as '.'.
  std::string to_string() const;

  bool operator==(const Tableau& other) const {
    return shape_ == other.shape_ && grid_ == other.grid_;
  }

 private:
  Shape shape_;
  std::vector<std::vector<int>> grid_;
  std::vector<Cell> position_;
};

/// The complement N + 1 - k.
constexpr int complement(int k, int n) { return n + 1 - k; }

/// True when every prefix has at least as many r's as (r+1)'s.
bool is_lattice_word(std::string_view word);

/// One jeu de taquin slide into a removable corner of the inner partition.
Tableau slide(const Tableau& t, Cell corner);

/// Slides until the shape is straight, always using the lowest inner corner.
Tableau rectify(const Tableau& t);

/// T_{<=k}, the subtableau of entries at most k.
Tableau lower_part(const Tableau& t, int k);

/// T_{>k} - k, the entries above k relabelled down to 1..N-k.
Tableau upper_part(const Tableau& t, int k);

Tableau promote(const Tableau& t);
Tableau promote_bounded(const Tableau& t, int k);
Tableau promote_inverse(const Tableau& t);
Tableau promote_bounded_inverse(const Tableau& t, int k);

/// P_1 o P_2 o ... o P_N.
Tableau evacuate(const Tableau& t);

/// f^j = P_{N-2j+2} o ... o P_{N-2} o P_N.
Tableau partial_fold(const Tableau& t, int j);
Tableau fold(const Tableau& t);
Tableau unfold(const Tableau& t);

Tableau rotate180_complement(const Tableau& t);
bool is_rotationally_symmetric(const Tableau& t);

/// Consecutive pairs (2j-1, 2j) adjacent when N is even, (2j, 2j+1) when N is
/// odd with 1 left alone.
bool is_domino(const Tableau& t);

}  // namespace webfold
