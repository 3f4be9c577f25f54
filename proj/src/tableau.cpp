#include "webfold/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "webfold/error.hpp"

namespace webfold {

namespace {

void trim_zeros(std::vector<int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

bool weakly_decreasing(const std::vector<int>& v) {
  return std::is_sorted(v.rbegin(), v.rend());
}

std::vector<int> row_counts_of(std::string_view word, int& max_letter) {
  std::vector<int> counts;
  max_letter = 0;
  for (char ch : word) {
    if (ch < '1' || ch > '9') {
      throw Error(ErrorCode::InvalidTableau, "row-index words use the digits 1-9, got '" + std::string(1, ch) + "'");
    }
    int r = ch - '0';
    if (r > static_cast<int>(counts.size())) counts.resize(r, 0);
    ++counts[r - 1];
    max_letter = std::max(max_letter, r);
  }
  return counts;
}

Tableau straight_or_throw(const Tableau& t, const char* op) {
  if (!t.shape().is_straight()) {
    throw Error(ErrorCode::WrongShape, std::string(op) + " needs a straight shape, got " + t.shape().to_string());
  }
  return t;
}

// Shape of the cells of `t` holding entries <= k, joined with the inner
// partition of `t`.
std::vector<int> filled_rows(const Tableau& t, int k) {
  std::vector<int> rows;
  const Shape& s = t.shape();
  for (int r = 1; r <= s.rows(); ++r) {
    int len = s.inner_length(r);
    while (len < s.outer_length(r) && t.at({r, len + 1}) <= k) ++len;
    rows.push_back(len);
  }
  trim_zeros(rows);
  return rows;
}

}  // namespace

// ---------------------------------------------------------------- Shape

Shape::Shape(std::vector<int> outer, std::vector<int> inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
  trim_zeros(outer_);
  trim_zeros(inner_);
  auto positive = [](int x) { return x > 0; };
  if (!std::all_of(outer_.begin(), outer_.end(), positive) || !weakly_decreasing(outer_)) {
    throw Error(ErrorCode::InvalidTableau, "outer shape is not a partition");
  }
  if (!std::all_of(inner_.begin(), inner_.end(), positive) || !weakly_decreasing(inner_)) {
    throw Error(ErrorCode::InvalidTableau, "inner shape is not a partition");
  }
  if (inner_.size() > outer_.size()) {
    throw Error(ErrorCode::InvalidTableau, "inner shape does not fit inside outer shape");
  }
  for (std::size_t i = 0; i < inner_.size(); ++i) {
    if (inner_[i] > outer_[i]) throw Error(ErrorCode::InvalidTableau, "inner shape does not fit inside outer shape");
  }
}

Shape Shape::rectangle(int rows, int cols) { return Shape(std::vector<int>(rows, cols)); }

int Shape::outer_length(int row) const {
  return row >= 1 && row <= rows() ? outer_[row - 1] : 0;
}

int Shape::inner_length(int row) const {
  return row >= 1 && row <= static_cast<int>(inner_.size()) ? inner_[row - 1] : 0;
}

int Shape::size() const {
  return std::accumulate(outer_.begin(), outer_.end(), 0) - std::accumulate(inner_.begin(), inner_.end(), 0);
}

bool Shape::is_rectangle() const {
  return is_straight() && !outer_.empty() && outer_.front() == outer_.back();
}

bool Shape::in_outer(Cell c) const { return c.row >= 1 && c.col >= 1 && c.col <= outer_length(c.row); }

bool Shape::in_inner(Cell c) const { return c.row >= 1 && c.col >= 1 && c.col <= inner_length(c.row); }

std::vector<Cell> Shape::inner_corners() const {
  std::vector<Cell> corners;
  for (int r = 1; r <= static_cast<int>(inner_.size()); ++r) {
    if (inner_length(r + 1) < inner_length(r)) corners.push_back({r, inner_length(r)});
  }
  return corners;
}

std::string Shape::to_string() const {
  std::ostringstream os;
  auto dump = [&os](const std::vector<int>& v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
  };
  dump(outer_);
  if (!inner_.empty()) {
    os << '/';
    dump(inner_);
  }
  return os.str();
}

// ---------------------------------------------------------------- Tableau

Tableau::Tableau(Shape shape, std::vector<std::vector<int>> grid) : shape_(std::move(shape)), grid_(std::move(grid)) {
  const int n = shape_.size();
  if (static_cast<int>(grid_.size()) != shape_.rows()) {
    throw Error(ErrorCode::InvalidTableau, "grid has the wrong number of rows for " + shape_.to_string());
  }
  position_.assign(n, Cell{});
  std::vector<bool> seen(n + 1, false);
  for (int r = 1; r <= shape_.rows(); ++r) {
    if (static_cast<int>(grid_[r - 1].size()) != shape_.outer_length(r)) {
      throw Error(ErrorCode::InvalidTableau, "grid row " + std::to_string(r) + " has the wrong length");
    }
    for (int c = 1; c <= shape_.outer_length(r); ++c) {
      int v = at({r, c});
      if (shape_.in_inner({r, c})) {
        if (v != 0) throw Error(ErrorCode::InvalidTableau, "inner cells must be empty");
        continue;
      }
      if (v < 1 || v > n || seen[v]) {
        throw Error(ErrorCode::InvalidTableau, "entries must be exactly 1.." + std::to_string(n));
      }
      seen[v] = true;
      position_[v - 1] = {r, c};
      if (shape_.contains({r, c - 1}) && at({r, c - 1}) >= v) {
        throw Error(ErrorCode::InvalidTableau, "row " + std::to_string(r) + " is not increasing");
      }
      if (shape_.contains({r - 1, c}) && at({r - 1, c}) >= v) {
        throw Error(ErrorCode::InvalidTableau, "column " + std::to_string(c) + " is not increasing");
      }
    }
  }
}

Tableau Tableau::from_rows(std::vector<std::vector<int>> rows) {
  std::vector<int> outer;
  for (const auto& row : rows) outer.push_back(static_cast<int>(row.size()));
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  return Tableau(Shape(outer), std::move(rows));
}

bool is_lattice_word(std::string_view word) {
  std::vector<int> counts(10, 0);
  for (char ch : word) {
    if (ch < '1' || ch > '9') return false;
    int r = ch - '0';
    if (r > 1 && counts[r - 1] >= counts[r - 2]) return false;
    ++counts[r - 1];
  }
  return true;
}

Tableau Tableau::from_word(std::string_view word) {
  int max_letter = 0;
  std::vector<int> counts = row_counts_of(word, max_letter);
  if (!is_lattice_word(word)) {
    throw Error(ErrorCode::NonLatticeWord, "'" + std::string(word) + "' fails the lattice condition");
  }
  return from_word(Shape(counts), word);
}

Tableau Tableau::from_word(const Shape& shape, std::string_view word) {
  int max_letter = 0;
  row_counts_of(word, max_letter);
  if (static_cast<int>(word.size()) != shape.size() || max_letter > shape.rows()) {
    throw Error(ErrorCode::InvalidTableau, "word '" + std::string(word) + "' does not fit shape " + shape.to_string());
  }
  std::vector<std::vector<int>> grid(shape.rows());
  for (int r = 1; r <= shape.rows(); ++r) grid[r - 1].assign(shape.outer_length(r), 0);
  std::vector<int> next(shape.rows());
  for (int r = 1; r <= shape.rows(); ++r) next[r - 1] = shape.inner_length(r) + 1;
  for (std::size_t i = 0; i < word.size(); ++i) {
    int r = word[i] - '0';
    int& c = next[r - 1];
    if (c > shape.outer_length(r)) {
      throw Error(ErrorCode::InvalidTableau, "word '" + std::string(word) + "' overfills row " + std::to_string(r));
    }
    grid[r - 1][c - 1] = static_cast<int>(i) + 1;
    ++c;
  }
  return Tableau(shape, std::move(grid));
}

std::string Tableau::word() const {
  std::string w;
  w.reserve(position_.size());
  for (const Cell& c : position_) w.push_back(static_cast<char>('0' + c.row));
  return w;
}

std::string Tableau::to_string() const {
  std::ostringstream os;
  for (int r = 1; r <= shape_.rows(); ++r) {
    if (r > 1) os << '/';
    for (int c = 1; c <= shape_.outer_length(r); ++c) {
      if (c > 1) os << ',';
      if (shape_.in_inner({r, c})) {
        os << '.';
      } else {
        os << at({r, c});
      }
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- slides

Tableau slide(const Tableau& t, Cell corner) {
  const Shape& s = t.shape();
  if (!s.in_inner(corner) || s.in_inner({corner.row, corner.col + 1}) || s.in_inner({corner.row + 1, corner.col})) {
    throw Error(ErrorCode::NotACorner, "(" + std::to_string(corner.row) + "," + std::to_string(corner.col) +
                                           ") is not a removable inner corner of " + s.to_string());
  }
  auto grid = t.grid();
  auto value = [&](Cell c) { return grid[c.row - 1][c.col - 1]; };
  Cell hole = corner;
  for (;;) {
    Cell right{hole.row, hole.col + 1};
    Cell down{hole.row + 1, hole.col};
    bool has_right = s.in_outer(right);
    bool has_down = s.in_outer(down);
    if (!has_right && !has_down) break;
    Cell next = !has_down || (has_right && value(right) < value(down)) ? right : down;
    grid[hole.row - 1][hole.col - 1] = value(next);
    hole = next;
  }
  grid[hole.row - 1].pop_back();
  if (grid[hole.row - 1].empty()) grid.pop_back();

  std::vector<int> outer = s.outer();
  std::vector<int> inner = s.inner();
  --outer[hole.row - 1];
  --inner[corner.row - 1];
  return Tableau(Shape(outer, inner), std::move(grid));
}

Tableau rectify(const Tableau& t) {
  Tableau cur = t;
  while (!cur.shape().is_straight()) {
    cur = slide(cur, cur.shape().inner_corners().back());
  }
  return cur;
}

Tableau lower_part(const Tableau& t, int k) {
  if (k < 0 || k > t.size()) throw Error(ErrorCode::OutOfRange, "k=" + std::to_string(k) + " outside 0.." + std::to_string(t.size()));
  std::vector<int> outer = filled_rows(t, k);
  Shape shape(outer, t.shape().inner());
  std::vector<std::vector<int>> grid(shape.rows());
  for (int r = 1; r <= shape.rows(); ++r) {
    grid[r - 1].assign(t.grid()[r - 1].begin(), t.grid()[r - 1].begin() + shape.outer_length(r));
  }
  return Tableau(shape, std::move(grid));
}

Tableau upper_part(const Tableau& t, int k) {
  if (k < 0 || k > t.size()) throw Error(ErrorCode::OutOfRange, "k=" + std::to_string(k) + " outside 0.." + std::to_string(t.size()));
  Shape shape(t.shape().outer(), filled_rows(t, k));
  auto grid = t.grid();
  for (auto& row : grid) {
    for (int& v : row) v = v > k ? v - k : 0;
  }
  return Tableau(shape, std::move(grid));
}

// ---------------------------------------------------------------- promotion

Tableau promote(const Tableau& t) {
  straight_or_throw(t, "promotion");
  const int n = t.size();
  if (n == 0) return t;
  Tableau rest = rectify(upper_part(t, 1));
  auto grid = rest.grid();
  grid.resize(t.shape().rows());
  for (int r = 1; r <= t.shape().rows(); ++r) {
    if (static_cast<int>(grid[r - 1].size()) < t.shape().outer_length(r)) grid[r - 1].push_back(n);
  }
  return Tableau(t.shape(), std::move(grid));
}

Tableau promote_inverse(const Tableau& t) {
  straight_or_throw(t, "inverse promotion");
  const int n = t.size();
  if (n == 0) return t;
  auto grid = t.grid();
  Cell hole = t.position(n);
  // Reverse slide: the hole travels up/left, pulling in the larger neighbour.
  while (hole.row > 1 || hole.col > 1) {
    bool has_up = hole.row > 1;
    bool has_left = hole.col > 1;
    Cell up{hole.row - 1, hole.col};
    Cell left{hole.row, hole.col - 1};
    auto value = [&](Cell c) { return grid[c.row - 1][c.col - 1]; };
    Cell next = !has_left || (has_up && value(up) > value(left)) ? up : left;
    grid[hole.row - 1][hole.col - 1] = value(next);
    hole = next;
  }
  for (auto& row : grid) {
    for (int& v : row) ++v;
  }
  grid[0][0] = 1;
  return Tableau(t.shape(), std::move(grid));
}

namespace {

template <typename Op>
Tableau act_on_lower(const Tableau& t, int k, Op op) {
  straight_or_throw(t, "bounded promotion");
  if (k < 1 || k > t.size()) {
    throw Error(ErrorCode::OutOfRange, "k=" + std::to_string(k) + " outside 1.." + std::to_string(t.size()));
  }
  Tableau lower = op(lower_part(t, k));
  auto grid = t.grid();
  for (int r = 1; r <= lower.shape().rows(); ++r) {
    std::copy(lower.grid()[r - 1].begin(), lower.grid()[r - 1].end(), grid[r - 1].begin());
  }
  return Tableau(t.shape(), std::move(grid));
}

}  // namespace

Tableau promote_bounded(const Tableau& t, int k) { return act_on_lower(t, k, promote); }

Tableau promote_bounded_inverse(const Tableau& t, int k) { return act_on_lower(t, k, promote_inverse); }

Tableau evacuate(const Tableau& t) {
  straight_or_throw(t, "evacuation");
  Tableau cur = t;
  for (int k = t.size(); k >= 2; --k) cur = promote_bounded(cur, k);
  return cur;
}

Tableau partial_fold(const Tableau& t, int j) {
  straight_or_throw(t, "folding");
  const int n = t.size();
  if (j < 1 || j > n / 2) {
    throw Error(ErrorCode::OutOfRange, "j=" + std::to_string(j) + " outside 1.." + std::to_string(n / 2));
  }
  Tableau cur = t;
  for (int k = n; k >= n - 2 * j + 2; k -= 2) cur = promote_bounded(cur, k);
  return cur;
}

Tableau fold(const Tableau& t) {
  straight_or_throw(t, "folding");
  return t.size() < 2 ? t : partial_fold(t, t.size() / 2);
}

Tableau unfold(const Tableau& t) {
  straight_or_throw(t, "unfolding");
  const int n = t.size();
  Tableau cur = t;
  if (n < 2) return cur;
  for (int k = n - 2 * (n / 2) + 2; k <= n; k += 2) cur = promote_bounded_inverse(cur, k);
  return cur;
}

// ---------------------------------------------------------------- symmetry

Tableau rotate180_complement(const Tableau& t) {
  if (!t.shape().is_rectangle()) {
    throw Error(ErrorCode::NotRectangular, "shape " + t.shape().to_string() + " is not a rectangle");
  }
  const int rows = t.shape().rows();
  const int cols = t.shape().outer_length(1);
  const int n = t.size();
  std::vector<std::vector<int>> grid(rows, std::vector<int>(cols));
  for (int r = 1; r <= rows; ++r) {
    for (int c = 1; c <= cols; ++c) grid[rows - r][cols - c] = complement(t.at({r, c}), n);
  }
  return Tableau(t.shape(), std::move(grid));
}

bool is_rotationally_symmetric(const Tableau& t) { return rotate180_complement(t) == t; }

bool is_domino(const Tableau& t) {
  const int n = t.size();
  auto adjacent = [&](int a, int b) {
    Cell p = t.position(a);
    Cell q = t.position(b);
    return std::abs(p.row - q.row) + std::abs(p.col - q.col) == 1;
  };
  for (int first = n % 2 == 0 ? 1 : 2; first + 1 <= n; first += 2) {
    if (!adjacent(first, first + 1)) return false;
  }
  return true;
}

}  // namespace webfold
