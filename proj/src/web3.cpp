#include "webfold/web3.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

#include "webfold/error.hpp"
#include "webfold/web2.hpp"

namespace webfold {

int phi(int step) {
  if (step < -1 || step > 1) throw Error(ErrorCode::NotAWeb, "distance step " + std::to_string(step) + " is not in -1..1");
  return step + 2;
}

std::pair<int, int> lambda_pair(int step) {
  switch (step) {
    case -2: return {1, 1};
    case -1: return {1, 2};
    case 0: return {2, 2};
    case 1: return {2, 3};
    case 2: return {3, 3};
    default: throw Error(ErrorCode::NotAWeb, "half-distance step " + std::to_string(step) + " is not in -2..2");
  }
}

namespace {

void require_three_row_rectangle(const Tableau& t) {
  const Shape& s = t.shape();
  if (!s.is_straight() || s.rows() != 3 || !s.is_rectangle()) {
    throw Error(ErrorCode::WrongShape, "expected a 3 x n rectangle, got " + s.to_string());
  }
}

// rows[i] is the row of label i+1, which sits at boundary index i.
std::vector<Arc> arcs_of_rows(const std::vector<int>& rows) {
  std::vector<Arc> arcs;
  for (auto [l, r] : nearest_unmatched_pairs(rows, 1, 2)) arcs.push_back({l - 1, r - 1, ArcKind::first, false});
  for (auto [l, r] : nearest_unmatched_pairs(rows, 2, 3)) arcs.push_back({r - 1, l - 1, ArcKind::second, false});
  return arcs;
}

void require_web_boundary(const PlanarWeb& w) {
  if (w.n_boundary() % 3 != 0) throw Error(ErrorCode::NotAWeb, "boundary size " + std::to_string(w.n_boundary()) + " is not a multiple of 3");
  WebValidation report = validate_3web(w);
  if (!report.ok()) throw Error(ErrorCode::NotAWeb, report.violations.front());
}

Tableau rectangle_from_word(const std::string& word) {
  Tableau t = Tableau::from_word(word);
  require_three_row_rectangle(t);
  return t;
}

}  // namespace

GeneralizedMDiagram mdiagram_of_tableau(const Tableau& t) {
  require_three_row_rectangle(t);
  std::vector<int> rows;
  for (int v = 1; v <= t.size(); ++v) rows.push_back(t.row_of(v));
  return GeneralizedMDiagram(GeneralizedMDiagram::plain_boundary(t.size()), arcs_of_rows(rows));
}

PlanarWeb web_of_tableau(const Tableau& t) { return resolve(mdiagram_of_tableau(t)); }

Tableau tableau_of_web(const PlanarWeb& w) {
  require_web_boundary(w);
  const int n = w.n_boundary();
  std::vector<int> dist = w.distances_from(w.boundary_face(0));
  std::string word;
  for (int i = 1; i <= n; ++i) {
    int before = dist[w.boundary_face(i - 1)];
    int after = dist[w.boundary_face(i)];
    if (before < 0 || after < 0) throw Error(ErrorCode::NotAWeb, "boundary faces are not connected");
    word.push_back(static_cast<char>('0' + phi(before - after)));
  }
  return rectangle_from_word(word);
}

Tableau domino_of_symmetric_web(const PlanarWeb& w) {
  require_web_boundary(w);
  if (!is_symmetrical(w)) throw Error(ErrorCode::NotSymmetrical, "the web has no mirror symmetry");
  const int n = w.n_boundary();
  std::vector<int> h;
  for (int j = 0; j <= n / 2; ++j) {
    int d = w.web_distance(w.boundary_face(j), w.boundary_face(n - j));
    if (d < 0) throw Error(ErrorCode::NotAWeb, "boundary faces are not connected");
    h.push_back(d);
  }
  std::string word(n, '1');
  for (int j = 1; j <= n / 2; ++j) {
    auto [a, b] = lambda_pair(h[j] - h[j - 1]);
    word[n - 2 * j] = static_cast<char>('0' + a);
    word[n + 1 - 2 * j] = static_cast<char>('0' + b);
  }
  return rectangle_from_word(word);
}

// ---------------------------------------------------------------- dominoes

BlockSplit decompose_tiling(const std::vector<std::vector<int>>& labels, bool odd) {
  if (labels.size() != 3 || labels[0].empty()) throw Error(ErrorCode::NotDomino, "a tiling needs three nonempty rows");
  const int width = static_cast<int>(labels[0].size());
  int max_label = 0;
  for (const auto& row : labels) {
    if (static_cast<int>(row.size()) != width) throw Error(ErrorCode::NotDomino, "tiling rows differ in length");
    for (int k : row) {
      if (k < 0) throw Error(ErrorCode::NotDomino, "negative domino label");
      max_label = std::max(max_label, k);
    }
  }
  const int m = max_label;
  std::vector<std::vector<Cell>> cells(m + 1);
  for (int r = 1; r <= 3; ++r) {
    for (int c = 1; c <= width; ++c) cells[labels[r - 1][c - 1]].push_back({r, c});
  }
  for (int k = 0; k <= m; ++k) {
    const auto& cs = cells[k];
    if (k == 0) {
      if (cs.size() != (odd ? 1u : 0u)) throw Error(ErrorCode::NotDomino, "label 0 must mark exactly the lone cell");
      continue;
    }
    bool adjacent = cs.size() == 2 && std::abs(cs[0].row - cs[1].row) + std::abs(cs[0].col - cs[1].col) == 1;
    if (!adjacent) throw Error(ErrorCode::NotDomino, "label " + std::to_string(k) + " is not a domino");
  }

  auto horizontal = [&cells](int k) { return cells[k][0].row == cells[k][1].row; };
  auto top_row = [&cells](int k) { return std::min(cells[k][0].row, cells[k][1].row); };
  auto column = [&cells](int k) { return std::min(cells[k][0].col, cells[k][1].col); };

  BlockSplit split;
  split.rows.assign(m, 0);
  std::vector<bool> spanned(width + 1, false);  // spanned[c]: a domino covers columns c and c+1
  for (int k = 1; k <= m; ++k) {
    if (horizontal(k)) {
      spanned[column(k)] = true;
      split.rows[k - 1] = cells[k][0].row;
    }
  }

  int start = 1;
  for (int c = 1; c <= width; ++c) {
    if (c < width && spanned[c]) continue;
    DominoBlock block{3, start, c};
    std::vector<int> verticals;
    bool has_lone = false;
    for (int k = odd ? 0 : 1; k <= m; ++k) {
      Cell first = cells[k][0];
      if (first.col < start || first.col > c) continue;
      if (k == 0) has_lone = true;
      else if (!horizontal(k)) verticals.push_back(k);
    }
    std::sort(verticals.begin(), verticals.end(), [&](int a, int b) { return column(a) < column(b); });
    auto unrecognized = [&]() {
      return Error(ErrorCode::UnrecognizedBlock, "columns " + std::to_string(start) + ".." + std::to_string(c));
    };
    if (has_lone) {
      if (start != 1 || cells[0][0] != Cell{1, 1} || verticals.size() != 1 || top_row(verticals[0]) != 2 ||
          column(verticals[0]) != c) {
        throw unrecognized();
      }
      block.type = 0;
      split.vertical_pairs.emplace_back(verticals[0], 0);
      split.rows[verticals[0] - 1] = 3;
    } else if (!verticals.empty()) {
      if (verticals.size() != 2 || column(verticals[0]) != start || column(verticals[1]) != c ||
          top_row(verticals[0]) != top_row(verticals[1])) {
        throw unrecognized();
      }
      int r = top_row(verticals[0]);
      int lo = std::min(verticals[0], verticals[1]);
      int hi = std::max(verticals[0], verticals[1]);
      block.type = r == 1 ? 1 : 2;
      split.vertical_pairs.push_back(block.type == 1 ? std::pair{lo, hi} : std::pair{hi, lo});
      split.rows[lo - 1] = r;
      split.rows[hi - 1] = r + 1;
    }
    split.blocks.push_back(block);
    start = c + 1;
  }
  return split;
}

DominoDecomposition decompose_blocks(const Tableau& d) {
  require_three_row_rectangle(d);
  if (!is_domino(d)) throw Error(ErrorCode::NotDomino, d.to_string() + " is not a domino tableau");
  const int width = d.shape().outer_length(1);

  DominoDecomposition dd;
  dd.source = d;
  dd.odd = d.size() % 2 == 1;
  dd.n_labels = dd.odd ? (d.size() - 1) / 2 : d.size() / 2;
  dd.relabeled.assign(3, std::vector<int>(width, 0));
  for (int r = 1; r <= 3; ++r) {
    for (int c = 1; c <= width; ++c) {
      int e = d.at({r, c});
      dd.relabeled[r - 1][c - 1] = dd.odd ? e / 2 : (e + 1) / 2;
    }
  }
  BlockSplit split = decompose_tiling(dd.relabeled, dd.odd);
  dd.blocks = std::move(split.blocks);
  dd.vertical_pairs = std::move(split.vertical_pairs);
  dd.rows = std::move(split.rows);

  std::string word;
  for (int v : dd.rows) word.push_back(static_cast<char>('0' + v));
  if (!dd.odd) {
    dd.compression = Tableau::from_word(Shape::rectangle(3, width / 2), word);
  } else {
    int half = (width + 1) / 2;
    dd.compression = Tableau::from_word(Shape({half, half, half}, {1, 1}), word);
    dd.compression0 = Tableau::from_word(Shape({half, half, half}, {1}), "2" + word);
  }
  return dd;
}

GeneralizedMDiagram crossed_diagram(const DominoDecomposition& dd) {
  const int m = dd.n_labels;
  const int axis = dd.odd ? 1 : 0;
  std::vector<BoundaryCoord> boundary;
  for (int k = m; k >= 1; --k) boundary.push_back({k, true, Rational(-k)});
  if (dd.odd) boundary.push_back({0, false, Rational(0)});
  for (int k = 1; k <= m; ++k) boundary.push_back({k, false, Rational(k)});
  auto index_of = [m, axis](int label, bool primed) {
    if (label == 0) return m;
    return primed ? m - label : m - 1 + axis + label;
  };

  // Arcs of the compression on labels; label 0 only takes part in second arcs.
  struct LabelArc {
    int tail, head;
    ArcKind kind;
  };
  std::vector<LabelArc> base;
  for (auto [l, r] : nearest_unmatched_pairs(dd.rows, 1, 2)) base.push_back({l, r, ArcKind::first});
  std::vector<int> rows0 = dd.rows;
  int shift = 0;
  if (dd.odd) {
    rows0.insert(rows0.begin(), 2);
    shift = 1;
  }
  for (auto [l, r] : nearest_unmatched_pairs(rows0, 2, 3)) base.push_back({r - shift, l - shift, ArcKind::second});

  auto find_arc = [&base](int tail, int head) {
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (base[i].tail == tail && base[i].head == head) return static_cast<int>(i);
    }
    return -1;
  };
  auto fail = [](int k1, int k2, const std::string& why) {
    return Error(ErrorCode::VerticalPairNotAnArc, "(" + std::to_string(k1) + "," + std::to_string(k2) + ") " + why);
  };
  auto lo = [](const LabelArc& a) { return std::min(a.tail, a.head); };
  auto hi = [](const LabelArc& a) { return std::max(a.tail, a.head); };

  std::vector<bool> crossed(base.size(), false);
  for (auto [k1, k2] : dd.vertical_pairs) {
    int a = find_arc(k1, k2);
    if (a < 0) throw fail(k1, k2, "is not an arc of the compression's m-diagram");
    for (const LabelArc& other : base) {
      if (other.kind == base[a].kind && lo(other) < lo(base[a]) && hi(base[a]) < hi(other)) {
        throw fail(k1, k2, "lies under another arc of its kind");
      }
    }
    crossed[a] = true;
  }
  for (std::size_t a = 0; a < base.size(); ++a) {
    for (std::size_t b = a + 1; b < base.size(); ++b) {
      if (!crossed[a] || !crossed[b]) continue;
      bool share = base[a].tail == base[b].tail || base[a].tail == base[b].head || base[a].head == base[b].tail ||
                   base[a].head == base[b].head;
      bool interleave = (lo(base[a]) < lo(base[b]) && lo(base[b]) < hi(base[a]) && hi(base[a]) < hi(base[b])) ||
                        (lo(base[b]) < lo(base[a]) && lo(base[a]) < hi(base[b]) && hi(base[b]) < hi(base[a]));
      if (share || interleave) throw fail(base[a].tail, base[a].head, "meets another vertical pair");
    }
  }

  std::vector<Arc> arcs;
  for (std::size_t a = 0; a < base.size(); ++a) {
    const LabelArc& x = base[a];
    if (crossed[a]) {
      arcs.push_back({index_of(x.tail, false), index_of(x.head, true), x.kind, true});
      arcs.push_back({index_of(x.tail, true), index_of(x.head, false), x.kind, true});
    } else {
      arcs.push_back({index_of(x.tail, false), index_of(x.head, false), x.kind, false});
      arcs.push_back({index_of(x.tail, true), index_of(x.head, true), x.kind, false});
    }
  }
  return GeneralizedMDiagram(std::move(boundary), std::move(arcs));
}

GeneralizedMDiagram crossed_diagram(const Tableau& d) { return crossed_diagram(decompose_blocks(d)); }

PlanarWeb crossed_web(const Tableau& d) { return resolve(crossed_diagram(d)); }

}  // namespace webfold
