#pragma once

// 3-webs and 3-row rectangular tableaux: the distance word of a web, the web
// of a tableau through its m-diagram, and the symmetric-web / domino-tableau
// correspondence in both directions.

#include <optional>
#include <utility>
#include <vector>

#include "webfold/mdiagram.hpp"
#include "webfold/planar_web.hpp"
#include "webfold/tableau.hpp"

namespace webfold {

/// Maps a distance step -1, 0, 1 to the row letter 1, 2, 3.
int phi(int step);
/// Maps a half-distance step -2..2 to a pair of row letters.
std::pair<int, int> lambda_pair(int step);

/// First arcs (rows 1-2, left to right) and second arcs (row 3 to row 2,
/// right to left) on labels 1..N.
GeneralizedMDiagram mdiagram_of_tableau(const Tableau& t);

Tableau tableau_of_web(const PlanarWeb& w);
PlanarWeb web_of_tableau(const Tableau& t);
Tableau domino_of_symmetric_web(const PlanarWeb& w);

struct DominoBlock {
  int type = 3;  // 0, 1, 2 or 3
  int first_col = 1;
  int last_col = 1;
  bool operator==(const DominoBlock&) const = default;
};

struct DominoDecomposition {
  Tableau source;
  /// Domino labels 1..M by cell; the lone cell of an odd tableau holds 0.
  std::vector<std::vector<int>> relabeled;
  int n_labels = 0;
  bool odd = false;
  std::vector<DominoBlock> blocks;
  /// (k1,k2) ordered (min,max) for type 1, (max,min) for type 2, (k,0) for type 0.
  std::vector<std::pair<int, int>> vertical_pairs;
  /// v_1..v_M.
  std::vector<int> rows;
  Tableau compression;
  /// Odd case only: C with a 0 added at row 2, column 1. Entry i+1 stands for
  /// label i, so the 0 is stored as 1.
  std::optional<Tableau> compression0;
};

struct BlockSplit {
  std::vector<DominoBlock> blocks;
  std::vector<std::pair<int, int>> vertical_pairs;
  std::vector<int> rows;  // v_1..v_M
};

/// Splits a domino tiling of a 3-row grid into blocks. labels[r][c] names the
/// domino covering the cell; with `odd`, label 0 marks the single lone cell.
/// Accepts tilings that no standard tableau produces, so UnrecognizedBlock is
/// reachable here.
BlockSplit decompose_tiling(const std::vector<std::vector<int>>& labels, bool odd);

DominoDecomposition decompose_blocks(const Tableau& d);

/// Boundary M',...,1',[0,]1,...,M at abscissas -M..M.
GeneralizedMDiagram crossed_diagram(const DominoDecomposition& dd);
GeneralizedMDiagram crossed_diagram(const Tableau& d);
PlanarWeb crossed_web(const Tableau& d);

}  // namespace webfold
