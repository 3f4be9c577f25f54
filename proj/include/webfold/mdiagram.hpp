#pragma once

// Directed arc diagrams over a boundary line, drawn with exact semicircles.

#include <boost/dynamic_bitset.hpp>
#include <boost/rational.hpp>
#include <string>
#include <utility>
#include <vector>

#include "webfold/planar_web.hpp"

namespace webfold {

using Rational = boost::rational<long long>;

struct BoundaryCoord {
  int index = 0;
  bool primed = false;
  Rational x;

  std::string label() const { return std::to_string(index) + (primed ? "'" : ""); }
  bool operator==(const BoundaryCoord&) const = default;
};

enum class ArcKind { first, second };

/// tail and head index into the diagram's boundary sequence.
struct Arc {
  int tail = 0;
  int head = 0;
  ArcKind kind = ArcKind::first;
  bool crossed = false;
  bool operator==(const Arc&) const = default;
};

class GeneralizedMDiagram {
 public:
  GeneralizedMDiagram() = default;
  /// Boundary must be sorted by strictly increasing x. Every vertex must be a
  /// source of degree 1 or a sink of degree 2.
  GeneralizedMDiagram(std::vector<BoundaryCoord> boundary, std::vector<Arc> arcs);

  /// A plain diagram on labels 1..n at x = 1..n.
  static std::vector<BoundaryCoord> plain_boundary(int n);

  const std::vector<BoundaryCoord>& boundary() const { return boundary_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  int n_boundary() const { return static_cast<int>(boundary_.size()); }

  /// Boundary index carrying `label` ("3", "3'"), or -1.
  int find(const std::string& label) const;
  bool is_sink(int vertex) const { return in_degree_[vertex] == 2; }
  /// The arcs ending at a sink, or the single arc leaving a source.
  const std::vector<int>& arcs_at(int vertex) const { return incident_[vertex]; }

  Rational tail_x(int arc) const { return boundary_[arcs_[arc].tail].x; }
  Rational head_x(int arc) const { return boundary_[arcs_[arc].head].x; }
  Rational left_x(int arc) const { return std::min(tail_x(arc), head_x(arc)); }
  Rational right_x(int arc) const { return std::max(tail_x(arc), head_x(arc)); }
  /// Strictly between the endpoints of `arc`.
  bool spans(int arc, const Rational& x) const { return left_x(arc) < x && x < right_x(arc); }

  std::string arc_label(int arc) const;

  bool operator==(const GeneralizedMDiagram& o) const { return boundary_ == o.boundary_ && arcs_ == o.arcs_; }

 private:
  std::vector<BoundaryCoord> boundary_;
  std::vector<Arc> arcs_;
  std::vector<int> in_degree_;
  std::vector<std::vector<int>> incident_;
};

struct Crossing {
  int arc_a = 0;  // arc_a < arc_b
  int arc_b = 0;
  Rational x;
  Rational height_sq;
};

bool arcs_cross(const GeneralizedMDiagram& m, int a, int b);

/// All crossing pairs ordered by (arc_a, arc_b). Throws ConcurrentArcs when
/// three arcs pass through one point.
std::vector<Crossing> crossings(const GeneralizedMDiagram& m);

/// Crossing ids met along `arc` from tail to head.
std::vector<int> crossings_along(const GeneralizedMDiagram& m, const std::vector<Crossing>& cs, int arc);

/// Resolves sinks and crossings into trivalent vertices. Boundary vertex i of
/// the result is boundary position i of the diagram, labeled i+1.
PlanarWeb resolve(const GeneralizedMDiagram& m);

/// Arc sets above the faces of resolve(m), plus the queries built on them.
class ArcFaceIndex {
 public:
  ArcFaceIndex(const GeneralizedMDiagram& m, const PlanarWeb& w);

  const boost::dynamic_bitset<>& arc_set(int face) const;
  std::vector<int> arcs_above(int face) const;
  int arc_distance(int x, int y) const;
  /// Intersecting arc pairs {a,b} that coherently separate the faces.
  std::vector<std::pair<int, int>> coherent_separators(int x, int y) const;
  /// True when for some crossed pair exactly one of its two arcs is above.
  bool is_between_vertical_pair(int face) const;
  int epsilon(int face) const { return is_between_vertical_pair(face) ? 1 : 0; }

  /// Mirror image of each arc across the vertical axis of the boundary, or -1
  /// when the diagram has no mirror arc.
  const std::vector<int>& mirror_arcs() const { return mirror_; }
  bool is_mirror_symmetric() const;
  /// The face whose arc set is the mirror of `face`'s. NotSymmetrical if the
  /// diagram is not mirror symmetric, UnknownFace if no face matches.
  int mirror_face(int face) const;

 private:
  struct Pair {
    int a, b;
    // (inside a, inside b) bits of the two regions joined by resolving them
    std::pair<bool, bool> r_ad, r_bc;
  };
  void check_face(int face) const;

  GeneralizedMDiagram m_;
  int exterior_ = -1;
  std::vector<boost::dynamic_bitset<>> sets_;
  std::vector<Pair> pairs_;
  std::vector<int> mirror_;
  std::vector<std::pair<int, int>> crossed_pairs_;
};

}  // namespace webfold
