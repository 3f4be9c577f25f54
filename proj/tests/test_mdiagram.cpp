#include "support.hpp"
#include "webfold/mdiagram.hpp"
#include "webfold/web3.hpp"

using namespace webfold;
using webfold::test::code_of;

namespace {

std::vector<BoundaryCoord> at(std::vector<int> xs) {
  std::vector<BoundaryCoord> out;
  for (std::size_t i = 0; i < xs.size(); ++i) out.push_back({static_cast<int>(i) + 1, false, Rational(xs[i])});
  return out;
}

int arc_named(const GeneralizedMDiagram& m, const std::string& label) {
  for (int a = 0; a < static_cast<int>(m.arcs().size()); ++a) {
    if (m.arc_label(a) == label) return a;
  }
  FAIL("no arc " << label);
  return -1;
}

const char* kFig1 = "111122213132223333";

}  // namespace

TEST_CASE("m-diagram of the running example") {
  GeneralizedMDiagram m = mdiagram_of_tableau(Tableau::from_word(kFig1));
  CHECK(m.arcs().size() == 12);
  CHECK(m.arc_label(0) == "(4,5)");
  CHECK(crossings(m).size() == 10);
  int sinks = 0;
  for (int v = 0; v < m.n_boundary(); ++v) sinks += m.is_sink(v);
  CHECK(sinks == 6);
  PlanarWeb w = resolve(m);
  CHECK(w.n_vertices() == 44);
  CHECK(w.edges().size() == 66);
  CHECK(validate_3web(w).ok());
}

TEST_CASE("crossed arcs meet on the axis") {
  GeneralizedMDiagram m = crossed_diagram(fold(Tableau::from_word(kFig1)));
  int a = arc_named(m, "(3,4')");
  int b = arc_named(m, "(3',4)");
  CHECK(m.arcs()[a].crossed);
  CHECK(arcs_cross(m, a, b));
  for (const Crossing& c : crossings(m)) {
    if (c.arc_a == std::min(a, b) && c.arc_b == std::max(a, b)) {
      CHECK(c.x == Rational(0));
      CHECK(c.height_sq == Rational(12));
    }
  }
  CHECK(crossings(m).size() == 10);
}

TEST_CASE("crossing points are exact rationals") {
  // Arcs over [0,3] and [1,4] meet above x = 2 at height sqrt(2).
  GeneralizedMDiagram m(at({0, 1, 3, 4, 5, 6}), {{0, 2, ArcKind::first, false},
                                                  {1, 3, ArcKind::first, false},
                                                  {4, 2, ArcKind::second, false},
                                                  {5, 3, ArcKind::second, false}});
  std::vector<Crossing> cs = crossings(m);
  REQUIRE(cs.size() == 3);
  CHECK(cs[0].x == Rational(2));
  CHECK(cs[0].height_sq == Rational(2));
  CHECK(crossings_along(m, cs, 1).size() == 2);
}

TEST_CASE("arcs sharing an endpoint do not cross") {
  GeneralizedMDiagram m = mdiagram_of_tableau(Tableau::from_word("123"));
  CHECK_FALSE(arcs_cross(m, 0, 1));
  CHECK(crossings(m).empty());
}

TEST_CASE("three arcs through one point") {
  // Circles centred at 1, 4 and 11 with radii 7, 8 and 13 all pass through (0, sqrt 48).
  std::vector<Arc> arcs{{0, 3, ArcKind::first, false}, {1, 5, ArcKind::first, false}, {2, 7, ArcKind::first, false},
                        {4, 3, ArcKind::second, false}, {6, 5, ArcKind::second, false}, {8, 7, ArcKind::second, false}};
  GeneralizedMDiagram m(at({-6, -4, -2, 8, 9, 12, 13, 24, 25}), arcs);
  CHECK(code_of([&] { crossings(m); }) == ErrorCode::ConcurrentArcs);
  CHECK(code_of([&] { resolve(m); }) == ErrorCode::ConcurrentArcs);
}

TEST_CASE("boundary degrees") {
  CHECK(code_of([] {
          GeneralizedMDiagram(at({1, 2}), {{0, 1, ArcKind::first, false}});
        }) == ErrorCode::InvalidBoundaryDegrees);
  CHECK(code_of([] {
          GeneralizedMDiagram(at({1, 2, 3}), {{0, 1, ArcKind::first, false}, {0, 2, ArcKind::first, false}});
        }) == ErrorCode::InvalidBoundaryDegrees);
  CHECK(code_of([] { GeneralizedMDiagram(at({2, 1}), {}); }) == ErrorCode::InvalidDiagram);
  CHECK(code_of([] { GeneralizedMDiagram(at({1, 2}), {{0, 0, ArcKind::first, false}}); }) ==
        ErrorCode::InvalidDiagram);
}

TEST_CASE("a resolution can fail to be a 3-web") {
  std::vector<Arc> arcs{{2, 0, ArcKind::first, false}, {3, 0, ArcKind::first, false},
                        {4, 1, ArcKind::first, false}, {5, 1, ArcKind::first, false}};
  PlanarWeb w = resolve(GeneralizedMDiagram(at({1, 2, 3, 4, 5, 6}), arcs));
  CHECK_FALSE(validate_3web(w).ok());
}

TEST_CASE("arc sets above faces of the crossed diagram") {
  GeneralizedMDiagram m = crossed_diagram(fold(Tableau::from_word(kFig1)));
  PlanarWeb w = resolve(m);
  ArcFaceIndex idx(m, w);
  CHECK(idx.is_mirror_symmetric());
  CHECK(idx.arc_set(w.boundary_face(0)).none());
  int between = 0;
  for (int f = 0; f < w.n_faces(); ++f) {
    if (f == w.exterior_face()) continue;
    between += idx.epsilon(f);
    int g = idx.mirror_face(f);
    CHECK(idx.mirror_face(g) == f);
    CHECK(w.web_distance(f, g) == idx.arc_distance(f, g) - idx.epsilon(f));
    for (int h = 0; h < w.n_faces(); ++h) {
      if (h == w.exterior_face()) continue;
      CHECK(w.web_distance(f, h) >= idx.arc_distance(f, h) - static_cast<int>(idx.coherent_separators(f, h).size()));
    }
  }
  CHECK(between == 6);
  // Between B_9 and B_10 sits the axis of the 18-point web, under both crossed pairs.
  CHECK(idx.arcs_above(w.boundary_face(9)).size() == 4);
}

TEST_CASE("mirror faces need a symmetric diagram") {
  GeneralizedMDiagram m = mdiagram_of_tableau(Tableau::from_word("112323"));
  ArcFaceIndex idx(m, resolve(m));
  CHECK_FALSE(idx.is_mirror_symmetric());
  CHECK(code_of([&] { idx.mirror_face(0); }) == ErrorCode::NotSymmetrical);
  CHECK(code_of([&] { idx.arc_set(1000); }) == ErrorCode::UnknownFace);
}
