#include "support.hpp"
#include "webfold/mdiagram.hpp"
#include "webfold/planar_web.hpp"
#include "webfold/web3.hpp"

using namespace webfold;
using webfold::test::code_of;

namespace {

// Three boundary sources joined to one internal sink, numbered by hand.
PlanarWeb hand_tripod() {
  std::vector<WebEdge> edges{
      {0, 1, EdgeTag::boundary, {}}, {1, 2, EdgeTag::boundary, {}}, {2, 0, EdgeTag::boundary, {}},
      {2, 3, EdgeTag::arc, {}},      {0, 3, EdgeTag::arc, {}},      {1, 3, EdgeTag::arc, {}},
  };
  // East, up, west at each boundary vertex; the sink sees 2, 0, 1 counterclockwise.
  std::vector<std::vector<int>> rotation{{0, 8, 5}, {2, 10, 1}, {4, 6, 3}, {7, 9, 11}};
  return PlanarWeb(3, 4, std::move(edges), std::move(rotation));
}

GeneralizedMDiagram diagram(int n, std::vector<std::pair<int, int>> arcs) {
  std::vector<Arc> out;
  for (auto [t, h] : arcs) out.push_back({t - 1, h - 1, ArcKind::first, false});
  return GeneralizedMDiagram(GeneralizedMDiagram::plain_boundary(n), std::move(out));
}

}  // namespace

TEST_CASE("the tripod") {
  PlanarWeb w = hand_tripod();
  CHECK(w.n_internal() == 1);
  CHECK(w.n_faces() == 4);
  CHECK(validate_3web(w).ok());
  CHECK(w.web_degree(3) == 3);
  CHECK(w.web_distance(w.boundary_face(1), w.boundary_face(0)) == 1);
  CHECK(w.web_distance(w.boundary_face(1), w.boundary_face(2)) == 1);
  CHECK(w.distances_from(w.boundary_face(0))[w.exterior_face()] == -1);
  CHECK(canonical(w) == canonical(web_of_tableau(Tableau::from_word("123"))));
  CHECK(canonical(rotate(w)) == canonical(w));
  CHECK(is_symmetrical(w));
}

TEST_CASE("canonical form ignores vertex and edge numbering") {
  PlanarWeb w = web_of_tableau(Tableau::from_word("112323"));
  std::vector<WebEdge> edges = w.edges();
  std::reverse(edges.begin(), edges.end());
  const int ne = static_cast<int>(edges.size());
  auto remap = [ne](int d) { return 2 * (ne - 1 - d / 2) + d % 2; };
  std::vector<std::vector<int>> rotation(w.n_vertices());
  for (int v = 0; v < w.n_vertices(); ++v) {
    for (int d : w.rotation(v)) rotation[v].push_back(remap(d));
  }
  // Swap the two last internal vertices.
  int a = w.n_vertices() - 1, b = w.n_vertices() - 2;
  std::swap(rotation[a], rotation[b]);
  for (auto& e : edges) {
    for (int* end : {&e.from, &e.to}) {
      if (*end == a) *end = b;
      else if (*end == b) *end = a;
    }
  }
  PlanarWeb shuffled(w.n_boundary(), w.n_vertices(), std::move(edges), std::move(rotation));
  CHECK(canonical(shuffled) == canonical(w));
  CHECK(canonical(shuffled).digest == canonical(w).digest);
  CHECK(canonical(w).digest.size() == 64);
}

TEST_CASE("rotation has order N and reflection is an involution") {
  PlanarWeb w = web_of_tableau(Tableau::from_word("111122213132223333"));
  PlanarWeb r = w;
  for (int i = 0; i < 18; ++i) {
    if (i > 0) CHECK_FALSE(canonical(r) == canonical(w));
    r = rotate(r);
  }
  CHECK(canonical(r) == canonical(w));
  CHECK(canonical(reflect(reflect(w))) == canonical(w));
  CHECK(is_symmetrical(w));
}

TEST_CASE("Euler characteristic and face degrees of a resolved web") {
  PlanarWeb w = web_of_tableau(Tableau::from_word("111122213132223333"));
  int e = static_cast<int>(w.edges().size());
  CHECK(w.n_vertices() - e + w.n_faces() == 2);
  for (int f = 0; f < w.n_faces(); ++f) {
    if (w.is_internal_face(f)) CHECK(w.face_darts(f).size() >= 6);
  }
}

TEST_CASE("validation reports bad degrees and small faces") {
  PlanarWeb w = resolve(diagram(6, {{3, 1}, {4, 1}, {5, 2}, {6, 2}}));
  WebValidation v = validate_3web(w);
  CHECK_FALSE(v.ok());
  CHECK(v.small_faces.size() == 2);

  std::vector<WebEdge> edges = hand_tripod().edges();
  std::swap(edges[4].from, edges[4].to);
  std::vector<std::vector<int>> rotation{{0, 9, 5}, {2, 10, 1}, {4, 6, 3}, {7, 8, 11}};
  WebValidation mixed = validate_3web(PlanarWeb(3, 4, edges, rotation));
  CHECK(mixed.violations.size() == 2);
}

TEST_CASE("malformed maps are rejected") {
  std::vector<WebEdge> edges = hand_tripod().edges();
  CHECK(code_of([&] { PlanarWeb(3, 4, edges, {{0, 8, 5}, {2, 10, 1}, {4, 6, 3}, {7, 9}}); }) == ErrorCode::NotAWeb);
  CHECK(code_of([&] { PlanarWeb(3, 4, edges, {{0, 8, 5}, {2, 10, 1}, {4, 6, 3}, {7, 9, 9}}); }) == ErrorCode::NotAWeb);
  CHECK(code_of([&] { hand_tripod().boundary_face(4); }) == ErrorCode::UnknownFace);
}
