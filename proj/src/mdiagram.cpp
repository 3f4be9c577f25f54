#include "webfold/mdiagram.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

#include "webfold/error.hpp"

namespace webfold {

namespace {

// Drawing offset of the two endpoints of an intersection edge from the
// crossing point.
constexpr double kHalfIntersection = 0.18;

std::string rational_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace

GeneralizedMDiagram::GeneralizedMDiagram(std::vector<BoundaryCoord> boundary, std::vector<Arc> arcs)
    : boundary_(std::move(boundary)), arcs_(std::move(arcs)) {
  const int n = n_boundary();
  for (int i = 1; i < n; ++i) {
    if (!(boundary_[i - 1].x < boundary_[i].x)) {
      throw Error(ErrorCode::InvalidDiagram, "boundary abscissas must strictly increase at " + boundary_[i].label());
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (boundary_[i].label() == boundary_[j].label()) {
        throw Error(ErrorCode::InvalidDiagram, "duplicate boundary label " + boundary_[i].label());
      }
    }
  }
  in_degree_.assign(n, 0);
  std::vector<int> out_degree(n, 0);
  incident_.assign(n, {});
  for (int a = 0; a < static_cast<int>(arcs_.size()); ++a) {
    const Arc& arc = arcs_[a];
    if (arc.tail < 0 || arc.tail >= n || arc.head < 0 || arc.head >= n) {
      throw Error(ErrorCode::InvalidDiagram, "arc endpoint outside the boundary");
    }
    if (arc.tail == arc.head) throw Error(ErrorCode::InvalidDiagram, "arc " + arc_label(a) + " is a loop");
    for (int b = 0; b < a; ++b) {
      auto ends = [](const Arc& x) { return std::minmax(x.tail, x.head); };
      if (ends(arcs_[b]) == ends(arc)) throw Error(ErrorCode::InvalidDiagram, "arc " + arc_label(a) + " is repeated");
    }
    out_degree[arc.tail] += 1;
    in_degree_[arc.head] += 1;
    incident_[arc.tail].push_back(a);
    incident_[arc.head].push_back(a);
  }
  for (int v = 0; v < n; ++v) {
    bool source = out_degree[v] == 1 && in_degree_[v] == 0;
    bool sink = out_degree[v] == 0 && in_degree_[v] == 2;
    if (!source && !sink) {
      throw Error(ErrorCode::InvalidBoundaryDegrees,
                  "vertex " + boundary_[v].label() + " has out-degree " + std::to_string(out_degree[v]) +
                      " and in-degree " + std::to_string(in_degree_[v]));
    }
  }
}

std::vector<BoundaryCoord> GeneralizedMDiagram::plain_boundary(int n) {
  std::vector<BoundaryCoord> b;
  for (int k = 1; k <= n; ++k) b.push_back({k, false, Rational(k)});
  return b;
}

int GeneralizedMDiagram::find(const std::string& label) const {
  for (int i = 0; i < n_boundary(); ++i) {
    if (boundary_[i].label() == label) return i;
  }
  return -1;
}

std::string GeneralizedMDiagram::arc_label(int arc) const {
  return "(" + boundary_[arcs_[arc].tail].label() + "," + boundary_[arcs_[arc].head].label() + ")";
}

// ---------------------------------------------------------------- geometry

bool arcs_cross(const GeneralizedMDiagram& m, int a, int b) {
  Rational p1 = m.left_x(a), q1 = m.right_x(a);
  Rational p2 = m.left_x(b), q2 = m.right_x(b);
  return (p1 < p2 && p2 < q1 && q1 < q2) || (p2 < p1 && p1 < q2 && q2 < q1);
}

std::vector<Crossing> crossings(const GeneralizedMDiagram& m) {
  std::vector<Crossing> out;
  const int n_arcs = static_cast<int>(m.arcs().size());
  for (int a = 0; a < n_arcs; ++a) {
    for (int b = a + 1; b < n_arcs; ++b) {
      if (!arcs_cross(m, a, b)) continue;
      Rational p1 = m.left_x(a), q1 = m.right_x(a);
      Rational p2 = m.left_x(b), q2 = m.right_x(b);
      // Both circles satisfy x^2 + y^2 - (p+q)x + pq = 0; subtracting gives x.
      Rational x = (p1 * q1 - p2 * q2) / ((p1 + q1) - (p2 + q2));
      out.push_back({a, b, x, (x - p1) * (q1 - x)});
    }
  }
  for (int a = 0; a < n_arcs; ++a) {
    std::vector<int> along = crossings_along(m, out, a);
    for (std::size_t i = 1; i < along.size(); ++i) {
      const Crossing& c1 = out[along[i - 1]];
      const Crossing& c2 = out[along[i]];
      if (c1.x == c2.x && c1.height_sq == c2.height_sq) {
        throw Error(ErrorCode::ConcurrentArcs, "arcs " + m.arc_label(c1.arc_a) + ", " + m.arc_label(c1.arc_b) + ", " +
                                                   m.arc_label(c2.arc_a) + ", " + m.arc_label(c2.arc_b) +
                                                   " meet at x = " + rational_text(c1.x));
      }
    }
  }
  return out;
}

std::vector<int> crossings_along(const GeneralizedMDiagram& m, const std::vector<Crossing>& cs, int arc) {
  std::vector<int> ids;
  for (int c = 0; c < static_cast<int>(cs.size()); ++c) {
    if (cs[c].arc_a == arc || cs[c].arc_b == arc) ids.push_back(c);
  }
  std::stable_sort(ids.begin(), ids.end(), [&cs](int l, int r) { return cs[l].x < cs[r].x; });
  if (m.tail_x(arc) > m.head_x(arc)) std::reverse(ids.begin(), ids.end());
  return ids;
}

// ---------------------------------------------------------------- resolution

namespace {

struct Vec {
  double x, y;
};

Vec normalized(Vec v) {
  double len = std::hypot(v.x, v.y);
  return len == 0 ? v : Vec{v.x / len, v.y / len};
}

// Direction of travel toward larger (right) or smaller x along an arc's
// semicircle at the point (px, py).
Vec tangent(const GeneralizedMDiagram& m, int arc, double px, double py, bool rightward) {
  double c = boost::rational_cast<double>(m.left_x(arc) + m.right_x(arc)) / 2;
  Vec t{py, -(px - c)};
  return normalized(rightward ? t : Vec{-t.x, -t.y});
}

}  // namespace

PlanarWeb resolve(const GeneralizedMDiagram& m) {
  const std::vector<Crossing> cs = crossings(m);
  const int nb = m.n_boundary();
  const int n_arcs = static_cast<int>(m.arcs().size());
  const int nc = static_cast<int>(cs.size());

  int next_vertex = nb;
  std::vector<int> sink_vertex(nb, -1);
  for (int v = 0; v < nb; ++v) {
    if (m.is_sink(v)) sink_vertex[v] = next_vertex++;
  }
  std::vector<int> u_of(nc), w_of(nc);
  for (int c = 0; c < nc; ++c) {
    u_of[c] = next_vertex++;
    w_of[c] = next_vertex++;
  }
  const int nv = next_vertex;

  std::vector<WebEdge> edges;
  auto add_edge = [&edges](int from, int to, EdgeTag tag, std::vector<int> arcs) {
    edges.push_back({from, to, tag, std::move(arcs)});
    return static_cast<int>(edges.size()) - 1;
  };
  for (int v = 0; v < nb; ++v) add_edge(v, (v + 1) % nb, EdgeTag::boundary, {});

  std::vector<int> sink_edge(nb, -1);
  for (int v = 0; v < nb; ++v) {
    if (sink_vertex[v] >= 0) sink_edge[v] = add_edge(v, sink_vertex[v], EdgeTag::intersection, m.arcs_at(v));
  }

  // Per crossing and per participating arc: the edge arriving at u and the
  // edge leaving w.
  std::vector<std::map<int, int>> edge_in(nc), edge_out(nc);
  std::vector<int> first_edge(n_arcs), last_edge(n_arcs);
  for (int a = 0; a < n_arcs; ++a) {
    int prev = m.arcs()[a].tail;
    int prev_crossing = -1;
    bool first = true;
    for (int c : crossings_along(m, cs, a)) {
      int e = add_edge(prev, u_of[c], EdgeTag::arc, {a});
      if (first) first_edge[a] = e;
      if (prev_crossing >= 0) edge_out[prev_crossing][a] = e;
      edge_in[c][a] = e;
      first = false;
      prev = w_of[c];
      prev_crossing = c;
    }
    int e = add_edge(prev, sink_vertex[m.arcs()[a].head], EdgeTag::arc, {a});
    if (first) first_edge[a] = e;
    if (prev_crossing >= 0) edge_out[prev_crossing][a] = e;
    last_edge[a] = e;
  }
  std::vector<int> crossing_edge(nc);
  for (int c = 0; c < nc; ++c) {
    crossing_edge[c] = add_edge(w_of[c], u_of[c], EdgeTag::intersection, {cs[c].arc_a, cs[c].arc_b});
  }

  std::vector<std::vector<int>> rotation(nv);
  std::vector<Point> coords(nv);
  for (int v = 0; v < nb; ++v) {
    int up = m.is_sink(v) ? 2 * sink_edge[v] : 2 * first_edge[m.arcs_at(v)[0]];
    rotation[v] = {2 * v, up, 2 * ((v + nb - 1) % nb) + 1};
    coords[v] = {boost::rational_cast<double>(m.boundary()[v].x), 0.0};
  }
  for (int v = 0; v < nb; ++v) {
    if (sink_vertex[v] < 0) continue;
    std::vector<int> in = m.arcs_at(v);
    const Rational b = m.boundary()[v].x;
    // Arcs arriving from the right bend east of the sink; tighter arcs lie
    // further out on their side.
    std::sort(in.begin(), in.end(), [&](int l, int r) {
      return Rational(1) / (b - m.tail_x(l)) < Rational(1) / (b - m.tail_x(r));
    });
    auto& rot = rotation[sink_vertex[v]];
    rot.push_back(2 * sink_edge[v] + 1);
    for (int a : in) rot.push_back(2 * last_edge[a] + 1);
    coords[sink_vertex[v]] = {coords[v].x, 0.3};
  }
  for (int c = 0; c < nc; ++c) {
    int alpha = cs[c].arc_a;
    int beta = cs[c].arc_b;
    if (m.left_x(beta) + m.right_x(beta) < m.left_x(alpha) + m.right_x(alpha)) std::swap(alpha, beta);
    // Counterclockwise around the crossing: alpha right, beta right, alpha
    // left, beta left.
    const int arc_at[4] = {alpha, beta, alpha, beta};
    const bool right_end[4] = {true, true, false, false};
    bool incoming[4];
    int dart[4];
    for (int i = 0; i < 4; ++i) {
      int a = arc_at[i];
      bool tail_right = m.tail_x(a) > m.head_x(a);
      incoming[i] = right_end[i] == tail_right;
      dart[i] = incoming[i] ? 2 * edge_in[c].at(a) + 1 : 2 * edge_out[c].at(a);
    }
    int i = 0;
    while (!(incoming[i] && incoming[(i + 1) % 4])) ++i;
    rotation[u_of[c]] = {dart[i], dart[(i + 1) % 4], 2 * crossing_edge[c] + 1};
    rotation[w_of[c]] = {dart[(i + 2) % 4], dart[(i + 3) % 4], 2 * crossing_edge[c]};

    double px = boost::rational_cast<double>(cs[c].x);
    double py = std::sqrt(boost::rational_cast<double>(cs[c].height_sq));
    auto dir = [&](int k) { return tangent(m, arc_at[k % 4], px, py, right_end[k % 4]); };
    Vec du = normalized({dir(i).x + dir(i + 1).x, dir(i).y + dir(i + 1).y});
    Vec dw = normalized({dir(i + 2).x + dir(i + 3).x, dir(i + 2).y + dir(i + 3).y});
    coords[u_of[c]] = {px + kHalfIntersection * du.x, py + kHalfIntersection * du.y};
    coords[w_of[c]] = {px + kHalfIntersection * dw.x, py + kHalfIntersection * dw.y};
  }
  return PlanarWeb(nb, nv, std::move(edges), std::move(rotation), std::move(coords));
}

// ---------------------------------------------------------------- arc sets

ArcFaceIndex::ArcFaceIndex(const GeneralizedMDiagram& m, const PlanarWeb& w) : m_(m) {
  const int n_arcs = static_cast<int>(m.arcs().size());
  sets_.assign(w.n_faces(), boost::dynamic_bitset<>(n_arcs));
  std::vector<bool> seen(w.n_faces(), false);
  const int outer = w.boundary_face(0);
  exterior_ = w.exterior_face();
  seen[outer] = true;
  std::deque<int> queue{outer};
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    for (int d : w.face_darts(f)) {
      const WebEdge& e = w.edge_of(d);
      if (e.tag == EdgeTag::boundary) continue;
      boost::dynamic_bitset<> next = sets_[f];
      for (int a : e.source_arcs) next.flip(a);
      int g = w.face_of(PlanarWeb::twin(d));
      if (!seen[g]) {
        seen[g] = true;
        sets_[g] = next;
        queue.push_back(g);
      } else if (sets_[g] != next) {
        throw Error(ErrorCode::InvalidDiagram, "web faces do not match the diagram's regions");
      }
    }
  }

  auto inside = [&m](int arc, int vertex) { return m.spans(arc, m.boundary()[vertex].x); };
  for (int a = 0; a < n_arcs; ++a) {
    for (int b = a + 1; b < n_arcs; ++b) {
      const Arc& al = m.arcs()[a];
      const Arc& be = m.arcs()[b];
      if (arcs_cross(m, a, b)) {
        pairs_.push_back({a, b, {inside(a, be.head), inside(b, al.tail)}, {inside(a, be.tail), inside(b, al.head)}});
      } else if (al.head == be.head) {
        std::pair<bool, bool> r_ac{inside(a, be.tail), inside(b, al.tail)};
        pairs_.push_back({a, b, {!r_ac.first, r_ac.second}, {r_ac.first, !r_ac.second}});
      }
    }
  }

  const Rational axis = m.boundary().front().x + m.boundary().back().x;
  mirror_.assign(n_arcs, -1);
  for (int a = 0; a < n_arcs; ++a) {
    for (int b = 0; b < n_arcs; ++b) {
      if (m.tail_x(b) == axis - m.tail_x(a) && m.head_x(b) == axis - m.head_x(a)) mirror_[a] = b;
    }
  }
  for (int a = 0; a < n_arcs; ++a) {
    if (m.arcs()[a].crossed && mirror_[a] > a) crossed_pairs_.emplace_back(a, mirror_[a]);
  }
}

void ArcFaceIndex::check_face(int face) const {
  if (face < 0 || face >= static_cast<int>(sets_.size())) {
    throw Error(ErrorCode::UnknownFace, "face " + std::to_string(face) + " does not exist");
  }
}

const boost::dynamic_bitset<>& ArcFaceIndex::arc_set(int face) const {
  check_face(face);
  return sets_[face];
}

std::vector<int> ArcFaceIndex::arcs_above(int face) const {
  check_face(face);
  std::vector<int> out;
  for (auto i = sets_[face].find_first(); i != boost::dynamic_bitset<>::npos; i = sets_[face].find_next(i)) {
    out.push_back(static_cast<int>(i));
  }
  return out;
}

int ArcFaceIndex::arc_distance(int x, int y) const {
  check_face(x);
  check_face(y);
  return static_cast<int>((sets_[x] ^ sets_[y]).count());
}

std::vector<std::pair<int, int>> ArcFaceIndex::coherent_separators(int x, int y) const {
  check_face(x);
  check_face(y);
  std::vector<std::pair<int, int>> out;
  for (const Pair& p : pairs_) {
    std::pair<bool, bool> mx{sets_[x][p.a], sets_[x][p.b]};
    std::pair<bool, bool> my{sets_[y][p.a], sets_[y][p.b]};
    if ((mx == p.r_ad && my == p.r_bc) || (mx == p.r_bc && my == p.r_ad)) out.emplace_back(p.a, p.b);
  }
  return out;
}

bool ArcFaceIndex::is_between_vertical_pair(int face) const {
  check_face(face);
  return std::any_of(crossed_pairs_.begin(), crossed_pairs_.end(),
                     [&](const auto& p) { return sets_[face][p.first] != sets_[face][p.second]; });
}

bool ArcFaceIndex::is_mirror_symmetric() const {
  return std::find(mirror_.begin(), mirror_.end(), -1) == mirror_.end();
}

int ArcFaceIndex::mirror_face(int face) const {
  check_face(face);
  if (!is_mirror_symmetric()) throw Error(ErrorCode::NotSymmetrical, "the diagram is not mirror symmetric");
  boost::dynamic_bitset<> image(sets_[face].size());
  for (std::size_t a = 0; a < image.size(); ++a) {
    if (sets_[face][a]) image.set(mirror_[a]);
  }
  for (int g = 0; g < static_cast<int>(sets_.size()); ++g) {
    if (g != exterior_ && sets_[g] == image) return g;
  }
  throw Error(ErrorCode::UnknownFace, "no face mirrors face " + std::to_string(face));
}

}  // namespace webfold
