#include "webfold/planar_web.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <deque>
#include <sstream>

#include "webfold/error.hpp"

namespace webfold {

std::string_view to_string(EdgeTag tag) {
  switch (tag) {
    case EdgeTag::arc: return "arc";
    case EdgeTag::intersection: return "intersection";
    case EdgeTag::boundary: return "boundary";
  }
  return "arc";
}

PlanarWeb::PlanarWeb(int n_boundary, int n_vertices, std::vector<WebEdge> edges, std::vector<std::vector<int>> rotation,
                     std::vector<Point> coords)
    : n_boundary_(n_boundary),
      n_vertices_(n_vertices),
      edges_(std::move(edges)),
      rotation_(std::move(rotation)),
      coords_(std::move(coords)) {
  if (n_boundary_ < 1 || n_vertices_ < n_boundary_) throw Error(ErrorCode::NotAWeb, "bad vertex counts");
  if (static_cast<int>(rotation_.size()) != n_vertices_) throw Error(ErrorCode::NotAWeb, "rotation system size mismatch");
  if (!coords_.empty() && static_cast<int>(coords_.size()) != n_vertices_) coords_.clear();

  const int n_darts = 2 * static_cast<int>(edges_.size());
  for (const WebEdge& e : edges_) {
    if (e.from < 0 || e.from >= n_vertices_ || e.to < 0 || e.to >= n_vertices_) {
      throw Error(ErrorCode::NotAWeb, "edge endpoint out of range");
    }
  }
  position_.assign(n_darts, -1);
  for (int v = 0; v < n_vertices_; ++v) {
    for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
      int d = rotation_[v][i];
      if (d < 0 || d >= n_darts || position_[d] != -1 || origin(d) != v) {
        throw Error(ErrorCode::NotAWeb, "rotation at vertex " + std::to_string(v) + " lists a foreign dart");
      }
      position_[d] = static_cast<int>(i);
    }
  }
  if (std::find(position_.begin(), position_.end(), -1) != position_.end()) {
    throw Error(ErrorCode::NotAWeb, "a dart is missing from the rotation system");
  }

  forward_dart_.assign(n_boundary_, -1);
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    if (edges_[e].tag != EdgeTag::boundary) continue;
    int f = edges_[e].from;
    int t = edges_[e].to;
    if (f >= n_boundary_ || t >= n_boundary_) throw Error(ErrorCode::NotAWeb, "boundary edge touches an internal vertex");
    int d = -1;
    if (t == (f + 1) % n_boundary_) {
      d = 2 * e;
    } else if (f == (t + 1) % n_boundary_) {
      d = 2 * e + 1;
    } else {
      throw Error(ErrorCode::NotAWeb, "boundary edge joins non-consecutive labels");
    }
    if (forward_dart_[origin(d)] != -1) throw Error(ErrorCode::NotAWeb, "duplicate boundary edge");
    forward_dart_[origin(d)] = d;
  }
  if (std::find(forward_dart_.begin(), forward_dart_.end(), -1) != forward_dart_.end()) {
    throw Error(ErrorCode::NotAWeb, "the boundary cycle is incomplete");
  }

  face_of_dart_.assign(n_darts, -1);
  for (int d = 0; d < n_darts; ++d) {
    if (face_of_dart_[d] != -1) continue;
    std::vector<int> orbit;
    for (int cur = d; face_of_dart_[cur] == -1; cur = face_successor(cur)) {
      face_of_dart_[cur] = static_cast<int>(faces_.size());
      orbit.push_back(cur);
    }
    faces_.push_back(std::move(orbit));
  }
}

int PlanarWeb::origin(int dart) const {
  const WebEdge& e = edges_[dart / 2];
  return dart % 2 == 0 ? e.from : e.to;
}

int PlanarWeb::face_successor(int dart) const {
  int back = twin(dart);
  const auto& rot = rotation_[origin(back)];
  int deg = static_cast<int>(rot.size());
  return rot[(position_[back] + deg - 1) % deg];
}

int PlanarWeb::boundary_face(int k) const {
  if (k < 0 || k > n_boundary_) throw Error(ErrorCode::UnknownFace, "no boundary face B_" + std::to_string(k));
  int label = k == 0 ? n_boundary_ : k;
  return face_of_dart_[forward_dart_[label - 1]];
}

int PlanarWeb::exterior_face() const { return face_of_dart_[twin(forward_dart_[0])]; }

bool PlanarWeb::is_internal_face(int face) const {
  check_face(face);
  return std::none_of(faces_[face].begin(), faces_[face].end(),
                      [this](int d) { return edge_of(d).tag == EdgeTag::boundary; });
}

int PlanarWeb::web_degree(int v) const {
  return static_cast<int>(std::count_if(rotation_[v].begin(), rotation_[v].end(),
                                        [this](int d) { return edge_of(d).tag != EdgeTag::boundary; }));
}

void PlanarWeb::check_face(int face) const {
  if (face < 0 || face >= n_faces()) throw Error(ErrorCode::UnknownFace, "face " + std::to_string(face) + " does not exist");
}

std::vector<int> PlanarWeb::distances_from(int face) const {
  check_face(face);
  std::vector<int> dist(n_faces(), -1);
  std::deque<int> queue{face};
  dist[face] = 0;
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    for (int d : faces_[f]) {
      if (edge_of(d).tag == EdgeTag::boundary) continue;
      int g = face_of_dart_[twin(d)];
      if (dist[g] == -1) {
        dist[g] = dist[f] + 1;
        queue.push_back(g);
      }
    }
  }
  return dist;
}

int PlanarWeb::web_distance(int x, int y) const {
  check_face(y);
  return distances_from(x)[y];
}

// ---------------------------------------------------------------- validation

WebValidation validate_3web(const PlanarWeb& w) {
  WebValidation report;
  auto fail = [&report](std::string msg) { report.violations.push_back(std::move(msg)); };
  for (int v = 0; v < w.n_vertices(); ++v) {
    int out = 0;
    int in = 0;
    for (int d : w.rotation(v)) {
      const WebEdge& e = w.edge_of(d);
      if (e.tag == EdgeTag::boundary) {
        if (!w.is_boundary_vertex(v)) fail("internal vertex " + std::to_string(v) + " lies on the boundary cycle");
        continue;
      }
      (d % 2 == 0 ? out : in) += 1;
    }
    if (w.is_boundary_vertex(v)) {
      if (out != 1 || in != 0) fail("boundary vertex " + std::to_string(v + 1) + " is not a source of degree 1");
    } else {
      if (out + in != 3) fail("internal vertex " + std::to_string(v) + " has degree " + std::to_string(out + in));
      if (out != 0 && in != 0) fail("internal vertex " + std::to_string(v) + " is neither a source nor a sink");
    }
  }
  for (int f = 0; f < w.n_faces(); ++f) {
    if (w.is_internal_face(f) && w.face_darts(f).size() < 6) {
      report.small_faces.push_back(f);
      fail("internal face " + std::to_string(f) + " has " + std::to_string(w.face_darts(f).size()) + " sides");
    }
  }
  const int euler = w.n_vertices() - static_cast<int>(w.edges().size()) + w.n_faces();
  if (euler != 2) fail("Euler characteristic is " + std::to_string(euler) + ", not 2");
  return report;
}

// ---------------------------------------------------------------- symmetries

namespace {

// Applies a permutation of the boundary labels. When `mirror` is set, every
// rotation is reversed and boundary edges are flipped so they keep running
// k -> k+1.
PlanarWeb relabel_boundary(const PlanarWeb& w, const std::vector<int>& new_index, bool mirror) {
  const int nv = w.n_vertices();
  auto map_vertex = [&](int v) { return w.is_boundary_vertex(v) ? new_index[v] : v; };
  std::vector<WebEdge> edges = w.edges();
  std::vector<bool> flipped(edges.size(), false);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    edges[e].from = map_vertex(edges[e].from);
    edges[e].to = map_vertex(edges[e].to);
    if (mirror && edges[e].tag == EdgeTag::boundary) {
      std::swap(edges[e].from, edges[e].to);
      flipped[e] = true;
    }
  }
  auto map_dart = [&](int d) { return flipped[d / 2] ? PlanarWeb::twin(d) : d; };
  std::vector<std::vector<int>> rotation(nv);
  for (int v = 0; v < nv; ++v) {
    std::vector<int> rot;
    for (int d : w.rotation(v)) rot.push_back(map_dart(d));
    if (mirror) std::reverse(rot.begin(), rot.end());
    rotation[map_vertex(v)] = std::move(rot);
  }
  std::vector<Point> coords;
  if (mirror && !w.coords().empty()) {
    double lo = w.coords()[0].x;
    double hi = w.coords()[w.n_boundary() - 1].x;
    for (int v = 0; v < nv; ++v) coords.push_back(w.coords()[v]);
    for (int v = 0; v < nv; ++v) coords[map_vertex(v)] = {lo + hi - w.coords()[v].x, w.coords()[v].y};
  }
  return PlanarWeb(w.n_boundary(), nv, std::move(edges), std::move(rotation), std::move(coords));
}

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

}  // namespace

PlanarWeb rotate(const PlanarWeb& w) {
  const int n = w.n_boundary();
  std::vector<int> idx(n);
  for (int v = 0; v < n; ++v) idx[v] = (v + n - 1) % n;
  return relabel_boundary(w, idx, false);
}

PlanarWeb reflect(const PlanarWeb& w) {
  const int n = w.n_boundary();
  std::vector<int> idx(n);
  for (int v = 0; v < n; ++v) idx[v] = n - 1 - v;
  return relabel_boundary(w, idx, true);
}

bool is_symmetrical(const PlanarWeb& w) { return canonical(reflect(w)) == canonical(w); }

CanonicalWebForm canonical(const PlanarWeb& w) {
  const int nv = w.n_vertices();
  std::vector<int> number(nv, -1);
  std::vector<int> start(nv, -1);
  std::deque<int> queue;
  for (int v = 0; v < w.n_boundary(); ++v) {
    number[v] = v;
    start[v] = w.boundary_dart(v + 1);
    queue.push_back(v);
  }
  int next_number = w.n_boundary();
  std::vector<std::string> lines(nv);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    const auto& rot = w.rotation(v);
    const int deg = static_cast<int>(rot.size());
    int first = static_cast<int>(std::find(rot.begin(), rot.end(), start[v]) - rot.begin());
    std::string line;
    for (int i = 0; i < deg; ++i) {
      int d = rot[(first + i) % deg];
      int u = w.target(d);
      if (number[u] == -1) {
        number[u] = next_number++;
        start[u] = PlanarWeb::twin(d);
        queue.push_back(u);
      }
      if (i) line += ',';
      line += std::to_string(number[u]);
      line += w.edge_of(d).tag == EdgeTag::boundary ? 'b' : 'w';
      line += d % 2 == 0 ? '>' : '<';
    }
    lines[number[v]] = std::move(line);
  }
  std::ostringstream os;
  os << "N=" << w.n_boundary() << ";V=" << nv << ";E=" << w.edges().size() << ';';
  int reached = next_number;
  for (int i = 0; i < reached; ++i) os << i << ':' << lines[i] << ';';
  if (reached < nv) os << "unreached=" << nv - reached << ';';
  CanonicalWebForm form;
  form.serialization = os.str();
  form.digest = sha256_hex(form.serialization);
  return form;
}

}  // namespace webfold
