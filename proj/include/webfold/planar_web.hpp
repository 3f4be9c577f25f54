#pragma once

// Planar webs as combinatorial maps on a disk.
//
// Vertices 0..N-1 are the boundary vertices carrying labels 1..N; all others
// are internal. Edge e owns two darts: 2e leaves edge.from, 2e+1 leaves
// edge.to. Each vertex lists its darts in counterclockwise order. The disk
// boundary is a cycle of boundary-tagged edges k -> k+1, closed by N -> 1,
// and the face to the left of each of those darts is the boundary face B_k
// (B_0 = B_N for the closing edge). The face on the other side is the
// exterior of the disk.

#include <string>
#include <vector>

namespace webfold {

enum class EdgeTag { arc, intersection, boundary };

std::string_view to_string(EdgeTag tag);

struct WebEdge {
  int from = 0;
  int to = 0;
  EdgeTag tag = EdgeTag::arc;
  /// Arcs of the resolved diagram this edge separates (one for an arc edge,
  /// two for an intersection edge). Empty when the web has no diagram.
  std::vector<int> source_arcs;
};

struct Point {
  double x = 0;
  double y = 0;
};

class PlanarWeb {
 public:
  PlanarWeb() = default;
  PlanarWeb(int n_boundary, int n_vertices, std::vector<WebEdge> edges, std::vector<std::vector<int>> rotation,
            std::vector<Point> coords = {});

  static constexpr int twin(int dart) { return dart ^ 1; }

  int n_boundary() const { return n_boundary_; }
  int n_vertices() const { return n_vertices_; }
  int n_internal() const { return n_vertices_ - n_boundary_; }
  bool is_boundary_vertex(int v) const { return v < n_boundary_; }

  const std::vector<WebEdge>& edges() const { return edges_; }
  const WebEdge& edge_of(int dart) const { return edges_[dart / 2]; }
  const std::vector<int>& rotation(int v) const { return rotation_[v]; }
  const std::vector<Point>& coords() const { return coords_; }

  int origin(int dart) const;
  int target(int dart) const { return origin(twin(dart)); }
  /// Next dart along the face on the left of `dart`.
  int face_successor(int dart) const;

  int n_faces() const { return static_cast<int>(faces_.size()); }
  int face_of(int dart) const { return face_of_dart_[dart]; }
  const std::vector<int>& face_darts(int face) const { return faces_[face]; }

  /// The boundary dart leaving label k toward label k+1 (N toward 1).
  int boundary_dart(int label) const { return forward_dart_[label - 1]; }

  /// B_k for k in 0..N, with B_0 = B_N.
  int boundary_face(int k) const;
  int exterior_face() const;
  /// A face with no boundary edge on its walk.
  bool is_internal_face(int face) const;

  /// Number of non-boundary edges at v.
  int web_degree(int v) const;

  /// Dual BFS distances from `face`, crossing arc and intersection edges only.
  /// Unreachable faces (the exterior) get -1.
  std::vector<int> distances_from(int face) const;
  int web_distance(int x, int y) const;

 private:
  void check_face(int face) const;

  int n_boundary_ = 0;
  int n_vertices_ = 0;
  std::vector<WebEdge> edges_;
  std::vector<std::vector<int>> rotation_;
  std::vector<Point> coords_;
  std::vector<int> position_;       // index of each dart in its origin's rotation
  std::vector<int> forward_dart_;   // boundary dart leaving label k+1 toward k+2 (mod N)
  std::vector<int> face_of_dart_;
  std::vector<std::vector<int>> faces_;
};

struct WebValidation {
  std::vector<std::string> violations;
  /// Internal faces with fewer than six sides.
  std::vector<int> small_faces;
  bool ok() const { return violations.empty(); }
};

WebValidation validate_3web(const PlanarWeb& w);

/// Relabels boundary k as k-1 (mod N).
PlanarWeb rotate(const PlanarWeb& w);
/// Relabels boundary k as N+1-k and mirrors every rotation.
PlanarWeb reflect(const PlanarWeb& w);
bool is_symmetrical(const PlanarWeb& w);

struct CanonicalWebForm {
  std::string serialization;
  std::string digest;  // lowercase hex SHA-256 of the serialization
  bool operator==(const CanonicalWebForm& other) const { return serialization == other.serialization; }
};

/// Deterministic serialization: BFS from the boundary in label order, internal
/// vertices numbered by discovery, darts read counterclockwise from the dart
/// each vertex was reached through. Arc and intersection edges are not told
/// apart. Equal forms mean the webs are isomorphic
/// through a label-preserving planar map.
CanonicalWebForm canonical(const PlanarWeb& w);

}  // namespace webfold
