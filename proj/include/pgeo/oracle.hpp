#pragma once

#include <vector>

#include "pgeo/coords.hpp"
#include "pgeo/model.hpp"
#include "pgeo/unfold.hpp"

namespace pgeo {

struct UnfoldOracleResult {
  double distance = std::numeric_limits<double>::infinity();
  /// Distinct landscapes attaining the minimum; single-face entries stand for
  /// two points in one chart.
  std::vector<Landscape> argmin;
};

/// Exhaustive search: every home-face pair, every landscape of at most
/// max_faces faces, honest trails only.
UnfoldOracleResult oracle_unfold_distance(const PolyhedronModel& model, const SurfaceRep& q1,
                                          const SurfaceRep& q2, int max_faces,
                                          double tie_tolerance = kTieTolerance);

/// Boundary discretisation of the surface: every edge carries n + 1 evenly
/// spaced nodes (shared by both faces, vertices shared by three), and any two
/// nodes of one face are joined by a straight chord.
class SurfaceMesh {
public:
  SurfaceMesh(const PolyhedronModel& model, int n);

  int refinement() const { return n_; }
  std::size_t node_count() const { return nodes_.size(); }
  /// Representative rep of each node.
  const std::vector<SurfaceRep>& nodes() const { return nodes_; }
  /// Node ids on a face's boundary.
  const std::vector<int>& face_nodes(FaceId face) const { return face_nodes_[face.index - 1]; }
  /// Chord length between two nodes of `face`.
  double chord(FaceId face, int a, int b) const;

  /// Shortest chord path between the two points, which enter the graph
  /// exactly (no snapping) through chords to their faces' nodes.
  double distance(const SurfaceRep& q1, const SurfaceRep& q2) const;

private:
  int node_for(const SurfaceRep& rep);
  Eigen::Vector2d position(FaceId face, int node) const;

  const PolyhedronModel* model_;
  int n_;
  std::vector<SurfaceRep> nodes_;
  std::vector<std::vector<int>> face_nodes_;
  // Chart (face, first neighbour) coordinates, per face, parallel to face_nodes_.
  std::vector<std::vector<Eigen::Vector2d>> face_coords_;
  // Faces each node lies on.
  std::vector<std::vector<int>> node_faces_;
};

double oracle_mesh_distance(const PolyhedronModel& model, const SurfaceRep& q1,
                            const SurfaceRep& q2, int n);

} // namespace pgeo
