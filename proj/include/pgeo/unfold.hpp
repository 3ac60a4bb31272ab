#pragma once

#include <limits>
#include <string>
#include <vector>

#include "pgeo/coords.hpp"
#include "pgeo/model.hpp"
#include "pgeo/planar.hpp"

namespace pgeo {

/// Ordered face sequence forming a simple path in the face-adjacency graph.
struct Landscape {
  std::vector<FaceId> faces;

  FaceId origin() const { return faces.front(); }
  FaceId destination() const { return faces.back(); }
  int index_of(FaceId face) const;
  bool contains(FaceId face) const { return index_of(face) >= 0; }

  friend auto operator<=>(const Landscape&, const Landscape&) = default;
};

std::string to_string(const Landscape& landscape);

/// Throws std::domain_error unless the sequence is a simple dual-graph path.
void require_landscape(const PolyhedronModel& model, const Landscape& landscape);

/// One face of an orientation: its chart (face, chart_shared) mapped into the
/// common plane by `isometry`.
struct FacePlacement {
  FaceId face;
  FaceId chart_shared;
  PlanarIsometry<double> isometry;
  std::vector<Eigen::Vector2d> polygon;  // placed, counter-clockwise
};

/// A landscape laid flat with base_face's chart (base_face, base_shared) as the
/// reference frame.
struct Orientation {
  const PolyhedronModel* model = nullptr;
  Landscape landscape;
  FaceId base_face;
  FaceId base_shared;
  std::vector<FacePlacement> placement;  // parallel to landscape.faces

  const FacePlacement& placement_of(FaceId face) const;
};

struct TrailSegment {
  FaceId face;
  SurfaceRep start;  // in the face's placement chart
  SurfaceRep end;

  double length() const { return (end.xy() - start.xy()).norm(); }
};

/// Straight segment between two placed points. Length is infinite when the
/// segment leaves the orientation; segments are then empty.
struct Trail {
  double length = std::numeric_limits<double>::infinity();
  Eigen::Vector2d from = Eigen::Vector2d::Zero();
  Eigen::Vector2d to = Eigen::Vector2d::Zero();
  std::vector<TrailSegment> segments;

  bool finite() const { return length < std::numeric_limits<double>::infinity(); }
};

/// Default bound on landscape size: no shortest path on either solid needs more.
inline constexpr int kDefaultMaxFaces = 4;

/// All simple dual-graph paths from `from` to `to` with at most max_faces
/// faces, in lexicographic order of face indices.
std::vector<Landscape> enumerate_landscapes(const PolyhedronModel& model, FaceId from, FaceId to,
                                            int max_faces = kDefaultMaxFaces);

Orientation orient(const PolyhedronModel& model, const Landscape& landscape, FaceId base_face,
                   FaceId base_shared);

/// A single face in its chart (face, shared).
Orientation orient_face(const PolyhedronModel& model, FaceId face, FaceId shared);

Eigen::Vector2d place_point(const Orientation& orientation, const SurfaceRep& rep);

/// Pulls a planar point back into the chart of one placed face, snapped into
/// the face.
SurfaceRep pull_back(const Orientation& orientation, FaceId face, const Eigen::Vector2d& point);

Trail trail(const Orientation& orientation, const SurfaceRep& p1, const SurfaceRep& p2,
            double tol = kEps);

/// Per-face pieces of a finite trail; throws std::invalid_argument when the
/// trail is infinite.
std::vector<TrailSegment> reconstruct_path(const Orientation& orientation, const SurfaceRep& p1,
                                           const SurfaceRep& p2);

} // namespace pgeo
