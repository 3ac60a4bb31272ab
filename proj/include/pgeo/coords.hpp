#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "pgeo/constants.hpp"
#include "pgeo/model.hpp"

namespace pgeo {

/// A point on the solid as (home, shared, x, y): the home face is laid in the
/// upper half-plane with edge_anchor(home, shared) on (0,0) -> (1,0).
struct SurfaceRep {
  FaceId home;
  FaceId shared;
  double x = 0.0;
  double y = 0.0;

  Eigen::Vector2d xy() const { return {x, y}; }
};

std::string to_string(const SurfaceRep& rep);

/// Empty when valid, otherwise the name of the violated constraint.
std::optional<std::string> validate_rep(const PolyhedronModel& model, const SurfaceRep& rep,
                                        double tol = kEps);
void require_valid(const PolyhedronModel& model, const SurfaceRep& rep, double tol = kEps);

/// (home, shared, x, 0) -> (shared, home, 1 - x, 0).
SurfaceRep flip_edge_rep(const SurfaceRep& rep, double tol = kEps);

/// Same point and home face, shared face advanced one step counter-clockwise.
SurfaceRep rotate_shared(const PolyhedronModel& model, const SurfaceRep& rep);

/// Rotates until the shared face is `shared`.
SurfaceRep with_shared(const PolyhedronModel& model, const SurfaceRep& rep, FaceId shared);

/// Every representation of the same surface point: one per (home, shared)
/// combination, homes gathered across edges and vertices.
std::vector<SurfaceRep> equivalent_reps(const PolyhedronModel& model, const SurfaceRep& rep,
                                        double tol = kEps);

bool same_point(const PolyhedronModel& model, const SurfaceRep& a, const SurfaceRep& b,
                double tol = kEps);

/// Vertices of the home face in the chart of (home, shared), counter-clockwise
/// from the origin.
std::vector<Eigen::Vector2d> chart_polygon(const PolyhedronModel& model);

/// Clamps a rep that is within `tol` of its face into the closed face.
SurfaceRep snap_to_face(const PolyhedronModel& model, const SurfaceRep& rep, double tol = kEps);

} // namespace pgeo
