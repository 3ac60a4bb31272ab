#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pgeo/coords.hpp"
#include "pgeo/formulas.hpp"
#include "pgeo/model.hpp"
#include "pgeo/unfold.hpp"

namespace pgeo {

/// Landscape id used for two points seen in one face's chart.
inline constexpr int kSameFace = 0;

/// One representation for each face containing the point.
std::vector<SurfaceRep> one_rep_per_home(const PolyhedronModel& model, const SurfaceRep& rep);

/// "SAME_FACE" or "L<id>".
std::string landscape_label(int id);

/// Concrete face sequence of family L<id> under a canonical relabeling.
Landscape family_landscape(SolidKind kind, int id, const FaceRelabeling& relabeling);

/// Closed-form trail lengths. Inputs must already be in the mutual form the
/// tables are written for; anything else throws std::domain_error.
std::array<double, 5> tet_trail_lengths(const SurfaceRep& p1, const SurfaceRep& p2);
std::array<double, 3> cube_adjacent_trail_lengths(const SurfaceRep& p1, const SurfaceRep& p2);
std::array<double, 12> cube_opposite_trail_lengths(const SurfaceRep& p1, const SurfaceRep& p2,
                                                   int rotation = 0);

struct Minimizer {
  int id = kSameFace;
  Landscape landscape;
  double value = 0.0;
  /// Every representation pair whose blind value for this landscape ties the
  /// minimum; the first is the one reported.
  std::vector<std::pair<SurfaceRep, SurfaceRep>> reps;

  std::string label() const { return landscape_label(id); }
};

struct Geodesic {
  std::size_t minimizer = 0;  // index into DistanceResult::minimizers
  Orientation orientation;
  Trail trail;
};

struct DistanceResult {
  double distance = 0.0;
  std::vector<Minimizer> minimizers;  // sorted by id, then face sequence
  std::vector<Geodesic> geodesics;    // filled by geodesics()
  /// Smallest blind value per landscape id over all representation pairs.
  std::map<int, double> values;
};

/// Minimum of the closed-form tables over all representation pairs.
DistanceResult surface_distance(const PolyhedronModel& model, const SurfaceRep& q1,
                                const SurfaceRep& q2, double tie_tolerance = kTieTolerance);

/// surface_distance plus one reconstructed path per minimizer. Minimizers
/// whose blind value has no contained trail are dropped.
DistanceResult geodesics(const PolyhedronModel& model, const SurfaceRep& q1,
                         const SurfaceRep& q2, double tie_tolerance = kTieTolerance);

} // namespace pgeo
