#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "pgeo/constants.hpp"

namespace pgeo {

template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;

/// cos/sin of k * 30 degrees from an exact table.
template <typename Scalar>
std::pair<Scalar, Scalar> turn_cos_sin(int steps) {
  const Scalar h = Scalar(kSqrt3) / Scalar(2);
  const Scalar half = Scalar(0.5);
  const std::array<std::pair<Scalar, Scalar>, 12> table{{{1, 0},
                                                         {h, half},
                                                         {half, h},
                                                         {0, 1},
                                                         {-half, h},
                                                         {-h, half},
                                                         {-1, 0},
                                                         {-h, -half},
                                                         {-half, -h},
                                                         {0, -1},
                                                         {half, -h},
                                                         {h, -half}}};
  return table[((steps % 12) + 12) % 12];
}

/// Orientation-preserving planar isometry: rotation by a multiple of 30
/// degrees followed by a translation.
template <typename Scalar>
struct PlanarIsometry {
  int turns = 0;  // in units of 30 degrees, kept in 0..11
  Vec2<Scalar> translation = Vec2<Scalar>::Zero();

  static PlanarIsometry identity() { return {}; }

  Eigen::Matrix<Scalar, 2, 2> rotation() const {
    auto [c, s] = turn_cos_sin<Scalar>(turns);
    Eigen::Matrix<Scalar, 2, 2> r;
    r << c, -s, s, c;
    return r;
  }

  Vec2<Scalar> operator()(const Vec2<Scalar>& p) const { return rotation() * p + translation; }

  Vec2<Scalar> inverse(const Vec2<Scalar>& q) const {
    return rotation().transpose() * (q - translation);
  }

  /// Degrees, for rendering and diagnostics.
  Scalar degrees() const { return Scalar(30 * turns); }
};

/// Nearest multiple of 30 degrees to the direction of v, as a turn count.
template <typename Scalar>
int nearest_turns(const Vec2<Scalar>& v) {
  using std::atan2;
  const double angle = static_cast<double>(atan2(v.y(), v.x()));
  const long k = std::lround(angle / (std::numbers::pi / 6.0));
  return static_cast<int>(((k % 12) + 12) % 12);
}

/// Parameter interval [t0, t1] of the segment a + t (b - a), t in [0, 1],
/// lying in the convex counter-clockwise polygon grown by `tol`.
template <typename Scalar>
std::optional<std::pair<Scalar, Scalar>> clip_segment(const Vec2<Scalar>& a,
                                                     const Vec2<Scalar>& b,
                                                     const std::vector<Vec2<Scalar>>& polygon,
                                                     Scalar tol) {
  Scalar t0 = 0, t1 = 1;
  const Vec2<Scalar> d = b - a;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2<Scalar>& p = polygon[i];
    const Vec2<Scalar> e = polygon[(i + 1) % n] - p;
    const Scalar len = e.norm();
    // Inward unit normal of a ccw edge.
    const Vec2<Scalar> normal(-e.y() / len, e.x() / len);
    const Scalar start = normal.dot(a - p) + tol;
    const Scalar rate = normal.dot(d);
    if (rate == Scalar(0)) {
      if (start < 0) return std::nullopt;
      continue;
    }
    const Scalar t = -start / rate;
    if (rate > 0) {
      t0 = std::max(t0, t);
    } else {
      t1 = std::min(t1, t);
    }
    if (t0 > t1) return std::nullopt;
  }
  return std::make_pair(t0, t1);
}

/// Signed distance of p inside the convex ccw polygon (negative outside).
template <typename Scalar>
Scalar inside_margin(const Vec2<Scalar>& p, const std::vector<Vec2<Scalar>>& polygon) {
  Scalar margin = std::numeric_limits<Scalar>::infinity();
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2<Scalar> e = polygon[(i + 1) % n] - polygon[i];
    const Vec2<Scalar> normal(-e.y(), e.x());
    margin = std::min(margin, normal.dot(p - polygon[i]) / e.norm());
  }
  return margin;
}

} // namespace pgeo
