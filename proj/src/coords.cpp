#include "pgeo/coords.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <limits>
#include <stdexcept>

namespace pgeo {

namespace {

// Signed distances to the three edge lines of the unit triangle, positive inside.
std::array<double, 3> triangle_margins(double x, double y) {
  return {y, (kSqrt3 * x - y) / 2.0, (kSqrt3 * (1.0 - x) - y) / 2.0};
}

// Slack accepted by the converters before flagging a rep as invalid; wider
// than kEps so that chained conversions never trip on rounding.
constexpr double kConversionSlack = 1e-6;

void require_structure(const PolyhedronModel& model, const SurfaceRep& rep) {
  if (auto err = validate_rep(model, rep, kConversionSlack))
    throw std::domain_error("invalid representation " + to_string(rep) + ": " + *err);
}

} // namespace

std::string to_string(const SurfaceRep& rep) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "(%s,%s,%.17g,%.17g)", to_string(rep.home).c_str(),
                to_string(rep.shared).c_str(), rep.x, rep.y);
  return buf;
}

std::optional<std::string> validate_rep(const PolyhedronModel& model, const SurfaceRep& rep,
                                        double tol) {
  if (!model.has_face(rep.home)) return "home face " + to_string(rep.home) + " out of range";
  if (!model.has_face(rep.shared))
    return "shared face " + to_string(rep.shared) + " out of range";
  if (rep.home == rep.shared) return std::string("home and shared face coincide");
  if (!model.adjacent(rep.home, rep.shared)) return std::string("home/shared not adjacent");
  if (!std::isfinite(rep.x) || !std::isfinite(rep.y))
    return std::string("coordinates must be finite");

  if (model.kind() == SolidKind::Cube) {
    if (rep.x < -tol || rep.x > 1.0 + tol) return std::string("x outside [0,1]");
    if (rep.y < -tol || rep.y > 1.0 + tol) return std::string("y outside [0,1]");
    return std::nullopt;
  }
  const auto m = triangle_margins(rep.x, rep.y);
  if (m[0] < -tol) return std::string("y < 0");
  if (m[1] < -tol) return std::string("y > sqrt(3)*x");
  if (m[2] < -tol) return std::string("y > sqrt(3)*(1-x)");
  return std::nullopt;
}

void require_valid(const PolyhedronModel& model, const SurfaceRep& rep, double tol) {
  if (auto err = validate_rep(model, rep, tol))
    throw std::domain_error("invalid representation " + to_string(rep) + ": " + *err);
}

SurfaceRep flip_edge_rep(const SurfaceRep& rep, double tol) {
  if (std::abs(rep.y) > tol)
    throw std::invalid_argument("flip_edge_rep needs a point on the shared edge, got " +
                                to_string(rep));
  return {rep.shared, rep.home, 1.0 - rep.x, 0.0};
}

SurfaceRep rotate_shared(const PolyhedronModel& model, const SurfaceRep& rep) {
  require_structure(model, rep);
  const auto& ring = model.neighbor_cycle(rep.home);
  const int next = (model.neighbor_slot(rep.home, rep.shared) + 1) % model.sides();
  if (model.kind() == SolidKind::Cube) return {rep.home, ring[next], rep.y, 1.0 - rep.x};
  return {rep.home, ring[next], (1.0 - rep.x + kSqrt3 * rep.y) / 2.0,
          (kSqrt3 - kSqrt3 * rep.x - rep.y) / 2.0};
}

SurfaceRep with_shared(const PolyhedronModel& model, const SurfaceRep& rep, FaceId shared) {
  SurfaceRep cur = rep;
  for (int i = 0; i < model.sides(); ++i) {
    if (cur.shared == shared) return cur;
    cur = rotate_shared(model, cur);
  }
  throw std::domain_error(to_string(shared) + " is not adjacent to home face " +
                          to_string(rep.home));
}

SurfaceRep snap_to_face(const PolyhedronModel& model, const SurfaceRep& rep, double tol) {
  SurfaceRep out = rep;
  if (model.kind() == SolidKind::Cube) {
    out.x = std::clamp(out.x, 0.0, 1.0);
    out.y = std::clamp(out.y, 0.0, 1.0);
    if (out.x < tol) out.x = 0.0;
    if (out.x > 1.0 - tol) out.x = 1.0;
    if (out.y < tol) out.y = 0.0;
    if (out.y > 1.0 - tol) out.y = 1.0;
    return out;
  }
  // Project onto any edge line the point sits outside of (or within tol of).
  if (out.y < tol) out.y = 0.0;
  auto m = triangle_margins(out.x, out.y);
  if (m[1] < tol) {  // line y = sqrt(3) x, unit normal (sqrt3/2, -1/2)
    out.x -= m[1] * kSqrt3 / 2.0;
    out.y += m[1] / 2.0;
  }
  m = triangle_margins(out.x, out.y);
  if (m[2] < tol) {  // line y = sqrt(3)(1 - x), unit normal (-sqrt3/2, -1/2)
    out.x += m[2] * kSqrt3 / 2.0;
    out.y += m[2] / 2.0;
  }
  out.x = std::clamp(out.x, 0.0, 1.0);
  out.y = std::max(out.y, 0.0);
  // Two violated edges: the point is at their common corner.
  m = triangle_margins(out.x, out.y);
  if (std::min({m[0], m[1], m[2]}) < 0.0) {
    Eigen::Vector2d best;
    double gap = std::numeric_limits<double>::infinity();
    for (const auto& c : chart_polygon(model)) {
      const double d = (c - out.xy()).norm();
      if (d < gap) {
        gap = d;
        best = c;
      }
    }
    if (gap <= 2 * tol) {
      out.x = best.x();
      out.y = best.y();
    }
  }
  return out;
}

std::vector<SurfaceRep> equivalent_reps(const PolyhedronModel& model, const SurfaceRep& rep,
                                        double tol) {
  require_structure(model, rep);
  std::vector<SurfaceRep> out;
  auto known = [&](const SurfaceRep& r) {
    return std::any_of(out.begin(), out.end(), [&](const SurfaceRep& o) {
      return o.home == r.home && o.shared == r.shared;
    });
  };

  std::deque<SurfaceRep> pending{snap_to_face(model, rep, tol)};
  while (!pending.empty()) {
    SurfaceRep cur = pending.front();
    pending.pop_front();
    if (known(cur)) continue;
    // Each (home, shared) pair holds exactly one rep of the point.
    for (int k = 0; k < model.sides(); ++k) {
      if (std::abs(cur.y) < tol) {
        cur.y = 0.0;
        if (cur.x < tol) cur.x = 0.0;
        if (cur.x > 1.0 - tol) cur.x = 1.0;
      }
      if (!known(cur)) out.push_back(cur);
      if (cur.y == 0.0) {
        SurfaceRep across = flip_edge_rep(cur, tol);
        if (!known(across)) pending.push_back(across);
      }
      cur = rotate_shared(model, cur);
    }
  }
  return out;
}

bool same_point(const PolyhedronModel& model, const SurfaceRep& a, const SurfaceRep& b,
                double tol) {
  for (const SurfaceRep& r : equivalent_reps(model, a, tol)) {
    if (r.home == b.home && r.shared == b.shared)
      return std::abs(r.x - b.x) <= tol && std::abs(r.y - b.y) <= tol;
  }
  return false;
}

std::vector<Eigen::Vector2d> chart_polygon(const PolyhedronModel& model) {
  if (model.kind() == SolidKind::Cube) return {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
  return {{0.0, 0.0}, {1.0, 0.0}, {0.5, kSqrt3 / 2.0}};
}

} // namespace pgeo
