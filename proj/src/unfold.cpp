#include "pgeo/unfold.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pgeo {

namespace {

// Pull-backs at a face crossing must name the same surface point to within
// this distance; placement roundoff is far below it.
constexpr double kJunctionTol = 1e-7;

// Chart position of `vertex` in the chart (face, shared).
Eigen::Vector2d chart_position(const PolyhedronModel& model, FaceId face, FaceId shared,
                               const VertexId& vertex) {
  const auto& cycle = model.vertex_cycle(face);
  const int slot = model.neighbor_slot(face, shared);
  const auto it = std::find(cycle.begin(), cycle.end(), vertex);
  if (it == cycle.end())
    throw std::logic_error(to_string(vertex) + " is not a vertex of " + to_string(face));
  const int idx = static_cast<int>(it - cycle.begin());
  const int sides = model.sides();
  return chart_polygon(model)[((idx - slot) % sides + sides) % sides];
}

FacePlacement make_placement(const PolyhedronModel& model, FaceId face, FaceId chart_shared,
                             PlanarIsometry<double> iso) {
  FacePlacement out{face, chart_shared, iso, {}};
  for (const auto& corner : chart_polygon(model)) out.polygon.push_back(iso(corner));
  return out;
}

// Glues `next` onto the placed face `parent` across their common edge, using
// the chart (next, parent) for the new face.
FacePlacement glue(const PolyhedronModel& model, const FacePlacement& parent, FaceId next) {
  const auto [a, b] = model.edge_anchor(parent.face, next);
  const Eigen::Vector2d pa =
      parent.isometry(chart_position(model, parent.face, parent.chart_shared, a));
  const Eigen::Vector2d pb =
      parent.isometry(chart_position(model, parent.face, parent.chart_shared, b));
  // In the chart (next, parent) the edge runs b -> a along (0,0) -> (1,0).
  PlanarIsometry<double> iso;
  iso.turns = nearest_turns<double>(pa - pb);
  iso.translation = pb;
  return make_placement(model, next, parent.face, iso);
}

// Parameter where a + t d crosses the edge shared by two placed polygons,
// clamped to [lo, hi]; the middle of [lo, hi] when they share no edge or the
// segment runs along it.
double crossing(const Eigen::Vector2d& a, const Eigen::Vector2d& d, const FacePlacement& p,
                const FacePlacement& q, double lo, double hi) {
  std::vector<Eigen::Vector2d> common;
  for (const auto& u : p.polygon)
    for (const auto& v : q.polygon)
      if ((u - v).norm() < 1e-9) common.push_back(u);
  const double mid = (lo + hi) / 2.0;
  if (common.size() != 2) return mid;
  const Eigen::Vector2d e = common[1] - common[0];
  const double denom = e.x() * d.y() - e.y() * d.x();
  if (std::abs(denom) < 1e-15) return mid;
  const Eigen::Vector2d w = common[0] - a;
  const double t = (e.x() * w.y() - e.y() * w.x()) / denom;
  return std::clamp(t, lo, hi);
}

struct Piece {
  int slot;  // index into the landscape
  double t0;
  double t1;
};

} // namespace

int Landscape::index_of(FaceId face) const {
  auto it = std::find(faces.begin(), faces.end(), face);
  return it == faces.end() ? -1 : static_cast<int>(it - faces.begin());
}

std::string to_string(const Landscape& landscape) {
  std::string out = "(";
  for (std::size_t i = 0; i < landscape.faces.size(); ++i) {
    if (i) out += ",";
    out += to_string(landscape.faces[i]);
  }
  return out + ")";
}

void require_landscape(const PolyhedronModel& model, const Landscape& landscape) {
  if (landscape.faces.size() < 2)
    throw std::domain_error("a landscape needs at least two faces");
  for (std::size_t i = 0; i < landscape.faces.size(); ++i) {
    const FaceId f = landscape.faces[i];
    if (!model.has_face(f))
      throw std::domain_error(to_string(f) + " is not a face of the " + to_string(model.kind()));
    if (std::count(landscape.faces.begin(), landscape.faces.end(), f) != 1)
      throw std::domain_error("landscape " + to_string(landscape) + " repeats " + to_string(f));
    if (i > 0 && !model.adjacent(landscape.faces[i - 1], f))
      throw std::domain_error("landscape " + to_string(landscape) + " steps between non-adjacent faces");
  }
}

const FacePlacement& Orientation::placement_of(FaceId face) const {
  const int idx = landscape.index_of(face);
  if (idx < 0)
    throw std::domain_error(to_string(face) + " is not in landscape " + to_string(landscape));
  return placement[idx];
}

std::vector<Landscape> enumerate_landscapes(const PolyhedronModel& model, FaceId from, FaceId to,
                                            int max_faces) {
  if (!model.has_face(from) || !model.has_face(to))
    throw std::domain_error("landscape endpoints must be faces of the " + to_string(model.kind()));
  if (from == to) throw std::domain_error("landscapes join two distinct faces");
  if (max_faces < 2) throw std::domain_error("max_faces must be at least 2");

  std::vector<Landscape> out;
  std::vector<FaceId> path{from};
  std::function<void()> extend = [&] {
    const FaceId last = path.back();
    if (last == to) {
      out.push_back(Landscape{path});
      return;
    }
    if (static_cast<int>(path.size()) >= max_faces) return;
    std::vector<FaceId> next = model.neighbor_cycle(last);
    std::sort(next.begin(), next.end());
    for (FaceId f : next) {
      if (std::find(path.begin(), path.end(), f) != path.end()) continue;
      path.push_back(f);
      extend();
      path.pop_back();
    }
  };
  extend();
  return out;
}

Orientation orient(const PolyhedronModel& model, const Landscape& landscape, FaceId base_face,
                   FaceId base_shared) {
  require_landscape(model, landscape);
  const int base = landscape.index_of(base_face);
  if (base < 0)
    throw std::domain_error("base face " + to_string(base_face) + " is not in landscape " +
                            to_string(landscape));
  if (!model.adjacent(base_face, base_shared))
    throw std::domain_error("base shared face must be adjacent to the base face");

  Orientation out{&model, landscape, base_face, base_shared, {}};
  out.placement.resize(landscape.faces.size());
  out.placement[base] =
      make_placement(model, base_face, base_shared, PlanarIsometry<double>::identity());
  for (std::size_t i = base + 1; i < landscape.faces.size(); ++i)
    out.placement[i] = glue(model, out.placement[i - 1], landscape.faces[i]);
  for (int i = base - 1; i >= 0; --i)
    out.placement[i] = glue(model, out.placement[i + 1], landscape.faces[i]);
  return out;
}

Orientation orient_face(const PolyhedronModel& model, FaceId face, FaceId shared) {
  if (!model.adjacent(face, shared))
    throw std::domain_error("base shared face must be adjacent to the base face");
  Orientation out{&model, Landscape{{face}}, face, shared, {}};
  out.placement.push_back(make_placement(model, face, shared, PlanarIsometry<double>::identity()));
  return out;
}

Eigen::Vector2d place_point(const Orientation& orientation, const SurfaceRep& rep) {
  const FacePlacement& fp = orientation.placement_of(rep.home);
  const SurfaceRep local = with_shared(*orientation.model, rep, fp.chart_shared);
  return fp.isometry(local.xy());
}

SurfaceRep pull_back(const Orientation& orientation, FaceId face, const Eigen::Vector2d& point) {
  const FacePlacement& fp = orientation.placement_of(face);
  const Eigen::Vector2d local = fp.isometry.inverse(point);
  return snap_to_face(*orientation.model, {face, fp.chart_shared, local.x(), local.y()});
}

Trail trail(const Orientation& orientation, const SurfaceRep& p1, const SurfaceRep& p2,
            double tol) {
  const PolyhedronModel& model = *orientation.model;
  Trail out;
  out.from = place_point(orientation, p1);
  out.to = place_point(orientation, p2);
  const Eigen::Vector2d delta = out.to - out.from;
  const double span = delta.norm();

  if (span <= tol) {
    const FacePlacement& fp = orientation.placement_of(p1.home);
    const SurfaceRep local = with_shared(model, p1, fp.chart_shared);
    out.length = span;
    out.segments.push_back({p1.home, local, local});
    return out;
  }

  auto at = [&](double t) -> Eigen::Vector2d { return out.from + t * delta; };
  auto surface_at = [&](int slot, double t) {
    return pull_back(orientation, orientation.landscape.faces[slot], at(t));
  };

  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < orientation.placement.size(); ++i) {
    if (auto iv = clip_segment<double>(out.from, out.to, orientation.placement[i].polygon, tol))
      pieces.push_back({static_cast<int>(i), iv->first, iv->second});
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& a, const Piece& b) { return a.t0 < b.t0; });

  // Chain pieces along the segment; every hand-over must be a genuine
  // crossing on the surface, not just an overlap in the plane.
  const double gap = tol;
  std::vector<int> chain;
  std::vector<double> cuts{0.0};
  std::vector<bool> used(pieces.size(), false);
  std::function<bool(int)> walk = [&](int cur) -> bool {
    const Piece& pc = pieces[cur];
    if (pc.t1 >= 1.0 - gap) {
      return same_point(model, surface_at(pc.slot, 1.0), p2, kJunctionTol);
    }
    for (std::size_t q = 0; q < pieces.size(); ++q) {
      if (used[q]) continue;
      const Piece& nx = pieces[q];
      if (nx.t0 > pc.t1 + gap || nx.t1 <= pc.t1) continue;
      const double lo = std::max({nx.t0, pc.t0, cuts.back()});
      const double hi = std::max(pc.t1, lo);
      const double cut = std::clamp(
          crossing(out.from, delta, orientation.placement[pc.slot], orientation.placement[nx.slot], lo, hi),
          0.0, 1.0);
      if (!same_point(model, surface_at(pc.slot, cut), surface_at(nx.slot, cut), kJunctionTol))
        continue;
      used[q] = true;
      chain.push_back(static_cast<int>(q));
      cuts.push_back(cut);
      if (walk(static_cast<int>(q))) return true;
      used[q] = false;
      chain.pop_back();
      cuts.pop_back();
    }
    return false;
  };

  bool found = false;
  for (std::size_t s = 0; s < pieces.size() && !found; ++s) {
    if (pieces[s].t0 > gap) continue;
    if (!same_point(model, surface_at(pieces[s].slot, 0.0), p1, kJunctionTol)) continue;
    used[s] = true;
    chain = {static_cast<int>(s)};
    cuts = {0.0};
    found = walk(static_cast<int>(s));
    used[s] = false;
  }
  if (!found) return out;

  cuts.push_back(1.0);
  out.length = span;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const int slot = pieces[chain[k]].slot;
    const double a = cuts[k], b = cuts[k + 1];
    if (b - a <= 0.0) continue;
    out.segments.push_back(
        {orientation.landscape.faces[slot], surface_at(slot, a), surface_at(slot, b)});
  }
  if (out.segments.empty()) {
    const int slot = pieces[chain.front()].slot;
    out.segments.push_back(
        {orientation.landscape.faces[slot], surface_at(slot, 0.0), surface_at(slot, 1.0)});
  }
  return out;
}

std::vector<TrailSegment> reconstruct_path(const Orientation& orientation, const SurfaceRep& p1,
                                           const SurfaceRep& p2) {
  Trail t = trail(orientation, p1, p2);
  if (!t.finite())
    throw std::invalid_argument("no contained trail between " + to_string(p1) + " and " +
                                to_string(p2) + " in " + to_string(orientation.landscape));
  return std::move(t.segments);
}

} // namespace pgeo
