#include "pgeo/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>
#include <stdexcept>

namespace pgeo {

namespace {

// Honest trails are accepted as geodesics when they match the blind minimum
// to this precision.
constexpr double kGeodesicMatch = 1e-9;

struct Candidate {
  int id;
  Landscape landscape;
  SurfaceRep a;
  SurfaceRep b;
  double value;
};

void require_mutual(const SurfaceRep& p1, const SurfaceRep& p2) {
  if (p1.home == p2.home || p1.home != p2.shared || p2.home != p1.shared)
    throw std::domain_error("expected (F_n1, F_n2, x1, y1) and (F_n2, F_n1, x2, y2), got " +
                            to_string(p1) + " and " + to_string(p2));
}

ChartPair<double> coords(const SurfaceRep& p1, const SurfaceRep& p2) {
  return {p1.x, p1.y, p2.x, p2.y};
}

void collect_pair(const PolyhedronModel& model, const SurfaceRep& a, const SurfaceRep& b,
                  std::vector<Candidate>& out) {
  if (a.home == b.home) {
    const SurfaceRep bb = with_shared(model, b, a.shared);
    out.push_back({kSameFace, Landscape{{a.home}}, a, bb, (bb.xy() - a.xy()).norm()});
    return;
  }
  if (model.kind() == SolidKind::Tetrahedron || model.adjacent(a.home, b.home)) {
    const SurfaceRep p1 = with_shared(model, a, b.home);
    const SurfaceRep p2 = with_shared(model, b, a.home);
    const FaceRelabeling r = canonical_relabeling(model, a.home, b.home);
    if (model.kind() == SolidKind::Tetrahedron) {
      const auto v = tet_trail_lengths(p1, p2);
      for (int i = 0; i < 5; ++i)
        out.push_back({i + 1, family_landscape(model.kind(), i + 1, r), p1, p2, v[i]});
    } else {
      const auto v = cube_adjacent_trail_lengths(p1, p2);
      for (int i = 0; i < 3; ++i)
        out.push_back({i + 1, family_landscape(model.kind(), i + 1, r), p1, p2, v[i]});
    }
    return;
  }
  const FaceRelabeling r = canonical_relabeling(model, a.home, b.home, 0);
  const SurfaceRep p1 = with_shared(model, a, r(2));
  const SurfaceRep p2 = with_shared(model, b, r(2));
  const auto v = cube_opposite_trail_lengths(p1, p2, 0);
  for (int i = 0; i < 12; ++i)
    out.push_back({i + 4, family_landscape(model.kind(), i + 4, r), p1, p2, v[i]});
}

} // namespace

std::vector<SurfaceRep> one_rep_per_home(const PolyhedronModel& model, const SurfaceRep& rep) {
  std::vector<SurfaceRep> out;
  for (const SurfaceRep& r : equivalent_reps(model, rep))
    if (std::none_of(out.begin(), out.end(), [&](const SurfaceRep& o) { return o.home == r.home; }))
      out.push_back(r);
  return out;
}

std::string landscape_label(int id) {
  return id == kSameFace ? std::string("SAME_FACE") : "L" + std::to_string(id);
}

Landscape family_landscape(SolidKind kind, int id, const FaceRelabeling& relabeling) {
  const int families = kind == SolidKind::Tetrahedron ? 5 : 15;
  if (id < 1 || id > families)
    throw std::domain_error("no landscape family " + landscape_label(id) + " on the " +
                            to_string(kind));
  Landscape out;
  for (int k : kind == SolidKind::Tetrahedron ? tetrahedron_family(id) : cube_family(id))
    out.faces.push_back(relabeling(k));
  return out;
}

std::array<double, 5> tet_trail_lengths(const SurfaceRep& p1, const SurfaceRep& p2) {
  require_mutual(p1, p2);
  return tetrahedron_formulas(coords(p1, p2));
}

std::array<double, 3> cube_adjacent_trail_lengths(const SurfaceRep& p1, const SurfaceRep& p2) {
  require_mutual(p1, p2);
  if (p1.home.index + p2.home.index == 7)
    throw std::domain_error("adjacent-face formulas got opposite faces");
  return cube_adjacent_formulas(coords(p1, p2));
}

std::array<double, 12> cube_opposite_trail_lengths(const SurfaceRep& p1, const SurfaceRep& p2,
                                                   int rotation) {
  const PolyhedronModel& model = cube();
  if (!model.has_face(p1.home) || !model.has_face(p2.home) || !model.opposite(p1.home, p2.home))
    throw std::domain_error("opposite-face formulas need opposite home faces, got " +
                            to_string(p1) + " and " + to_string(p2));
  const FaceId n2 = canonical_relabeling(model, p1.home, p2.home, rotation)(2);
  if (p1.shared != n2 || p2.shared != n2)
    throw std::domain_error("expected (F_n1, F_n2, x1, y1) and (F_n6, F_n2, x2, y2) with F_n2 = " +
                            to_string(n2) + ", got " + to_string(p1) + " and " + to_string(p2));
  return cube_opposite_formulas(coords(p1, p2));
}

DistanceResult surface_distance(const PolyhedronModel& model, const SurfaceRep& q1,
                                const SurfaceRep& q2, double tie_tolerance) {
  std::vector<Candidate> all;
  for (const SurfaceRep& a : one_rep_per_home(model, q1))
    for (const SurfaceRep& b : one_rep_per_home(model, q2)) collect_pair(model, a, b, all);

  DistanceResult out;
  out.distance = std::numeric_limits<double>::infinity();
  for (const Candidate& c : all) {
    out.distance = std::min(out.distance, c.value);
    if (c.id == kSameFace) continue;
    auto [it, fresh] = out.values.emplace(c.id, c.value);
    if (!fresh) it->second = std::min(it->second, c.value);
  }

  // Coincident points: one empty same-face answer, not every landscape
  // through the shared boundary.
  const bool coincident = out.distance <= tie_tolerance &&
                          std::any_of(all.begin(), all.end(), [&](const Candidate& c) {
                            return c.id == kSameFace && c.value <= tie_tolerance;
                          });

  for (const Candidate& c : all) {
    if (c.value > out.distance + tie_tolerance) continue;
    if (coincident && c.id != kSameFace) continue;
    auto it = std::find_if(out.minimizers.begin(), out.minimizers.end(), [&](const Minimizer& m) {
      return m.id == c.id && m.landscape == c.landscape;
    });
    if (it == out.minimizers.end()) {
      out.minimizers.push_back({c.id, c.landscape, c.value, {{c.a, c.b}}});
    } else {
      it->value = std::min(it->value, c.value);
      it->reps.emplace_back(c.a, c.b);
    }
  }
  std::sort(out.minimizers.begin(), out.minimizers.end(),
            [](const Minimizer& a, const Minimizer& b) {
              return std::tie(a.id, a.landscape) < std::tie(b.id, b.landscape);
            });
  if (coincident) {
    out.distance = 0.0;
    out.minimizers.resize(1);
    out.minimizers.front().value = 0.0;
  }
  return out;
}

DistanceResult geodesics(const PolyhedronModel& model, const SurfaceRep& q1,
                         const SurfaceRep& q2, double tie_tolerance) {
  DistanceResult out = surface_distance(model, q1, q2, tie_tolerance);
  std::vector<Minimizer> kept;
  for (const Minimizer& m : out.minimizers) {
    for (const auto& [a, b] : m.reps) {
      Orientation o = m.landscape.faces.size() == 1
                          ? orient_face(model, a.home, a.shared)
                          : orient(model, m.landscape, a.home, a.shared);
      Trail t = trail(o, a, b);
      if (!t.finite() || std::abs(t.length - out.distance) > kGeodesicMatch) continue;
      if (out.distance == 0.0) t.segments.clear();
      out.geodesics.push_back({kept.size(), std::move(o), std::move(t)});
      kept.push_back(m);
      break;
    }
  }
  out.minimizers = std::move(kept);
  return out;
}

} // namespace pgeo
