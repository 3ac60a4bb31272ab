#include "pgeo/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "pgeo/distance.hpp"

namespace pgeo {

namespace {

using NodeKey = std::tuple<int, int, long long, long long>;

// Lexicographically smallest of a point's reps, with coordinates quantised
// well below the mesh spacing; equal for every rep of one point.
NodeKey canonical_key(const PolyhedronModel& model, const SurfaceRep& rep) {
  NodeKey best{1 << 30, 0, 0, 0};
  for (const SurfaceRep& r : equivalent_reps(model, rep)) {
    NodeKey k{r.home.index, r.shared.index, std::llround(r.x * 1e7), std::llround(r.y * 1e7)};
    best = std::min(best, k);
  }
  return best;
}

// Chart used for all node coordinates on a face.
SurfaceRep in_face_chart(const PolyhedronModel& model, const SurfaceRep& rep) {
  return with_shared(model, rep, model.neighbor_cycle(rep.home).front());
}

} // namespace

UnfoldOracleResult oracle_unfold_distance(const PolyhedronModel& model, const SurfaceRep& q1,
                                          const SurfaceRep& q2, int max_faces,
                                          double tie_tolerance) {
  if (max_faces < 2) throw std::domain_error("max_faces must be at least 2");
  struct Hit {
    Landscape landscape;
    double length;
  };
  std::vector<Hit> hits;
  for (const SurfaceRep& a : one_rep_per_home(model, q1)) {
    for (const SurfaceRep& b : one_rep_per_home(model, q2)) {
      if (a.home == b.home) {
        const SurfaceRep bb = with_shared(model, b, a.shared);
        hits.push_back({Landscape{{a.home}}, (bb.xy() - a.xy()).norm()});
        continue;
      }
      for (const Landscape& l : enumerate_landscapes(model, a.home, b.home, max_faces)) {
        const Trail t = trail(orient(model, l, a.home, a.shared), a, b);
        if (t.finite()) hits.push_back({l, t.length});
      }
    }
  }

  UnfoldOracleResult out;
  for (const Hit& h : hits) out.distance = std::min(out.distance, h.length);
  for (const Hit& h : hits) {
    if (h.length > out.distance + tie_tolerance) continue;
    if (std::find(out.argmin.begin(), out.argmin.end(), h.landscape) == out.argmin.end())
      out.argmin.push_back(h.landscape);
  }
  std::sort(out.argmin.begin(), out.argmin.end());
  return out;
}

SurfaceMesh::SurfaceMesh(const PolyhedronModel& model, int n)
    : model_(&model), n_(n) {
  if (n < 1) throw std::domain_error("mesh refinement must be at least 1");
  const int faces = model.face_count();
  face_nodes_.resize(faces);
  face_coords_.resize(faces);

  std::map<NodeKey, int> ids;
  for (FaceId f : model.faces()) {
    for (FaceId g : model.neighbor_cycle(f)) {
      for (int i = 0; i < n; ++i) {
        const SurfaceRep rep{f, g, static_cast<double>(i) / n, 0.0};
        const NodeKey key = canonical_key(model, rep);
        auto [it, fresh] = ids.emplace(key, static_cast<int>(nodes_.size()));
        if (fresh) {
          nodes_.push_back(rep);
          node_faces_.emplace_back();
        }
        const int id = it->second;
        face_nodes_[f.index - 1].push_back(id);
        face_coords_[f.index - 1].push_back(in_face_chart(model, rep).xy());
        node_faces_[id].push_back(f.index - 1);
      }
    }
  }
}

Eigen::Vector2d SurfaceMesh::position(FaceId face, int node) const {
  const auto& ids = face_nodes_[face.index - 1];
  const auto it = std::find(ids.begin(), ids.end(), node);
  if (it == ids.end())
    throw std::domain_error("mesh node " + std::to_string(node) + " is not on " + to_string(face));
  return face_coords_[face.index - 1][it - ids.begin()];
}

double SurfaceMesh::chord(FaceId face, int a, int b) const {
  return (position(face, a) - position(face, b)).norm();
}

double SurfaceMesh::distance(const SurfaceRep& q1, const SurfaceRep& q2) const {
  const PolyhedronModel& model = *model_;
  const auto starts = one_rep_per_home(model, q1);
  const auto goals = one_rep_per_home(model, q2);
  const double inf = std::numeric_limits<double>::infinity();

  double best = inf;
  for (const SurfaceRep& a : starts)
    for (const SurfaceRep& b : goals)
      if (a.home == b.home)
        best = std::min(best, (in_face_chart(model, a).xy() - in_face_chart(model, b).xy()).norm());

  std::vector<double> dist(nodes_.size(), inf);
  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  for (const SurfaceRep& a : starts) {
    const int f = a.home.index - 1;
    const Eigen::Vector2d p = in_face_chart(model, a).xy();
    for (std::size_t k = 0; k < face_nodes_[f].size(); ++k) {
      const double d = (face_coords_[f][k] - p).norm();
      const int id = face_nodes_[f][k];
      if (d < dist[id]) {
        dist[id] = d;
        queue.emplace(d, id);
      }
    }
  }

  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (d > dist[u] || d >= best) continue;
    for (int f : node_faces_[u]) {
      const auto& ids = face_nodes_[f];
      const auto& xy = face_coords_[f];
      const Eigen::Vector2d pu = xy[std::find(ids.begin(), ids.end(), u) - ids.begin()];
      for (std::size_t k = 0; k < ids.size(); ++k) {
        const double nd = d + (xy[k] - pu).norm();
        if (nd < dist[ids[k]]) {
          dist[ids[k]] = nd;
          queue.emplace(nd, ids[k]);
        }
      }
    }
  }

  for (const SurfaceRep& b : goals) {
    const int f = b.home.index - 1;
    const Eigen::Vector2d p = in_face_chart(model, b).xy();
    for (std::size_t k = 0; k < face_nodes_[f].size(); ++k)
      best = std::min(best, dist[face_nodes_[f][k]] + (face_coords_[f][k] - p).norm());
  }
  return best;
}

double oracle_mesh_distance(const PolyhedronModel& model, const SurfaceRep& q1,
                            const SurfaceRep& q2, int n) {
  return SurfaceMesh(model, n).distance(q1, q2);
}

} // namespace pgeo
