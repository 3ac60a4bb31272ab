#include <doctest.h>

#include "../support/generators.hpp"
#include "pgeo/distance.hpp"
#include "pgeo/unfold.hpp"

using namespace pgeo;
using namespace pgeo::testing;

namespace {

const FaceId F1{1}, F2{2}, F3{3}, F4{4}, F6{6};

Landscape path(std::initializer_list<int> ids) {
  Landscape l;
  for (int i : ids) l.faces.push_back(FaceId{i});
  return l;
}

void check_point(const Eigen::Vector2d& p, double x, double y, double tol = 1e-12) {
  CHECK(p.x() == doctest::Approx(x).epsilon(tol));
  CHECK(p.y() == doctest::Approx(y).epsilon(tol));
}

} // namespace

TEST_CASE("enumerate_landscapes") {
  CHECK(enumerate_landscapes(tetrahedron(), F1, F2, 4).size() == 5);
  const auto adj = enumerate_landscapes(cube(), F1, F2, 2);
  REQUIRE(adj.size() == 1);
  CHECK(adj[0] == path({1, 2}));
  const auto opp = enumerate_landscapes(cube(), F1, F6, 3);
  REQUIRE(opp.size() == 4);
  CHECK(opp[0] == path({1, 2, 6}));
  CHECK(opp[3] == path({1, 5, 6}));

  const auto all = enumerate_landscapes(cube(), F1, F6, 6);
  CHECK(std::is_sorted(all.begin(), all.end()));
  for (const Landscape& l : all) CHECK_NOTHROW(require_landscape(cube(), l));

  CHECK_THROWS_AS(enumerate_landscapes(cube(), F1, F1, 4), std::domain_error);
  CHECK_THROWS_AS(enumerate_landscapes(cube(), F1, F2, 1), std::domain_error);
}

TEST_CASE("require_landscape") {
  CHECK_THROWS_AS(require_landscape(cube(), path({1, 6})), std::domain_error);
  CHECK_THROWS_AS(require_landscape(cube(), path({1, 2, 1})), std::domain_error);
  CHECK_THROWS_AS(require_landscape(cube(), path({1})), std::domain_error);
}

TEST_CASE("orient examples") {
  const Orientation t1 = orient(tetrahedron(), path({1, 2}), F1, F2);
  check_point(place_point(t1, {F2, F1, 0.3, 0.2}), 0.7, -0.2);

  const Orientation c2 = orient(cube(), path({1, 3, 2}), F1, F2);
  check_point(place_point(c2, {F2, F1, 0.3, 0.2}), -0.2, 0.3 - 1.0);

  const FaceRelabeling r = canonical_relabeling(cube(), F1, F6, 0);
  const Orientation c4 = orient(cube(), family_landscape(SolidKind::Cube, 4, r), r(1), r(2));
  check_point(place_point(c4, {r(6), r(2), 0.3, 0.2}), 0.7, -1.2);

  const Orientation t4 = orient(tetrahedron(), path({1, 3, 4, 2}), F1, F2);
  check_point(place_point(t4, {F2, F1, 0.3, 0.2}), -0.3, kSqrt3 - 0.2);

  const Orientation base = orient(cube(), path({1, 2, 6}), F1, F2);
  CHECK(base.placement[0].isometry.turns == 0);
  CHECK(base.placement[0].isometry.translation.norm() == 0.0);
  check_point(place_point(base, {F1, F2, 0.5, 0.2}), 0.5, 0.2);

  CHECK_THROWS_AS(orient(cube(), path({1, 2}), F3, F1), std::domain_error);
  CHECK_THROWS_AS(place_point(base, {F3, F1, 0.5, 0.5}), std::domain_error);
}

TEST_CASE("property: placed faces share whole edges") {
  for (const PolyhedronModel* m : {&tetrahedron(), &cube()}) {
    for (FaceId a : m->faces())
      for (FaceId b : m->faces()) {
        if (a == b) continue;
        for (const Landscape& l : enumerate_landscapes(*m, a, b, m->face_count())) {
          const Orientation o = orient(*m, l, a, m->neighbor_cycle(a)[0]);
          for (std::size_t i = 0; i + 1 < l.faces.size(); ++i) {
            const auto& p = o.placement[i].polygon;
            const auto& q = o.placement[i + 1].polygon;
            int common = 0;
            for (const auto& u : p)
              for (const auto& v : q) common += (u - v).norm() < 1e-12;
            CHECK(common == 2);
          }
        }
      }
  }
}

TEST_CASE("trail examples") {
  const Orientation t1 = orient(tetrahedron(), path({1, 2}), F1, F2);
  const Trail a = trail(t1, {F1, F2, 0.5, 0.2}, {F2, F1, 0.5, 0.2});
  REQUIRE(a.finite());
  CHECK(a.length == doctest::Approx(0.4).epsilon(1e-12));
  REQUIRE(a.segments.size() == 2);
  CHECK(a.segments[0].end.y == 0.0);

  const Orientation c2 = orient(cube(), path({1, 3, 2}), F1, F2);
  CHECK_FALSE(trail(c2, {F1, F2, 0.99, 0.01}, {F2, F1, 0.01, 0.01}).finite());

  const Trail d = trail(t1, {F1, F2, 0.3, 0.3}, {F1, F2, 0.3, 0.3});
  CHECK(d.length == 0.0);
  CHECK(d.segments.size() == 1);
}

TEST_CASE("reconstruct_path examples") {
  const Orientation t4 = orient(tetrahedron(), path({1, 3, 4, 2}), F1, F2);
  const auto segs = reconstruct_path(t4, {F1, F2, 0.4, 0.5}, {F2, F1, 0.4, 0.5});
  REQUIRE(segs.size() == 4);
  CHECK(segs[0].face == F1);
  CHECK(segs[0].start.x == doctest::Approx(0.4));
  // Segment (0.4, 0.5) -> (-0.4, sqrt3 - 0.5) meets y = sqrt3 x at t below.
  const double t = (kSqrt3 * 0.4 - 0.5) / (kSqrt3 - 1.0 + kSqrt3 * 0.8);
  CHECK(segs[0].end.x == doctest::Approx(0.4 - 0.8 * t).epsilon(1e-12));
  CHECK(segs[0].end.y == doctest::Approx(0.5 + (kSqrt3 - 1.0) * t).epsilon(1e-12));
  CHECK(segs[0].end.x == doctest::Approx(0.327157).epsilon(1e-5));
  CHECK(segs[0].end.y == doctest::Approx(0.566653).epsilon(1e-5));
  CHECK(segs[0].end.y == doctest::Approx(kSqrt3 * segs[0].end.x).epsilon(1e-12));

  const Orientation c2 = orient(cube(), path({1, 3, 2}), F1, F2);
  CHECK_THROWS_AS(reconstruct_path(c2, {F1, F2, 0.99, 0.01}, {F2, F1, 0.01, 0.01}),
                  std::invalid_argument);
}

TEST_CASE("property: trails are consistent") {
  Rng rng(21);
  for (const PolyhedronModel* m : {&tetrahedron(), &cube()}) {
    int finite = 0;
    for (int i = 0; i < 400; ++i) {
      const FaceId a = random_face(*m, rng);
      FaceId b = random_face(*m, rng);
      while (b == a) b = random_face(*m, rng);
      const auto ls = enumerate_landscapes(*m, a, b, 4);
      const Landscape& l = ls[rng() % ls.size()];
      const SurfaceRep p1 = random_rep_on(*m, a, random_neighbor(*m, a, rng), rng);
      const SurfaceRep p2 = random_rep_on(*m, b, random_neighbor(*m, b, rng), rng);

      const Trail fwd = trail(orient(*m, l, a, p1.shared), p1, p2);
      Landscape rev{{l.faces.rbegin(), l.faces.rend()}};
      const Trail bwd = trail(orient(*m, rev, b, p2.shared), p2, p1);
      CHECK(fwd.finite() == bwd.finite());
      if (!fwd.finite()) continue;
      ++finite;
      CHECK(std::abs(fwd.length - bwd.length) <= 1e-12);

      double sum = 0.0;
      for (const TrailSegment& s : fwd.segments) {
        sum += s.length();
        CHECK_FALSE(validate_rep(*m, s.start));
        CHECK_FALSE(validate_rep(*m, s.end));
      }
      CHECK(std::abs(sum - fwd.length) <= 1e-9);
      CHECK(same_point(*m, fwd.segments.front().start, p1));
      CHECK(same_point(*m, fwd.segments.back().end, p2));
      for (std::size_t k = 0; k + 1 < fwd.segments.size(); ++k) {
        const SurfaceRep& out = fwd.segments[k].end;
        const SurfaceRep& in = fwd.segments[k + 1].start;
        CHECK(same_point(*m, out, in, 1e-9));
      }
    }
    CHECK(finite > 100);
  }
}
