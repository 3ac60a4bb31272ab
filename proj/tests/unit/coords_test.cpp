#include <doctest.h>

#include <algorithm>

#include "../support/generators.hpp"
#include "pgeo/coords.hpp"

using namespace pgeo;
using namespace pgeo::testing;

namespace {

const FaceId F1{1}, F2{2}, F3{3}, F4{4}, F6{6};

bool contains(const std::vector<SurfaceRep>& reps, const SurfaceRep& r, double tol = 1e-12) {
  return std::any_of(reps.begin(), reps.end(), [&](const SurfaceRep& o) {
    return o.home == r.home && o.shared == r.shared && max_coord_error(o, r) <= tol;
  });
}

} // namespace

TEST_CASE("validate_rep") {
  CHECK_FALSE(validate_rep(cube(), {F1, F2, 0.5, 0.5}));
  CHECK(validate_rep(cube(), {F1, F6, 0.5, 0.5}) == "home/shared not adjacent");
  CHECK(validate_rep(tetrahedron(), {F1, F2, 0.9, 0.8}) == "y > sqrt(3)*(1-x)");
  CHECK(validate_rep(cube(), {F1, F2, 1.5, 0.5}) == "x outside [0,1]");
  CHECK(validate_rep(cube(), {F1, F1, 0.5, 0.5}));
  CHECK(validate_rep(cube(), {FaceId{7}, F1, 0.5, 0.5}));
  CHECK(validate_rep(tetrahedron(), {F1, F2, 0.5, -0.1}) == "y < 0");
  // Within tolerance of the boundary is accepted.
  CHECK_FALSE(validate_rep(cube(), {F1, F2, 1.0 + 1e-10, -1e-10}));
}

TEST_CASE("flip_edge_rep") {
  const SurfaceRep f = flip_edge_rep({F1, F2, 0.3, 0.0});
  CHECK(f.home == F2);
  CHECK(f.shared == F1);
  CHECK(f.x == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(f.y == 0.0);
  const SurfaceRep mid = flip_edge_rep({F1, F2, 0.5, 0.0});
  CHECK(mid.x == 0.5);
  CHECK_THROWS_AS(flip_edge_rep({F1, F2, 0.3, 0.1}), std::invalid_argument);

  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const SurfaceRep e = random_edge_rep(cube(), rng);
    const SurfaceRep back = flip_edge_rep(flip_edge_rep(e));
    CHECK(back.home == e.home);
    CHECK(back.shared == e.shared);
    CHECK(max_coord_error(back, e) <= 1e-15);
  }
}

TEST_CASE("rotate_shared examples") {
  const SurfaceRep c = rotate_shared(tetrahedron(), {F1, F2, 0.5, kSqrt3 / 6});
  CHECK(c.shared == F4);
  CHECK(c.x == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(c.y == doctest::Approx(kSqrt3 / 6).epsilon(1e-14));

  const SurfaceRep t = rotate_shared(tetrahedron(), {F1, F2, 0.3, 0.2});
  CHECK(t.shared == F4);
  CHECK(t.x == doctest::Approx((0.7 + kSqrt3 * 0.2) / 2).epsilon(1e-14));
  CHECK(t.x == doctest::Approx(0.523205).epsilon(1e-6));
  CHECK(t.y == doctest::Approx(0.506218).epsilon(1e-6));

  const SurfaceRep q = rotate_shared(cube(), {F1, F2, 0.0, 0.0});
  CHECK(q.shared == F4);
  CHECK(q.x == 0.0);
  CHECK(q.y == 1.0);

  CHECK_THROWS_AS(rotate_shared(cube(), {F1, F6, 0.5, 0.5}), std::domain_error);
}

TEST_CASE("rotate_shared is canonical n2 -> n4") {
  for (const PolyhedronModel* m : {&tetrahedron(), &cube()})
    for (auto [a, b] : m->adjacencies()) {
      const SurfaceRep r = rotate_shared(*m, {a, b, 0.25, 0.25});
      CHECK(r.shared == canonical_relabeling(*m, a, b)(4));
    }
}

TEST_CASE("property: rotation cycle is the identity and keeps validity") {
  Rng rng(12);
  for (const PolyhedronModel* m : {&tetrahedron(), &cube()}) {
    for (int i = 0; i < 2000; ++i) {
      const SurfaceRep r = random_rep(*m, rng, 0.3);
      SurfaceRep cur = r;
      for (int k = 0; k < m->sides(); ++k) {
        cur = rotate_shared(*m, cur);
        CHECK_FALSE(validate_rep(*m, cur));
      }
      CHECK(cur.shared == r.shared);
      CHECK(max_coord_error(cur, r) <= 1e-12);
    }
  }
}

TEST_CASE("property: rotation preserves chart distance") {
  Rng rng(13);
  for (const PolyhedronModel* m : {&tetrahedron(), &cube()}) {
    for (int i = 0; i < 1000; ++i) {
      const FaceId home = random_face(*m, rng);
      const FaceId shared = random_neighbor(*m, home, rng);
      const SurfaceRep a = random_rep_on(*m, home, shared, rng);
      const SurfaceRep b = random_rep_on(*m, home, shared, rng);
      const double before = (a.xy() - b.xy()).norm();
      const double after = (rotate_shared(*m, a).xy() - rotate_shared(*m, b).xy()).norm();
      CHECK(std::abs(before - after) <= 1e-12);
    }
  }
}

TEST_CASE("equivalent_reps examples") {
  const auto interior = equivalent_reps(cube(), {F1, F2, 0.5, 0.5});
  CHECK(interior.size() == 4);
  CHECK(std::all_of(interior.begin(), interior.end(), [](const SurfaceRep& r) { return r.home == F1; }));

  const auto edge = equivalent_reps(cube(), {F1, F2, 0.3, 0.0});
  CHECK(edge.size() == 8);
  CHECK(std::all_of(edge.begin(), edge.end(),
                    [](const SurfaceRep& r) { return r.home == F1 || r.home == F2; }));

  const auto apex = equivalent_reps(tetrahedron(), {F1, F2, 0.5, kSqrt3 / 2});
  CHECK(apex.size() == 9);
  CHECK(contains(apex, {F3, F2, 0.5, kSqrt3 / 2}));
  CHECK(contains(apex, {F4, F2, 0.5, kSqrt3 / 2}));

  CHECK(equivalent_reps(tetrahedron(), {F1, F2, 0.4, 0.3}).size() == 3);
  CHECK(equivalent_reps(tetrahedron(), {F1, F2, 0.4, 0.0}).size() == 6);
  CHECK(equivalent_reps(cube(), {F1, F2, 0.0, 0.0}).size() == 12);
  CHECK_THROWS_AS(equivalent_reps(cube(), {F1, F6, 0.2, 0.2}), std::domain_error);
}

TEST_CASE("property: equivalence classes are closed") {
  Rng rng(14);
  for (const PolyhedronModel* m : {&tetrahedron(), &cube()}) {
    for (int i = 0; i < 300; ++i) {
      const SurfaceRep r = random_rep(*m, rng, 0.6);
      const auto cls = equivalent_reps(*m, r);
      for (const SurfaceRep& s : cls) {
        const auto other = equivalent_reps(*m, s);
        CHECK(other.size() == cls.size());
        for (const SurfaceRep& t : other) CHECK(contains(cls, t, 1e-9));
      }
    }
  }
}

TEST_CASE("same_point") {
  CHECK(same_point(cube(), {F1, F2, 0.3, 0.0}, {F2, F1, 0.7, 0.0}));
  CHECK(same_point(tetrahedron(), {F1, F2, 0.3, 0.0}, {F2, F1, 0.7, 0.0}));
  CHECK_FALSE(same_point(cube(), {F1, F2, 0.5, 0.5}, {F1, F2, 0.5, 0.4}));
  CHECK(same_point(cube(), {F1, F2, 0.0, 0.0}, {F2, F3, 0.0, 0.0}));
  CHECK_FALSE(same_point(cube(), {F1, F2, 0.0, 0.0}, {F2, F4, 0.0, 0.0}));
}

TEST_CASE("snap_to_face") {
  const SurfaceRep s = snap_to_face(cube(), {F1, F2, 1.0 + 1e-12, -1e-12});
  CHECK(s.x == 1.0);
  CHECK(s.y == 0.0);
  const SurfaceRep t = snap_to_face(tetrahedron(), {F1, F3, 0.5, kSqrt3 / 2 + 1e-12});
  CHECK_FALSE(validate_rep(tetrahedron(), t, 1e-15));
}
