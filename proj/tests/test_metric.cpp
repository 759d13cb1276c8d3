#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "e2w/metric.hpp"

using namespace e2w;

TEST_CASE("developed cell radii and sector data") {
  const DevelopedCell& sq = develop_cell(4, 2);
  CHECK(sq.radius_vertex == Catch::Approx(std::sqrt(2.0) / 2));
  CHECK(sq.radius_midpoint == Catch::Approx(0.5));
  CHECK(sq.corner() == Rat(1, 2));
  CHECK(sq.total_center_angle() == Rat(2));  // flat: exactly 2*pi

  const DevelopedCell& hex = develop_cell(6, 3);
  CHECK(hex.radius_vertex == Catch::Approx(1.0));
  CHECK(hex.corner() == Rat(2, 3));
  CHECK(hex.total_center_angle() == Rat(2));

  // 10-gon truncated at q=4: total center angle 10*pi/4 > 2*pi (wrapped).
  const DevelopedCell& dec = develop_cell(10, 4);
  CHECK(dec.total_center_angle() == Rat(5, 2));
  CHECK(dec.corner() == Rat(3, 4));
  CHECK(dec.radius_vertex == Catch::Approx(0.5 / std::sin(M_PI / 8)));
  CHECK(dec.radius_midpoint == Catch::Approx(0.5 / std::tan(M_PI / 8)));

  // The half-sector at q=6 is pi/12: the center angle between a vertex and
  // the adjacent edge midpoint.
  const DevelopedCell& c12 = develop_cell(12, 6);
  CHECK(c12.midpoint_center_angle(0) - c12.vertex_center_angle(0) ==
        Rat(1, 12));
  CHECK(c12.vertex_center_angle(3) == Rat(1, 2));

  // Identical calls return the same cached entry.
  CHECK(&develop_cell(10, 4) == &dec);
}

TEST_CASE("developed cell rejects bad parameters") {
  CHECK_THROWS_AS(develop_cell(5, 2), Error);   // odd
  CHECK_THROWS_AS(develop_cell(2, 1), Error);   // too small
  CHECK_THROWS_AS(develop_cell(8, 5), Error);   // q > n: positively curved
  CHECK_THROWS_AS(develop_cell(12, 1), Error);  // q < 2
}

TEST_CASE("projection onto a mirror: golden configurations") {
  // 12-gon, q = 6. Mirror 0 crosses edges (0,1) and (6,7).
  const DevelopedCell& c = develop_cell(12, 6);

  // k = 1 (vertex 2): interior projection, pi/6 toward the mirror side.
  MirrorProjection p1 = project_vertex_to_mirror(c, 2, 0);
  CHECK(p1.k == 1);
  CHECK_FALSE(p1.center);
  CHECK(p1.near_side == Angle::of(1, 6));
  CHECK(p1.far_side == Angle::of(2, 3));
  CHECK(p1.near_vertex == 1);
  CHECK(p1.far_vertex == 3);

  // k = 2 (vertex 3): interior projection, angles pi/3 and pi/2.
  MirrorProjection p2 = project_vertex_to_mirror(c, 3, 0);
  CHECK(p2.k == 2);
  CHECK_FALSE(p2.center);
  CHECK(p2.near_side == Angle::of(1, 3));
  CHECK(p2.far_side == Angle::of(1, 2));

  // k = 0 (vertex 1): the projection is the crossing midpoint itself.
  MirrorProjection p0 = project_vertex_to_mirror(c, 1, 0);
  CHECK(p0.k == 0);
  CHECK_FALSE(p0.center);
  CHECK(p0.near_side == Angle::zero());
  CHECK(p0.far_side == Angle::of(5, 6));
  CHECK(p0.near_vertex == 0);

  // 14-gon, q = 6, k = 3: center projection with both angles 5*pi/12.
  const DevelopedCell& c14 = develop_cell(14, 6);
  MirrorProjection pc = project_vertex_to_mirror(c14, 4, 0);
  CHECK(pc.k == 3);
  CHECK(pc.center);
  CHECK(pc.near_side == Angle::of(5, 12));
  CHECK(pc.far_side == Angle::of(5, 12));
}

TEST_CASE("projection center threshold is 2k+1 >= q") {
  // Hexagon (q=3): the k=1 vertex projects to the center, angles pi/3.
  const DevelopedCell& hex = develop_cell(6, 3);
  MirrorProjection p = project_vertex_to_mirror(hex, 2, 0);
  CHECK(p.k == 1);
  CHECK(p.center);
  CHECK(p.near_side == Angle::of(1, 3));
  CHECK(p.far_side == Angle::of(1, 3));

  // Squares (q=2): every vertex touches a crossing edge; never the center.
  const DevelopedCell& sq = develop_cell(4, 2);
  for (int v = 0; v < 4; ++v)
    for (int m = 0; m < 2; ++m) {
      MirrorProjection ps = project_vertex_to_mirror(sq, v, m);
      CHECK(ps.k == 0);
      CHECK_FALSE(ps.center);
      CHECK(ps.near_side == Angle::zero());
      CHECK(ps.far_side == Angle::of(1, 2));
    }

  // 10-gon at q=4: k=2 is the first center case (2k+1 = 5 >= 4).
  const DevelopedCell& dec = develop_cell(10, 4);
  MirrorProjection pd = project_vertex_to_mirror(dec, 3, 0);
  CHECK(pd.k == 2);
  CHECK(pd.center);
  CHECK(pd.near_side == Angle::of(3, 8));
}

TEST_CASE("mirror and vertex indices are validated") {
  const DevelopedCell& c = develop_cell(8, 4);
  CHECK_THROWS_AS(project_vertex_to_mirror(c, 0, 8), Error);
  CHECK_THROWS_AS(project_vertex_to_mirror(c, 0, -1), Error);
  CHECK_THROWS_AS(project_vertex_to_mirror(c, 9, 0), Error);
  // A mirror named by its opposite position is the same mirror.
  MirrorProjection a = project_vertex_to_mirror(c, 2, 1);
  MirrorProjection b = project_vertex_to_mirror(c, 2, 5);
  CHECK(a.k == b.k);
  CHECK(a.near_side == b.near_side);
}

TEST_CASE("exact projection matches the numeric development") {
  for (int n = 2; n <= 12; ++n)
    for (int q : {2, 3, 4, 6}) {
      if (q > n) continue;
      const DevelopedCell& c = develop_cell(2 * n, q);
      for (int v = 0; v < 2 * n; ++v)
        for (int m = 0; m < n; ++m) {
          MirrorProjection exact = project_vertex_to_mirror(c, v, m);
          NumericProjection num = project_vertex_to_mirror_numeric(c, v, m);
          INFO("2n=" << 2 * n << " q=" << q << " v=" << v << " m=" << m);
          REQUIRE(exact.center == num.center);
          CHECK(std::abs(exact.near_side.radians() - num.near_side) < 1e-9);
          CHECK(std::abs(exact.far_side.radians() - num.far_side) < 1e-9);
          // Snapping the float oracle recovers the exact rational angle.
          CHECK(snap_angle(num.near_side, c.snap_denominator()) ==
                exact.near_side);
          CHECK(snap_angle(num.far_side, c.snap_denominator()) ==
                exact.far_side);
        }
    }
}

TEST_CASE("angle snapping") {
  CHECK(snap_angle(M_PI / 3, 24) == Angle::of(1, 3));
  CHECK(snap_angle(M_PI / 3 + 4e-10, 24) == Angle::of(1, 3));
  CHECK(snap_angle(0.0, 24) == Angle::zero());
  CHECK(snap_angle(M_PI, 24) == Angle::pi());
  CHECK(snap_angle(5 * M_PI / 12, 24) == Angle::of(5, 12));
  CHECK_THROWS_AS(snap_angle(0.51, 24), Error);
  CHECK_THROWS_AS(snap_angle(M_PI / 3 + 1e-7, 24), Error);
}
