#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "heronfrieze/geometry.hpp"

using namespace hf;

TEST(Geometry, UnitSquareMeasurements) {
  Polygon sq = hftest::unit_square();
  MeasurementSet m = measure_all(sq);
  EXPECT_EQ(m.x(1, 3), 2);
  EXPECT_EQ(m.x(2, 4), 2);
  EXPECT_EQ(m.x(1, 2), 1);
  EXPECT_EQ(m.s(1, 2, 3), 2);
  EXPECT_EQ(m.s(2, 1, 3), -2);
  EXPECT_EQ(m.s(1, 1, 3), 0);
  EXPECT_EQ(m.x(3, 3), 0);
}

TEST(Geometry, HeronHoldsForRandomTriangles) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    Point a{hftest::random_rat(rng), hftest::random_rat(rng)};
    Point b{hftest::random_rat(rng), hftest::random_rat(rng)};
    Point c{hftest::random_rat(rng), hftest::random_rat(rng)};
    Rat s = signed_area4(a, b, c);
    EXPECT_EQ(s * s, heron_H(sq_dist(a, b), sq_dist(b, c), sq_dist(a, c)));
    EXPECT_EQ(signed_area4(a, c, b), -s);
  }
}

TEST(Geometry, CollinearTriangleHasZeroH) {
  EXPECT_EQ(heron_H(1, 4, 9), 0);
  EXPECT_EQ(signed_area4({0, 0}, {1, 1}, {3, 3}), 0);
}

TEST(Geometry, RecoverPointIsInverseOfMeasuring) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    Point a{hftest::random_rat(rng), hftest::random_rat(rng)};
    Point b{hftest::random_rat(rng), hftest::random_rat(rng)};
    Point c{hftest::random_rat(rng), hftest::random_rat(rng)};
    if (a == b) continue;
    EXPECT_EQ(recover_point(a, b, sq_dist(a, c), sq_dist(b, c), signed_area4(a, b, c)), c);
  }
}

TEST(Geometry, RecoverPointErrors) {
  EXPECT_THROW(recover_point({0, 0}, {0, 0}, 1, 1, 0), Error);
  try {
    recover_point({0, 0}, {1, 0}, 1, 1, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HeronViolation);
  }
}

TEST(Geometry, PolygonFromTriangulatedMeasurements) {
  std::mt19937_64 rng(13);
  for (int n = 4; n <= 9; ++n) {
    for (const TriCycle& g : {TriCycle::fan(n), TriCycle::fan(n, 3)}) {
      Polygon p = hftest::pythagorean_polygon(rng, n);
      MeasurementSet m = measure_triangulated(p, g);
      Polygon q = polygon_from_measurements(g, m);
      // Congruent copy placed with A1 at the origin and A2 on the first axis.
      EXPECT_EQ(measure_all(q), measure_all(p));
      EXPECT_EQ(q.at(1), (Point{0, 0}));
      EXPECT_EQ(q.at(2).v, 0);
    }
  }
}

TEST(Geometry, PolygonFromMeasurementsErrors) {
  TriCycle g = TriCycle::fan(4);
  MeasurementSet m = measure_triangulated(hftest::unit_square(), g);
  m.set_s(1, 2, 3, 3);
  try {
    polygon_from_measurements(g, m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HeronViolation);
    EXPECT_EQ(e.position(), "1-2-3");
  }
  MeasurementSet irrational = measure_triangulated(Polygon{{{0, 0}, {1, 1}, {0, 2}, {-1, 1}}}, g);
  try {
    polygon_from_measurements(g, irrational);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPerfectSquare);
  }
  EXPECT_THROW(polygon_from_measurements(TriCycle::fan(5), m), Error);
}

TEST(Geometry, FloatRecoveryHandlesIrrationalAnchor) {
  TriCycle g = TriCycle::fan(4);
  Polygon p{{{0, 0}, {1, 1}, {0, 2}, {-1, 1}}};
  auto pts = polygon_from_measurements_float(g, measure_triangulated(p, g));
  ASSERT_EQ(pts.size(), 4u);
  double du = pts[2].u - pts[0].u;
  double dv = pts[2].v - pts[0].v;
  EXPECT_NEAR(du * du + dv * dv, 4.0, 1e-9);
}

TEST(Geometry, MissingMeasurementIsReported) {
  MeasurementSet m(5);
  try {
    m.x(2, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingSymbol);
    EXPECT_EQ(e.position(), "x:2-4");
  }
}
