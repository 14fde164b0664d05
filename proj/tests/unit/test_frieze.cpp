#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "heronfrieze/frieze.hpp"

using namespace hf;

namespace {

ErrorKind kind_of(const std::function<void()>& f, std::string* position = nullptr) {
  try {
    f();
  } catch (const Error& e) {
    if (position) *position = e.position();
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::MalformedInput;
}

PathValues order6_values() {
  PathValues pv;
  for (long v : {1, 2, 2, -2, 5, 2, 2, 2, 1}) pv.node_values.push_back(v);
  pv.line_values.assign(4, 1);
  return pv;
}

}  // namespace

TEST(Window, MembershipFollowsColumns) {
  Frieze z(FriezeKind::Heronian, 4, {0, 8});
  EXPECT_TRUE(z.contains(NodeIdx::integer(0, 0)));
  EXPECT_TRUE(z.contains(NodeIdx{1, 2}));
  EXPECT_FALSE(z.contains(NodeIdx{1, 3}));
  EXPECT_FALSE(z.contains(NodeIdx::integer(0, 5)));
  EXPECT_FALSE(z.contains(NodeIdx::integer(-1, 0)));
  EXPECT_TRUE(z.contains(LineIdx::up(0)));
  EXPECT_FALSE(z.contains(LineIdx::up(4)));
  Frieze cm(FriezeKind::CM, 4, {0, 8});
  EXPECT_FALSE(cm.contains(NodeIdx{1, 2}));
  EXPECT_THROW(Frieze(FriezeKind::CM, 3, {0, 8}), Error);
}

TEST(Window, EmptyWindowHasNoEntries) {
  Frieze z(FriezeKind::Heronian, 5, {3, 1});
  EXPECT_TRUE(z.window_nodes().empty());
  EXPECT_TRUE(z.window_lines().empty());
}

TEST(GeometricFrieze, UnitSquare) {
  Frieze z = frieze_from_polygon(hftest::unit_square(), {0, 8});
  EXPECT_TRUE(verify_heronian(z).empty());
  EXPECT_TRUE(check_glide(z));
  EXPECT_TRUE(check_period(z));
  EXPECT_EQ(z.at(NodeIdx::integer(1, 3)), 2);
  EXPECT_EQ(z.at(NodeIdx{2, 5}), 2);
  for (const auto& [line, v] : z.lines()) EXPECT_EQ(v, 1);
}

TEST(GeometricFrieze, PerturbationIsDetected) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    int n = 4 + t % 5;
    Frieze z = frieze_from_polygon(hftest::random_polygon(rng, n), {0, 3 * n});
    auto [node, value] = *std::next(z.nodes().begin(), static_cast<long>(z.nodes().size() / 2));
    z.set(node, value + 1);
    EXPECT_FALSE(verify_heronian(z).empty());
  }
}

TEST(Paths, ShapesAreValid) {
  for (int n = 4; n <= 9; ++n) {
    for (long col : {-3L, 0L, 5L}) {
      EXPECT_NO_THROW(validate_path(rim_path(n, col), n));
      EXPECT_NO_THROW(validate_path(cm_rim_path(n, col), n));
    }
    EXPECT_NO_THROW(validate_path(fan_path(n, 2), n));
    EXPECT_NO_THROW(validate_path(cm_fan_path(n, 2), n));
  }
  HPath broken = rim_path(5, 0);
  broken.lines[0] = LineIdx::up(7);
  std::string pos;
  EXPECT_EQ(kind_of([&] { validate_path(broken, 5); }, &pos), ErrorKind::ConditionViolated);
  EXPECT_EQ(pos, "8");
  CMPath thick = cm_fan_path(4, 0);
  EXPECT_EQ(thick.thickened_nodes().size(), 6u);
  EXPECT_EQ(thick.thickened_nodes()[3], NodeIdx::integer(1, 2));
}

TEST(HeronianPropagation, OrderSixExample) {
  Frieze z = propagate_heronian(6, rim_path(6, -6), order6_values(), {-6, 12});
  EXPECT_TRUE(verify_heronian(z).empty());
  EXPECT_TRUE(check_glide(z));
  EXPECT_TRUE(check_period(z));
  for (const auto& [node, v] : z.nodes()) EXPECT_TRUE(is_power_of(v.get_den(), 5)) << node_format(node);
}

TEST(HeronianPropagation, ReproducesGeometricFrieze) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 30; ++t) {
    int n = 4 + t % 6;
    Polygon p = hftest::random_polygon(rng, n);
    if (!hftest::is_generic(measure_all(p))) continue;
    Window w{0, 3 * n};
    Frieze z = frieze_from_polygon(p, w);
    for (const HPath& path : {rim_path(n, 0), rim_path(n, 1), fan_path(n, n / 2)}) {
      EXPECT_EQ(propagate_heronian(n, path, read_path(z, path), w), z);
    }
  }
}

TEST(HeronianPropagation, Errors) {
  PathValues pv = order6_values();
  std::string pos;
  EXPECT_EQ(kind_of([&] { propagate_heronian(6, rim_path(6, -6), pv, {-4, 12}); }), ErrorKind::WindowTooNarrow);
  pv.node_values[3] = -3;
  EXPECT_EQ(kind_of([&] { propagate_heronian(6, rim_path(6, -6), pv, {-6, 12}); }, &pos), ErrorKind::HeronViolation);
  EXPECT_EQ(pos, "4");
  // A1 = A3 puts a zero on the path at the integer node (1, 3).
  Polygon pinched{{{0, 0}, {3, 1}, {0, 0}, {2, -5}, {7, 2}, {-1, 4}}};
  HPath fan = fan_path(6, 1);
  PathValues zero = read_path(frieze_from_polygon(pinched, {2, 16}), fan);
  EXPECT_EQ(zero.node_values[2], 0);
  EXPECT_EQ(kind_of([&] { propagate_heronian(6, fan, zero, {2, 16}); }, &pos), ErrorKind::ZeroPivot);
  EXPECT_EQ(pos, "2:6");
  EXPECT_EQ(kind_of([] { propagate_heronian(3, HPath{}, PathValues{}, {0, 4}); }), ErrorKind::OrderTooSmall);
}

TEST(CMPropagation, ReproducesGeometricFrieze) {
  std::mt19937_64 rng(33);
  int checked = 0;
  for (int t = 0; t < 30; ++t) {
    int n = 4 + t % 6;
    Polygon p = hftest::random_polygon(rng, n);
    if (!hftest::is_generic(measure_all(p))) continue;
    Window w{0, 3 * n};
    Frieze z = cmfrieze_from_polygon(p, w);
    EXPECT_TRUE(verify_cm(z).empty());
    EXPECT_TRUE(verify_coherence(z).empty());
    for (const CMPath& path : {cm_rim_path(n, 0), cm_fan_path(n, n / 2)}) {
      EXPECT_EQ(propagate_cm(n, path, read_path(z, path), w), z);
    }
    ++checked;
  }
  EXPECT_GT(checked, 20);
}

TEST(CMPropagation, CollinearHexagonFailsGenericity) {
  Window w{7, 19};
  Frieze z = cmfrieze_from_measurements(hftest::eisenstein_hexagon(), w);
  EXPECT_TRUE(verify_coherence(z).empty());
  CMPath path = cm_rim_path(6, 7);
  EXPECT_EQ(kind_of([&] { propagate_cm(6, path, read_path(z, path), w); }), ErrorKind::NonGenericH);
}

TEST(Coherence, HexagonSolves) {
  // Regular hexagon with unit sides.
  CMDiamond x1{3, 1, 3, 1, 4, 4};
  CMDiamond x2{1, 1, 4, 1, 3, 3};
  CMDiamond x3{4, 1, 1, 1, 3, 3};
  CMDiamond x4{3, 1, 3, 1, 4, 4};
  EXPECT_EQ(coherence_solve(x1, x2, x3, SolveDir::Right), 4);
  EXPECT_EQ(coherence_solve(x2, x3, x4, SolveDir::Left), 4);
}

TEST(Coherence, Gates) {
  std::string pos;
  EXPECT_EQ(kind_of([] { coherence_solve({3, 1, 3, 1, 4, 0}, {1, 1, 0, 1, 3, 3}, {0, 1, 1, 1, 3, 3}, SolveDir::Right); }),
            ErrorKind::ZeroPivot);
  // H(x24, x25, x45) = H(1, 4, 1) = 0.
  EXPECT_EQ(kind_of([] { coherence_solve({3, 1, 1, 1, 4, 4}, {1, 1, 4, 1, 3, 3}, {4, 1, 1, 1, 1, 3}, SolveDir::Right); }),
            ErrorKind::NonGenericH);
  EXPECT_EQ(kind_of([] { coherence_solve({3, 1, 3, 1, 4, 4}, {1, 2, 4, 1, 3, 3}, {4, 1, 1, 1, 3, 3}, SolveDir::Right); }),
            ErrorKind::IncoherentInput);
}

TEST(Coherence, SingleDefectIsLocated) {
  std::mt19937_64 rng(34);
  Polygon p = hftest::random_polygon(rng, 6, 20);
  Frieze z = cmfrieze_from_polygon(p, {0, 14});
  Frieze bad = hftest::noncoherent_frieze(z, 3, 6);
  EXPECT_TRUE(verify_cm(bad).empty());
  auto centers = verify_coherence(bad);
  ASSERT_EQ(centers.size(), 1u);
  EXPECT_EQ(centers[0], NodeIdx::integer(3, 6));
  EXPECT_NE(coherence_defect(bad, 3, 6), 0);
}

TEST(Lift, RestrictThenExtend) {
  std::mt19937_64 rng(35);
  for (int t = 0; t < 20; ++t) {
    int n = 4 + t % 5;
    Polygon p = hftest::random_polygon(rng, n);
    if (!hftest::is_generic(measure_all(p))) continue;
    Frieze h = frieze_from_polygon(p, {0, 3 * n});
    Frieze c = restrict_to_cm(h);
    EXPECT_EQ(c, cmfrieze_from_polygon(p, {0, 3 * n}));
    // Seeding one half node with its true value fixes the global sign.
    NodeIdx half = fan_path(n, 1).nodes[1];
    EXPECT_EQ(extend_to_heronian(c, {{half, h.at(half)}}), h);
    EXPECT_EQ(extend_to_heronian(c, {{half, -h.at(half)}}).at(half), -h.at(half));
  }
}

TEST(Lift, Errors) {
  Frieze h = frieze_from_polygon(hftest::unit_square(), {0, 8});
  Frieze c = restrict_to_cm(h);
  NodeIdx half = fan_path(4, 1).nodes[1];
  EXPECT_EQ(kind_of([&] { extend_to_heronian(c, {{half, 3}}); }), ErrorKind::HeronViolation);
  EXPECT_EQ(kind_of([&] { extend_to_heronian(h); }), ErrorKind::MalformedInput);
  Frieze broken = c;
  broken.set(NodeIdx::integer(1, 3), 5);
  EXPECT_EQ(kind_of([&] { extend_to_heronian(broken); }), ErrorKind::IncoherentInput);
  Frieze perturbed = h;
  perturbed.set(NodeIdx{2, 5}, -2);
  EXPECT_EQ(kind_of([&] { restrict_to_cm(perturbed); }), ErrorKind::HeronViolation);
}

TEST(Recovery, PolygonFromFrieze) {
  std::mt19937_64 rng(36);
  for (int t = 0; t < 20; ++t) {
    int n = 4 + t % 6;
    Polygon p = hftest::pythagorean_polygon(rng, n);
    if (!hftest::is_generic(measure_all(p))) continue;
    Frieze z = frieze_from_polygon(p, {2, 2 * n + 2});
    Polygon q = polygon_from_frieze(z);
    EXPECT_EQ(measure_all(q), measure_all(p));
  }
  Frieze narrow = frieze_from_polygon(hftest::unit_square(), {0, 2});
  EXPECT_EQ(kind_of([&] { polygon_from_frieze(narrow); }), ErrorKind::WindowTooNarrow);
}

TEST(Symmetry, NarrowWindowCannotCheckGlide) {
  Frieze z = frieze_from_polygon(hftest::unit_square(), {0, 2});
  EXPECT_EQ(kind_of([&] { check_glide(z); }), ErrorKind::WindowTooNarrow);
}
