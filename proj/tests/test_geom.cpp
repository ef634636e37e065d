#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"
#include "tristeiner/errors.hpp"
#include "tristeiner/geom.hpp"

namespace tristeiner {
namespace {

using testing::random_triangle;

TEST(AngleAt, Examples) {
  EXPECT_NEAR(angle_at({0, 0}, {1, 0}, {0, 1}), kPi / 2, 1e-15);
  EXPECT_NEAR(angle_at({0, 0}, {1, 0}, {2, 0}), 0.0, 1e-15);
  // atan2(1e-3, -1) by hand.
  EXPECT_NEAR(angle_at({0, 0}, {1, 0}, {-1, 1e-3}), kPi - std::atan(1e-3), 1e-15);
  EXPECT_NEAR(angle_at({0, 0}, {1, 0}, {-1, 1e-3}), 3.1406, 1e-4);
}

TEST(AngleAt, ShortRayThrows) {
  EXPECT_THROW(angle_at({0, 0}, {0, 0}, {1, 0}), DegenerateGeometry);
}

TEST(AngleAt, Symmetric) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int i = 0; i < 200; ++i) {
    const Point o{u(rng), u(rng)}, p{u(rng), u(rng)}, q{u(rng), u(rng)};
    EXPECT_EQ(angle_at(o, p, q), angle_at(o, q, p));
  }
}

TEST(TerminalTriangle, RejectsDegenerate) {
  EXPECT_THROW(TerminalTriangle({0, 0}, {1, 0}, {2, 0}), DegenerateGeometry);
  EXPECT_THROW(TerminalTriangle({0, 0}, {0, 0}, {0, 1}), DegenerateGeometry);
  EXPECT_THROW(TerminalTriangle({0, 0}, {1, 0}, {NAN, 1}), DegenerateGeometry);
  EXPECT_THROW(TerminalTriangle({0, 0}, {1, 0}, {INFINITY, 1}), DegenerateGeometry);
  EXPECT_NO_THROW(TerminalTriangle({0, 0}, {1, 0}, {0.5, 1e-6}));
}

TEST(TerminalTriangle, AnglesSumToPi) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 500; ++i) {
    const TerminalTriangle t = random_triangle(rng, {.min_angle = 0.01, .min_angle_gap = 0});
    EXPECT_NEAR(t.angle(VertexId::A) + t.angle(VertexId::B) + t.angle(VertexId::C), kPi, 1e-9);
  }
}

TEST(TerminalTriangle, Sides) {
  const TerminalTriangle t = testing::scalene();
  EXPECT_DOUBLE_EQ(t.side_opposite(VertexId::C), 4.0);
  EXPECT_DOUBLE_EQ(t.side(VertexId::A, VertexId::C), std::sqrt(10.0));
  EXPECT_DOUBLE_EQ(t.shortest_side(), std::sqrt(10.0));
  EXPECT_NEAR(t.perimeter(), 4 + std::sqrt(10.0) + std::sqrt(18.0), 1e-14);
  const auto bc = t.barycentric({5.0 / 3, 1});
  EXPECT_NEAR(bc[0], 1.0 / 3, 1e-14);
  EXPECT_NEAR(bc[1], 1.0 / 3, 1e-14);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(testing::equilateral()), TriangleClass(InteriorSteinerPoint{}));
  EXPECT_EQ(classify(testing::obtuse()), TriangleClass(WideAngle{VertexId::A}));
  EXPECT_NEAR(testing::obtuse().angle(VertexId::A), 2.944, 1e-3);
  EXPECT_EQ(classify(testing::scalene()), TriangleClass(InteriorSteinerPoint{}));
}

TEST(Classify, ExactBoundaryIsWide) {
  const TerminalTriangle t({0, 0}, {1, 0}, {std::cos(2 * kPi / 3), std::sin(2 * kPi / 3)});
  EXPECT_EQ(classify(t), TriangleClass(WideAngle{VertexId::A}));
}

TEST(Classify, InvariantUnderRigidMotionAndScale) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 2 * kPi);
  for (int i = 0; i < 200; ++i) {
    const TerminalTriangle t =
        i % 2 ? random_triangle(rng) : testing::random_wide(rng);
    const TerminalTriangle m = testing::move(t, u(rng), 0.1 + u(rng), {u(rng), -u(rng)});
    EXPECT_EQ(classify(t), classify(m));
  }
}

TEST(BisectorResidual, Examples) {
  EXPECT_NEAR(bisector_residual({0, -1}, {0, 0}, {1, 1}, {-1, 1}), 0.0, 1e-15);
  EXPECT_NEAR(bisector_residual({0, -1}, {0, 0}, {1, 0}, {-1, 1}), -kPi / 4, 1e-15);
}

TEST(BisectorResidual, Antisymmetric) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int i = 0; i < 200; ++i) {
    const Point f{u(rng), u(rng)}, a{u(rng), u(rng)}, o1{u(rng), u(rng)}, o2{u(rng), u(rng)};
    EXPECT_NEAR(bisector_residual(f, a, o1, o2), -bisector_residual(f, a, o2, o1), 1e-14);
  }
}

}  // namespace
}  // namespace tristeiner
