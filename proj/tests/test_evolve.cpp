#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"
#include "tristeiner/evolve.hpp"

namespace tristeiner {
namespace {

using K = PhaseKind;

TEST(Sweep, Equilateral) {
  const EvolutionTrace tr = sweep(testing::equilateral(), std::sqrt(3.0), 3.0, 101);
  ASSERT_GE(tr.samples.size(), 101u);
  EXPECT_EQ(tr.samples.front().phase.kind, K::SteinerTree);
  EXPECT_EQ(tr.samples.back().phase.kind, K::Complete);
  for (size_t i = 1; i + 1 < tr.samples.size(); ++i) {
    EXPECT_EQ(tr.samples[i].phase.kind, K::ThreeAnchor) << tr.samples[i].l;
  }
  EXPECT_NEAR(tr.samples.front().j, 2 * std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(tr.samples.back().j, 3.0, 1e-9);
}

TEST(Sweep, ScalenePathway) {
  const TerminalTriangle t = testing::scalene();
  const Thresholds th = thresholds(t);
  const EvolutionTrace tr = sweep(t, th.l_st, t.perimeter(), 400);
  const std::vector<K> want{K::SteinerTree, K::ThreeAnchor, K::TwoAnchor, K::OneAnchor,
                            K::Complete};
  EXPECT_EQ(phase_sequence(tr), want);
  EXPECT_EQ(expected_pathway(th).back(), K::Complete);
}

TEST(Sweep, WideAnglePathway) {
  const TerminalTriangle t = testing::obtuse();
  const EvolutionTrace tr = sweep(t, 0.5, t.perimeter() + 0.5, 200);
  const std::vector<K> want{K::BelowTree, K::SteinerTree, K::TwoAnchor, K::OneAnchor, K::Complete};
  EXPECT_EQ(phase_sequence(tr), want);
}

TEST(Sweep, ThresholdsSpliced) {
  const TerminalTriangle t = testing::scalene();
  const Thresholds th = thresholds(t);
  const EvolutionTrace tr = sweep(t, 6.0, 12.0, 7);
  for (double l : {th.l_st, *th.l1, th.l2, th.l3}) {
    bool found = false;
    for (const SweepSample& s : tr.samples) found = found || s.l == l;
    EXPECT_TRUE(found) << l;
  }
  for (size_t i = 1; i < tr.samples.size(); ++i) EXPECT_LT(tr.samples[i - 1].l, tr.samples[i].l);
}

TEST(Sweep, SlopeMatchesNeighbours) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 10; ++i) {
    const TerminalTriangle t = i % 2 ? testing::random_triangle(rng) : testing::random_wide(rng);
    const Thresholds th = thresholds(t);
    const EvolutionTrace tr = sweep(t, th.l_st, th.l3, 2001);
    const double window = 2 * (th.l3 - th.l_st) / 2000;
    std::vector<double> marks{th.l_st, th.l2, th.l3};
    if (th.l1) marks.push_back(*th.l1);
    auto near_threshold = [&](double l) {
      for (double m : marks) {
        if (std::abs(l - m) <= window) return true;
      }
      return false;
    };
    for (size_t k = 1; k + 1 < tr.samples.size(); ++k) {
      const SweepSample &a = tr.samples[k - 1], &b = tr.samples[k], &c = tr.samples[k + 1];
      if (near_threshold(b.l)) continue;
      EXPECT_NEAR(b.slope, (c.j - a.j) / (c.l - a.l), 1e-4) << b.l;
    }
  }
}

TEST(Sweep, MonotoneAndEndsAtPerimeter) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 20; ++i) {
    const TerminalTriangle t = i % 2 ? testing::random_triangle(rng) : testing::random_wide(rng);
    const EvolutionTrace tr = sweep(t, thresholds(t).l_st, t.perimeter() * 1.1, 150);
    for (size_t k = 1; k < tr.samples.size(); ++k) {
      EXPECT_LE(tr.samples[k].j, tr.samples[k - 1].j + 1e-12);
    }
    EXPECT_NEAR(tr.samples.back().j, t.perimeter(), 1e-9);
  }
}

TEST(Sweep, ThreadCountDoesNotMatter) {
  const TerminalTriangle t = testing::scalene();
  const EvolutionTrace a = sweep(t, 6.0, 12.0, 300, {}, 1);
  const EvolutionTrace b = sweep(t, 6.0, 12.0, 300, {}, 4);
  ASSERT_EQ(a.samples.size(), b.samples.size());
  for (size_t i = 0; i < a.samples.size(); ++i) {
    EXPECT_EQ(a.samples[i].l, b.samples[i].l);
    EXPECT_EQ(a.samples[i].j, b.samples[i].j);
    EXPECT_EQ(a.samples[i].phase, b.samples[i].phase);
  }
}

TEST(Sweep, Snapshots) {
  const TerminalTriangle t = testing::scalene();
  const std::vector<double> want{7.5, 11.0};
  const EvolutionTrace tr = sweep(t, 6.0, 12.0, 10, want);
  ASSERT_GE(tr.snapshots.size(), 2u);
  EXPECT_EQ(tr.snapshots[tr.snapshots.size() - 2].l, 7.5);
  EXPECT_EQ(tr.snapshots.back().phase.kind, K::OneAnchor);
}

TEST(Sweep, RejectsBadRange) {
  const TerminalTriangle t = testing::scalene();
  EXPECT_THROW(sweep(t, 5.0, 4.0, 10), std::invalid_argument);
  EXPECT_THROW(sweep(t, 4.0, 5.0, 1), std::invalid_argument);
}

}  // namespace
}  // namespace tristeiner
