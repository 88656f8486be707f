#include <random>

#include <gtest/gtest.h>

#include "smartoc/geometry.hpp"

namespace smartoc {
namespace {

TEST(Dist, Examples) {
  EXPECT_EQ(dist({0, 0}, {0, 0}), 0.0);
  EXPECT_EQ(dist({0, 0}, {3, 4}), 5.0);
  EXPECT_EQ(dist({1, 1}, {4, 5}), 5.0);
}

TEST(Dist, SymmetricAndTriangle) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-100, 100);
  for (int i = 0; i < 10000; ++i) {
    const Vec2 a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
    EXPECT_EQ(dist(a, b), dist(b, a));
    const double rhs = dist(a, b) + dist(b, c);
    EXPECT_LE(dist(a, c), rhs * (1 + 1e-9));
  }
}

TEST(SegmentDiscHit, Examples) {
  EXPECT_TRUE(segment_disc_hit({0, 0}, {10, 0}, Disc{{5, 1}, 2}));
  EXPECT_FALSE(segment_disc_hit({0, 0}, {10, 0}, Disc{{5, 3}, 2}));
  EXPECT_TRUE(segment_disc_hit({0, 0}, {0, 0}, Disc{{0, 0}, 1}));
}

TEST(SegmentDiscHit, TouchingCounts) {
  EXPECT_TRUE(segment_disc_hit({0, 0}, {10, 0}, Disc{{5, 2}, 2}));
  // Closest point is an endpoint.
  EXPECT_TRUE(segment_disc_hit({0, 0}, {10, 0}, Disc{{12, 0}, 2}));
  EXPECT_FALSE(segment_disc_hit({0, 0}, {10, 0}, Disc{{12.001, 0}, 2}));
}

TEST(SegmentDiscHit, SymmetryAndMonotonicity) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-10, 10);
  std::uniform_real_distribution<double> ur(0.01, 5);
  int hits = 0;
  for (int i = 0; i < 20000; ++i) {
    const Vec2 a{u(rng), u(rng)}, b{u(rng), u(rng)};
    const Disc d{{u(rng), u(rng)}, ur(rng)};
    const bool h = segment_disc_hit(a, b, d);
    hits += h;
    EXPECT_EQ(h, segment_disc_hit(b, a, d));
    const Disc smaller{d.center, d.radius * 0.7};
    if (!h) EXPECT_FALSE(segment_disc_hit(a, b, smaller));
    EXPECT_EQ(h, point_segment_distance(a, b, d.center) <= d.radius);
  }
  EXPECT_GT(hits, 100);
}

TEST(SegmentRectHit, Examples) {
  const Rect unit{{0, 0}, {1, 1}};
  EXPECT_TRUE(segment_rect_hit({-1, 0.5}, {2, 0.5}, unit));
  EXPECT_FALSE(segment_rect_hit({-1, 2}, {2, 2}, unit));
  EXPECT_TRUE(segment_rect_hit({0.5, 0.5}, {0.6, 0.6}, unit));
}

TEST(SegmentRectHit, EdgeCases) {
  const Rect unit{{0, 0}, {1, 1}};
  // Grazing the top edge and a corner.
  EXPECT_TRUE(segment_rect_hit({-1, 1}, {2, 1}, unit));
  EXPECT_TRUE(segment_rect_hit({-1, 0}, {0, 1}, Rect{{0, 1}, {1, 2}}));
  // Diagonal that misses the corner.
  EXPECT_FALSE(segment_rect_hit({-1, 0.9}, {0.05, 2}, unit));
  // Degenerate segments.
  EXPECT_TRUE(segment_rect_hit({1, 1}, {1, 1}, unit));
  EXPECT_FALSE(segment_rect_hit({2, 2}, {2, 2}, unit));
  // Vertical segment through the box.
  EXPECT_TRUE(segment_rect_hit({0.5, -3}, {0.5, 3}, unit));
}

TEST(SegmentRectHit, MatchesDenseSampling) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3, 4);
  const Rect r{{0, 0}, {1, 1}};
  for (int i = 0; i < 3000; ++i) {
    const Vec2 a{u(rng), u(rng)}, b{u(rng), u(rng)};
    bool sampled = false;
    for (int k = 0; k <= 4000 && !sampled; ++k) {
      sampled = r.contains(a + (b - a) * (k / 4000.0));
    }
    // Sampling can only miss hits, never invent them.
    if (sampled) EXPECT_TRUE(segment_rect_hit(a, b, r));
    EXPECT_EQ(segment_rect_hit(a, b, r), segment_rect_hit(b, a, r));
  }
}

TEST(ClosestPoint, ClampsToSegment) {
  EXPECT_EQ(closest_point_on_segment({0, 0}, {10, 0}, {5, 3}), (Vec2{5, 0}));
  EXPECT_EQ(closest_point_on_segment({0, 0}, {10, 0}, {-5, 3}), (Vec2{0, 0}));
  EXPECT_EQ(closest_point_on_segment({0, 0}, {10, 0}, {15, -3}), (Vec2{10, 0}));
  EXPECT_EQ(closest_point_on_segment({2, 2}, {2, 2}, {0, 0}), (Vec2{2, 2}));
}

}  // namespace
}  // namespace smartoc
