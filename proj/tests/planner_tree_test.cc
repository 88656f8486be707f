#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "smartoc/error.hpp"
#include "smartoc/planner_tree.hpp"

namespace smartoc {
namespace {

World square(double size) { return World{Rect{{0, 0}, {size, size}}, {}, {}}; }

RrtParams params(Vec2 goal, std::size_t budget, std::uint64_t seed = 1) {
  RrtParams p;
  p.goal_root = goal;
  p.node_budget = budget;
  p.seed = seed;
  return p;
}

World cluttered() {
  World w = square(50);
  w.statics.push_back({Rect{{10, 5}, {14, 40}}});
  w.statics.push_back({Rect{{25, 15}, {29, 50}}});
  w.statics.push_back({Disc{{40, 20}, 4}});
  return w;
}

TEST(Build, ZeroBudgetIsRootOnly) {
  const Tree t = Tree::build(square(10), params({5, 5}, 0));
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t.node(0).pos, (Vec2{5, 5}));
  EXPECT_EQ(t.node(0).g_dist, 0.0);
  EXPECT_FALSE(t.node(0).parent);
}

TEST(Build, InvalidRoot) {
  World w = square(10);
  w.statics.push_back({Disc{{5, 5}, 1}});
  try {
    Tree::build(w, params({5, 5}, 10));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidRoot);
  }
  EXPECT_THROW(Tree::build(square(10), params({11, 5}, 10)), Error);
}

TEST(Build, Deterministic) {
  const Tree a = Tree::build(square(100), params({50, 50}, 1000, 42));
  const Tree b = Tree::build(square(100), params({50, 50}, 1000, 42));
  ASSERT_EQ(a.size(), b.size());
  for (NodeId i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a.node(i).pos, b.node(i).pos);
    EXPECT_EQ(a.node(i).parent, b.node(i).parent);
    EXPECT_EQ(a.node(i).g_dist, b.node(i).g_dist);
  }
  const Tree c = Tree::build(square(100), params({50, 50}, 1000, 43));
  EXPECT_NE(a.node(5).pos, c.node(5).pos);
}

TEST(Build, StructuralInvariants) {
  const World w = cluttered();
  const Tree t = Tree::build(w, params({45, 45}, 3000, 3));
  EXPECT_EQ(t.size(), 3001u);
  for (NodeId i = 1; i < t.size(); ++i) {
    const TreeNode& n = t.node(i);
    ASSERT_TRUE(n.parent);
    const TreeNode& p = t.node(*n.parent);
    EXPECT_NEAR(n.g_dist, p.g_dist + dist(n.pos, p.pos), 1e-9);
    EXPECT_TRUE(w.segment_clear_static(n.pos, p.pos));
    EXPECT_TRUE(w.bounds.contains(n.pos));
    // Chain reaches the root without revisiting a node.
    const auto ch = t.chain(i);
    EXPECT_LE(ch.size(), t.size());
    EXPECT_EQ(ch.front(), i);
    EXPECT_EQ(ch.back(), t.root());
  }
}

TEST(Build, NearOptimalInOpenWorld) {
  const Tree t = Tree::build(square(100), params({50, 50}, 5000, 1));
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0, 100);
  for (int i = 0; i < 50; ++i) {
    const Vec2 probe{u(rng), u(rng)};
    const TreeNode& n = t.node(t.nearest(probe));
    const double straight = dist(n.pos, {50, 50});
    EXPECT_LE(n.g_dist, 1.1 * straight + 1e-9) << probe.x << "," << probe.y;
  }
}

TEST(Build, CloseToGridDijkstra) {
  World w = square(20);
  w.statics.push_back({Rect{{6, 0}, {8, 14}}});
  w.statics.push_back({Rect{{12, 6}, {14, 20}}});
  const Vec2 goal{18, 2};
  const Tree t = Tree::build(w, params(goal, 5000, 7));
  const oracle::GridDijkstra grid(w, goal, 0.1);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0, 20);
  int within = 0, probes = 0;
  while (probes < 50) {
    const Vec2 p{u(rng), u(rng)};
    if (w.inside_static(p)) continue;
    ++probes;
    const TreeNode& n = t.node(t.nearest(p));
    const double ref = grid.at(n.pos);
    if (std::abs(n.g_dist - ref) <= 0.15 * ref) ++within;
  }
  EXPECT_GE(within, 45);
}

TEST(NodesInRadius, Examples) {
  const Tree t = Tree::build(square(100), params({50, 50}, 500, 4));
  EXPECT_TRUE(t.nodes_in_radius({50.0, 50.0 + 1e-3}, 1e-4).empty());
  const auto around_root = t.nodes_in_radius({50, 50}, 1e-6);
  EXPECT_EQ(around_root, (std::vector<NodeId>{0}));
}

TEST(NodesInRadius, MatchesLinearScan) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-10, 110);
  std::uniform_real_distribution<double> ur(0.1, 30);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Tree t = Tree::build(cluttered(), params({45, 45}, 800, seed));
    for (int i = 0; i < 200; ++i) {
      const Vec2 c{u(rng) / 2, u(rng) / 2};
      const double r = ur(rng);
      std::vector<NodeId> expect;
      for (NodeId n = 0; n < t.size(); ++n) {
        if (dist(t.node(n).pos, c) <= r) expect.push_back(n);
      }
      EXPECT_EQ(t.nodes_in_radius(c, r), expect);

      NodeId best = 0;
      for (NodeId n = 1; n < t.size(); ++n) {
        if (dist(t.node(n).pos, c) < dist(t.node(best).pos, c)) best = n;
      }
      EXPECT_EQ(t.nearest(c), best);
    }
  }
}

TEST(RewireRadius, Schedule) {
  RrtParams p;
  p.step_size = 3;
  p.rewire_gamma = 30;  // small constant so the floor and cap both show
  p.rewire_max = 10;
  EXPECT_EQ(p.rewire_radius(2), 10.0);
  EXPECT_EQ(p.rewire_radius(1000000), 3.0);
  EXPECT_EQ(p.rewire_radius(1000), 3.0);
  EXPECT_NEAR(p.rewire_radius(100), 30 * std::sqrt(std::log(100.0) / 100.0), 1e-12);
}

TEST(InitialPath, AtGoal) {
  const World w = square(10);
  const Tree t = Tree::build(w, params({5, 5}, 50));
  const Path p = initial_path(t, {5, 5}, w);
  EXPECT_EQ(p.waypoints, (std::vector<Vec2>{{5, 5}}));
  EXPECT_EQ(p.nodes, (std::vector<NodeId>{0}));
}

TEST(InitialPath, PicksMinimumOverBruteForce) {
  const World w = cluttered();
  const Tree t = Tree::build(w, params({45, 45}, 1500, 9));
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(0, 50);
  for (int i = 0; i < 30; ++i) {
    const Vec2 s{u(rng), u(rng)};
    if (w.inside_static(s)) continue;
    std::optional<NodeId> best;
    double best_cost = 0;
    for (NodeId n = 0; n < t.size(); ++n) {
      if (!w.segment_clear_static(s, t.node(n).pos)) continue;
      const double c = dist(s, t.node(n).pos) + t.node(n).g_dist;
      if (!best || c < best_cost) {
        best = n;
        best_cost = c;
      }
    }
    ASSERT_TRUE(best);
    const Path p = initial_path(t, s, w);
    EXPECT_EQ(p.waypoints.front(), s);
    EXPECT_EQ(p.waypoints.back(), (Vec2{45, 45}));
    EXPECT_EQ(p.nodes.front(), *best);
    for (std::size_t k = 0; k + 1 < p.waypoints.size(); ++k) {
      EXPECT_NE(p.waypoints[k], p.waypoints[k + 1]);
      EXPECT_TRUE(w.segment_clear_static(p.waypoints[k], p.waypoints[k + 1]));
    }
  }
}

TEST(InitialPath, EnclosedStartHasNoConnection) {
  World w = square(50);
  for (int k = 0; k < 24; ++k) {
    const double a = 2 * M_PI * k / 24;
    w.statics.push_back({Disc{{10 + 4 * std::cos(a), 10 + 4 * std::sin(a)}, 1.0}});
  }
  const Tree t = Tree::build(w, params({45, 45}, 500));
  try {
    initial_path(t, {10, 10}, w);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoConnection);
  }
}

TEST(CostToGoTime, Examples) {
  const Rect bounds{{-20, -20}, {20, 20}};
  const CurrentField still{};
  const CurrentField tail{{2, 0}, {}};
  // goal <- A (4 m) <- B (4 m), all heading east toward the goal.
  const Tree t = Tree::assemble(bounds, {8, 0}, {{{4, 0}, 0}, {{0, 0}, 1}});
  EXPECT_EQ(*t.cost_to_go_time(0, FrozenField(still, 0), {1, 4}, 1), 0.0);
  EXPECT_EQ(*t.cost_to_go_time(1, FrozenField(still, 0), {1, 4}, 1), 1.0);
  EXPECT_NEAR(*t.cost_to_go_time(2, FrozenField(tail, 0), {1, 4}, 2), 8.0 / 6.0, 1e-12);
  EXPECT_EQ(t.node(2).g_dist, 8.0);

  const Tree big = Tree::build(square(100), params({50, 50}, 2000, 12));
  for (NodeId n : {NodeId{1}, NodeId{10}, NodeId{500}, NodeId{1999}}) {
    const auto g = big.cost_to_go_time(n, FrozenField(still, 0), {1, 4}, 3);
    EXPECT_NEAR(*g, big.node(n).g_dist / 4, 1e-9);
  }
  for (NodeId n = 1; n < big.size(); ++n) {
    const auto g = big.cost_to_go_time(n, FrozenField(tail, 3), {1, 4}, 4);
    const auto ref = oracle::chain_time(big, n, FrozenField(tail, 3), {1, 4});
    ASSERT_EQ(g.has_value(), ref.has_value());
    if (g) ASSERT_EQ(*g, *ref);
  }
}

TEST(Assemble, RejectsForwardParent) {
  const Rect bounds{{0, 0}, {10, 10}};
  EXPECT_THROW(Tree::assemble(bounds, {5, 5}, {{{1, 1}, 1}}), Error);
  EXPECT_THROW(Tree::assemble(bounds, {5, 5}, {{{11, 1}, 0}}), Error);
  EXPECT_THROW(Tree::assemble(bounds, {15, 5}, {}), Error);
}

TEST(CostToGoTime, MemoInvalidatesOnNewStamp) {
  const World w = square(100);
  const Tree t = Tree::build(w, params({50, 50}, 1000, 13));
  const CurrentField f1{{1, 0}, {}};
  const CurrentField f2{{-1, 0.5}, {}};
  const NodeId n = 700;
  const auto a = t.cost_to_go_time(n, FrozenField(f1, 0), {1, 4}, 1);
  // Same stamp and epoch: cache may be reused, so use a fresh stamp.
  const auto b = t.cost_to_go_time(n, FrozenField(f2, 0), {1, 4}, 2);
  EXPECT_EQ(*a, *oracle::chain_time(t, n, FrozenField(f1, 0), {1, 4}));
  EXPECT_EQ(*b, *oracle::chain_time(t, n, FrozenField(f2, 0), {1, 4}));
  EXPECT_NE(*a, *b);
  // A different epoch invalidates too.
  const CurrentField drifting{{}, {Vortex{{50, 50}, {1, 0}, 3, 10, Spin::kClockwise}}};
  const auto c = t.cost_to_go_time(n, FrozenField(drifting, 0), {1, 4}, 3);
  const auto d = t.cost_to_go_time(n, FrozenField(drifting, 20), {1, 4}, 3);
  EXPECT_EQ(c, oracle::chain_time(t, n, FrozenField(drifting, 0), {1, 4}));
  EXPECT_EQ(d, oracle::chain_time(t, n, FrozenField(drifting, 20), {1, 4}));
}

TEST(CostToGoTime, InfeasibleChain) {
  const Tree t = Tree::build(square(100), params({50, 50}, 500, 14));
  const CurrentField flood{{9, 0}, {}};
  int infeasible = 0;
  for (NodeId n = 1; n < t.size(); ++n) {
    const auto g = t.cost_to_go_time(n, FrozenField(flood, 0), {1, 4}, 1);
    const auto ref = oracle::chain_time(t, n, FrozenField(flood, 0), {1, 4});
    ASSERT_EQ(g.has_value(), ref.has_value()) << n;
    infeasible += !g;
  }
  // Anything whose chain heads west into a 9 m/s flood is unreachable.
  EXPECT_GT(infeasible, 100);
}

TEST(PathThrough, EndsAtGoal) {
  const World w = square(100);
  const Tree t = Tree::build(w, params({50, 50}, 500, 15));
  const Path p = t.path_through({10, 10}, 123);
  EXPECT_EQ(p.waypoints.front(), (Vec2{10, 10}));
  EXPECT_EQ(p.waypoints.back(), (Vec2{50, 50}));
  EXPECT_EQ(p.nodes, t.chain(123));
  // Starting exactly on the node drops the duplicate waypoint.
  const Path q = t.path_through(t.node(123).pos, 123);
  EXPECT_EQ(q.waypoints.size() + 1, p.waypoints.size());
}

}  // namespace
}  // namespace smartoc
