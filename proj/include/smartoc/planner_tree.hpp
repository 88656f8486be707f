// Copyright 2026 The SMART-OC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Goal-rooted RRT*.
//
// The tree is grown from the goal, so a node's cost-from-root is its distance
// cost-to-go and its parent chain is the route to the goal. Build-time edge
// costs are Euclidean; time costs under currents are evaluated on demand and
// memoized per replanning event.

#ifndef SMARTOC_PLANNER_TREE_HPP_
#define SMARTOC_PLANNER_TREE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "smartoc/geometry.hpp"
#include "smartoc/time_risk.hpp"
#include "smartoc/world.hpp"

namespace smartoc {

using NodeId = std::uint32_t;

struct TreeNode {
  Vec2 pos;
  std::optional<NodeId> parent;  // empty only for the root
  double g_dist = 0.0;           // distance to the goal along the tree, m
};

struct RrtParams {
  std::size_t node_budget = 5000;
  double step_size = 3.0;      // steering limit, also the rewire radius floor
  double rewire_gamma = 140.0;  // shrinking-ball constant, m (sized for ~100x100 m)
  double rewire_max = 10.0;    // rewire radius cap, m
  Vec2 goal_root;
  std::uint64_t seed = 1;

  // radius(n) = max(step_size, min(rewire_max, gamma * sqrt(ln n / n)))
  double rewire_radius(std::size_t n) const;
};

// Bucket grid over the world bounds, used for nearest and radius queries.
class SpatialGrid {
 public:
  SpatialGrid() = default;
  SpatialGrid(const Rect& bounds, double cell_size);

  void insert(NodeId id, Vec2 pos);
  // Lowest id among the closest points. Requires a non-empty grid.
  NodeId nearest(Vec2 q, const std::vector<TreeNode>& nodes) const;
  // Ascending ids with dist(pos, center) <= radius.
  std::vector<NodeId> in_radius(Vec2 center, double radius,
                                const std::vector<TreeNode>& nodes) const;

 private:
  int col_of(double x) const;
  int row_of(double y) const;

  Rect bounds_;
  double cell_ = 1.0;
  int cols_ = 0;
  int rows_ = 0;
  std::vector<std::vector<NodeId>> cells_;
};

struct Path {
  std::vector<Vec2> waypoints;  // vehicle position first, goal last
  std::vector<NodeId> nodes;    // tree suffix followed to reach the goal
};

class Tree {
 public:
  // Throws InvalidRoot when the goal is outside the bounds or inside a static
  // obstacle.
  static Tree build(const World& world, const RrtParams& params);

  // Tree from explicit nodes; node i + 1 is {pos, parent} with the parent an
  // earlier id (0 is the root). For fixtures and externally built trees.
  struct Link {
    Vec2 pos;
    NodeId parent = 0;
  };
  static Tree assemble(const Rect& bounds, Vec2 root, const std::vector<Link>& links,
                       double cell_size = 1.0);

  const std::vector<TreeNode>& nodes() const { return nodes_; }
  const TreeNode& node(NodeId id) const { return nodes_[id]; }
  std::size_t size() const { return nodes_.size(); }
  NodeId root() const { return 0; }

  std::vector<NodeId> nodes_in_radius(Vec2 center, double radius) const;
  NodeId nearest(Vec2 q) const;

  // Node ids from n up to and including the root.
  std::vector<NodeId> chain(NodeId n) const;

  // Path from `from` through `via` and its parent chain to the goal.
  Path path_through(Vec2 from, NodeId via) const;

  // Travel time from n to the goal along the parent chain, summed from the
  // root outward so that g(n) = edge(n, parent) + g(parent). nullopt when any
  // edge is infeasible. Results are cached until the (stamp, epoch, params)
  // key changes; one caller may use the cache at a time.
  std::optional<double> cost_to_go_time(NodeId n, const FrozenField& field,
                                        const EdgeTimeParams& ep,
                                        std::uint64_t stamp) const;

 private:
  Tree() = default;

  NodeId add_node(Vec2 pos, NodeId parent);
  void reparent(NodeId n, NodeId new_parent);
  void refresh_subtree(NodeId n);

  std::vector<TreeNode> nodes_;
  std::vector<std::vector<NodeId>> children_;
  SpatialGrid grid_;

  struct Memo {
    std::uint64_t generation = 0;
    std::optional<double> value;
  };
  mutable std::vector<Memo> memo_;
  mutable std::uint64_t memo_generation_ = 0;
  mutable std::uint64_t memo_stamp_ = 0;
  mutable double memo_epoch_ = 0.0;
  mutable EdgeTimeParams memo_params_{};
};

// Baseline path: start connected to the node minimizing
// dist(start, N) + g_dist(N) over nodes reachable by a statically clear
// segment (ties to the lowest id). Throws NoConnection if none is reachable.
Path initial_path(const Tree& tree, Vec2 start, const World& world);

}  // namespace smartoc

#endif  // SMARTOC_PLANNER_TREE_HPP_
