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

#include "smartoc/planner_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <tuple>

#include "smartoc/error.hpp"

namespace smartoc {

double RrtParams::rewire_radius(std::size_t n) const {
  if (n < 2) return std::max(step_size, rewire_max);
  const double nd = static_cast<double>(n);
  const double shrinking = rewire_gamma * std::sqrt(std::log(nd) / nd);
  return std::max(step_size, std::min(rewire_max, shrinking));
}

// ---------------------------------------------------------------------------
// SpatialGrid

SpatialGrid::SpatialGrid(const Rect& bounds, double cell_size)
    : bounds_(bounds) {
  // Cap the cell count so tiny steps on large worlds stay cheap to allocate.
  const double extent = std::max(bounds.width(), bounds.height());
  cell_ = std::max(cell_size, extent / 512.0);
  cols_ = std::max(1, static_cast<int>(std::ceil(bounds.width() / cell_)));
  rows_ = std::max(1, static_cast<int>(std::ceil(bounds.height() / cell_)));
  cells_.resize(static_cast<std::size_t>(cols_) * rows_);
}

int SpatialGrid::col_of(double x) const {
  return std::clamp(static_cast<int>(std::floor((x - bounds_.min.x) / cell_)),
                    0, cols_ - 1);
}

int SpatialGrid::row_of(double y) const {
  return std::clamp(static_cast<int>(std::floor((y - bounds_.min.y) / cell_)),
                    0, rows_ - 1);
}

void SpatialGrid::insert(NodeId id, Vec2 pos) {
  cells_[static_cast<std::size_t>(row_of(pos.y)) * cols_ + col_of(pos.x)]
      .push_back(id);
}

NodeId SpatialGrid::nearest(Vec2 q, const std::vector<TreeNode>& nodes) const {
  const int qc = col_of(q.x);
  const int qr = row_of(q.y);
  double best_d2 = std::numeric_limits<double>::infinity();
  NodeId best = 0;
  bool found = false;
  const int max_ring = std::max(cols_, rows_);
  for (int ring = 0; ring <= max_ring; ++ring) {
    for (int r = qr - ring; r <= qr + ring; ++r) {
      if (r < 0 || r >= rows_) continue;
      const bool edge_row = (r == qr - ring || r == qr + ring);
      const int step = edge_row ? 1 : 2 * ring;
      for (int c = qc - ring; c <= qc + ring; c += std::max(step, 1)) {
        if (c < 0 || c >= cols_) continue;
        for (NodeId id : cells_[static_cast<std::size_t>(r) * cols_ + c]) {
          const double d2 = (nodes[id].pos - q).squared_norm();
          if (d2 < best_d2 || (d2 == best_d2 && id < best)) {
            best_d2 = d2;
            best = id;
            found = true;
          }
        }
      }
    }
    // Every cell in ring k+1 lies at least k cells away from q.
    if (found) {
      const double reach = static_cast<double>(ring) * cell_;
      if (best_d2 < reach * reach) break;
    }
  }
  return best;
}

std::vector<NodeId> SpatialGrid::in_radius(Vec2 center, double radius,
                                           const std::vector<TreeNode>& nodes) const {
  std::vector<NodeId> out;
  const int c0 = col_of(center.x - radius);
  const int c1 = col_of(center.x + radius);
  const int r0 = row_of(center.y - radius);
  const int r1 = row_of(center.y + radius);
  const double r2 = radius * radius;
  for (int r = r0; r <= r1; ++r) {
    for (int c = c0; c <= c1; ++c) {
      for (NodeId id : cells_[static_cast<std::size_t>(r) * cols_ + c]) {
        if ((nodes[id].pos - center).squared_norm() <= r2) out.push_back(id);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Tree

Tree Tree::build(const World& world, const RrtParams& params) {
  if (!world.bounds.contains(params.goal_root) ||
      world.inside_static(params.goal_root)) {
    throw Error(ErrorCode::kInvalidRoot,
                "goal root is outside the bounds or inside a static obstacle");
  }

  Tree tree;
  tree.grid_ = SpatialGrid(world.bounds, params.step_size);
  tree.nodes_.reserve(params.node_budget + 1);
  tree.nodes_.push_back(TreeNode{params.goal_root, std::nullopt, 0.0});
  tree.children_.emplace_back();
  tree.grid_.insert(0, params.goal_root);

  std::mt19937_64 rng(params.seed);
  std::uniform_real_distribution<double> ux(world.bounds.min.x, world.bounds.max.x);
  std::uniform_real_distribution<double> uy(world.bounds.min.y, world.bounds.max.y);

  const std::size_t target = params.node_budget + 1;
  const std::size_t max_attempts = 50 * params.node_budget + 1000;
  for (std::size_t attempt = 0;
       tree.nodes_.size() < target && attempt < max_attempts; ++attempt) {
    // Draw both coordinates unconditionally so the stream is consumed the
    // same way regardless of evaluation order.
    const double sx = ux(rng);
    const double sy = uy(rng);
    const Vec2 sample{sx, sy};

    const NodeId nn = tree.grid_.nearest(sample, tree.nodes_);
    const Vec2 from = tree.nodes_[nn].pos;
    const double d = dist(from, sample);
    if (d == 0.0) continue;
    const Vec2 pos = d > params.step_size ? from + (sample - from) * (params.step_size / d)
                                          : sample;
    if (world.inside_static(pos) || !world.segment_clear_static(from, pos)) continue;

    const double radius = params.rewire_radius(tree.nodes_.size() + 1);
    const std::vector<NodeId> near = tree.grid_.in_radius(pos, radius, tree.nodes_);

    NodeId parent = nn;
    double best = tree.nodes_[nn].g_dist + dist(from, pos);
    for (NodeId cand : near) {
      if (cand == nn) continue;
      const double c = tree.nodes_[cand].g_dist + dist(tree.nodes_[cand].pos, pos);
      if (c < best || (c == best && cand < parent)) {
        if (world.segment_clear_static(tree.nodes_[cand].pos, pos)) {
          best = c;
          parent = cand;
        }
      }
    }

    const NodeId added = tree.add_node(pos, parent);
    for (NodeId nb : near) {
      if (nb == parent) continue;
      const double c = tree.nodes_[added].g_dist + dist(pos, tree.nodes_[nb].pos);
      if (c < tree.nodes_[nb].g_dist &&
          world.segment_clear_static(pos, tree.nodes_[nb].pos)) {
        tree.reparent(nb, added);
      }
    }
  }
  return tree;
}

Tree Tree::assemble(const Rect& bounds, Vec2 root, const std::vector<Link>& links,
                    double cell_size) {
  if (!bounds.contains(root)) {
    throw Error(ErrorCode::kInvalidRoot, "root is outside the bounds");
  }
  Tree tree;
  tree.grid_ = SpatialGrid(bounds, cell_size);
  tree.nodes_.push_back(TreeNode{root, std::nullopt, 0.0});
  tree.children_.emplace_back();
  tree.grid_.insert(0, root);
  for (const Link& l : links) {
    if (l.parent >= tree.nodes_.size() || !bounds.contains(l.pos)) {
      throw Error(ErrorCode::kValidation,
                  "node " + std::to_string(tree.nodes_.size()) +
                      " needs an earlier parent and a position inside the bounds");
    }
    tree.add_node(l.pos, l.parent);
  }
  return tree;
}

NodeId Tree::add_node(Vec2 pos, NodeId parent) {
  const auto id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(TreeNode{pos, parent, nodes_[parent].g_dist + dist(pos, nodes_[parent].pos)});
  children_.emplace_back();
  children_[parent].push_back(id);
  grid_.insert(id, pos);
  return id;
}

void Tree::reparent(NodeId n, NodeId new_parent) {
  auto& siblings = children_[*nodes_[n].parent];
  siblings.erase(std::find(siblings.begin(), siblings.end(), n));
  nodes_[n].parent = new_parent;
  children_[new_parent].push_back(n);
  refresh_subtree(n);
}

void Tree::refresh_subtree(NodeId n) {
  std::vector<NodeId> stack{n};
  while (!stack.empty()) {
    const NodeId cur = stack.back();
    stack.pop_back();
    const TreeNode& p = nodes_[*nodes_[cur].parent];
    nodes_[cur].g_dist = p.g_dist + dist(nodes_[cur].pos, p.pos);
    for (NodeId ch : children_[cur]) stack.push_back(ch);
  }
}

std::vector<NodeId> Tree::nodes_in_radius(Vec2 center, double radius) const {
  return grid_.in_radius(center, radius, nodes_);
}

NodeId Tree::nearest(Vec2 q) const { return grid_.nearest(q, nodes_); }

std::vector<NodeId> Tree::chain(NodeId n) const {
  std::vector<NodeId> out{n};
  while (nodes_[out.back()].parent) out.push_back(*nodes_[out.back()].parent);
  return out;
}

Path Tree::path_through(Vec2 from, NodeId via) const {
  Path path;
  path.nodes = chain(via);
  path.waypoints.reserve(path.nodes.size() + 1);
  path.waypoints.push_back(from);
  for (NodeId id : path.nodes) {
    if (nodes_[id].pos != path.waypoints.back()) path.waypoints.push_back(nodes_[id].pos);
  }
  return path;
}

std::optional<double> Tree::cost_to_go_time(NodeId n, const FrozenField& field,
                                            const EdgeTimeParams& ep,
                                            std::uint64_t stamp) const {
  if (memo_generation_ == 0 || stamp != memo_stamp_ ||
      field.epoch() != memo_epoch_ || ep.sub_step != memo_params_.sub_step ||
      ep.usv_speed != memo_params_.usv_speed) {
    ++memo_generation_;
    memo_stamp_ = stamp;
    memo_epoch_ = field.epoch();
    memo_params_ = ep;
  }
  if (memo_.size() != nodes_.size()) memo_.assign(nodes_.size(), Memo{});

  // Walk up to the first cached ancestor (or the root), then fill downward.
  std::vector<NodeId> pending;
  NodeId cur = n;
  while (memo_[cur].generation != memo_generation_) {
    if (!nodes_[cur].parent) {
      memo_[cur] = Memo{memo_generation_, 0.0};
      break;
    }
    pending.push_back(cur);
    cur = *nodes_[cur].parent;
  }
  for (auto it = pending.rbegin(); it != pending.rend(); ++it) {
    const TreeNode& node = nodes_[*it];
    const Memo& up = memo_[*node.parent];
    std::optional<double> value;
    if (up.value) {
      const auto e = edge_time(node.pos, nodes_[*node.parent].pos, field,
                               field.epoch(), ep);
      if (e) value = *e + *up.value;
    }
    memo_[*it] = Memo{memo_generation_, value};
  }
  return memo_[n].value;
}

// ---------------------------------------------------------------------------

Path initial_path(const Tree& tree, Vec2 start, const World& world) {
  const TreeNode& root = tree.node(tree.root());
  if (start == root.pos) return Path{{start}, {tree.root()}};

  std::vector<std::pair<double, NodeId>> order;
  order.reserve(tree.size());
  for (NodeId id = 0; id < tree.size(); ++id) {
    const TreeNode& n = tree.node(id);
    order.emplace_back(dist(start, n.pos) + n.g_dist, id);
  }
  std::sort(order.begin(), order.end());
  for (const auto& [cost, id] : order) {
    if (world.segment_clear_static(start, tree.node(id).pos)) {
      return tree.path_through(start, id);
    }
  }
  throw Error(ErrorCode::kNoConnection,
              "no tree node is reachable from the start by a clear segment");
}

}  // namespace smartoc
