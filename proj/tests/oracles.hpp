// Independent reference implementations used by the unit and acceptance
// tests. They share only the primitive cost functions with the library.
#ifndef SMARTOC_TESTS_ORACLES_HPP_
#define SMARTOC_TESTS_ORACLES_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "smartoc/planner_tree.hpp"
#include "smartoc/replanner.hpp"
#include "smartoc/time_risk.hpp"
#include "smartoc/world.hpp"

namespace smartoc::oracle {

// Shortest-path distances from `goal` on an 8-connected grid with spacing
// `res` over the world bounds. Edges must be statically clear.
class GridDijkstra {
 public:
  GridDijkstra(const World& world, Vec2 goal, double res) : world_(world), res_(res) {
    cols_ = static_cast<int>(std::floor(world.bounds.width() / res)) + 1;
    rows_ = static_cast<int>(std::floor(world.bounds.height() / res)) + 1;
    dist_.assign(static_cast<std::size_t>(cols_) * rows_,
                 std::numeric_limits<double>::infinity());
    const int src = snap(goal);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
    dist_[src] = dist(goal, pos(src));
    open.push({dist_[src], src});
    while (!open.empty()) {
      const auto [d, u] = open.top();
      open.pop();
      if (d > dist_[u]) continue;
      const int ux = u % cols_, uy = u / cols_;
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          if (dx == 0 && dy == 0) continue;
          const int vx = ux + dx, vy = uy + dy;
          if (vx < 0 || vy < 0 || vx >= cols_ || vy >= rows_) continue;
          const int v = vy * cols_ + vx;
          if (!world.segment_clear_static(pos(u), pos(v))) continue;
          const double nd = d + res * std::hypot(dx, dy);
          if (nd < dist_[v]) {
            dist_[v] = nd;
            open.push({nd, v});
          }
        }
      }
    }
  }

  // Distance at the closest grid vertex reachable by a clear straight hop.
  double at(Vec2 p) const {
    double best = std::numeric_limits<double>::infinity();
    const int cx = static_cast<int>(std::lround((p.x - world_.bounds.min.x) / res_));
    const int cy = static_cast<int>(std::lround((p.y - world_.bounds.min.y) / res_));
    for (int y = cy - 2; y <= cy + 2; ++y) {
      for (int x = cx - 2; x <= cx + 2; ++x) {
        if (x < 0 || y < 0 || x >= cols_ || y >= rows_) continue;
        const int v = y * cols_ + x;
        if (!world_.segment_clear_static(p, pos(v))) continue;
        best = std::min(best, dist_[v] + dist(p, pos(v)));
      }
    }
    return best;
  }

 private:
  Vec2 pos(int v) const {
    return {world_.bounds.min.x + (v % cols_) * res_, world_.bounds.min.y + (v / cols_) * res_};
  }
  int snap(Vec2 p) const {
    const int x = static_cast<int>(std::lround((p.x - world_.bounds.min.x) / res_));
    const int y = static_cast<int>(std::lround((p.y - world_.bounds.min.y) / res_));
    return y * cols_ + x;
  }

  const World& world_;
  double res_;
  int cols_ = 0;
  int rows_ = 0;
  std::vector<double> dist_;
};

// Travel time from n to the root by walking the chain, under a frozen field.
inline std::optional<double> chain_time(const Tree& tree, NodeId n, const FrozenField& f,
                                        const EdgeTimeParams& ep) {
  std::vector<double> edges;
  NodeId cur = n;
  while (tree.node(cur).parent) {
    const NodeId p = *tree.node(cur).parent;
    const auto e = edge_time(tree.node(cur).pos, tree.node(p).pos, f, f.epoch(), ep);
    if (!e) return std::nullopt;
    edges.push_back(*e);
    cur = p;
  }
  // Accumulate from the root end, matching g(n) = edge + g(parent).
  double acc = 0.0;
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) acc = *it + acc;
  return acc;
}

inline bool hits_inner_band(Vec2 a, Vec2 b, const World& world, const FrozenField& f,
                            double t, const ReplanParams& p) {
  if (world.dynamics.empty()) return false;
  const double len = dist(a, b);
  if (len == 0.0) return false;
  const auto pieces = static_cast<long>(std::ceil(len / p.path_risk.sample_ds));
  double clock = t;
  Vec2 prev = a;
  for (long k = 1; k <= pieces; ++k) {
    const Vec2 next = k == pieces ? b : a + (b - a) * (double(k) / double(pieces));
    const auto dt = edge_time(prev, next, f, clock, p.edge);
    if (!dt) return false;
    clock += *dt;
    for (const auto& ob : world.dynamics) {
      if (dist(next, world.predict_position(ob, clock)) <= p.risk.d_min) return true;
    }
    prev = next;
  }
  return false;
}

struct Choice {
  NodeId node;
  double cost;
};

// Exhaustive evaluation of every tree node inside the LRZ.
inline std::optional<Choice> brute_force_replan(const Tree& tree, Vec2 usv, const World& world,
                                                const CurrentField& field, double t,
                                                const ReplanParams& p) {
  const FrozenField frozen(field, t);
  std::optional<Choice> best;
  for (NodeId n = 0; n < tree.size(); ++n) {
    const Vec2 pos = tree.node(n).pos;
    if (dist(usv, pos) > p.lrz.radius) continue;
    if (!world.segment_clear_static(usv, pos)) continue;
    if (hits_inner_band(usv, pos, world, frozen, t, p)) continue;
    const auto c = edge_time(usv, pos, frozen, t, p.edge);
    if (!c) continue;
    const auto g = chain_time(tree, n, frozen, p.edge);
    if (!g) continue;
    const Path route = tree.path_through(usv, n);
    const auto r = path_risk(route.waypoints, world, field, t, p.risk, p.edge, p.path_risk);
    if (!r || *r >= 1.0) continue;
    const double cost = (*c + *g) / (1.0 - *r);
    if (!best || cost < best->cost) best = Choice{n, cost};
  }
  return best;
}

}  // namespace smartoc::oracle

#endif  // SMARTOC_TESTS_ORACLES_HPP_
