#include "gear/graph.hpp"

#include <queue>
#include <stdexcept>
#include <string>

namespace gear {

void require_wheel_size(int n) {
  if (n < 4) throw std::domain_error("n must be ≥ 4 (got " + std::to_string(n) + ")");
}

std::vector<std::vector<int>> GearGraph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(order) + 1);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::vector<int> GearGraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(order) + 1, 0);
  for (const auto& [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

GearGraph build_wheel(int n) {
  require_wheel_size(n);
  GearGraph g{n, n, {}};
  for (int v = 2; v <= n; ++v) g.edges.emplace_back(1, v);
  for (int v = 2; v <= n; ++v) g.edges.emplace_back(v, v == n ? 2 : v + 1);
  return g;
}

GearGraph build_gear(int n) {
  require_wheel_size(n);
  GearGraph g{n, 2 * n - 1, {}};
  for (int v = 2; v <= n; ++v) g.edges.emplace_back(1, v);
  for (int i = 2; i <= n; ++i) {
    const int next = i == n ? 2 : i + 1;
    const int mid = n + i - 1;
    g.edges.emplace_back(i, mid);
    g.edges.emplace_back(mid, next);
  }
  return g;
}

IntegerMatrix bfs_distances(const GearGraph& g) {
  const auto adj = g.adjacency();
  const auto m = static_cast<std::size_t>(g.order);
  IntegerMatrix d(m, m, -1);
  for (std::size_t src = 1; src <= m; ++src) {
    std::queue<int> frontier;
    frontier.push(static_cast<int>(src));
    d(src - 1, src - 1) = 0;
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int w : adj[u]) {
        if (d(src - 1, w - 1) >= 0) continue;
        d(src - 1, w - 1) = d(src - 1, u - 1) + 1;
        frontier.push(w);
      }
    }
  }
  for (auto x : d.data())
    if (x < 0) throw std::domain_error("bfs_distances: graph is disconnected");
  return d;
}

IntegerMatrix gear_distance_closed(int n) {
  require_wheel_size(n);
  const std::size_t size = static_cast<std::size_t>(n - 1);
  const std::size_t m = 2 * size + 1;
  IntegerMatrix d(m, m);
  auto rim = [](std::size_t r) { return 1 + r; };
  auto sub = [size](std::size_t r) { return 1 + size + r; };
  for (std::size_t r = 0; r < size; ++r) {
    d(0, rim(r)) = d(rim(r), 0) = 1;
    d(0, sub(r)) = d(sub(r), 0) = 2;
    for (std::size_t s = 0; s < size; ++s) {
      const std::size_t shift = (s + size - r) % size;  // circulant offset
      d(rim(r), rim(s)) = r == s ? 0 : 2;
      d(rim(r), sub(s)) = (shift == 0 || shift == size - 1) ? 1 : 3;
      d(sub(r), rim(s)) = (shift == 0 || shift == 1) ? 1 : 3;
      d(sub(r), sub(s)) = shift == 0 ? 0 : (shift == 1 || shift == size - 1) ? 2 : 4;
    }
  }
  return d;
}

}  // namespace gear
