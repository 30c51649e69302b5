#pragma once

#include <utility>
#include <vector>

#include "gear/matrix.hpp"

namespace gear {

// Undirected simple graph with 1-based vertex ids.
//
// For gear graphs the labeling is fixed: vertex 1 is the hub, 2..n the rim
// in anticlockwise order, and n+i-1 subdivides the rim edge (i, i+1), where
// the rim successor of n is 2.
struct GearGraph {
  int n = 0;      // wheel size
  int order = 0;  // vertex count: 2n-1 for a gear, n for a wheel
  std::vector<std::pair<int, int>> edges;

  std::vector<std::vector<int>> adjacency() const;  // index 0 unused
  std::vector<int> degrees() const;                 // index 0 unused
};

GearGraph build_gear(int n);
GearGraph build_wheel(int n);

// All-pairs hop distances by breadth-first search from every vertex.
// Throws std::domain_error if the graph is disconnected.
IntegerMatrix bfs_distances(const GearGraph& g);

// Block form [0, 1', 2*1'; 1, 2(J-I), S; 2*1, S', T] with
// S = Circ(1,3,...,3,1) and T = Circ(0,2,4,...,4,2).
IntegerMatrix gear_distance_closed(int n);

// Throws std::domain_error when n < 4.
void require_wheel_size(int n);

}  // namespace gear
