#pragma once

#include <string>
#include <vector>

#include "mhc/graph.hpp"

namespace mhc::testing {

// Six-vertex query graph used throughout: u1..u6 map to ids 0..5.
// Edges: (u1,u2) (u1,u5) (u2,u3) (u2,u5) (u3,u4) (u3,u5) (u5,u6).
inline Graph q1() {
  return Graph(6, {{0, 1}, {0, 4}, {1, 2}, {1, 4}, {2, 3}, {2, 4}, {4, 5}});
}

inline Graph q1_labeled() {
  // labels as printed: u1=A u2=B u3=C u4=D u5=A u6=E (arbitrary but fixed)
  return Graph(6, {{0, 1}, {0, 4}, {1, 2}, {1, 4}, {2, 3}, {2, 4}, {4, 5}},
               {"A", "B", "C", "D", "A", "E"});
}

inline Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(std::min(i, (i + 1) % n),
                                                 std::max(i, (i + 1) % n));
  return Graph(n, std::move(edges));
}

inline Graph complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

inline Graph path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

inline Graph star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, std::move(edges));
}

inline Graph edgeless(int n) { return Graph(n, {}); }

}  // namespace mhc::testing
