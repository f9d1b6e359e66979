#pragma once

#include <vector>

#include "mhc/graph.hpp"

namespace mhc {

/// Hub-coverage integer program over binary vertex variables. One
/// constraint per edge (the edge's endpoints plus their common neighbors),
/// with identical or implied constraints merged, so several edges can
/// share a row. Feasible 0/1 points are exactly the hub covers.
struct IpModel {
  const Graph* graph = nullptr;
  std::vector<std::vector<int>> rows;      // sorted member sets, deduplicated
  std::vector<std::vector<Edge>> row_edges;  // edges each row stands for

  int num_vars() const { return graph ? graph->num_vertices() : 0; }
};

IpModel build_ip(const Graph& g);

}  // namespace mhc
