#pragma once

#include <vector>

#include "mhc/graph.hpp"

namespace mhc {

/// Edges covered when v acts as a hub: every edge incident to v plus every
/// edge joining two neighbors of v. Returned in canonical sorted order.
std::vector<Edge> hub_covered_edges(const Graph& g, int v);

/// True iff every edge (s,d) has s in m, d in m, or some c in m adjacent to
/// both s and d. The empty set is a hub cover exactly when g has no edges.
bool is_hub_cover(const Graph& g, const std::vector<int>& m);

/// True iff every edge has at least one endpoint in m.
bool is_vertex_cover(const Graph& g, const std::vector<int>& m);

/// True iff no edge's endpoints share a common neighbor.
bool is_triangle_free(const Graph& g);

}  // namespace mhc
