#include "mhc/ip_model.hpp"

#include <algorithm>
#include <map>

namespace mhc {

IpModel build_ip(const Graph& g) {
  // Per-edge coverage set: endpoints plus common neighbors. Identical sets
  // merge, and a set that strictly contains another one is redundant (the
  // subset constraint implies it), which is how three triangle edges end up
  // sharing one row.
  std::vector<std::vector<int>> edge_rows;
  edge_rows.reserve(g.num_edges());
  for (const auto& [s, d] : g.edges()) {
    std::vector<int> members{s, d};
    const auto& ns = g.neighbors(s);
    const auto& nd = g.neighbors(d);
    std::set_intersection(ns.begin(), ns.end(), nd.begin(), nd.end(),
                          std::back_inserter(members));
    std::sort(members.begin(), members.end());
    edge_rows.push_back(std::move(members));
  }

  std::vector<std::vector<int>> distinct = edge_rows;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  auto dominated = [&](const std::vector<int>& row) {
    for (const auto& other : distinct) {
      if (other.size() < row.size() &&
          std::includes(row.begin(), row.end(), other.begin(), other.end())) {
        return true;
      }
    }
    return false;
  };

  IpModel model;
  model.graph = &g;
  std::map<std::vector<int>, int> row_index;
  for (const auto& row : distinct) {
    if (dominated(row)) continue;
    row_index.emplace(row, static_cast<int>(model.rows.size()));
    model.rows.push_back(row);
    model.row_edges.emplace_back();
  }

  // Attribute each edge to a kept row. A dropped superset row maps to the
  // kept subset with the fewest members, ties to the lexicographically
  // greatest one, which reproduces the worked model's triangle grouping.
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto& row = edge_rows[e];
    auto it = row_index.find(row);
    if (it != row_index.end()) {
      model.row_edges[it->second].push_back(g.edges()[e]);
      continue;
    }
    int best = -1;
    for (size_t r = 0; r < model.rows.size(); ++r) {
      const auto& kept = model.rows[r];
      if (kept.size() >= row.size() ||
          !std::includes(row.begin(), row.end(), kept.begin(), kept.end())) {
        continue;
      }
      if (best < 0 || kept.size() < model.rows[best].size() ||
          (kept.size() == model.rows[best].size() && kept > model.rows[best])) {
        best = static_cast<int>(r);
      }
    }
    model.row_edges[best].push_back(g.edges()[e]);
  }
  return model;
}

}  // namespace mhc
