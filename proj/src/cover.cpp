#include "mhc/cover.hpp"

#include <algorithm>

namespace mhc {

std::vector<Edge> hub_covered_edges(const Graph& g, int v) {
  g.check_vertex(v);
  std::vector<Edge> out;
  const auto& nb = g.neighbors(v);
  for (int u : nb) out.emplace_back(std::min(u, v), std::max(u, v));
  for (size_t i = 0; i < nb.size(); ++i) {
    for (size_t j = i + 1; j < nb.size(); ++j) {
      if (g.has_edge(nb[i], nb[j])) out.emplace_back(nb[i], nb[j]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_hub_cover(const Graph& g, const std::vector<int>& m) {
  std::vector<char> in(g.num_vertices(), 0);
  for (int v : m) {
    g.check_vertex(v);
    in[v] = 1;
  }
  for (const auto& [s, d] : g.edges()) {
    if (in[s] || in[d]) continue;
    const auto& ns = g.neighbors(s);
    const auto& nd = g.neighbors(d);
    const auto& small = ns.size() <= nd.size() ? ns : nd;
    const int other = ns.size() <= nd.size() ? d : s;
    bool covered = false;
    for (int c : small) {
      if (in[c] && g.has_edge(c, other)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

bool is_vertex_cover(const Graph& g, const std::vector<int>& m) {
  std::vector<char> in(g.num_vertices(), 0);
  for (int v : m) {
    g.check_vertex(v);
    in[v] = 1;
  }
  for (const auto& [s, d] : g.edges()) {
    if (!in[s] && !in[d]) return false;
  }
  return true;
}

bool is_triangle_free(const Graph& g) {
  for (const auto& [s, d] : g.edges()) {
    const auto& ns = g.neighbors(s);
    const auto& nd = g.neighbors(d);
    // sorted intersection
    auto it = ns.begin();
    auto jt = nd.begin();
    while (it != ns.end() && jt != nd.end()) {
      if (*it < *jt) {
        ++it;
      } else if (*jt < *it) {
        ++jt;
      } else {
        return false;
      }
    }
  }
  return true;
}

}  // namespace mhc
