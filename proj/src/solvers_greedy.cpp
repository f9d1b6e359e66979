#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "mhc/cover.hpp"
#include "mhc/rng.hpp"
#include "mhc/solvers.hpp"

namespace mhc {

void SolverConfig::check() const {
  if (!(time_limit_s > 0)) throw std::invalid_argument("time limit must be > 0");
  if (node_limit && *node_limit < 1) throw std::invalid_argument("node limit must be >= 1");
  if (mbh_delta < 0) throw std::invalid_argument("mbh delta must be >= 0");
  if (lslp.total_iterations < 1 || lslp.improvement_iterations < 0) {
    throw std::invalid_argument("lslp iteration counts out of range");
  }
  if (!(lslp.priority_pct > 0 && lslp.priority_pct <= 100) ||
      !(lslp.restriction_pct > 0 && lslp.restriction_pct <= 100)) {
    throw std::invalid_argument("lslp percentages must be in (0,100]");
  }
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// hub_edges[v] = indices into g.edges() of every edge v hub-covers
std::vector<std::vector<int>> hub_edge_index(const Graph& g) {
  std::vector<std::vector<int>> hub_edges(g.num_vertices());
  const auto& edges = g.edges();
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    const auto& [s, d] = edges[e];
    hub_edges[s].push_back(e);
    hub_edges[d].push_back(e);
    const auto& ns = g.neighbors(s);
    for (int c : ns) {
      if (c != d && g.has_edge(c, d)) hub_edges[c].push_back(e);
    }
  }
  return hub_edges;
}

}  // namespace

HubCoverSolution solve_gr1(const Graph& g) {
  const auto start = Clock::now();
  const auto hub_edges = hub_edge_index(g);
  std::vector<char> covered(g.num_edges(), 0);
  int uncovered = g.num_edges();

  HubCoverSolution sol;
  while (uncovered > 0) {
    int best = -1, best_gain = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
      int gain = 0;
      for (int e : hub_edges[v]) gain += !covered[e];
      if (gain > best_gain ||
          (gain == best_gain && gain > 0 &&
           (g.degree(v) > g.degree(best) ||
            (g.degree(v) == g.degree(best) && v < best)))) {
        best = v;
        best_gain = gain;
      }
    }
    sol.cover.push_back(best);
    for (int e : hub_edges[best]) {
      if (!covered[e]) {
        covered[e] = 1;
        --uncovered;
      }
    }
  }
  std::sort(sol.cover.begin(), sol.cover.end());
  sol.objective = static_cast<int>(sol.cover.size());
  sol.status = SolveStatus::Feasible;
  sol.lower_bound = g.num_edges() > 0 ? 1.0 : 0.0;
  sol.solve_time_s = seconds_since(start);
  sol.best_time_s = sol.solve_time_s;
  return sol;
}

HubCoverSolution solve_gr2(const Graph& g, std::uint64_t seed) {
  const auto start = Clock::now();
  const auto hub_edges = hub_edge_index(g);
  Rng rng(seed);

  // live list of uncovered edge indices with O(1) removal
  std::vector<int> live(g.num_edges());
  std::vector<int> pos(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) live[e] = pos[e] = e;
  int live_count = g.num_edges();
  auto remove_edge = [&](int e) {
    const int p = pos[e];
    if (p >= live_count) return;
    const int last = live[live_count - 1];
    std::swap(live[p], live[live_count - 1]);
    pos[last] = p;
    pos[e] = live_count - 1;
    --live_count;
  };

  HubCoverSolution sol;
  while (live_count > 0) {
    const int e = live[rng.below_int(live_count)];
    const auto& [s, d] = g.edges()[e];
    sol.cover.push_back(s);
    sol.cover.push_back(d);
    for (int ce : hub_edges[s]) remove_edge(ce);
    for (int ce : hub_edges[d]) remove_edge(ce);
  }
  std::sort(sol.cover.begin(), sol.cover.end());
  sol.cover.erase(std::unique(sol.cover.begin(), sol.cover.end()), sol.cover.end());
  sol.objective = static_cast<int>(sol.cover.size());
  sol.status = SolveStatus::Feasible;
  sol.lower_bound = g.num_edges() > 0 ? 1.0 : 0.0;
  sol.solve_time_s = seconds_since(start);
  sol.best_time_s = sol.solve_time_s;
  return sol;
}

bool verify_solution(const Graph& g, const HubCoverSolution& s) {
  if (s.objective != static_cast<int>(s.cover.size())) return false;
  for (int v : s.cover) {
    if (!g.has_vertex(v)) return false;
  }
  return is_hub_cover(g, s.cover);
}

}  // namespace mhc
