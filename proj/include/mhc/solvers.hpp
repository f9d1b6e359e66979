#pragma once

#include <cstdint>
#include <optional>

#include "mhc/graph.hpp"
#include "mhc/ip_model.hpp"
#include "mhc/solution.hpp"

namespace mhc {

struct LslpParams {
  int total_iterations = 200;
  int improvement_iterations = 50;
  double priority_pct = 80.0;     // chance of taking the best-priority column
  double restriction_pct = 20.0;  // pool share eligible for the random pick
};

struct SolverConfig {
  double time_limit_s = 60.0;
  std::optional<long long> node_limit;
  double mbh_delta = 1e-6;  // reduced-cost threshold for the column pool
  LslpParams lslp;
  std::uint64_t seed = 0;

  void check() const;
};

/// Exact branch and bound with LP-relaxation bounds: depth-first, children
/// ordered best bound first, branching on the most fractional variable,
/// incumbent seeded from the degree greedy. Status is Optimal when the gap
/// closes, TimeLimit otherwise (the incumbent is always feasible).
HubCoverSolution solve_exact(const IpModel& m, const SolverConfig& cfg = {});

/// Greedy: repeatedly take the vertex hub-covering the most uncovered edges
/// (ties: higher degree, then smaller id).
HubCoverSolution solve_gr1(const Graph& g);

/// Edge greedy: pick a random uncovered edge, take both endpoints, discard
/// everything they hub-cover. 2-approximation on triangle-free graphs.
HubCoverSolution solve_gr2(const Graph& g, std::uint64_t seed);

/// Restricted-IP matheuristic: keep columns whose LP reduced cost is at most
/// delta, repair uncovered rows with dual-greedy picks, then solve the
/// restricted problem exactly.
HubCoverSolution solve_mbh(const IpModel& m, const SolverConfig& cfg = {});

/// Randomized construction + local search over the same restricted pool.
HubCoverSolution solve_lslp(const IpModel& m, const SolverConfig& cfg = {});

/// Re-checks that s.cover is a hub cover of g and objective == |cover|.
bool verify_solution(const Graph& g, const HubCoverSolution& s);

}  // namespace mhc
