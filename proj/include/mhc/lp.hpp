#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mhc {

/// LP relaxation of a set-covering model: minimize sum(x) subject to
/// sum_{j in row} x_j >= 1 for every row and 0 <= x <= 1. All coefficients
/// are implicit 0/1. `fixings[j]` of 0 or 1 pins a variable (-1 = free).
struct LpProblem {
  int num_vars = 0;
  std::vector<std::vector<int>> rows;
  std::vector<std::int8_t> fixings;  // empty means all free

  void check() const;
};

enum class LpStatus { Optimal, Infeasible };

struct LpSolution {
  LpStatus status = LpStatus::Optimal;
  double objective = 0.0;            // includes fixed-to-1 contributions
  std::vector<double> primal;        // per variable, fixed vars at their value
  std::vector<double> duals;         // per row, >= 0; 0 for rows satisfied by fixings
  std::vector<double> reduced_costs; // 1 - sum of duals over rows containing j
  int iterations = 0;
};

/// Thrown when a deadline passed to solve_lp expires mid-solve.
struct LpDeadlineExceeded {};

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

/// Bounded-variable primal simplex on the full tableau. Dantzig pricing with
/// a permanent switch to Bland's rule once the degenerate-pivot budget
/// (5 * rows) is spent, which guarantees termination. Deterministic: the same
/// problem always yields the same solution, bit for bit.
LpSolution solve_lp(const LpProblem& p, const Deadline& deadline = std::nullopt);

/// Plain-text model listing (debugging aid).
std::string dump_lp(const LpProblem& p);

}  // namespace mhc
