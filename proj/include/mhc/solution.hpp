#pragma once

#include <string>
#include <vector>

namespace mhc {

enum class SolveStatus { Optimal, Feasible, TimeLimit, Infeasible };

std::string to_string(SolveStatus s);
SolveStatus solve_status_from_string(const std::string& s);

/// Result of any hub-cover solver. `objective` always equals the cover size;
/// `lower_bound` is a valid bound on the true optimum (LP-based or trivial).
/// `best_time_s` is when the returned cover was first found, which for the
/// local-search solver can be well before `solve_time_s`.
struct HubCoverSolution {
  std::vector<int> cover;  // sorted vertex ids
  int objective = 0;
  SolveStatus status = SolveStatus::Feasible;
  double solve_time_s = 0.0;
  double lower_bound = 0.0;
  double best_time_s = 0.0;
};

}  // namespace mhc
