#include "mhc/solution.hpp"

#include <stdexcept>

namespace mhc {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "Optimal";
    case SolveStatus::Feasible: return "Feasible";
    case SolveStatus::TimeLimit: return "TimeLimit";
    case SolveStatus::Infeasible: return "Infeasible";
  }
  return "?";
}

SolveStatus solve_status_from_string(const std::string& s) {
  if (s == "Optimal") return SolveStatus::Optimal;
  if (s == "Feasible") return SolveStatus::Feasible;
  if (s == "TimeLimit") return SolveStatus::TimeLimit;
  if (s == "Infeasible") return SolveStatus::Infeasible;
  throw std::invalid_argument("unknown solve status: " + s);
}

}  // namespace mhc
