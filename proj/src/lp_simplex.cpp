#include "mhc/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace mhc {

namespace {

constexpr double kOptTol = 1e-9;    // dual feasibility tolerance
constexpr double kPivotTol = 1e-9;  // minimum pivot magnitude
constexpr double kFeasTol = 1e-7;
constexpr double kGapTol = 1e-6;
constexpr double kInf = std::numeric_limits<double>::infinity();

enum class VarState : std::uint8_t { Basic, AtLower, AtUpper };

// Residual set-covering LP after applying fixings, in the standard form
//   A x - s = 1,  0 <= x <= 1,  s >= 0,
// solved with a bounded-variable primal simplex over the full tableau.
// Starting basis: all surplus columns (B = -I), all structural columns
// nonbasic at their upper bound, which is primal feasible because every
// residual row has at least one free member.
class Tableau {
 public:
  Tableau(const std::vector<std::vector<int>>& rows, int nf)
      : m_(static_cast<int>(rows.size())), nf_(nf), ncol_(nf + m_) {
    t_.assign(static_cast<size_t>(m_) * ncol_, 0.0);
    cost_.assign(ncol_, 0.0);
    basis_.resize(m_);
    state_.assign(ncol_, VarState::AtLower);
    xb_.resize(m_);
    for (int j = 0; j < nf_; ++j) {
      cost_[j] = 1.0;
      state_[j] = VarState::AtUpper;
    }
    for (int i = 0; i < m_; ++i) {
      double* row = t_.data() + static_cast<size_t>(i) * ncol_;
      for (int j : rows[i]) row[j] = -1.0;  // B^-1 A with B = -I
      row[nf_ + i] = 1.0;
      basis_[i] = nf_ + i;
      state_[nf_ + i] = VarState::Basic;
      xb_[i] = static_cast<double>(rows[i].size()) - 1.0;
    }
  }

  void solve(const Deadline& deadline) {
    const long long degenerate_budget = 5LL * m_;
    const long long iter_cap = 2000LL * ncol_ + 10000;
    long long degenerate = 0;
    bool bland = false;
    while (true) {
      if (deadline && (iterations_ & 127) == 0 &&
          std::chrono::steady_clock::now() > *deadline) {
        throw LpDeadlineExceeded{};
      }
      if (iterations_ > iter_cap) {
        throw std::runtime_error("simplex: iteration cap hit (" +
                                 std::to_string(iterations_) + " iterations, " +
                                 std::to_string(m_) + " rows)");
      }
      const int jin = pick_entering(bland);
      if (jin < 0) return;  // optimal
      ++iterations_;

      const double dir = state_[jin] == VarState::AtLower ? 1.0 : -1.0;
      // ratio test; structural variables can also flip bound to bound
      double best_t = jin < nf_ ? 1.0 : kInf;
      bool own_bound = jin < nf_;
      int leave_row = -1;
      bool leave_at_upper = false;
      for (int i = 0; i < m_; ++i) {
        const double w = t_[static_cast<size_t>(i) * ncol_ + jin];
        if (std::abs(w) <= kPivotTol) continue;
        const double delta = -w * dir;  // basic value change per unit step
        double limit;
        bool hits_upper;
        if (delta < 0.0) {
          limit = xb_[i] / -delta;  // every variable has lower bound 0
          hits_upper = false;
        } else {
          if (basis_[i] >= nf_) continue;  // surplus has no upper bound
          limit = (1.0 - xb_[i]) / delta;
          hits_upper = true;
        }
        if (limit < 0.0) limit = 0.0;
        if (limit < best_t - 1e-12 ||
            (limit < best_t + 1e-12 && leave_row >= 0 && basis_[i] < basis_[leave_row]) ||
            (limit < best_t + 1e-12 && leave_row < 0 && own_bound && limit < best_t)) {
          best_t = limit;
          own_bound = false;
          leave_row = i;
          leave_at_upper = hits_upper;
        }
      }
      if (best_t == kInf) {
        throw std::runtime_error("simplex: unbounded direction (corrupt model)");
      }
      if (best_t < 1e-12 && ++degenerate > degenerate_budget) bland = true;

      apply_step(jin, dir, best_t);
      if (own_bound || leave_row < 0) {
        state_[jin] =
            state_[jin] == VarState::AtLower ? VarState::AtUpper : VarState::AtLower;
        continue;
      }
      pivot(leave_row, jin, dir, best_t, leave_at_upper);
    }
  }

  std::vector<double> structural_values() const {
    std::vector<double> x(nf_, 0.0);
    for (int j = 0; j < nf_; ++j) {
      if (state_[j] == VarState::AtUpper) x[j] = 1.0;
    }
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < nf_) x[basis_[i]] = std::clamp(xb_[i], 0.0, 1.0);
    }
    return x;
  }

  std::vector<double> row_duals() const {
    std::vector<double> y(m_);
    // reduced cost of surplus i equals the dual price of row i
    for (int i = 0; i < m_; ++i) y[i] = std::max(0.0, cost_[nf_ + i]);
    return y;
  }

  VarState state(int j) const { return state_[j]; }
  int iterations() const { return iterations_; }

 private:
  int pick_entering(bool bland) const {
    int best = -1;
    double best_violation = kOptTol;
    for (int j = 0; j < ncol_; ++j) {
      if (state_[j] == VarState::Basic) continue;
      const double d = cost_[j];
      const double violation = state_[j] == VarState::AtLower ? -d : d;
      if (violation > best_violation) {
        if (bland) return j;
        best_violation = violation;
        best = j;
      }
    }
    return best;
  }

  void apply_step(int jin, double dir, double t) {
    if (t == 0.0) return;
    for (int i = 0; i < m_; ++i) {
      const double w = t_[static_cast<size_t>(i) * ncol_ + jin];
      if (w != 0.0) xb_[i] -= w * dir * t;
    }
  }

  void pivot(int r, int jin, double dir, double t, bool leaving_at_upper) {
    double* prow = t_.data() + static_cast<size_t>(r) * ncol_;
    const double inv = 1.0 / prow[jin];
    for (int j = 0; j < ncol_; ++j) prow[j] *= inv;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      double* row = t_.data() + static_cast<size_t>(i) * ncol_;
      const double f = row[jin];
      if (f == 0.0) continue;
      for (int j = 0; j < ncol_; ++j) row[j] -= f * prow[j];
      row[jin] = 0.0;
    }
    const double fc = cost_[jin];
    if (fc != 0.0) {
      for (int j = 0; j < ncol_; ++j) cost_[j] -= fc * prow[j];
      cost_[jin] = 0.0;
    }
    const int leaving = basis_[r];
    state_[leaving] = leaving_at_upper ? VarState::AtUpper : VarState::AtLower;
    basis_[r] = jin;
    state_[jin] = VarState::Basic;
    xb_[r] = (dir > 0 ? 0.0 : 1.0) + dir * t;
  }

  int m_, nf_, ncol_;
  std::vector<double> t_;
  std::vector<double> cost_;
  std::vector<int> basis_;
  std::vector<VarState> state_;
  std::vector<double> xb_;
  int iterations_ = 0;
};

}  // namespace

void LpProblem::check() const {
  if (num_vars < 0) throw std::invalid_argument("lp: negative variable count");
  if (!fixings.empty() && static_cast<int>(fixings.size()) != num_vars) {
    throw std::invalid_argument("lp: fixings size mismatch");
  }
  for (auto f : fixings) {
    if (f != -1 && f != 0 && f != 1) throw std::invalid_argument("lp: bad fixing value");
  }
  for (const auto& row : rows) {
    if (row.empty()) throw std::invalid_argument("lp: empty row");
    for (int j : row) {
      if (j < 0 || j >= num_vars) throw std::invalid_argument("lp: row index out of range");
    }
  }
}

LpSolution solve_lp(const LpProblem& p, const Deadline& deadline) {
  p.check();
  LpSolution sol;
  sol.primal.assign(p.num_vars, 0.0);
  sol.duals.assign(p.rows.size(), 0.0);
  sol.reduced_costs.assign(p.num_vars, 1.0);

  const bool has_fixings = !p.fixings.empty();
  auto fix_of = [&](int j) -> int { return has_fixings ? p.fixings[j] : -1; };

  double fixed_obj = 0.0;
  std::vector<int> col_of(p.num_vars, -1);
  std::vector<int> var_of;
  for (int j = 0; j < p.num_vars; ++j) {
    if (fix_of(j) == -1) {
      col_of[j] = static_cast<int>(var_of.size());
      var_of.push_back(j);
    } else if (fix_of(j) == 1) {
      sol.primal[j] = 1.0;
      fixed_obj += 1.0;
    }
  }

  // residual rows: drop rows satisfied by a fix-to-1, drop fixed-to-0 members
  std::vector<std::vector<int>> res_rows;
  std::vector<int> orig_of_res;
  for (size_t r = 0; r < p.rows.size(); ++r) {
    bool satisfied = false;
    std::vector<int> members;
    for (int j : p.rows[r]) {
      if (fix_of(j) == 1) {
        satisfied = true;
        break;
      }
      if (fix_of(j) == -1) members.push_back(col_of[j]);
    }
    if (satisfied) continue;
    if (members.empty()) {
      sol.status = LpStatus::Infeasible;
      return sol;
    }
    res_rows.push_back(std::move(members));
    orig_of_res.push_back(static_cast<int>(r));
  }

  const int nf = static_cast<int>(var_of.size());
  if (res_rows.empty()) {
    sol.objective = fixed_obj;
    return sol;
  }

  Tableau tab(res_rows, nf);
  tab.solve(deadline);
  sol.iterations = tab.iterations();

  const auto x = tab.structural_values();
  const auto y = tab.row_duals();
  double res_obj = 0.0;
  for (int c = 0; c < nf; ++c) {
    sol.primal[var_of[c]] = x[c];
    res_obj += x[c];
  }
  for (size_t r = 0; r < res_rows.size(); ++r) sol.duals[orig_of_res[r]] = y[r];
  for (size_t r = 0; r < p.rows.size(); ++r) {
    const double yr = sol.duals[r];
    if (yr == 0.0) continue;
    for (int j : p.rows[r]) sol.reduced_costs[j] -= yr;
  }
  sol.objective = res_obj + fixed_obj;

  // internal verification: feasibility and strong duality
  for (const auto& row : res_rows) {
    double act = 0.0;
    for (int c : row) act += x[c];
    if (act < 1.0 - kFeasTol) {
      throw std::runtime_error("simplex: primal infeasible result (activity " +
                               std::to_string(act) + ")");
    }
  }
  double dual_obj = 0.0;
  for (double yr : y) dual_obj += yr;
  for (int c = 0; c < nf; ++c) {
    const double rc = sol.reduced_costs[var_of[c]];
    if (tab.state(c) == VarState::AtUpper && rc < 0.0) dual_obj += rc;
  }
  if (std::abs(dual_obj - res_obj) > kGapTol * (1.0 + std::abs(res_obj))) {
    throw std::runtime_error("simplex: duality gap " + std::to_string(dual_obj - res_obj));
  }
  return sol;
}

std::string dump_lp(const LpProblem& p) {
  std::ostringstream os;
  os << "min sum of " << p.num_vars << " binary-relaxed vars\n";
  for (size_t r = 0; r < p.rows.size(); ++r) {
    os << "r" << r << ":";
    for (int j : p.rows[r]) os << " x" << j;
    os << " >= 1\n";
  }
  if (!p.fixings.empty()) {
    os << "fixings:";
    for (int j = 0; j < p.num_vars; ++j) {
      if (p.fixings[j] != -1) os << " x" << j << "=" << static_cast<int>(p.fixings[j]);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace mhc
