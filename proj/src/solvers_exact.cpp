#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "mhc/cover.hpp"
#include "mhc/lp.hpp"
#include "mhc/solvers.hpp"

namespace mhc {

namespace internal {

// Shared by solve_exact and the restricted solves of the LP heuristics.
// base_fixings (fix-to-0 entries) restrict the allowed column set.
HubCoverSolution exact_branch_and_bound(const IpModel& m, const SolverConfig& cfg,
                                        const std::vector<std::int8_t>* base_fixings);

}  // namespace internal

namespace {

using Clock = std::chrono::steady_clock;
constexpr double kIntTol = 1e-6;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int integral_bound(double lp_objective) {
  return static_cast<int>(std::ceil(lp_objective - kIntTol));
}

// Drops rows that are supersets of another row; covering the subset row
// covers the superset automatically.
std::vector<std::vector<int>> dominance_filter(const std::vector<std::vector<int>>& rows) {
  std::vector<int> order(rows.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return rows[a].size() < rows[b].size();
  });
  std::vector<std::vector<int>> kept;
  for (int idx : order) {
    const auto& row = rows[idx];
    bool dominated = false;
    for (const auto& small : kept) {
      if (small.size() >= row.size()) break;
      if (std::includes(row.begin(), row.end(), small.begin(), small.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(row);
  }
  return kept;
}

struct Propagation {
  bool infeasible = false;
  std::vector<std::int8_t> fix;
};

// Fixes the single remaining member of any otherwise-unsatisfiable row.
Propagation unit_propagate(const std::vector<std::vector<int>>& rows,
                           std::vector<std::int8_t> fix) {
  Propagation out;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& row : rows) {
      int free_count = 0;
      int last_free = -1;
      bool satisfied = false;
      for (int j : row) {
        if (fix[j] == 1) {
          satisfied = true;
          break;
        }
        if (fix[j] == -1) {
          ++free_count;
          last_free = j;
        }
      }
      if (satisfied) continue;
      if (free_count == 0) {
        out.infeasible = true;
        out.fix = std::move(fix);
        return out;
      }
      if (free_count == 1) {
        fix[last_free] = 1;
        changed = true;
      }
    }
  }
  out.fix = std::move(fix);
  return out;
}

class Search {
 public:
  Search(const IpModel& m, const SolverConfig& cfg,
         const std::vector<std::int8_t>* base_fixings)
      : graph_(*m.graph), cfg_(cfg), n_(m.num_vars()), start_(Clock::now()) {
    deadline_ = start_ + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(cfg.time_limit_s));
    rows_ = dominance_filter(m.rows);
    lp_.num_vars = n_;
    lp_.rows = rows_;
    root_fix_.assign(n_, -1);
    if (base_fixings) root_fix_ = *base_fixings;
  }

  HubCoverSolution run() {
    HubCoverSolution sol;
    seed_incumbent();

    bool aborted = false;
    double min_open_bound = 0.0;
    bool any_open = false;

    auto root = make_node(root_fix_);
    if (root.state == NodeState::Infeasible) {
      if (!incumbent_valid_) {
        sol.status = SolveStatus::Infeasible;
        sol.solve_time_s = seconds_since(start_);
        return sol;
      }
      root.state = NodeState::Pruned;  // fixings force the incumbent itself
    }
    if (root.state == NodeState::Aborted) {
      sol.cover = incumbent_;
      sol.objective = incumbent_obj_;
      sol.status = SolveStatus::TimeLimit;
      sol.lower_bound = rows_.empty() ? 0.0 : 1.0;
      sol.solve_time_s = seconds_since(start_);
      sol.best_time_s = incumbent_time_;
      return sol;
    }
    root_bound_ = root.state == NodeState::Pruned ? static_cast<double>(incumbent_obj_)
                                                  : root.bound;
    if (root.state == NodeState::Open) stack_.push_back(std::move(root));

    while (!stack_.empty()) {
      if (Clock::now() > deadline_ || (cfg_.node_limit && nodes_ >= *cfg_.node_limit)) {
        aborted = true;
        break;
      }
      Node node = std::move(stack_.back());
      stack_.pop_back();
      if (integral_bound(node.bound) >= incumbent_obj_) continue;  // pruned
      ++nodes_;

      // branch on the most fractional variable
      int bv = -1;
      double best_frac = 2.0;
      for (int j = 0; j < n_; ++j) {
        if (node.fix[j] != -1) continue;
        const double x = node.primal[j];
        if (x < kIntTol || x > 1.0 - kIntTol) continue;
        const double frac = std::abs(x - 0.5);
        if (frac < best_frac - 1e-12) {
          best_frac = frac;
          bv = j;
        }
      }
      if (bv < 0) {
        try_update_incumbent_from(node.primal, node.fix);
        continue;
      }

      Node children[2];
      int child_count = 0;
      for (int val : {1, 0}) {
        auto fix = node.fix;
        fix[bv] = static_cast<std::int8_t>(val);
        Node child = make_node(std::move(fix));
        if (child.state == NodeState::Aborted) {
          aborted = true;
          break;
        }
        if (child.state == NodeState::Open) children[child_count++] = std::move(child);
      }
      if (aborted) {
        // the unexplored subtree below `node` still counts toward the bound
        if (!any_open || node.bound < min_open_bound) {
          min_open_bound = node.bound;
          any_open = true;
        }
        break;
      }
      if (child_count == 2 && children[0].bound <= children[1].bound) {
        std::swap(children[0], children[1]);  // better bound popped first
      }
      for (int i = 0; i < child_count; ++i) stack_.push_back(std::move(children[i]));
    }

    for (const auto& nd : stack_) {
      if (!any_open || nd.bound < min_open_bound) {
        min_open_bound = nd.bound;
        any_open = true;
      }
    }

    sol.cover = incumbent_;
    sol.objective = incumbent_obj_;
    if (aborted || !stack_.empty()) {
      sol.status = SolveStatus::TimeLimit;
      sol.lower_bound = any_open ? std::max(root_bound_, min_open_bound) : root_bound_;
      sol.lower_bound = std::min(sol.lower_bound, static_cast<double>(sol.objective));
    } else {
      sol.status = SolveStatus::Optimal;
      sol.lower_bound = sol.objective;
    }
    sol.solve_time_s = seconds_since(start_);
    sol.best_time_s = incumbent_time_;
    return sol;
  }

 private:
  enum class NodeState { Open, Pruned, Infeasible, IntegralLeaf, Aborted };

  struct Node {
    std::vector<std::int8_t> fix;
    std::vector<double> primal;
    double bound = 0.0;
    NodeState state = NodeState::Open;
  };

  // Feasible incumbent: the degree greedy when the model is unrestricted,
  // otherwise fixed-to-1 vars plus a row-coverage greedy over the free
  // ones. Redundancy elimination trims either.
  void seed_incumbent() {
    std::vector<char> chosen(n_, 0);
    const bool restricted =
        std::any_of(root_fix_.begin(), root_fix_.end(), [](auto f) { return f != -1; });
    if (!restricted) {
      for (int v : solve_gr1(graph_).cover) chosen[v] = 1;
      drop_redundant(chosen);
      incumbent_.clear();
      for (int j = 0; j < n_; ++j) {
        if (chosen[j]) incumbent_.push_back(j);
      }
      incumbent_obj_ = static_cast<int>(incumbent_.size());
      incumbent_valid_ = true;
      incumbent_time_ = seconds_since(start_);
      return;
    }
    for (int j = 0; j < n_; ++j) {
      if (root_fix_[j] == 1) chosen[j] = 1;
    }
    std::vector<char> covered(rows_.size(), 0);
    int uncovered = 0;
    for (size_t r = 0; r < rows_.size(); ++r) {
      for (int j : rows_[r]) {
        if (chosen[j]) {
          covered[r] = 1;
          break;
        }
      }
      if (!covered[r]) ++uncovered;
    }
    while (uncovered > 0) {
      int best = -1, best_gain = 0;
      for (int j = 0; j < n_; ++j) {
        if (chosen[j] || root_fix_[j] == 0) continue;
        int gain = 0;
        for (size_t r = 0; r < rows_.size(); ++r) {
          if (!covered[r] && std::binary_search(rows_[r].begin(), rows_[r].end(), j)) ++gain;
        }
        if (gain > best_gain || (gain == best_gain && gain > 0 && best >= 0 && j < best)) {
          best = j;
          best_gain = gain;
        }
      }
      if (best < 0) {
        incumbent_valid_ = false;  // fixings make the model infeasible
        incumbent_obj_ = n_ + 1;
        return;
      }
      chosen[best] = 1;
      for (size_t r = 0; r < rows_.size(); ++r) {
        if (!covered[r] && std::binary_search(rows_[r].begin(), rows_[r].end(), best)) {
          covered[r] = 1;
          --uncovered;
        }
      }
    }
    drop_redundant(chosen);
    incumbent_.clear();
    for (int j = 0; j < n_; ++j) {
      if (chosen[j]) incumbent_.push_back(j);
    }
    incumbent_obj_ = static_cast<int>(incumbent_.size());
    incumbent_valid_ = true;
    incumbent_time_ = seconds_since(start_);
  }

  void drop_redundant(std::vector<char>& chosen) const {
    std::vector<int> cover_count(rows_.size(), 0);
    for (size_t r = 0; r < rows_.size(); ++r) {
      for (int j : rows_[r]) cover_count[r] += chosen[j];
    }
    for (int j = 0; j < n_; ++j) {
      if (!chosen[j] || root_fix_[j] == 1) continue;
      bool removable = true;
      for (size_t r = 0; r < rows_.size(); ++r) {
        if (cover_count[r] == 1 &&
            std::binary_search(rows_[r].begin(), rows_[r].end(), j)) {
          removable = false;
          break;
        }
      }
      if (!removable) continue;
      chosen[j] = 0;
      for (size_t r = 0; r < rows_.size(); ++r) {
        if (std::binary_search(rows_[r].begin(), rows_[r].end(), j)) --cover_count[r];
      }
    }
  }

  void accept_candidate(const std::vector<char>& chosen) {
    std::vector<int> cover;
    for (int j = 0; j < n_; ++j) {
      if (chosen[j]) cover.push_back(j);
    }
    if (static_cast<int>(cover.size()) < incumbent_obj_) {
      incumbent_ = std::move(cover);
      incumbent_obj_ = static_cast<int>(incumbent_.size());
      incumbent_valid_ = true;
      incumbent_time_ = seconds_since(start_);
    }
  }

  void try_update_incumbent_from(const std::vector<double>& primal,
                                 const std::vector<std::int8_t>& fix) {
    // round, repair, then strip redundancy
    std::vector<char> chosen(n_, 0);
    for (int j = 0; j < n_; ++j) {
      chosen[j] = fix[j] == 1 || (fix[j] == -1 && primal[j] >= 0.5) ? 1 : 0;
    }
    std::vector<char> covered(rows_.size(), 0);
    std::vector<int> uncovered_rows;
    for (size_t r = 0; r < rows_.size(); ++r) {
      for (int j : rows_[r]) {
        if (chosen[j]) {
          covered[r] = 1;
          break;
        }
      }
      if (!covered[r]) uncovered_rows.push_back(static_cast<int>(r));
    }
    for (int r : uncovered_rows) {
      if (covered[r]) continue;
      int best = -1;
      double best_weight = -1.0;
      for (int j : rows_[r]) {
        if (fix[j] == 0) continue;
        const double w = primal[j];
        if (w > best_weight + 1e-12 || (w > best_weight - 1e-12 && (best < 0 || j < best))) {
          best = j;
          best_weight = w;
        }
      }
      if (best < 0) return;  // row unsatisfiable under fixings
      chosen[best] = 1;
      for (size_t rr = 0; rr < rows_.size(); ++rr) {
        if (!covered[rr] && std::binary_search(rows_[rr].begin(), rows_[rr].end(), best)) {
          covered[rr] = 1;
        }
      }
    }
    drop_redundant_with_fix(chosen, fix);
    accept_candidate(chosen);
  }

  void drop_redundant_with_fix(std::vector<char>& chosen,
                               const std::vector<std::int8_t>& fix) const {
    std::vector<int> cover_count(rows_.size(), 0);
    for (size_t r = 0; r < rows_.size(); ++r) {
      for (int j : rows_[r]) cover_count[r] += chosen[j];
    }
    for (int j = 0; j < n_; ++j) {
      if (!chosen[j] || fix[j] == 1) continue;
      bool removable = true;
      for (size_t r = 0; r < rows_.size(); ++r) {
        if (cover_count[r] == 1 &&
            std::binary_search(rows_[r].begin(), rows_[r].end(), j)) {
          removable = false;
          break;
        }
      }
      if (!removable) continue;
      chosen[j] = 0;
      for (size_t r = 0; r < rows_.size(); ++r) {
        if (std::binary_search(rows_[r].begin(), rows_[r].end(), j)) --cover_count[r];
      }
    }
  }

  Node make_node(std::vector<std::int8_t> fix) {
    Node node;
    auto prop = unit_propagate(rows_, std::move(fix));
    if (prop.infeasible) {
      node.state = NodeState::Infeasible;
      return node;
    }
    node.fix = std::move(prop.fix);
    lp_.fixings = node.fix;
    LpSolution lp;
    try {
      lp = solve_lp(lp_, deadline_);
    } catch (const LpDeadlineExceeded&) {
      node.state = NodeState::Aborted;
      return node;
    }
    if (lp.status == LpStatus::Infeasible) {
      node.state = NodeState::Infeasible;
      return node;
    }
    node.bound = lp.objective;
    node.primal = lp.primal;
    if (integral_bound(node.bound) >= incumbent_obj_) {
      node.state = NodeState::Pruned;
      return node;
    }
    try_update_incumbent_from(lp.primal, node.fix);
    bool integral = true;
    for (int j = 0; j < n_ && integral; ++j) {
      if (node.fix[j] == -1 && lp.primal[j] > kIntTol && lp.primal[j] < 1.0 - kIntTol) {
        integral = false;
      }
    }
    if (integral) {
      node.state = NodeState::IntegralLeaf;
      return node;
    }
    // reduced-cost fixing against the incumbent
    for (int j = 0; j < n_; ++j) {
      if (node.fix[j] != -1) continue;
      const double rc = lp.reduced_costs[j];
      if (lp.primal[j] < kIntTol && rc > 0 &&
          integral_bound(node.bound + rc) >= incumbent_obj_) {
        node.fix[j] = 0;
      } else if (lp.primal[j] > 1.0 - kIntTol && rc < 0 &&
                 integral_bound(node.bound - rc) >= incumbent_obj_) {
        node.fix[j] = 1;
      }
    }
    node.state = NodeState::Open;
    return node;
  }

  const Graph& graph_;
  SolverConfig cfg_;
  int n_;
  Clock::time_point start_;
  Clock::time_point deadline_;
  std::vector<std::vector<int>> rows_;
  LpProblem lp_;
  std::vector<std::int8_t> root_fix_;
  std::vector<Node> stack_;
  std::vector<int> incumbent_;
  int incumbent_obj_ = 0;
  bool incumbent_valid_ = false;
  double incumbent_time_ = 0.0;
  double root_bound_ = 0.0;
  long long nodes_ = 0;
};

}  // namespace

namespace internal {

HubCoverSolution exact_branch_and_bound(const IpModel& m, const SolverConfig& cfg,
                                        const std::vector<std::int8_t>* base_fixings) {
  cfg.check();
  if (!m.graph) throw std::invalid_argument("exact solver: model without graph");
  Search search(m, cfg, base_fixings);
  return search.run();
}

}  // namespace internal

HubCoverSolution solve_exact(const IpModel& m, const SolverConfig& cfg) {
  return internal::exact_branch_and_bound(m, cfg, nullptr);
}

}  // namespace mhc
