#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "mhc/lp.hpp"
#include "mhc/rng.hpp"
#include "mhc/solvers.hpp"

namespace mhc {

namespace internal {
HubCoverSolution exact_branch_and_bound(const IpModel& m, const SolverConfig& cfg,
                                        const std::vector<std::int8_t>* base_fixings);
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct ColumnPool {
  std::vector<char> in_pool;   // per variable
  double lp_objective = 0.0;
};

// LP-dual column selection: keep every column with reduced cost at most
// delta, then repair rows left without a pool member by adding, per row,
// the member with the largest dual-weighted coverage of still-open rows.
ColumnPool build_pool(const IpModel& m, double delta, const Deadline& deadline) {
  LpProblem p;
  p.num_vars = m.num_vars();
  p.rows = m.rows;
  LpSolution lp = solve_lp(p, deadline);

  ColumnPool pool;
  pool.lp_objective = lp.objective;
  pool.in_pool.assign(p.num_vars, 0);
  for (int j = 0; j < p.num_vars; ++j) {
    if (lp.reduced_costs[j] <= delta) pool.in_pool[j] = 1;
  }

  std::vector<char> open(m.rows.size(), 0);
  int open_count = 0;
  for (size_t r = 0; r < m.rows.size(); ++r) {
    bool covered = false;
    for (int j : m.rows[r]) {
      if (pool.in_pool[j]) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      open[r] = 1;
      ++open_count;
    }
  }
  for (size_t r = 0; r < m.rows.size() && open_count > 0; ++r) {
    if (!open[r]) continue;
    int best = -1;
    double best_weight = -1.0;
    for (int j : m.rows[r]) {
      double w = 0.0;
      for (size_t rr = 0; rr < m.rows.size(); ++rr) {
        if (open[rr] && std::binary_search(m.rows[rr].begin(), m.rows[rr].end(), j)) {
          w += lp.duals[rr];
        }
      }
      if (w > best_weight + 1e-12) {
        best = j;
        best_weight = w;
      }
    }
    pool.in_pool[best] = 1;
    for (size_t rr = 0; rr < m.rows.size(); ++rr) {
      if (open[rr] && std::binary_search(m.rows[rr].begin(), m.rows[rr].end(), best)) {
        open[rr] = 0;
        --open_count;
      }
    }
  }
  return pool;
}

}  // namespace

HubCoverSolution solve_mbh(const IpModel& m, const SolverConfig& cfg) {
  cfg.check();
  const auto start = Clock::now();
  const auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(cfg.time_limit_s));

  HubCoverSolution sol;
  ColumnPool pool;
  try {
    pool = build_pool(m, cfg.mbh_delta, deadline);
  } catch (const LpDeadlineExceeded&) {
    // No restricted problem yet: fall back to the greedy so a feasible
    // cover is still returned under the stated time limit semantics.
    sol = solve_gr1(*m.graph);
    sol.status = SolveStatus::TimeLimit;
    sol.solve_time_s = seconds_since(start);
    sol.best_time_s = sol.solve_time_s;
    return sol;
  }

  std::vector<std::int8_t> fixings(m.num_vars(), 0);
  for (int j = 0; j < m.num_vars(); ++j) {
    if (pool.in_pool[j]) fixings[j] = -1;
  }
  SolverConfig inner = cfg;
  inner.time_limit_s = std::max(1e-3, cfg.time_limit_s - seconds_since(start));
  sol = internal::exact_branch_and_bound(m, inner, &fixings);
  // Restricted optimality is not global optimality.
  if (sol.status == SolveStatus::Optimal) sol.status = SolveStatus::Feasible;
  sol.lower_bound = std::min(pool.lp_objective, static_cast<double>(sol.objective));
  sol.solve_time_s = seconds_since(start);
  sol.best_time_s = sol.solve_time_s;
  return sol;
}

HubCoverSolution solve_lslp(const IpModel& m, const SolverConfig& cfg) {
  cfg.check();
  const auto start = Clock::now();
  const auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(cfg.time_limit_s));
  const auto& rows = m.rows;
  const int n = m.num_vars();

  HubCoverSolution sol;
  ColumnPool pool;
  try {
    pool = build_pool(m, cfg.mbh_delta, deadline);
  } catch (const LpDeadlineExceeded&) {
    sol = solve_gr1(*m.graph);
    sol.status = SolveStatus::TimeLimit;
    sol.solve_time_s = seconds_since(start);
    sol.best_time_s = sol.solve_time_s;
    return sol;
  }

  std::vector<int> pool_cols;
  for (int j = 0; j < n; ++j) {
    if (pool.in_pool[j]) pool_cols.push_back(j);
  }
  std::vector<std::vector<int>> covers(n);  // rows covered, pool columns only
  for (size_t r = 0; r < rows.size(); ++r) {
    for (int j : rows[r]) {
      if (pool.in_pool[j]) covers[j].push_back(static_cast<int>(r));
    }
  }

  Rng rng(cfg.seed);
  std::vector<int> best_cover;
  double best_found_at = 0.0;

  auto strip_redundant = [&](std::vector<char>& chosen) {
    std::vector<int> count(rows.size(), 0);
    for (size_t r = 0; r < rows.size(); ++r) {
      for (int j : rows[r]) count[r] += chosen[j];
    }
    for (int j : pool_cols) {
      if (!chosen[j]) continue;
      bool removable = true;
      for (int r : covers[j]) {
        if (count[r] == 1) {
          removable = false;
          break;
        }
      }
      if (!removable) continue;
      chosen[j] = 0;
      for (int r : covers[j]) --count[r];
    }
  };
  auto size_of = [&](const std::vector<char>& chosen) {
    int s = 0;
    for (int j : pool_cols) s += chosen[j];
    return s;
  };

  for (int iter = 0; iter < cfg.lslp.total_iterations; ++iter) {
    if (Clock::now() > deadline) break;

    // randomized priority construction
    std::vector<char> chosen(n, 0);
    std::vector<char> row_covered(rows.size(), 0);
    int uncovered = static_cast<int>(rows.size());
    while (uncovered > 0) {
      std::vector<std::pair<int, int>> ranked;  // (-priority, column)
      for (int j : pool_cols) {
        if (chosen[j]) continue;
        int prio = 0;
        for (int r : covers[j]) prio += !row_covered[r];
        if (prio > 0) ranked.emplace_back(-prio, j);
      }
      std::sort(ranked.begin(), ranked.end());
      int pick;
      if (cfg.lslp.priority_pct >= 100.0 ||
          rng.next_double() * 100.0 < cfg.lslp.priority_pct) {
        if (cfg.lslp.priority_pct >= 100.0) {
          pick = ranked.front().second;  // fully deterministic pool greedy
        } else {
          // uniform among the columns sharing the best priority
          size_t ties = 1;
          while (ties < ranked.size() && ranked[ties].first == ranked[0].first) ++ties;
          pick = ranked[rng.below(ties)].second;
        }
      } else {
        const auto k = static_cast<size_t>(std::max(
            1.0, std::floor(ranked.size() * cfg.lslp.restriction_pct / 100.0)));
        pick = ranked[rng.below(k)].second;
      }
      chosen[pick] = 1;
      for (int r : covers[pick]) {
        if (!row_covered[r]) {
          row_covered[r] = 1;
          --uncovered;
        }
      }
    }
    strip_redundant(chosen);

    // 1-swap descent with plateau moves: swap a column for one that covers
    // its critical rows, strip redundancy, keep anything not worse.
    std::vector<int> in_cover;
    auto rebuild_in_cover = [&] {
      in_cover.clear();
      for (int j : pool_cols) {
        if (chosen[j]) in_cover.push_back(j);
      }
    };
    rebuild_in_cover();
    std::vector<int> count(rows.size());
    for (int k = 0; k < cfg.lslp.improvement_iterations && in_cover.size() > 1; ++k) {
      std::fill(count.begin(), count.end(), 0);
      for (size_t r = 0; r < rows.size(); ++r) {
        for (int j : rows[r]) count[r] += chosen[j];
      }
      const int out_col = in_cover[rng.below(in_cover.size())];
      std::vector<int> critical;
      for (int r : covers[out_col]) {
        if (count[r] == 1) critical.push_back(r);
      }
      if (critical.empty()) {  // out_col is redundant after all
        chosen[out_col] = 0;
        rebuild_in_cover();
        continue;
      }
      // candidates must cover every critical row; prefer the ones that also
      // relieve other thinly covered rows, which feeds the redundancy pass
      std::vector<std::pair<int, int>> candidates;  // (-relief, column)
      for (int b : pool_cols) {
        if (chosen[b]) continue;
        bool covers_all = true;
        for (int r : critical) {
          if (!std::binary_search(rows[r].begin(), rows[r].end(), b)) {
            covers_all = false;
            break;
          }
        }
        if (!covers_all) continue;
        int relief = 0;
        for (int r : covers[b]) relief += count[r] <= 1;
        candidates.emplace_back(-relief, b);
      }
      if (candidates.empty()) continue;
      std::sort(candidates.begin(), candidates.end());
      size_t ties = 1;
      while (ties < candidates.size() && candidates[ties].first == candidates[0].first) {
        ++ties;
      }
      const int in_col = candidates[rng.below(ties)].second;
      chosen[out_col] = 0;
      chosen[in_col] = 1;
      strip_redundant(chosen);
      rebuild_in_cover();
    }

    const int obj = size_of(chosen);
    if (best_cover.empty() || obj < static_cast<int>(best_cover.size())) {
      best_cover.clear();
      for (int j : pool_cols) {
        if (chosen[j]) best_cover.push_back(j);
      }
      best_found_at = seconds_since(start);
    }
  }

  if (best_cover.empty() && !rows.empty()) {
    // deadline hit before the first construction finished
    sol = solve_gr1(*m.graph);
    sol.status = SolveStatus::TimeLimit;
    sol.solve_time_s = seconds_since(start);
    sol.best_time_s = sol.solve_time_s;
    return sol;
  }
  sol.cover = std::move(best_cover);
  sol.objective = static_cast<int>(sol.cover.size());
  sol.status = SolveStatus::Feasible;
  sol.lower_bound = std::min(pool.lp_objective, static_cast<double>(sol.objective));
  sol.solve_time_s = seconds_since(start);
  sol.best_time_s = best_found_at;
  return sol;
}

}  // namespace mhc
