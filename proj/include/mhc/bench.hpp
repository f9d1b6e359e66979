#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mhc/generators.hpp"
#include "mhc/solution.hpp"
#include "mhc/solvers.hpp"

namespace mhc {

/// One (instance, solver) execution. `objective` is absent when the solver
/// produced no cover (errors, or a time limit with no incumbent).
struct RunRecord {
  std::string instance_id;
  std::string cls;
  int n = 0;
  std::string params;
  std::uint64_t seed = 0;
  std::string solver;
  std::string status;  // Optimal/Feasible/TimeLimit/Infeasible/Error
  std::optional<int> objective;
  double lower_bound = 0.0;
  double time_s = 0.0;
  double best_time_s = 0.0;
};

/// Step function per solver: fraction of instances whose performance ratio
/// is at most tau, evaluated at every distinct ratio.
struct PerformanceProfile {
  std::vector<std::string> solvers;
  std::map<std::string, std::vector<std::pair<double, double>>> points;  // (tau, fraction)
};

inline const std::vector<std::string> kAllSolvers = {"exact", "gr1", "gr2", "mbh", "lslp"};

/// Runs every (instance, solver) pair. Generation happens outside the
/// timed region; solver wall clock comes from the solver itself. Records
/// stream through `append` as they finish (any order); the returned list is
/// sorted by manifest position then solver position, so reruns compare
/// deterministically. `jobs` bounds the worker pool.
std::vector<RunRecord> run_corpus(const std::vector<GenSpec>& specs,
                                  const std::vector<std::string>& solvers,
                                  const SolverConfig& cfg, int jobs = 1,
                                  const std::function<void(const RunRecord&)>& append = {});

/// Runs one solver by name on one instance.
RunRecord run_one(const GenSpec& spec, const std::string& solver, const SolverConfig& cfg);

/// Per-solver objective divided by the best objective on that instance.
/// Solvers without an objective get no entry; returns empty if nobody
/// solved the instance (such instances are excluded from profiles).
std::map<std::string, double> performance_ratio(const std::vector<RunRecord>& instance_records);

PerformanceProfile performance_profile(const std::vector<RunRecord>& records,
                                       const std::vector<std::string>& solvers);

/// Fractions of records per time bucket [edges[i], edges[i+1]) plus a final
/// overflow bucket. Solvers whose best-found time differs from the total
/// (the local search) get a second "<solver>:best" series.
std::map<std::string, std::vector<double>> time_histogram(
    const std::vector<RunRecord>& records, const std::vector<double>& bucket_edges);

// results.csv / profile.csv round trip
void write_records_header(std::ostream& out);
void write_record(std::ostream& out, const RunRecord& r);
std::vector<RunRecord> read_records_csv(std::istream& in);
void write_profile_csv(std::ostream& out, const PerformanceProfile& profile);
void write_histogram_csv(std::ostream& out,
                         const std::map<std::string, std::vector<double>>& hist,
                         const std::vector<double>& bucket_edges);

}  // namespace mhc
