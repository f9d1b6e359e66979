#include "mhc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <chrono>

#include "mhc/ip_model.hpp"
#include "mhc/oracle.hpp"
#include "mhc/rng.hpp"

namespace mhc {

RunRecord run_one(const GenSpec& spec, const std::string& solver, const SolverConfig& cfg) {
  RunRecord rec;
  rec.instance_id = spec.instance_id();
  rec.cls = to_string(spec.cls);
  rec.n = spec.n;
  rec.params = spec.params_string();
  rec.seed = spec.seed;
  rec.solver = solver;
  try {
    const Graph g = generate(spec);
    HubCoverSolution sol;
    if (solver == "exact") {
      sol = solve_exact(build_ip(g), cfg);
    } else if (solver == "gr1") {
      sol = solve_gr1(g);
    } else if (solver == "gr2") {
      sol = solve_gr2(g, Rng::split(cfg.seed, spec.seed));
    } else if (solver == "mbh") {
      sol = solve_mbh(build_ip(g), cfg);
    } else if (solver == "lslp") {
      SolverConfig c = cfg;
      c.seed = Rng::split(cfg.seed, spec.seed);
      sol = solve_lslp(build_ip(g), c);
    } else if (solver == "oracle") {
      const auto t0 = std::chrono::steady_clock::now();
      sol = brute_force_mhc(g);
      sol.solve_time_s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      sol.best_time_s = sol.solve_time_s;
    } else {
      throw std::invalid_argument("unknown solver: " + solver);
    }
    rec.status = to_string(sol.status);
    if (sol.status != SolveStatus::Infeasible) rec.objective = sol.objective;
    rec.lower_bound = sol.lower_bound;
    rec.time_s = sol.solve_time_s;
    rec.best_time_s = sol.best_time_s;
  } catch (const std::exception&) {
    rec.status = "Error";
    rec.time_s = 0.0;
    rec.best_time_s = 0.0;
  }
  return rec;
}

std::vector<RunRecord> run_corpus(const std::vector<GenSpec>& specs,
                                  const std::vector<std::string>& solvers,
                                  const SolverConfig& cfg, int jobs,
                                  const std::function<void(const RunRecord&)>& append) {
  if (solvers.empty()) throw std::invalid_argument("run_corpus: no solvers given");
  cfg.check();
  const size_t total = specs.size() * solvers.size();
  std::vector<RunRecord> records(total);
  std::atomic<size_t> next{0};
  std::mutex append_mu;

  auto worker = [&] {
    while (true) {
      const size_t t = next.fetch_add(1);
      if (t >= total) return;
      const auto& spec = specs[t / solvers.size()];
      const auto& solver = solvers[t % solvers.size()];
      RunRecord rec = run_one(spec, solver, cfg);
      {
        std::lock_guard<std::mutex> lock(append_mu);
        if (append) append(rec);
        records[t] = std::move(rec);
      }
    }
  };

  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(total)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return records;
}

std::map<std::string, double> performance_ratio(const std::vector<RunRecord>& instance_records) {
  std::map<std::string, double> ratios;
  std::optional<int> best;
  for (const auto& r : instance_records) {
    if (r.objective && (!best || *r.objective < *best)) best = *r.objective;
  }
  if (!best) return ratios;
  for (const auto& r : instance_records) {
    if (r.objective) {
      ratios[r.solver] = *best == 0 ? 1.0 : static_cast<double>(*r.objective) / *best;
    }
  }
  return ratios;
}

PerformanceProfile performance_profile(const std::vector<RunRecord>& records,
                                       const std::vector<std::string>& solvers) {
  PerformanceProfile profile;
  profile.solvers = solvers;

  // group by instance, keep instances someone solved
  std::map<std::string, std::vector<RunRecord>> by_instance;
  for (const auto& r : records) by_instance[r.instance_id].push_back(r);

  std::vector<std::map<std::string, double>> instance_ratios;
  std::vector<double> taus{1.0};
  for (const auto& [id, recs] : by_instance) {
    auto ratios = performance_ratio(recs);
    if (ratios.empty()) continue;  // excluded: nobody produced a cover
    for (const auto& [solver, ratio] : ratios) taus.push_back(ratio);
    instance_ratios.push_back(std::move(ratios));
  }
  std::sort(taus.begin(), taus.end());
  taus.erase(std::unique(taus.begin(), taus.end(),
                         [](double a, double b) { return std::abs(a - b) < 1e-12; }),
             taus.end());

  const double denom = static_cast<double>(instance_ratios.size());
  for (const auto& solver : solvers) {
    auto& pts = profile.points[solver];
    for (double tau : taus) {
      int count = 0;
      for (const auto& ratios : instance_ratios) {
        auto it = ratios.find(solver);
        if (it != ratios.end() && it->second <= tau + 1e-12) ++count;
      }
      pts.emplace_back(tau, denom == 0 ? 0.0 : count / denom);
    }
  }
  return profile;
}

std::map<std::string, std::vector<double>> time_histogram(
    const std::vector<RunRecord>& records, const std::vector<double>& bucket_edges) {
  if (bucket_edges.size() < 2) {
    throw std::invalid_argument("time_histogram: need at least two bucket edges");
  }
  for (size_t i = 1; i < bucket_edges.size(); ++i) {
    if (!(bucket_edges[i] > bucket_edges[i - 1])) {
      throw std::invalid_argument("time_histogram: bucket edges must be strictly increasing");
    }
  }
  const size_t buckets = bucket_edges.size();  // size-1 ranges + overflow
  auto bucket_of = [&](double t) -> size_t {
    for (size_t i = 0; i + 1 < bucket_edges.size(); ++i) {
      if (t >= bucket_edges[i] && t < bucket_edges[i + 1]) return i;
    }
    return buckets - 1;
  };

  std::map<std::string, std::vector<int>> counts;
  std::map<std::string, int> totals;
  for (const auto& r : records) {
    auto& c = counts[r.solver];
    if (c.empty()) c.assign(buckets, 0);
    ++c[bucket_of(r.time_s)];
    ++totals[r.solver];
    if (std::abs(r.best_time_s - r.time_s) > 1e-12) {
      const std::string key = r.solver + ":best";
      auto& cb = counts[key];
      if (cb.empty()) cb.assign(buckets, 0);
      ++cb[bucket_of(r.best_time_s)];
      ++totals[key];
    }
  }
  std::map<std::string, std::vector<double>> hist;
  for (const auto& [solver, c] : counts) {
    auto& h = hist[solver];
    h.resize(buckets);
    for (size_t i = 0; i < buckets; ++i) {
      h[i] = static_cast<double>(c[i]) / totals[solver];
    }
  }
  return hist;
}

namespace {

std::string csv_double(double v) {
  std::ostringstream os;
  os.precision(9);
  os << v;
  return os.str();
}

}  // namespace

void write_records_header(std::ostream& out) {
  out << "instance_id,class,n,params,seed,solver,status,objective,lower_bound,"
         "time_s,best_time_s\n";
}

void write_record(std::ostream& out, const RunRecord& r) {
  out << r.instance_id << ',' << r.cls << ',' << r.n << ',' << r.params << ',' << r.seed
      << ',' << r.solver << ',' << r.status << ','
      << (r.objective ? std::to_string(*r.objective) : std::string()) << ','
      << csv_double(r.lower_bound) << ',' << csv_double(r.time_s) << ','
      << csv_double(r.best_time_s) << '\n';
}

std::vector<RunRecord> read_records_csv(std::istream& in) {
  std::vector<RunRecord> records;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      if (line.rfind("instance_id,", 0) == 0) continue;
    }
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    while (fields.size() < 11) fields.emplace_back();
    RunRecord r;
    r.instance_id = fields[0];
    r.cls = fields[1];
    r.n = fields[2].empty() ? 0 : std::stoi(fields[2]);
    r.params = fields[3];
    r.seed = fields[4].empty() ? 0 : std::stoull(fields[4]);
    r.solver = fields[5];
    r.status = fields[6];
    if (!fields[7].empty()) r.objective = std::stoi(fields[7]);
    r.lower_bound = fields[8].empty() ? 0.0 : std::stod(fields[8]);
    r.time_s = fields[9].empty() ? 0.0 : std::stod(fields[9]);
    r.best_time_s = fields[10].empty() ? 0.0 : std::stod(fields[10]);
    records.push_back(std::move(r));
  }
  return records;
}

void write_profile_csv(std::ostream& out, const PerformanceProfile& profile) {
  out << "solver,tau,fraction\n";
  for (const auto& solver : profile.solvers) {
    auto it = profile.points.find(solver);
    if (it == profile.points.end()) continue;
    for (const auto& [tau, fraction] : it->second) {
      out << solver << ',' << csv_double(tau) << ',' << csv_double(fraction) << '\n';
    }
  }
}

void write_histogram_csv(std::ostream& out,
                         const std::map<std::string, std::vector<double>>& hist,
                         const std::vector<double>& bucket_edges) {
  out << "solver,bucket_low,bucket_high,fraction\n";
  for (const auto& [solver, fractions] : hist) {
    for (size_t i = 0; i < fractions.size(); ++i) {
      const double lo = i + 1 < bucket_edges.size() ? bucket_edges[i] : bucket_edges.back();
      const std::string hi = i + 1 < bucket_edges.size() ? csv_double(bucket_edges[i + 1])
                                                         : std::string("inf");
      out << solver << ',' << csv_double(lo) << ',' << hi << ',' << csv_double(fractions[i])
          << '\n';
    }
  }
}

}  // namespace mhc
