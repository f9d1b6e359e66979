// Command line front end: generation, solving, matching, planning and the
// benchmark harness around the hub cover toolkit.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "mhc/bench.hpp"
#include "mhc/cover.hpp"
#include "mhc/generators.hpp"
#include "mhc/graph_io.hpp"
#include "mhc/ip_model.hpp"
#include "mhc/matcher.hpp"
#include "mhc/oracle.hpp"
#include "mhc/rng.hpp"
#include "mhc/solvers.hpp"

namespace {

using mhc::Graph;

Graph load_graph(const std::string& path) {
  if (path == "-") return mhc::parse_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  return mhc::parse_graph(in);
}

std::unique_ptr<std::ostream> open_output(const std::string& path, std::ostream*& out) {
  if (path.empty() || path == "-") {
    out = &std::cout;
    return nullptr;
  }
  auto file = std::make_unique<std::ofstream>(path);
  if (!*file) throw std::invalid_argument("cannot open output file: " + path);
  out = file.get();
  return file;
}

std::vector<int> parse_dims(const std::string& s) {
  std::vector<int> dims;
  std::istringstream in(s);
  std::string part;
  while (std::getline(in, part, 'x')) dims.push_back(std::stoi(part));
  return dims;
}

mhc::HubCoverSolution dispatch_solver(const Graph& g, const std::string& algo,
                                      const mhc::SolverConfig& cfg, int oracle_limit) {
  if (algo == "exact") return mhc::solve_exact(mhc::build_ip(g), cfg);
  if (algo == "gr1") return mhc::solve_gr1(g);
  if (algo == "gr2") return mhc::solve_gr2(g, cfg.seed);
  if (algo == "mbh") return mhc::solve_mbh(mhc::build_ip(g), cfg);
  if (algo == "lslp") return mhc::solve_lslp(mhc::build_ip(g), cfg);
  if (algo == "oracle") return mhc::brute_force_mhc(g, oracle_limit);
  throw std::invalid_argument("unknown algorithm: " + algo);
}

void print_solution_text(std::ostream& out, const Graph& g,
                         const mhc::HubCoverSolution& sol) {
  out << "status " << mhc::to_string(sol.status) << "\n";
  out << "objective " << sol.objective << "\n";
  out << "cover";
  for (int v : sol.cover) out << " " << g.vertex_name(v);
  out << "\n";
  out << "lower_bound " << sol.lower_bound << "\n";
  out << "time_s " << sol.solve_time_s << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"minimum hub cover toolkit"};
  app.require_subcommand(1);

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate a benchmark graph");
  std::string gen_class;
  mhc::GenSpec spec;
  std::string gen_dims, gen_out;
  gen->add_option("--class", gen_class,
                  "random | bounded_valence | irregular_bounded_valence | mesh2d | "
                  "mesh3d | mesh4d | irregular_mesh | scale_free")
      ->required();
  gen->add_option("--n", spec.n, "vertex count (non-mesh classes)");
  gen->add_option("--eta", spec.eta, "edge probability (random)");
  gen->add_option("--valence", spec.valence, "degree (bounded valence classes)");
  gen->add_option("--rewire", spec.rewire, "rewired edge fraction (irregular valence)");
  gen->add_option("--dims", gen_dims, "mesh side lengths, e.g. 4x4x4");
  gen->add_option("--rho", spec.rho, "added edges per vertex (irregular mesh)");
  gen->add_option("--alpha", spec.alpha, "power-law steepness (scale free)");
  gen->add_option("--beta", spec.beta, "credit scale (scale free)");
  gen->add_option("--seed", spec.seed, "generator seed");
  gen->add_option("-o,--output", gen_out, "output file (default stdout)");
  gen->callback([&] {
    spec.cls = mhc::gen_class_from_string(gen_class);
    if (!gen_dims.empty()) spec.dims = parse_dims(gen_dims);
    if (!spec.dims.empty()) {
      long long n = 1;
      for (int d : spec.dims) n *= d;
      spec.n = static_cast<int>(n);
    }
    const Graph g = mhc::generate(spec);
    std::ostream* out = nullptr;
    auto holder = open_output(gen_out, out);
    mhc::emit_graph(g, *out);
  });

  // ---- solve ----
  auto* solve = app.add_subcommand("solve", "compute a hub cover");
  std::string algo = "exact", solve_input = "-", format = "text";
  int oracle_limit = mhc::kDefaultOracleLimit;
  mhc::SolverConfig solve_cfg;
  solve->add_option("--algo", algo, "exact | gr1 | gr2 | mbh | lslp | oracle")
      ->check(CLI::IsMember({"exact", "gr1", "gr2", "mbh", "lslp", "oracle"}));
  solve->add_option("--time-limit", solve_cfg.time_limit_s, "seconds (default 60)");
  solve->add_option("--seed", solve_cfg.seed, "seed for randomized solvers");
  solve->add_option("--oracle-limit", oracle_limit, "max vertices for --algo oracle");
  solve->add_option("--format", format, "text | csv | jsonl")
      ->check(CLI::IsMember({"text", "csv", "jsonl"}));
  solve->add_option("graph", solve_input, "graph file or - for stdin");
  solve->callback([&] {
    const Graph g = load_graph(solve_input);
    const auto sol = dispatch_solver(g, algo, solve_cfg, oracle_limit);
    if (format == "text") {
      print_solution_text(std::cout, g, sol);
    } else if (format == "csv") {
      mhc::RunRecord rec;
      rec.instance_id = solve_input == "-" ? "stdin" : solve_input;
      rec.cls = "file";
      rec.n = g.num_vertices();
      rec.seed = solve_cfg.seed;
      rec.solver = algo;
      rec.status = mhc::to_string(sol.status);
      rec.objective = sol.objective;
      rec.lower_bound = sol.lower_bound;
      rec.time_s = sol.solve_time_s;
      rec.best_time_s = sol.best_time_s;
      mhc::write_records_header(std::cout);
      mhc::write_record(std::cout, rec);
    } else {
      nlohmann::json j;
      j["status"] = mhc::to_string(sol.status);
      j["objective"] = sol.objective;
      auto names = nlohmann::json::array();
      for (int v : sol.cover) names.push_back(g.vertex_name(v));
      j["cover"] = names;
      j["lower_bound"] = sol.lower_bound;
      j["time_s"] = sol.solve_time_s;
      std::cout << j.dump() << "\n";
    }
  });

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "check a solve output against a graph");
  std::string verify_graph, verify_solution;
  verify->add_option("graph", verify_graph, "graph file")->required();
  verify->add_option("solution", verify_solution, "solve text output")->required();
  verify->callback([&] {
    const Graph g = load_graph(verify_graph);
    std::ifstream in(verify_solution);
    if (!in) throw std::invalid_argument("cannot open solution file: " + verify_solution);
    std::unordered_map<std::string, int> by_name;
    for (int v = 0; v < g.num_vertices(); ++v) by_name[g.vertex_name(v)] = v;
    mhc::HubCoverSolution sol;
    bool have_cover = false;
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string tag;
      ls >> tag;
      if (tag == "cover") {
        std::string name;
        while (ls >> name) {
          auto it = by_name.find(name);
          if (it == by_name.end()) {
            throw std::invalid_argument("cover names unknown vertex: " + name);
          }
          sol.cover.push_back(it->second);
        }
        have_cover = true;
      } else if (tag == "objective") {
        ls >> sol.objective;
      }
    }
    if (!have_cover) throw std::invalid_argument("solution file has no cover line");
    if (mhc::verify_solution(g, sol)) {
      std::cout << "valid\n";
    } else {
      std::cout << "invalid\n";
      throw std::runtime_error("cover failed verification");
    }
  });

  // ---- match ----
  auto* match = app.add_subcommand("match", "enumerate subgraph matches");
  std::string mode_name = "structural", match_query, match_data;
  match->add_option("--mode", mode_name, "structural | label | match")
      ->check(CLI::IsMember({"structural", "label", "match"}));
  match->add_option("query", match_query, "query graph file")->required();
  match->add_option("data", match_data, "data graph file")->required();
  match->callback([&] {
    const Graph q = load_graph(match_query);
    const Graph d = load_graph(match_data);
    const auto mode = mhc::match_mode_from_string(mode_name);
    const auto plan = mhc::choose_plan(q, d, mode);
    const auto matches = mhc::find_solutions(plan, q, d, mhc::build_indices(d), mode);
    for (const auto& m : matches) {
      for (int qv = 0; qv < q.num_vertices(); ++qv) {
        std::cout << (qv ? " " : "") << q.vertex_name(qv) << "=" << d.vertex_name(m[qv]);
      }
      std::cout << "\n";
    }
  });

  // ---- plan ----
  auto* plan_cmd = app.add_subcommand("plan", "choose a hub cover and order it");
  std::string plan_query, plan_data;
  std::string plan_mode = "structural";
  plan_cmd->add_option("query", plan_query, "query graph file")->required();
  plan_cmd->add_option("--data", plan_data, "data graph for selectivity (default: query)");
  plan_cmd->add_option("--mode", plan_mode, "structural | label | match")
      ->check(CLI::IsMember({"structural", "label", "match"}));
  plan_cmd->callback([&] {
    const Graph q = load_graph(plan_query);
    const Graph d = plan_data.empty() ? q : load_graph(plan_data);
    const auto mode = mhc::match_mode_from_string(plan_mode);
    const auto plan = mhc::choose_plan(q, d, mode);
    std::cout << "cover";
    for (int v : plan.cover) std::cout << " " << q.vertex_name(v);
    std::cout << "\n";
    for (size_t i = 0; i < plan.entries.size(); ++i) {
      std::cout << "plan " << i + 1 << " " << q.vertex_name(plan.entries[i].vertex) << " "
                << mhc::to_string(plan.entries[i].mark) << "\n";
    }
  });

  // ---- bench ----
  auto* bench = app.add_subcommand("bench", "run a manifest through the solvers");
  std::string manifest_path, bench_out = "results.csv", solver_list = "exact,gr1,gr2,mbh,lslp";
  int jobs = 1;
  mhc::SolverConfig bench_cfg;
  bench->add_option("manifest", manifest_path, "manifest file")->required();
  bench->add_option("-o,--output", bench_out, "results csv (default results.csv)");
  bench->add_option("--solvers", solver_list, "comma separated solver names");
  bench->add_option("--time-limit", bench_cfg.time_limit_s, "per solve seconds");
  bench->add_option("--seed", bench_cfg.seed, "base seed for randomized solvers");
  bench->add_option("--jobs", jobs, "parallel workers");
  bench->callback([&] {
    std::ifstream in(manifest_path);
    if (!in) throw std::invalid_argument("cannot open manifest: " + manifest_path);
    const auto specs = mhc::parse_manifest(in);
    std::vector<std::string> solvers;
    std::istringstream sl(solver_list);
    std::string name;
    while (std::getline(sl, name, ',')) {
      if (!name.empty()) solvers.push_back(name);
    }
    std::ofstream out(bench_out);
    if (!out) throw std::invalid_argument("cannot open output file: " + bench_out);
    mhc::write_records_header(out);
    mhc::run_corpus(specs, solvers, bench_cfg, jobs, [&](const mhc::RunRecord& rec) {
      mhc::write_record(out, rec);
      out.flush();  // crash-safe append
    });
    std::cerr << "wrote " << specs.size() * solvers.size() << " records to " << bench_out
              << "\n";
  });

  // ---- profile ----
  auto* profile = app.add_subcommand("profile", "performance profile from results.csv");
  std::string profile_in, profile_out;
  profile->add_option("results", profile_in, "results csv")->required();
  profile->add_option("-o,--output", profile_out, "profile csv (default stdout)");
  profile->callback([&] {
    std::ifstream in(profile_in);
    if (!in) throw std::invalid_argument("cannot open results file: " + profile_in);
    const auto records = mhc::read_records_csv(in);
    std::vector<std::string> solvers;
    for (const auto& r : records) {
      if (std::find(solvers.begin(), solvers.end(), r.solver) == solvers.end()) {
        solvers.push_back(r.solver);
      }
    }
    const auto prof = mhc::performance_profile(records, solvers);
    std::ostream* out = nullptr;
    auto holder = open_output(profile_out, out);
    mhc::write_profile_csv(*out, prof);
  });

  // ---- hist ----
  auto* hist = app.add_subcommand("hist", "computation time histogram from results.csv");
  std::string hist_in, hist_out, buckets = "0,0.05,0.25,1,5,30,60";
  hist->add_option("results", hist_in, "results csv")->required();
  hist->add_option("--buckets", buckets, "comma separated bucket edges (seconds)");
  hist->add_option("-o,--output", hist_out, "histogram csv (default stdout)");
  hist->callback([&] {
    std::ifstream in(hist_in);
    if (!in) throw std::invalid_argument("cannot open results file: " + hist_in);
    const auto records = mhc::read_records_csv(in);
    std::vector<double> edges;
    std::istringstream bs(buckets);
    std::string tok;
    while (std::getline(bs, tok, ',')) edges.push_back(std::stod(tok));
    const auto h = mhc::time_histogram(records, edges);
    std::ostream* out = nullptr;
    auto holder = open_output(hist_out, out);
    mhc::write_histogram_csv(*out, h, edges);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
