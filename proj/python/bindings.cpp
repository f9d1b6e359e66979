#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mhc/bench.hpp"
#include "mhc/cover.hpp"
#include "mhc/generators.hpp"
#include "mhc/graph_io.hpp"
#include "mhc/ip_model.hpp"
#include "mhc/lp.hpp"
#include "mhc/matcher.hpp"
#include "mhc/oracle.hpp"
#include "mhc/solvers.hpp"

namespace py = pybind11;
using namespace mhc;

namespace {

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges,
                 const std::optional<std::vector<std::string>>& labels) {
  std::vector<Edge> es(edges.begin(), edges.end());
  if (labels) return Graph(n, std::move(es), *labels);
  return Graph(n, std::move(es));
}

SolverConfig config_from(double time_limit, std::uint64_t seed) {
  SolverConfig cfg;
  cfg.time_limit_s = time_limit;
  cfg.seed = seed;
  return cfg;
}

HubCoverSolution solve_named(const Graph& g, const std::string& algo, double time_limit,
                             std::uint64_t seed, int oracle_limit) {
  const SolverConfig cfg = config_from(time_limit, seed);
  if (algo == "exact") return solve_exact(build_ip(g), cfg);
  if (algo == "gr1") return solve_gr1(g);
  if (algo == "gr2") return solve_gr2(g, seed);
  if (algo == "mbh") return solve_mbh(build_ip(g), cfg);
  if (algo == "lslp") return solve_lslp(build_ip(g), cfg);
  if (algo == "oracle") return brute_force_mhc(g, oracle_limit);
  throw std::invalid_argument("unknown algorithm: " + algo);
}

}  // namespace

PYBIND11_MODULE(hubcover, m) {
  m.doc() = "Minimum hub cover toolkit: solvers, generators, graphlet matching";

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"),
           py::arg("labels") = std::nullopt)
      .def_property_readonly("n", &Graph::num_vertices)
      .def_property_readonly("m", &Graph::num_edges)
      .def_property_readonly("edges", &Graph::edges)
      .def("neighbors", &Graph::neighbors, py::arg("v"))
      .def("degree", &Graph::degree, py::arg("v"))
      .def("has_edge", &Graph::has_edge, py::arg("a"), py::arg("b"))
      .def("label", [](const Graph& g, int v) {
        g.check_vertex(v);
        return g.labeled() ? g.label_text(g.label_id(v)) : std::string();
      })
      .def("vertex_name", &Graph::vertex_name, py::arg("v"))
      .def("to_text", [](const Graph& g) { return emit_graph_string(g); })
      .def_static("from_text", &parse_graph_string, py::arg("text"))
      .def("__repr__", [](const Graph& g) {
        std::ostringstream os;
        os << "Graph(n=" << g.num_vertices() << ", m=" << g.num_edges() << ")";
        return os.str();
      });

  py::class_<HubCoverSolution>(m, "Solution")
      .def_readonly("cover", &HubCoverSolution::cover)
      .def_readonly("objective", &HubCoverSolution::objective)
      .def_property_readonly(
          "status", [](const HubCoverSolution& s) { return to_string(s.status); })
      .def_readonly("solve_time_s", &HubCoverSolution::solve_time_s)
      .def_readonly("lower_bound", &HubCoverSolution::lower_bound)
      .def_readonly("best_time_s", &HubCoverSolution::best_time_s)
      .def("__repr__", [](const HubCoverSolution& s) {
        std::ostringstream os;
        os << "Solution(objective=" << s.objective << ", status=" << to_string(s.status)
           << ")";
        return os.str();
      });

  // coverage semantics
  m.def("hub_covered_edges", &hub_covered_edges, py::arg("g"), py::arg("v"));
  m.def("is_hub_cover", &is_hub_cover, py::arg("g"), py::arg("cover"));
  m.def("is_vertex_cover", &is_vertex_cover, py::arg("g"), py::arg("cover"));
  m.def("is_triangle_free", &is_triangle_free, py::arg("g"));

  // oracles
  m.def("brute_force_mhc", &brute_force_mhc, py::arg("g"),
        py::arg("limit") = kDefaultOracleLimit);
  m.def("brute_force_all_mhc", &brute_force_all_mhc, py::arg("g"),
        py::arg("limit") = kDefaultOracleLimit);
  m.def("brute_force_mvc", &brute_force_mvc, py::arg("g"),
        py::arg("limit") = kDefaultOracleLimit);

  // generators
  m.def("gen_random", &gen_random, py::arg("n"), py::arg("eta"), py::arg("seed"));
  m.def("gen_bounded_valence", &gen_bounded_valence, py::arg("n"), py::arg("valence"),
        py::arg("seed"));
  m.def("gen_irregular_bounded_valence", &gen_irregular_bounded_valence, py::arg("n"),
        py::arg("valence"), py::arg("rewire"), py::arg("seed"));
  m.def("gen_mesh", &gen_mesh, py::arg("dims"));
  m.def("gen_irregular_mesh", &gen_irregular_mesh, py::arg("dims"), py::arg("rho"),
        py::arg("seed"));
  m.def("gen_scale_free", &gen_scale_free, py::arg("n"), py::arg("alpha"), py::arg("beta"),
        py::arg("seed"));

  // models and solvers
  m.def("build_ip_rows", [](const Graph& g) { return build_ip(g).rows; }, py::arg("g"));
  m.def(
      "lp_bound",
      [](const Graph& g) {
        const IpModel model = build_ip(g);
        LpProblem p;
        p.num_vars = g.num_vertices();
        p.rows = model.rows;
        return solve_lp(p).objective;
      },
      py::arg("g"), "Optimal value of the covering LP relaxation");
  m.def("solve", &solve_named, py::arg("g"), py::arg("algo") = "exact",
        py::arg("time_limit") = 60.0, py::arg("seed") = 0,
        py::arg("oracle_limit") = kDefaultOracleLimit);
  m.def("verify_solution", &verify_solution, py::arg("g"), py::arg("solution"));

  // matching
  m.def(
      "match",
      [](const Graph& q, const Graph& d, const std::string& mode_name) {
        const MatchMode mode = match_mode_from_string(mode_name);
        const QueryPlan plan = choose_plan(q, d, mode);
        return find_solutions(plan, q, d, build_indices(d), mode);
      },
      py::arg("query"), py::arg("data"), py::arg("mode") = "structural",
      "All matches as vertex maps indexed by query vertex id");
  m.def(
      "brute_force_matches",
      [](const Graph& q, const Graph& d, const std::string& mode_name) {
        return brute_force_matches(q, d, match_mode_from_string(mode_name));
      },
      py::arg("query"), py::arg("data"), py::arg("mode") = "structural");
  m.def(
      "plan",
      [](const Graph& q, const std::optional<Graph>& d, const std::string& mode_name) {
        const Graph& data = d ? *d : q;
        const QueryPlan p = choose_plan(q, data, match_mode_from_string(mode_name));
        std::vector<std::pair<int, std::string>> entries;
        for (const auto& e : p.entries) entries.emplace_back(e.vertex, to_string(e.mark));
        return py::make_tuple(p.cover, entries);
      },
      py::arg("query"), py::arg("data") = std::nullopt, py::arg("mode") = "structural",
      "Chosen minimum hub cover and its ordered (vertex, mark) plan");
}
