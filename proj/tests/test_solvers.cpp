#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "fixtures.hpp"
#include "mhc/cover.hpp"
#include "mhc/generators.hpp"
#include "mhc/ip_model.hpp"
#include "mhc/lp.hpp"
#include "mhc/oracle.hpp"
#include "mhc/solvers.hpp"

using namespace mhc;
using namespace mhc::testing;

namespace {

std::vector<GenSpec> small_corpus(int n_lo, int n_hi, int per_class) {
  std::vector<GenSpec> specs;
  std::uint64_t seed = 1;
  for (int k = 0; k < per_class; ++k) {
    const int n = n_lo + (n_hi - n_lo) * k / std::max(1, per_class - 1);
    GenSpec s;
    s.cls = GenClass::Random; s.n = n; s.eta = 0.3; s.seed = seed++;
    specs.push_back(s);
    s = GenSpec{};
    s.cls = GenClass::BoundedValence; s.n = n + (n % 2); s.valence = 3; s.seed = seed++;
    specs.push_back(s);
    s = GenSpec{};
    s.cls = GenClass::IrregularBoundedValence; s.n = n + (n % 2); s.valence = 3;
    s.rewire = 0.2; s.seed = seed++;
    specs.push_back(s);
    s = GenSpec{};
    s.cls = GenClass::ScaleFree; s.n = n; s.alpha = 2.0; s.beta = 8; s.seed = seed++;
    specs.push_back(s);
  }
  GenSpec s;
  s.cls = GenClass::Mesh2D; s.dims = {3, 3}; s.n = 9;
  specs.push_back(s);
  s = GenSpec{};
  s.cls = GenClass::IrregularMesh; s.dims = {3, 3}; s.rho = 0.4; s.seed = seed++; s.n = 9;
  specs.push_back(s);
  return specs;
}

}  // namespace

TEST_CASE("build_ip reproduces the worked q1 model") {
  const Graph g = q1();
  const IpModel m = build_ip(g);
  REQUIRE(m.rows.size() == 4);
  const std::set<std::vector<int>> rows(m.rows.begin(), m.rows.end());
  CHECK(rows.count({0, 1, 4}) == 1);  // {u1,u2,u5}
  CHECK(rows.count({1, 2, 4}) == 1);  // {u2,u3,u5}
  CHECK(rows.count({2, 3}) == 1);     // {u3,u4}
  CHECK(rows.count({4, 5}) == 1);     // {u5,u6}

  // the merged row {u2,u3,u5} stands for edges (u2,u3),(u2,u5),(u3,u5)
  for (size_t r = 0; r < m.rows.size(); ++r) {
    if (m.rows[r] == std::vector<int>{1, 2, 4}) {
      const std::set<Edge> edges(m.row_edges[r].begin(), m.row_edges[r].end());
      CHECK(edges == std::set<Edge>{{1, 2}, {1, 4}, {2, 4}});
    }
  }
}

TEST_CASE("build_ip on triangle-free graphs degenerates to the MVC rows") {
  const Graph g = gen_mesh({3, 4});
  const IpModel m = build_ip(g);
  REQUIRE(is_triangle_free(g));
  CHECK(m.rows.size() == g.edges().size());
  for (size_t r = 0; r < m.rows.size(); ++r) {
    REQUIRE(m.row_edges[r].size() == 1);
    const auto& [s, d] = m.row_edges[r][0];
    CHECK(m.rows[r] == std::vector<int>{s, d});
  }
}

TEST_CASE("build_ip rows never outnumber edges; q1 is strictly smaller") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = gen_random(14, 0.3, seed * 13);
    const IpModel m = build_ip(g);
    CHECK(m.rows.size() <= g.edges().size());
    size_t mapped = 0;
    for (const auto& edges : m.row_edges) mapped += edges.size();
    CHECK(mapped == g.edges().size());
    for (const auto& row : m.rows) CHECK(row.size() >= 2);
  }
  CHECK(build_ip(q1()).rows.size() < q1().num_edges());
}

TEST_CASE("solve_exact: worked example and edge cases") {
  const auto sol = solve_exact(build_ip(q1()));
  CHECK(sol.objective == 2);
  CHECK(sol.status == SolveStatus::Optimal);
  CHECK(is_hub_cover(q1(), sol.cover));
  CHECK(sol.lower_bound <= sol.objective);

  const auto empty = solve_exact(build_ip(edgeless(5)));
  CHECK(empty.objective == 0);
  CHECK(empty.status == SolveStatus::Optimal);
  CHECK(empty.cover.empty());
}

TEST_CASE("solve_exact equals the oracle on a mixed corpus") {
  for (const auto& spec : small_corpus(6, 12, 4)) {
    const Graph g = generate(spec);
    const auto exact = solve_exact(build_ip(g));
    const auto oracle = brute_force_mhc(g);
    INFO("instance ", spec.instance_id());
    CHECK(exact.status == SolveStatus::Optimal);
    CHECK(exact.objective == oracle.objective);
    CHECK(verify_solution(g, exact));
  }
}

TEST_CASE("solve_gr1 trace on q1: u5 first, objective 2") {
  const Graph g = q1();
  const auto sol = solve_gr1(g);
  CHECK(sol.objective == 2);
  CHECK(sol.status == SolveStatus::Feasible);
  CHECK(is_hub_cover(g, sol.cover));
  // u5 hub-covers 6 edges, strictly more than anyone else, so it is picked
  // first; the remainder is edge (u3,u4), covered by u3 (id order).
  CHECK(sol.cover == std::vector<int>{2, 4});
}

TEST_CASE("solve_gr1 on stars and triangles") {
  CHECK(solve_gr1(star(7)).cover == std::vector<int>{0});
  CHECK(solve_gr1(complete(3)).objective == 1);
  CHECK(solve_gr1(edgeless(3)).objective == 0);
}

TEST_CASE("solve_gr2 always returns valid covers; q1 sweep stays in range") {
  // Each pick removes every edge touching its endpoints, so later picks
  // never reuse a vertex: the cover size is exactly twice the pick count.
  // On q1 the only single pick that covers everything is (u3,u5), so the
  // sweep realizes exactly the even values 2, 4 and 6.
  const Graph g = q1();
  std::set<int> objectives;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto sol = solve_gr2(g, seed);
    CHECK(is_hub_cover(g, sol.cover));
    CHECK(sol.objective % 2 == 0);
    objectives.insert(sol.objective);
  }
  CHECK(objectives == std::set<int>{2, 4, 6});

  const auto single = solve_gr2(Graph(2, {{0, 1}}), 1);
  CHECK(single.objective == 2);  // both endpoints, versus the optimal 1
}

TEST_CASE("solve_gr2 respects the 2-approximation bound on triangle-free graphs") {
  std::vector<Graph> graphs{gen_mesh({3, 3}), cycle(8), path(9), star(6)};
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    graphs.push_back(gen_bounded_valence(12, 3, seed));
  }
  for (const auto& g : graphs) {
    if (!is_triangle_free(g)) continue;
    const int optimum = brute_force_mhc(g).objective;
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const auto sol = solve_gr2(g, seed);
      CHECK(is_hub_cover(g, sol.cover));
      CHECK(sol.objective <= 2 * optimum);
    }
  }
}

TEST_CASE("solve_mbh matches the optimum on q1 and stays feasible elsewhere") {
  const auto sol = solve_mbh(build_ip(q1()));
  CHECK(sol.objective == 2);
  CHECK(is_hub_cover(q1(), sol.cover));
  CHECK(sol.status == SolveStatus::Feasible);

  for (const auto& spec : small_corpus(8, 12, 3)) {
    const Graph g = generate(spec);
    const auto mbh = solve_mbh(build_ip(g));
    INFO("instance ", spec.instance_id());
    CHECK(verify_solution(g, mbh));
    CHECK(std::ceil(mbh.lower_bound - 1e-6) <= mbh.objective);
  }
}

TEST_CASE("solve_mbh on the triangle-free 4x4 mesh lands within optimum+1") {
  const Graph g = gen_mesh({4, 4});
  const auto exact = solve_exact(build_ip(g));
  const auto mbh = solve_mbh(build_ip(g));
  CHECK(mbh.objective >= exact.objective);
  CHECK(mbh.objective <= exact.objective + 1);
}

TEST_CASE("solve_lslp finds the q1 optimum and always verifies") {
  SolverConfig cfg;
  cfg.lslp.total_iterations = 100;
  const auto sol = solve_lslp(build_ip(q1()), cfg);
  CHECK(sol.objective == 2);
  CHECK(sol.status == SolveStatus::Feasible);
  CHECK(is_hub_cover(q1(), sol.cover));
  CHECK(sol.best_time_s <= sol.solve_time_s + 1e-12);

  for (const auto& spec : small_corpus(8, 12, 2)) {
    const Graph g = generate(spec);
    const auto lslp = solve_lslp(build_ip(g), cfg);
    INFO("instance ", spec.instance_id());
    CHECK(verify_solution(g, lslp));
  }
}

TEST_CASE("solve_lslp with priority 100 is a deterministic pool greedy") {
  SolverConfig cfg;
  cfg.lslp.priority_pct = 100.0;
  cfg.lslp.total_iterations = 5;
  cfg.lslp.improvement_iterations = 0;
  cfg.seed = 1;
  const auto a = solve_lslp(build_ip(q1()), cfg);
  cfg.seed = 999;  // the seed no longer matters
  const auto b = solve_lslp(build_ip(q1()), cfg);
  CHECK(a.cover == b.cover);
}

TEST_CASE("five solvers bracket each other per the relaxation sandwich") {
  for (const auto& spec : small_corpus(8, 14, 3)) {
    const Graph g = generate(spec);
    const IpModel m = build_ip(g);
    LpProblem p;
    p.num_vars = g.num_vertices();
    p.rows = m.rows;
    const double lp = solve_lp(p).objective;
    const auto exact = solve_exact(m);
    INFO("instance ", spec.instance_id());
    CHECK(std::ceil(lp - 1e-6) <= exact.objective);
    for (const auto& heur :
         {solve_gr1(g), solve_gr2(g, 7), solve_mbh(m), solve_lslp(m)}) {
      CHECK(exact.objective <= heur.objective);
      CHECK(verify_solution(g, heur));
    }
  }
}

TEST_CASE("verify_solution rejects tampered covers") {
  const Graph g = q1();
  auto sol = solve_exact(build_ip(g));
  CHECK(verify_solution(g, sol));
  // removing any vertex from a minimum cover uncovers something
  HubCoverSolution tampered = sol;
  tampered.cover.pop_back();
  tampered.objective = static_cast<int>(tampered.cover.size());
  CHECK_FALSE(verify_solution(g, tampered));
  // objective out of sync is also rejected
  HubCoverSolution out_of_sync = sol;
  out_of_sync.objective += 1;
  CHECK_FALSE(verify_solution(g, out_of_sync));

  HubCoverSolution empty;
  CHECK(verify_solution(edgeless(3), empty));
}

TEST_CASE("time limit yields TimeLimit with a usable incumbent") {
  GenSpec s;
  s.cls = GenClass::Random;
  s.n = 300;
  s.eta = 0.10;
  s.seed = 424242;
  const Graph g = generate(s);
  SolverConfig cfg;
  cfg.time_limit_s = 1.0;
  const auto sol = solve_exact(build_ip(g), cfg);
  CHECK(sol.status == SolveStatus::TimeLimit);
  CHECK(is_hub_cover(g, sol.cover));
  CHECK(sol.lower_bound <= sol.objective);
  CHECK(sol.solve_time_s < 5.0);  // respects the limit with slack
}

TEST_CASE("node limit caps the search") {
  const Graph g = gen_random(40, 0.15, 3);
  SolverConfig cfg;
  cfg.node_limit = 1;
  const auto sol = solve_exact(build_ip(g), cfg);
  CHECK(is_hub_cover(g, sol.cover));
  CHECK((sol.status == SolveStatus::Optimal || sol.status == SolveStatus::TimeLimit));
}

TEST_CASE("solver config validation") {
  SolverConfig cfg;
  cfg.time_limit_s = 0.0;
  CHECK_THROWS_AS(cfg.check(), std::invalid_argument);
  cfg = SolverConfig{};
  cfg.lslp.priority_pct = 0.0;
  CHECK_THROWS_AS(cfg.check(), std::invalid_argument);
  cfg = SolverConfig{};
  cfg.lslp.restriction_pct = 101.0;
  CHECK_THROWS_AS(cfg.check(), std::invalid_argument);
}
