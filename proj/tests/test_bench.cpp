#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "mhc/bench.hpp"

using namespace mhc;

namespace {

RunRecord rec(const std::string& instance, const std::string& solver, int objective,
              double time_s, double best_time_s = -1.0, const std::string& status = "Feasible") {
  RunRecord r;
  r.instance_id = instance;
  r.cls = "random";
  r.n = 10;
  r.params = "eta=0.3";
  r.seed = 1;
  r.solver = solver;
  r.status = status;
  r.objective = objective;
  r.lower_bound = 1.0;
  r.time_s = time_s;
  r.best_time_s = best_time_s < 0 ? time_s : best_time_s;
  return r;
}

// Frozen three-instance fixture; every expected number below is hand
// computed from r = objective / best objective on the instance.
std::vector<RunRecord> fixture() {
  return {
      rec("i1", "exact", 3, 0.010), rec("i1", "gr1", 4, 0.001), rec("i1", "gr2", 6, 0.002),
      rec("i2", "exact", 2, 0.030), rec("i2", "gr1", 2, 0.001), rec("i2", "gr2", 4, 0.100),
      rec("i3", "exact", 5, 0.200), rec("i3", "gr1", 5, 0.003), rec("i3", "gr2", 5, 0.060),
  };
}

}  // namespace

TEST_CASE("performance_ratio formula on the frozen fixture") {
  const auto all = fixture();
  const std::vector<RunRecord> i1(all.begin(), all.begin() + 3);
  const auto ratios = performance_ratio(i1);
  REQUIRE(ratios.size() == 3);
  CHECK(ratios.at("exact") == doctest::Approx(1.0));
  CHECK(ratios.at("gr1") == doctest::Approx(4.0 / 3.0));
  CHECK(ratios.at("gr2") == doctest::Approx(2.0));
}

TEST_CASE("performance_ratio edge cases") {
  CHECK(performance_ratio({rec("a", "exact", 7, 0.1)}).at("exact") == doctest::Approx(1.0));

  auto equal = std::vector<RunRecord>{rec("a", "x", 3, 0.1), rec("a", "y", 3, 0.1)};
  for (const auto& [solver, ratio] : performance_ratio(equal)) {
    CHECK(ratio == doctest::Approx(1.0));
  }

  RunRecord unsolved = rec("a", "exact", 0, 0.1, -1.0, "TimeLimit");
  unsolved.objective.reset();
  CHECK(performance_ratio({unsolved}).empty());
}

TEST_CASE("performance_profile matches hand-computed fractions") {
  const auto profile = performance_profile(fixture(), {"exact", "gr1", "gr2"});
  // distinct ratios: 1, 4/3, 2
  const auto& exact = profile.points.at("exact");
  REQUIRE(exact.size() == 3);
  CHECK(exact[0] == std::pair{1.0, 1.0});

  const auto& gr1 = profile.points.at("gr1");
  CHECK(gr1[0].second == doctest::Approx(2.0 / 3.0));
  CHECK(gr1[1].first == doctest::Approx(4.0 / 3.0));
  CHECK(gr1[1].second == doctest::Approx(1.0));
  CHECK(gr1[2].second == doctest::Approx(1.0));

  const auto& gr2 = profile.points.at("gr2");
  CHECK(gr2[0].second == doctest::Approx(1.0 / 3.0));
  CHECK(gr2[1].second == doctest::Approx(1.0 / 3.0));
  CHECK(gr2[2].first == doctest::Approx(2.0));
  CHECK(gr2[2].second == doctest::Approx(1.0));

  // profiles are monotone step functions bounded by 1
  for (const auto& [solver, pts] : profile.points) {
    for (size_t i = 1; i < pts.size(); ++i) {
      CHECK(pts[i].first > pts[i - 1].first);
      CHECK(pts[i].second >= pts[i - 1].second);
      CHECK(pts[i].second <= 1.0);
    }
  }
}

TEST_CASE("profile excludes instances nobody solved and caps at solve share") {
  auto records = fixture();
  RunRecord lost1 = rec("dead", "exact", 0, 0.1, -1.0, "TimeLimit");
  lost1.objective.reset();
  RunRecord lost2 = rec("dead", "gr1", 0, 0.1, -1.0, "Error");
  lost2.objective.reset();
  records.push_back(lost1);
  records.push_back(lost2);
  // one extra instance solved only by exact
  records.push_back(rec("i4", "exact", 2, 0.01));

  const auto profile = performance_profile(records, {"exact", "gr1"});
  // 4 included instances: i1..i3 plus i4; "dead" is excluded
  const auto& gr1 = profile.points.at("gr1");
  CHECK(gr1.back().second == doctest::Approx(3.0 / 4.0));  // share with any solution
  const auto& exact = profile.points.at("exact");
  CHECK(exact.back().second == doctest::Approx(1.0));
}

TEST_CASE("time_histogram fractions and the local-search double report") {
  std::vector<RunRecord> records{
      rec("i1", "gr1", 3, 0.01), rec("i2", "gr1", 3, 0.02), rec("i3", "gr1", 3, 0.30),
      rec("i1", "lslp", 3, 0.20, 0.02), rec("i2", "lslp", 3, 0.40, 0.30),
  };
  const std::vector<double> edges{0.0, 0.05, 0.25};
  const auto hist = time_histogram(records, edges);

  const auto& gr1 = hist.at("gr1");
  REQUIRE(gr1.size() == 3);  // [0,0.05), [0.05,0.25), overflow
  CHECK(gr1[0] == doctest::Approx(2.0 / 3.0));
  CHECK(gr1[1] == doctest::Approx(0.0));
  CHECK(gr1[2] == doctest::Approx(1.0 / 3.0));

  const auto& total = hist.at("lslp");
  CHECK(total[1] == doctest::Approx(0.5));  // 0.20
  CHECK(total[2] == doctest::Approx(0.5));  // 0.40 overflows

  const auto& best = hist.at("lslp:best");
  CHECK(best[0] == doctest::Approx(0.5));  // 0.02
  CHECK(best[2] == doctest::Approx(0.5));  // 0.30 overflows

  // fractions sum to one per series
  for (const auto& [solver, h] : hist) {
    double sum = 0.0;
    for (double f : h) sum += f;
    CHECK(sum == doctest::Approx(1.0));
  }

  CHECK_THROWS_AS(time_histogram(records, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(time_histogram(records, {1.0, 0.5}), std::invalid_argument);
}

TEST_CASE("records round-trip through csv") {
  std::ostringstream out;
  write_records_header(out);
  for (const auto& r : fixture()) write_record(out, r);
  RunRecord none = rec("i9", "exact", 0, 0.5, -1.0, "TimeLimit");
  none.objective.reset();
  write_record(out, none);

  std::istringstream in(out.str());
  const auto back = read_records_csv(in);
  REQUIRE(back.size() == 10);
  CHECK(back[0].instance_id == "i1");
  CHECK(back[0].solver == "exact");
  CHECK(back[0].objective == 3);
  CHECK(back[0].time_s == doctest::Approx(0.010));
  CHECK_FALSE(back[9].objective.has_value());
  CHECK(back[9].status == "TimeLimit");
}

TEST_CASE("run_corpus executes the full cartesian product deterministically") {
  std::vector<GenSpec> specs;
  GenSpec s;
  s.cls = GenClass::Random; s.n = 10; s.eta = 0.3; s.seed = 5;
  specs.push_back(s);
  s = GenSpec{};
  s.cls = GenClass::Mesh2D; s.dims = {3, 3}; s.n = 9;
  specs.push_back(s);
  s = GenSpec{};
  s.cls = GenClass::ScaleFree; s.n = 12; s.alpha = 2.0; s.beta = 6; s.seed = 2;
  specs.push_back(s);

  SolverConfig cfg;
  cfg.time_limit_s = 30.0;
  const std::vector<std::string> solvers{"exact", "gr1", "gr2"};

  int appended = 0;
  const auto records = run_corpus(specs, solvers, cfg, 2,
                                  [&](const RunRecord&) { ++appended; });
  REQUIRE(records.size() == 9);
  CHECK(appended == 9);
  for (const auto& r : records) {
    CHECK(r.objective.has_value());
    CHECK((r.status == "Optimal" || r.status == "Feasible"));
  }

  // rerun reproduces every objective (and the row order is canonical)
  const auto again = run_corpus(specs, solvers, cfg, 1);
  REQUIRE(again.size() == records.size());
  for (size_t i = 0; i < records.size(); ++i) {
    CHECK(records[i].instance_id == again[i].instance_id);
    CHECK(records[i].solver == again[i].solver);
    CHECK(records[i].objective == again[i].objective);
  }

  CHECK_THROWS_AS(run_corpus(specs, {}, cfg), std::invalid_argument);
}

TEST_CASE("oracle runs through the harness too") {
  GenSpec s;
  s.cls = GenClass::Random; s.n = 10; s.eta = 0.25; s.seed = 77;
  const auto exact = run_one(s, "exact", SolverConfig{});
  const auto oracle = run_one(s, "oracle", SolverConfig{});
  REQUIRE(exact.objective.has_value());
  REQUIRE(oracle.objective.has_value());
  CHECK(*exact.objective == *oracle.objective);
  const auto bogus = run_one(s, "does-not-exist", SolverConfig{});
  CHECK(bogus.status == "Error");
  CHECK_FALSE(bogus.objective.has_value());
}
