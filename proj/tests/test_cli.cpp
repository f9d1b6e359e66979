#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string cli() {
  const char* path = std::getenv("MHC_CLI");
  REQUIRE_MESSAGE(path != nullptr, "MHC_CLI must point at the built binary");
  return path;
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& cmd) {
  const fs::path tmp = fs::temp_directory_path() / "mhc_cli_out.txt";
  const std::string full = cmd + " > " + tmp.string() + " 2>/dev/null";
  const int rc = std::system(full.c_str());
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WEXITSTATUS(rc), ss.str()};
}

fs::path write_file(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream out(p);
  out << content;
  return p;
}

const std::string kQ1 =
    "graph 6 7\n"
    "e u1 u2\ne u1 u5\ne u2 u3\ne u2 u5\ne u3 u4\ne u3 u5\ne u5 u6\n";

}  // namespace

TEST_CASE("gen produces a parseable graph deterministically") {
  const auto a = run(cli() + " gen --class mesh2d --dims 4x4");
  CHECK(a.exit_code == 0);
  CHECK(a.out.rfind("graph 16 24", 0) == 0);
  const auto b = run(cli() + " gen --class random --n 20 --eta 0.2 --seed 9");
  const auto c = run(cli() + " gen --class random --n 20 --eta 0.2 --seed 9");
  CHECK(b.exit_code == 0);
  CHECK(b.out == c.out);  // byte identical per seed
}

TEST_CASE("solve on the q1 fixture finds objective 2") {
  const auto q1 = write_file("cli_q1.graph", kQ1);
  const auto res = run(cli() + " solve --algo exact " + q1.string());
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("status Optimal") != std::string::npos);
  CHECK(res.out.find("objective 2") != std::string::npos);
  // two vertex names on the cover line
  std::istringstream in(res.out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("cover", 0) == 0) {
      std::istringstream ls(line);
      std::string tok;
      int names = -1;  // skip the tag
      while (ls >> tok) ++names;
      CHECK(names == 2);
    }
  }
}

TEST_CASE("gen | solve pipeline equals the oracle") {
  const auto piped = run(cli() + " gen --class mesh2d --dims 4x4 | " + cli() +
                         " solve --algo exact -");
  REQUIRE(piped.exit_code == 0);
  const auto oracle = run(cli() + " gen --class mesh2d --dims 4x4 | " + cli() +
                          " solve --algo oracle -");
  REQUIRE(oracle.exit_code == 0);
  auto objective_of = [](const std::string& text) {
    const auto pos = text.find("objective ");
    return text.substr(pos, text.find('\n', pos) - pos);
  };
  CHECK(objective_of(piped.out) == objective_of(oracle.out));
}

TEST_CASE("solve emits csv and jsonl formats") {
  const auto q1 = write_file("cli_q1.graph", kQ1);
  const auto csv = run(cli() + " solve --algo gr1 --format csv " + q1.string());
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.rfind("instance_id,", 0) == 0);
  const auto jsonl = run(cli() + " solve --algo gr1 --format jsonl " + q1.string());
  CHECK(jsonl.exit_code == 0);
  CHECK(jsonl.out.find("\"objective\":2") != std::string::npos);
}

TEST_CASE("verify accepts solver output and rejects tampering") {
  const auto q1 = write_file("cli_q1.graph", kQ1);
  const auto sol = run(cli() + " solve --algo gr1 " + q1.string());
  const auto sol_file = write_file("cli_q1.sol", sol.out);
  const auto ok = run(cli() + " verify " + q1.string() + " " + sol_file.string());
  CHECK(ok.exit_code == 0);
  CHECK(ok.out == "valid\n");

  const auto bad_file = write_file("cli_q1_bad.sol", "objective 1\ncover u6\n");
  const auto bad = run(cli() + " verify " + q1.string() + " " + bad_file.string());
  CHECK(bad.exit_code == 3);
  CHECK(bad.out == "invalid\n");
}

TEST_CASE("match and plan on the worked fixture") {
  const auto q1 = write_file("cli_q1.graph", kQ1);
  const auto matches = run(cli() + " match --mode structural " + q1.string() + " " +
                           q1.string());
  CHECK(matches.exit_code == 0);
  // ids follow first appearance in the file: u1 u2 u5 u3 u4 u6
  CHECK(matches.out == "u1=u1 u2=u2 u5=u5 u3=u3 u4=u4 u6=u6\n");

  const auto plan = run(cli() + " plan " + q1.string());
  CHECK(plan.exit_code == 0);
  CHECK(plan.out.rfind("cover", 0) == 0);
  CHECK(plan.out.find(" u5 top") != std::string::npos);
  CHECK(plan.out.find("plan 2 ") != std::string::npos);
}

TEST_CASE("exit codes: usage 1, parse error 2") {
  CHECK(run(cli() + " solve --algo nonsense /dev/null").exit_code == 1);
  CHECK(run(cli() + " no-such-command").exit_code == 1);
  const auto broken = write_file("cli_broken.graph", "graph 2 5\ne 0 1\n");
  CHECK(run(cli() + " solve " + broken.string()).exit_code == 2);
  CHECK(run(cli() + " solve /does/not/exist.graph").exit_code == 2);
}

TEST_CASE("bench, profile and hist round-trip") {
  const auto manifest = write_file("cli_manifest.txt",
                                   "class=random n=10 eta=0.3 seed=1\n"
                                   "class=mesh2d dims=3x3 seed=0\n");
  const auto results = fs::temp_directory_path() / "cli_results.csv";
  const auto bench = run(cli() + " bench " + manifest.string() + " -o " + results.string() +
                         " --solvers exact,gr1,lslp --time-limit 30");
  REQUIRE(bench.exit_code == 0);
  std::ifstream in(results);
  int lines = 0;
  std::string line;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 1 + 2 * 3);  // header + instances x solvers

  const auto profile = run(cli() + " profile " + results.string());
  CHECK(profile.exit_code == 0);
  CHECK(profile.out.rfind("solver,tau,fraction", 0) == 0);
  CHECK(profile.out.find("exact,1,1") != std::string::npos);

  const auto hist = run(cli() + " hist " + results.string() + " --buckets 0,0.5,30");
  CHECK(hist.exit_code == 0);
  CHECK(hist.out.rfind("solver,bucket_low,bucket_high,fraction", 0) == 0);
  CHECK(hist.out.find("lslp:best") != std::string::npos);
}
