#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const char* kBin = CONSENSUS_LAB_BIN;

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "conlab_cli_tests";
  fs::create_directories(dir);
  return dir;
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const fs::path out = scratch_dir() / "last_output.txt";
  const std::string cmd =
      std::string(kBin) + " " + args + " > " + out.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  return r;
}

std::string slurp_file(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int count_lines(const std::string& text) {
  int lines = 0;
  for (char c : text) lines += c == '\n';
  return lines;
}

}  // namespace

TEST_CASE("generate, analyze and simulate round trip") {
  const fs::path dir = scratch_dir();
  const fs::path graph = dir / "p8.json";
  const fs::path report = dir / "p8_report.json";

  const RunResult gen =
      run("generate --family path --n 8 --out " + graph.string());
  REQUIRE(gen.exit_code == 0);
  REQUIRE(fs::exists(graph));

  const RunResult ana =
      run("analyze " + graph.string() + " --out " + report.string());
  REQUIRE(ana.exit_code == 0);
  const json j = json::parse(slurp_file(report));
  CHECK(j["convergent"] == true);
  CHECK(j["alpha"].is_number());
  CHECK(j["rho"].is_number());
  CHECK(j["kappa"] == 7.0);
  CHECK(j["eigenvalues"].size() == 8);

  const fs::path scenario = dir / "det.json";
  {
    std::ofstream out(scenario);
    out << R"({"graph_file": "p8.json", "T": 10.0, "dt": 0.001})";
  }
  const fs::path csv = dir / "det.csv";
  const RunResult sim =
      run("simulate " + scenario.string() + " --out " + csv.string());
  REQUIRE(sim.exit_code == 0);
  const std::string body = slurp_file(csv);
  CHECK(body.rfind("time,off_consensus_norm", 0) == 0);
  CHECK(count_lines(body) >= 10);
}

TEST_CASE("stochastic simulate writes the aggregate csv with prediction") {
  const fs::path dir = scratch_dir();
  const fs::path graph = dir / "k4.json";
  REQUIRE(run("generate --family complete --n 4 --out " + graph.string())
              .exit_code == 0);
  const fs::path scenario = dir / "noise.json";
  {
    std::ofstream out(scenario);
    out << R"({"graph_file": "k4.json", "sigma": 0.3, "T": 2.0,
               "dt": 0.001, "n_paths": 200, "seed": 11,
               "record_points": 9})";
  }
  const fs::path csv = dir / "noise.csv";
  const RunResult sim =
      run("simulate " + scenario.string() + " --out " + csv.string());
  REQUIRE(sim.exit_code == 0);
  std::istringstream in(slurp_file(csv));
  std::string header;
  REQUIRE(std::getline(in, header));
  CHECK(header == "time,mean_sq_dispersion,prediction,standard_error");
  std::string row;
  int rows = 0;
  bool has_prediction = true;
  while (std::getline(in, row)) {
    ++rows;
    has_prediction = has_prediction && row.find("nan") == std::string::npos;
  }
  CHECK(rows >= 9);
  CHECK(has_prediction);
}

TEST_CASE("simulate output is reproducible and thread invariant") {
  const fs::path dir = scratch_dir();
  const fs::path graph = dir / "p5.json";
  REQUIRE(run("generate --family path --n 5 --out " + graph.string())
              .exit_code == 0);
  const fs::path scenario = dir / "rep.json";
  {
    std::ofstream out(scenario);
    out << R"({"graph_file": "p5.json", "sigma": 0.2, "T": 1.0,
               "dt": 0.001, "n_paths": 96, "seed": 21,
               "record_points": 7})";
  }
  const fs::path a = dir / "rep_a.csv";
  const fs::path b = dir / "rep_b.csv";
  const fs::path c = dir / "rep_c.csv";
  const fs::path d = dir / "rep_d.csv";
  REQUIRE(run("simulate " + scenario.string() + " --out " + a.string())
              .exit_code == 0);
  REQUIRE(run("simulate " + scenario.string() + " --out " + b.string())
              .exit_code == 0);
  REQUIRE(run("simulate " + scenario.string() + " --threads 3 --out " +
              c.string())
              .exit_code == 0);
  REQUIRE(run("simulate " + scenario.string() + " --seed 99 --out " +
              d.string())
              .exit_code == 0);
  CHECK(slurp_file(a) == slurp_file(b));
  CHECK(slurp_file(a) == slurp_file(c));
  CHECK(slurp_file(a) != slurp_file(d));
}

TEST_CASE("threads env variable is honored when the flag is absent") {
  const fs::path dir = scratch_dir();
  const fs::path graph = dir / "p6.json";
  REQUIRE(run("generate --family path --n 6 --out " + graph.string())
              .exit_code == 0);
  const fs::path scenario = dir / "env.json";
  {
    std::ofstream out(scenario);
    out << R"({"graph_file": "p6.json", "sigma": 0.2, "T": 0.5,
               "dt": 0.001, "n_paths": 80, "seed": 2,
               "record_points": 5})";
  }
  const fs::path csv = dir / "env.csv";
  const std::string cmd = "CONSENSUS_LAB_THREADS=2 " + std::string(kBin) +
                          " simulate " + scenario.string() + " --out " +
                          csv.string() + " > " +
                          (dir / "env_out.txt").string() + " 2>&1";
  REQUIRE(std::system(cmd.c_str()) == 0);
  CHECK(slurp_file(dir / "env_out.txt").find("threads=2") !=
        std::string::npos);
}

TEST_CASE("reproduce-table emits the expected csv schema") {
  const fs::path csv = scratch_dir() / "table.csv";
  const RunResult tab =
      run("reproduce-table --samples 3 --out " + csv.string());
  REQUIRE(tab.exit_code == 0);
  std::istringstream in(slurp_file(csv));
  std::string header;
  REQUIRE(std::getline(in, header));
  CHECK(header ==
        "family,size,degree,samples,alpha_median,alpha_min,alpha_max,"
        "spectral_limit");
  std::vector<std::string> rows;
  std::string row;
  while (std::getline(in, row)) rows.push_back(row);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].rfind("cycle-power,100,4,1,0.0197", 0) == 0);
  CHECK(rows[1].rfind("cycle-power,200,4,1,0.0049", 0) == 0);
  CHECK(rows[2].rfind("cycle-power,400,4,1,0.0012", 0) == 0);
  CHECK(rows[3].rfind("bipartite-perm,100,4,3,", 0) == 0);
}

TEST_CASE("verify subcommand reports success in quick mode") {
  const RunResult ver = run("verify --quick");
  REQUIRE(ver.exit_code == 0);
  CHECK(ver.output.find("checks passed") != std::string::npos);
  CHECK(ver.output.find("FAIL") == std::string::npos);
}

TEST_CASE("bad invocations exit nonzero with a diagnostic") {
  CHECK(run("analyze /nonexistent/graph.json").exit_code != 0);
  CHECK(run("generate --family hexagon").exit_code != 0);
  CHECK(run("generate --family cycle-power --n 10 --d 3").exit_code != 0);
  CHECK(run("frobnicate").exit_code != 0);
  const RunResult bad = run("generate --family cycle-power --n 10 --d 3");
  CHECK(bad.output.find("degree") != std::string::npos);
}
