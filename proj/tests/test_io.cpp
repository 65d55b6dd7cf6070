#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include <conlab/conlab.hpp>

using namespace conlab;
using nlohmann::json;

namespace {

std::filesystem::path scratch_dir() {
  const auto dir =
      std::filesystem::temp_directory_path() / "conlab_io_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("graph json round trips exactly") {
  const OrientedNetwork net = noncooperative_demo_network();
  const auto path = scratch_dir() / "demo_roundtrip.json";
  write_graph_json(path.string(), net);
  const OrientedNetwork back = read_graph_json(path.string());
  REQUIRE(back.vertex_count() == net.vertex_count());
  REQUIRE(back.directed() == net.directed());
  REQUIRE(back.edge_count() == net.edge_count());
  CHECK((back.coupling_matrix() - net.coupling_matrix()).norm() == 0.0);
}

TEST_CASE("graph json uses one-based endpoints") {
  const auto path = scratch_dir() / "p3.json";
  write_graph_json(path.string(), path_graph(3));
  const json j = json::parse(slurp_file(path));
  CHECK(j["n"] == 3);
  CHECK(j["directed"] == false);
  REQUIRE(j["edges"].size() == 2);
  CHECK(j["edges"][0][0] == 1);
  CHECK(j["edges"][0][1] == 2);
  CHECK(j["edges"][0][2] == 1.0);
}

TEST_CASE("graph json parser applies defaults and validates") {
  const OrientedNetwork net = parse_graph_json(
      R"({"n": 3, "edges": [[1, 2], [2, 3, 0.5]]})");
  CHECK_FALSE(net.directed());
  CHECK(net.edges()[0].conductance == 1.0);
  CHECK(net.edges()[1].conductance == 0.5);

  CHECK_THROWS_AS(parse_graph_json("not json"), IoError);
  CHECK_THROWS_AS(parse_graph_json(R"({"edges": []})"), IoError);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "edges": [[1]]})"), IoError);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "edges": [[0, 1]]})"), IoError);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "edges": [[1, 3]]})"), IoError);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": "two", "edges": []})"), IoError);
}

TEST_CASE("report json carries every field with nulls for absent measures") {
  const SpectralReport rep = analyze_network(path_graph(4));
  const json j = json::parse(report_json_text(rep));
  CHECK(j["alpha"].is_number());
  CHECK(j["convergent"] == true);
  CHECK(j["margin"].is_number());
  CHECK(j["rho"].is_number());
  CHECK(j["kappa"].is_number());
  REQUIRE(j["bounds"].is_object());
  CHECK(j["bounds"]["alpha_lower"].is_number());
  CHECK(j["bounds"]["rho_upper"].is_number());
  CHECK(j["bounds"]["kappa_lower"].is_number());
  CHECK(j["bounds"]["kappa_upper"].is_number());
  CHECK(j["bounds"]["alon_boppana"].is_null());
  REQUIRE(j["eigenvalues"].is_array());
  REQUIRE(j["eigenvalues"].size() == 4);
  CHECK(j["eigenvalues"][0].contains("re"));
  CHECK(j["eigenvalues"][0].contains("im"));

  const json jd = json::parse(report_json_text(
      analyze_network(noncooperative_demo_network())));
  CHECK(jd["rho"].is_null());
  CHECK(jd["kappa"].is_null());
  CHECK(jd["bounds"].is_null());
}

TEST_CASE("scenario parser fills defaults and resolves relative paths") {
  const Scenario sc = parse_scenario_json(
      R"({"graph_file": "g.json", "sigma": 0.2})", "/some/base");
  CHECK(sc.graph_file == "/some/base/g.json");
  CHECK(sc.gain == 1.0);
  CHECK(sc.T == -1.0);
  CHECK(sc.dt == -1.0);
  CHECK(sc.n_paths == 1);
  CHECK(sc.seed == 0);
  CHECK(sc.schedule == "constant");
  CHECK(sc.record_points == 161);
  CHECK(sc.x0.empty());

  const Scenario abs = parse_scenario_json(
      R"({"graph_file": "/abs/g.json"})", "/some/base");
  CHECK(abs.graph_file == "/abs/g.json");
}

TEST_CASE("scenario parser rejects malformed input") {
  CHECK_THROWS_AS(parse_scenario_json(R"({})", "."), IoError);
  CHECK_THROWS_AS(
      parse_scenario_json(R"({"graph_file": "g.json", "sigma": -1})", "."),
      IoError);
  CHECK_THROWS_AS(
      parse_scenario_json(R"({"graph_file": "g.json", "n_paths": 0})", "."),
      IoError);
  CHECK_THROWS_AS(
      parse_scenario_json(
          R"({"graph_file": "g.json", "schedule": "sometimes"})", "."),
      IoError);
  // Switching needs a second graph and a positive dwell.
  CHECK_THROWS_AS(
      parse_scenario_json(
          R"({"graph_file": "g.json", "schedule": "switching"})", "."),
      IoError);
  CHECK_THROWS_AS(
      parse_scenario_json(
          R"({"graph_file": "a.json", "graph_file_b": "b.json",
              "schedule": "switching", "switch_period": 0})",
          "."),
      IoError);
}

TEST_CASE("scenario accepts the full key set") {
  const Scenario sc = parse_scenario_json(
      R"({"graph_file": "a.json", "graph_file_b": "b.json",
          "schedule": "switching", "switch_period": 0.5, "sigma": 0.1,
          "gain": 2.0, "T": 12.0, "dt": 0.001, "n_paths": 64, "seed": 9,
          "x0": [1.0, -1.0, 0.5], "record_points": 33})",
      "/base");
  CHECK(sc.graph_file == "/base/a.json");
  CHECK(sc.graph_file_b == "/base/b.json");
  CHECK(sc.switch_period == 0.5);
  CHECK(sc.gain == 2.0);
  CHECK(sc.T == 12.0);
  CHECK(sc.n_paths == 64);
  CHECK(sc.seed == 9);
  REQUIRE(sc.x0.size() == 3);
  CHECK(sc.x0[1] == -1.0);
  CHECK(sc.record_points == 33);
}

TEST_CASE("trajectory csv holds one row per frame") {
  const CouplingSchedule sch =
      CouplingSchedule::constant(path_graph(3).coupling_matrix());
  const Trajectory traj = integrate_deterministic(
      sch, Eigen::VectorXd::LinSpaced(3, -1.0, 1.0), 1.0, 1e-2, 5);
  const auto path = scratch_dir() / "traj.csv";
  write_trajectory_csv(path.string(), traj);
  std::istringstream in(slurp_file(path));
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "time,off_consensus_norm");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(line.find(',') != std::string::npos);
  }
  CHECK(rows == traj.times.size());
}

TEST_CASE("aggregate csv pairs ensemble and prediction columns") {
  CouplingSchedule sch =
      CouplingSchedule::constant(complete_graph(3).coupling_matrix());
  sch.with_sigma(0.5);
  const Eigen::VectorXd x0 = Eigen::VectorXd::LinSpaced(3, -1.0, 1.0);
  SdeOptions opt;
  opt.record_points = 5;
  const TrajectoryEnsemble ens = integrate_sde(sch, x0, 1.0, 1e-3, 32, 4, opt);
  const MomentTrajectory mt = integrate_moment_odes(
      sch, default_reduction(3).S * x0, 1.0, 1e-3, 5);
  const auto path = scratch_dir() / "agg.csv";
  write_aggregate_csv(path.string(), ens, mt.second_moment);
  std::istringstream in(slurp_file(path));
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "time,mean_sq_dispersion,prediction,standard_error");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == ens.times.size());

  // Missing prediction writes nan but keeps the column.
  write_aggregate_csv(path.string(), ens, Eigen::VectorXd());
  std::istringstream in2(slurp_file(path));
  std::getline(in2, line);
  std::getline(in2, line);
  CHECK(line.find("nan") != std::string::npos);

  CHECK_THROWS_AS(
      write_aggregate_csv(path.string(), ens, Eigen::VectorXd::Zero(2)),
      InvalidArgument);
}

TEST_CASE("table csv writes header and quoted-free rows") {
  const auto path = scratch_dir() / "table.csv";
  write_table_csv(path.string(), {"a", "b"}, {{"1", "x"}, {"2", "y"}});
  CHECK(slurp_file(path) == "a,b\n1,x\n2,y\n");
}

TEST_CASE("io failures raise IoError") {
  CHECK_THROWS_AS(read_graph_json("/nonexistent/graph.json"), IoError);
  CHECK_THROWS_AS(read_scenario_json("/nonexistent/scenario.json"), IoError);
  const OrientedNetwork net = path_graph(3);
  CHECK_THROWS_AS(write_graph_json("/nonexistent/dir/out.json", net), IoError);
}
