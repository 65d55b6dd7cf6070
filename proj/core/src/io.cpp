#include "conlab/io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "conlab/errors.hpp"

namespace conlab {
namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("failed while writing " + path);
}

json parse(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw IoError("malformed JSON in " + what);
  return j;
}

std::string number_text(double v) {
  if (std::isnan(v)) return "nan";
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

std::string resolve(const std::string& file, const std::string& base_dir) {
  namespace fs = std::filesystem;
  if (file.empty() || base_dir.empty()) return file;
  fs::path p(file);
  if (p.is_absolute()) return file;
  return (fs::path(base_dir) / p).string();
}

}  // namespace

OrientedNetwork parse_graph_json(const std::string& text) {
  const json j = parse(text, "graph");
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw IoError("graph JSON needs \"n\" and \"edges\"");
  }
  if (!j["n"].is_number_integer()) throw IoError("graph \"n\" must be an integer");
  const int n = j["n"].get<int>();
  const bool directed = j.value("directed", false);
  if (!j["edges"].is_array()) throw IoError("graph \"edges\" must be an array");
  std::vector<Edge> edges;
  edges.reserve(j["edges"].size());
  for (const auto& row : j["edges"]) {
    if (!row.is_array() || row.size() < 2 || row.size() > 3 ||
        !row[0].is_number_integer() || !row[1].is_number_integer()) {
      throw IoError("graph edge rows must be [tail, head] or "
                    "[tail, head, conductance]");
    }
    Edge e;
    e.tail = row[0].get<int>() - 1;
    e.head = row[1].get<int>() - 1;
    e.conductance = row.size() == 3 ? row[2].get<double>() : 1.0;
    if (e.tail < 0 || e.head < 0 || e.tail >= n || e.head >= n) {
      throw IoError("graph edge endpoints must lie in 1..n");
    }
    edges.push_back(e);
  }
  return OrientedNetwork(n, edges, directed);
}

OrientedNetwork read_graph_json(const std::string& path) {
  return parse_graph_json(slurp(path));
}

std::string graph_json_text(const OrientedNetwork& net) {
  json j;
  j["n"] = net.vertex_count();
  j["directed"] = net.directed();
  json edges = json::array();
  for (const Edge& e : net.edges()) {
    edges.push_back(json::array({e.tail + 1, e.head + 1, e.conductance}));
  }
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

void write_graph_json(const std::string& path, const OrientedNetwork& net) {
  spill(path, graph_json_text(net));
}

std::string report_json_text(const SpectralReport& report) {
  json j;
  j["alpha"] = report.alpha;
  j["rho"] = report.rho ? json(*report.rho) : json(nullptr);
  j["kappa"] = report.kappa ? json(*report.kappa) : json(nullptr);
  j["convergent"] = report.convergent;
  j["margin"] = report.margin;
  if (report.bounds) {
    json b;
    b["alpha_lower"] = report.bounds->alpha_lower;
    b["rho_upper"] = report.bounds->rho_upper;
    b["kappa_lower"] = report.bounds->kappa_lower;
    b["kappa_upper"] = report.bounds->kappa_upper;
    b["alon_boppana"] = report.bounds->alon_boppana
                            ? json(*report.bounds->alon_boppana)
                            : json(nullptr);
    b["diameter_bound"] = report.bounds->diameter_bound
                              ? json(*report.bounds->diameter_bound)
                              : json(nullptr);
    j["bounds"] = std::move(b);
  } else {
    j["bounds"] = nullptr;
  }
  json evs = json::array();
  for (const auto& ev : report.eigenvalues) {
    evs.push_back(json{{"re", ev.real()}, {"im", ev.imag()}});
  }
  j["eigenvalues"] = std::move(evs);
  return j.dump(2) + "\n";
}

void write_report_json(const std::string& path, const SpectralReport& report) {
  spill(path, report_json_text(report));
}

Scenario parse_scenario_json(const std::string& text,
                             const std::string& base_dir) {
  const json j = parse(text, "scenario");
  if (!j.is_object() || !j.contains("graph_file")) {
    throw IoError("scenario JSON needs \"graph_file\"");
  }
  Scenario sc;
  sc.graph_file = resolve(j["graph_file"].get<std::string>(), base_dir);
  if (j.contains("graph_file_b")) {
    sc.graph_file_b = resolve(j["graph_file_b"].get<std::string>(), base_dir);
  }
  sc.sigma = j.value("sigma", 0.0);
  sc.gain = j.value("gain", 1.0);
  sc.T = j.value("T", -1.0);
  sc.dt = j.value("dt", -1.0);
  sc.n_paths = j.value("n_paths", 1);
  sc.seed = j.value("seed", std::uint64_t{0});
  sc.schedule = j.value("schedule", std::string("constant"));
  sc.switch_period = j.value("switch_period", 1.0);
  sc.record_points = j.value("record_points", 161);
  if (j.contains("x0")) {
    if (!j["x0"].is_array()) throw IoError("scenario \"x0\" must be an array");
    sc.x0 = j["x0"].get<std::vector<double>>();
  }
  if (sc.schedule != "constant" && sc.schedule != "switching") {
    throw IoError("scenario schedule must be \"constant\" or \"switching\"");
  }
  if (sc.schedule == "switching" && sc.graph_file_b.empty()) {
    throw IoError("switching scenarios need \"graph_file_b\"");
  }
  if (sc.schedule == "switching" && !(sc.switch_period > 0.0)) {
    throw IoError("switch_period must be positive");
  }
  if (sc.sigma < 0.0) throw IoError("sigma must be nonnegative");
  if (sc.n_paths < 1) throw IoError("n_paths must be at least 1");
  return sc;
}

Scenario read_scenario_json(const std::string& path) {
  return parse_scenario_json(
      slurp(path), std::filesystem::path(path).parent_path().string());
}

void write_trajectory_csv(const std::string& path, const Trajectory& traj) {
  std::ostringstream out;
  out << "time,off_consensus_norm\n";
  for (int f = 0; f < traj.times.size(); ++f) {
    out << number_text(traj.times(f)) << ','
        << number_text(traj.off_consensus_norm(f)) << '\n';
  }
  spill(path, out.str());
}

void write_aggregate_csv(const std::string& path,
                         const TrajectoryEnsemble& ensemble,
                         const Eigen::VectorXd& prediction) {
  if (prediction.size() != 0 && prediction.size() != ensemble.times.size()) {
    throw InvalidArgument("write_aggregate_csv: prediction grid mismatch");
  }
  std::ostringstream out;
  out << "time,mean_sq_dispersion,prediction,standard_error\n";
  for (int f = 0; f < ensemble.times.size(); ++f) {
    out << number_text(ensemble.times(f)) << ','
        << number_text(ensemble.mean_sq(f)) << ','
        << (prediction.size() != 0 ? number_text(prediction(f)) : "nan") << ','
        << number_text(ensemble.se_sq(f)) << '\n';
  }
  spill(path, out.str());
}

void write_table_csv(const std::string& path,
                     const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    out << header[i] << (i + 1 < header.size() ? ',' : '\n');
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << row[i] << (i + 1 < row.size() ? ',' : '\n');
    }
  }
  spill(path, out.str());
}

}  // namespace conlab
