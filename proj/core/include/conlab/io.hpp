#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "conlab/dynamics.hpp"
#include "conlab/graph.hpp"
#include "conlab/spectral.hpp"

namespace conlab {

/**
 * On-disk graph form:
 *
 *   { "n": 4, "edges": [[1, 2, 1.0], ...], "directed": false }
 *
 * Vertices are 1-based in files and 0-based in memory.  The conductance
 * entry may be omitted per edge and defaults to 1.
 */
OrientedNetwork parse_graph_json(const std::string& text);
OrientedNetwork read_graph_json(const std::string& path);
std::string graph_json_text(const OrientedNetwork& net);
void write_graph_json(const std::string& path, const OrientedNetwork& net);

// Report form: alpha, rho, kappa, convergent, margin, bounds and the full
// eigenvalue list; absent optional measures are written as null.
std::string report_json_text(const SpectralReport& report);
void write_report_json(const std::string& path, const SpectralReport& report);

/**
 * Simulation scenario.  Negative T or dt ask for the defaults (ten times
 * the slowest off-consensus time constant, and the step tied to the
 * coupling spectral radius).  x0 may be empty, meaning the built-in
 * deviation profile.  graph_file_b and switch_period only apply to the
 * switching schedule; record_points controls the output grid.
 */
struct Scenario {
  std::string graph_file;
  std::string graph_file_b;
  double sigma = 0.0;
  double gain = 1.0;
  double T = -1.0;
  double dt = -1.0;
  int n_paths = 1;
  std::uint64_t seed = 0;
  std::string schedule = "constant";
  double switch_period = 1.0;
  std::vector<double> x0;
  int record_points = 161;
};

Scenario parse_scenario_json(const std::string& text,
                             const std::string& base_dir);
Scenario read_scenario_json(const std::string& path);

// time, |P x| rows.
void write_trajectory_csv(const std::string& path, const Trajectory& traj);

// time, mean |P x|^2, model prediction, standard error rows; an empty
// prediction vector writes nan in that column.
void write_aggregate_csv(const std::string& path,
                         const TrajectoryEnsemble& ensemble,
                         const Eigen::VectorXd& prediction);

void write_table_csv(const std::string& path,
                     const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows);

}  // namespace conlab
