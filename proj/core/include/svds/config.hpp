#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "svds/scenario.hpp"
#include "svds/stochastic.hpp"

namespace svds {

/* Flat run configuration; JSON schema version 1.  Every key has a matching
 * CLI flag and flags win over file values. */
struct ScenarioConfig {
  int schema = 1;
  std::string scenario = "circle";
  nlohmann::json field_spec;   // optional custom field (with "domain" spec)
  std::vector<int> grid_cells = {200};
  double h = 0.01;
  double horizon = 10.0;  // simulate/tube horizon T
  double a = 1.0;
  double n0 = 0.0;
  double alpha = 0.7;
  std::string noise = "uniform_ball";  // zero | uniform_ball | gaussian_truncated
  double noise_radius = 0.1;
  double noise_sigma = 0.05;
  double noise_cap = 0.2;
  std::uint64_t iterations = 100000;
  std::uint64_t ensemble = 100;
  std::uint64_t seed = 42;
  Vec x0;  // empty = scenario default
  std::string selection = "min_norm";
  std::string out_dir = "svds_out";
  double pass_radius = 0.05;
  double pass_mass = 0.9;
  std::vector<double> mass_radii = {0.05};
  std::vector<std::uint64_t> defect_checkpoints;  // SA indices n; t = tau_n
  double defect_window = 1.0;
  std::vector<std::uint64_t> noise_stat_indices;
  int threads = 0;  // 0 = hardware concurrency

  static ScenarioConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  Scenario resolve_scenario() const;
  StepSchedule schedule() const { return StepSchedule(a, n0, alpha); }
  NoiseModel noise_model() const;
  SelectionKind selection_kind() const;
};

}  // namespace svds
