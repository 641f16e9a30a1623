#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "svds/config.hpp"
#include "svds/dynamics.hpp"

namespace svds {

struct DefectRow {
  std::uint64_t index;  // SA step index n, checkpoint at t = tau_n
  double t;
  DefectBounds bounds;
};

struct NoiseStatRow {
  std::uint64_t index;
  double value;
};

struct RunEntry {
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
  Vec terminal;             // canonical coordinates
  std::string measure_csv;  // relative to the report
  std::vector<std::pair<double, double>> mass;  // (radius, mass near center)
  std::vector<DefectRow> defects;
  std::vector<NoiseStatRow> noise_stats;
  bool pass = false;
};

struct RunReport {
  ScenarioConfig config;
  std::vector<RunEntry> entries;
  double mass_mean = 0.0;
  double mass_min = 0.0;
  double mass_max = 0.0;
  double pass_fraction = 0.0;

  nlohmann::json to_json() const;
};

/* Seeded SA ensemble: runs members concurrently (seed-indexed, so outputs are
 * bit-identical regardless of thread interleaving), writes one occupation
 * measure CSV per member plus report.json into config.out_dir. */
RunReport run_sa_ensemble(const ScenarioConfig& config);

}  // namespace svds
