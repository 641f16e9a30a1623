#include "svds/report.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <thread>

#include "svds/io.hpp"
#include "svds/measure.hpp"

namespace svds {

nlohmann::json RunReport::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["config"] = config.to_json();
  nlohmann::json runs = nlohmann::json::array();
  for (const RunEntry& e : entries) {
    nlohmann::json r;
    r["index"] = e.index;
    r["seed"] = e.seed;
    r["terminal"] = e.terminal;
    r["measure_csv"] = e.measure_csv;
    nlohmann::json mass = nlohmann::json::array();
    for (const auto& [radius, value] : e.mass) mass.push_back({{"radius", radius}, {"mass", value}});
    r["mass_near"] = mass;
    nlohmann::json defects = nlohmann::json::array();
    for (const DefectRow& d : e.defects)
      defects.push_back({{"index", d.index},
                         {"t", d.t},
                         {"lower", d.bounds.lower},
                         {"upper", d.bounds.upper},
                         {"model_error", d.bounds.model_error},
                         {"certified", d.bounds.certified}});
    r["defect_bounds"] = defects;
    nlohmann::json stats = nlohmann::json::array();
    for (const NoiseStatRow& s : e.noise_stats)
      stats.push_back({{"index", s.index}, {"value", s.value}});
    r["noise_sup_stat"] = stats;
    r["pass"] = e.pass;
    runs.push_back(std::move(r));
  }
  j["runs"] = runs;
  j["aggregate"] = {{"mass_mean", mass_mean},
                    {"mass_min", mass_min},
                    {"mass_max", mass_max},
                    {"pass_fraction", pass_fraction}};
  return j;
}

RunReport run_sa_ensemble(const ScenarioConfig& config) {
  const Scenario scenario = config.resolve_scenario();
  const Grid grid(scenario.domain, config.grid_cells);
  const StepSchedule schedule = config.schedule();
  const NoiseModel noise = config.noise_model();
  const SelectionKind selection = config.selection_kind();
  const Vec x0 = config.x0.empty() ? scenario.default_x0 : config.x0;
  const std::size_t members = static_cast<std::size_t>(config.ensemble);
  if (members == 0) throw std::invalid_argument("run_sa_ensemble: empty ensemble");

  RunReport report;
  report.config = config;
  report.entries.resize(members);
  std::vector<std::optional<EmpiricalMeasure>> slots(members);

  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < members; i += stride) {
      try {
        RunEntry entry;
        entry.index = i;
        entry.seed = derive_seed(config.seed, i);
        const SARun run = sa_run(scenario.field, scenario.domain, x0, schedule, noise,
                                 static_cast<std::size_t>(config.iterations), selection,
                                 entry.seed);
        const Trajectory X = interpolate(run);
        const EmpiricalMeasure mu = occupation_measure(X, run.tau.back(), grid);
        entry.terminal = scenario.domain.canonical(run.states.back());
        for (double r : config.mass_radii)
          entry.mass.emplace_back(r, mass_near(mu, scenario.mass_center, r));
        const double pass_value = mass_near(mu, scenario.mass_center, config.pass_radius);
        entry.pass = pass_value >= config.pass_mass;
        for (std::uint64_t n : config.defect_checkpoints) {
          if (n >= run.steps()) continue;
          const double t = run.tau[static_cast<std::size_t>(n)];
          if (t + config.defect_window > run.tau.back()) continue;
          DefectRow row;
          row.index = n;
          row.t = t;
          row.bounds =
              wapt_defect_bounds(X, t, config.defect_window, scenario.field, grid, config.h);
          entry.defects.push_back(row);
        }
        for (std::uint64_t n : config.noise_stat_indices) {
          if (n < 1 || n > run.steps()) continue;
          NoiseStatRow row;
          row.index = n;
          row.value = noise_sup_stat(run, static_cast<std::size_t>(n), 1.0);
          entry.noise_stats.push_back(row);
        }
        report.entries[i] = std::move(entry);
        slots[i] = mu;
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  unsigned threads = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                        : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(members)));
  if (threads == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
    for (std::thread& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  // serialize files after the parallel phase, in index order
  const std::filesystem::path dir(config.out_dir);
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < members; ++i) {
    char name[64];
    std::snprintf(name, sizeof(name), "measure_%04zu.csv", i);
    report.entries[i].measure_csv = name;
    write_measure_csv((dir / name).string(), *slots[i]);
  }

  double sum = 0.0, mn = 1.0, mx = 0.0, passes = 0.0;
  for (const RunEntry& e : report.entries) {
    const double m = e.mass.empty() ? 0.0 : e.mass.front().second;
    sum += m;
    mn = std::min(mn, m);
    mx = std::max(mx, m);
    passes += e.pass ? 1.0 : 0.0;
  }
  report.mass_mean = sum / static_cast<double>(members);
  report.mass_min = mn;
  report.mass_max = mx;
  report.pass_fraction = passes / static_cast<double>(members);

  std::ofstream out(dir / "report.json");
  out << report.to_json().dump(2) << "\n";
  return report;
}

}  // namespace svds
