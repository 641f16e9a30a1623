#include "svds/config.hpp"

#include <stdexcept>

namespace svds {

namespace {

template <typename T>
void load(const nlohmann::json& j, const char* key, T& into) {
  if (j.contains(key)) into = j.at(key).get<T>();
}

}  // namespace

ScenarioConfig ScenarioConfig::from_json(const nlohmann::json& j) {
  ScenarioConfig c;
  load(j, "schema", c.schema);
  if (c.schema != 1) throw std::invalid_argument("config: unsupported schema version");
  load(j, "scenario", c.scenario);
  if (j.contains("field")) c.field_spec = j.at("field");
  load(j, "grid_cells", c.grid_cells);
  load(j, "h", c.h);
  load(j, "horizon", c.horizon);
  load(j, "a", c.a);
  load(j, "n0", c.n0);
  load(j, "alpha", c.alpha);
  load(j, "noise", c.noise);
  load(j, "noise_radius", c.noise_radius);
  load(j, "noise_sigma", c.noise_sigma);
  load(j, "noise_cap", c.noise_cap);
  load(j, "iterations", c.iterations);
  load(j, "ensemble", c.ensemble);
  load(j, "seed", c.seed);
  load(j, "x0", c.x0);
  load(j, "selection", c.selection);
  load(j, "out_dir", c.out_dir);
  load(j, "pass_radius", c.pass_radius);
  load(j, "pass_mass", c.pass_mass);
  load(j, "mass_radii", c.mass_radii);
  load(j, "defect_checkpoints", c.defect_checkpoints);
  load(j, "defect_window", c.defect_window);
  load(j, "noise_stat_indices", c.noise_stat_indices);
  load(j, "threads", c.threads);
  return c;
}

nlohmann::json ScenarioConfig::to_json() const {
  nlohmann::json j;
  j["schema"] = schema;
  j["scenario"] = scenario;
  if (!field_spec.is_null()) j["field"] = field_spec;
  j["grid_cells"] = grid_cells;
  j["h"] = h;
  j["horizon"] = horizon;
  j["a"] = a;
  j["n0"] = n0;
  j["alpha"] = alpha;
  j["noise"] = noise;
  j["noise_radius"] = noise_radius;
  j["noise_sigma"] = noise_sigma;
  j["noise_cap"] = noise_cap;
  j["iterations"] = iterations;
  j["ensemble"] = ensemble;
  j["seed"] = seed;
  j["x0"] = x0;
  j["selection"] = selection;
  j["out_dir"] = out_dir;
  j["pass_radius"] = pass_radius;
  j["pass_mass"] = pass_mass;
  j["mass_radii"] = mass_radii;
  j["defect_checkpoints"] = defect_checkpoints;
  j["defect_window"] = defect_window;
  j["noise_stat_indices"] = noise_stat_indices;
  j["threads"] = threads;
  return j;
}

Scenario ScenarioConfig::resolve_scenario() const {
  if (!field_spec.is_null()) {
    Scenario s;
    s.name = "custom";
    s.domain = domain_from_spec(field_spec.at("domain"));
    s.field = field_from_spec(field_spec, s.domain.dimension());
    s.default_x0 = Vec(static_cast<std::size_t>(s.domain.dimension()), 0.0);
    if (s.domain.kind() == Domain::Kind::box)
      for (int i = 0; i < s.domain.dimension(); ++i)
        s.default_x0[static_cast<std::size_t>(i)] =
            0.5 * (s.domain.lower()[static_cast<std::size_t>(i)] +
                   s.domain.upper()[static_cast<std::size_t>(i)]);
    s.mass_center = s.default_x0;
    return s;
  }
  const auto s = find_scenario(scenario);
  if (!s) throw std::invalid_argument("unknown scenario: " + scenario);
  return *s;
}

NoiseModel ScenarioConfig::noise_model() const {
  if (noise == "zero") return NoiseModel::zero();
  if (noise == "uniform_ball") return NoiseModel::uniform_ball(noise_radius);
  if (noise == "gaussian_truncated") return NoiseModel::gaussian_truncated(noise_sigma, noise_cap);
  throw std::invalid_argument("unknown noise kind: " + noise);
}

SelectionKind ScenarioConfig::selection_kind() const {
  if (selection == "min_norm") return SelectionKind::min_norm;
  if (selection == "random_vertex") return SelectionKind::random_vertex;
  throw std::invalid_argument("unknown selection: " + selection);
}

}  // namespace svds
