#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "svds/domain.hpp"
#include "svds/field.hpp"

namespace svds {

/* A registered dynamical scenario: field, state space, and defaults for the
 * run-level knobs the CLI exposes. */
struct Scenario {
  std::string name;
  SetValuedField field;
  Domain domain;
  Vec default_x0;
  Vec mass_center;  // reference point for concentration diagnostics
};

/* Circle inclusion with the set-valued rest point at 0: velocity {1 - x} on
 * the open arc and conv{0, 1} inside a 1e-9 wrap window around 0.  The window
 * exists because the set-valued point itself has measure zero under any
 * numerical trajectory; without it the convexified value would never be
 * exercised. */
Scenario scenario_circle();

/* Contraction sanity scenario on the box [-1,1]^2: F(x) = {-x} dilated by
 * 0.05, unique attractor ball at the origin. */
Scenario scenario_contraction_2d();

std::vector<std::string> scenario_names();
std::optional<Scenario> find_scenario(const std::string& name);

/* Custom field from a generator-table spec:
 *   {"kind":"affine", "matrix":[[..]], "offset":[..],
 *    "generators":[[..],..], "radius":r,
 *    "growth_c":c?, "lipschitz":L?}
 * meaning F(x) = conv{ A x + b + g : g in generators u {0} } + B(0, r). */
SetValuedField field_from_spec(const nlohmann::json& spec, int dimension);

Domain domain_from_spec(const nlohmann::json& spec);

}  // namespace svds
