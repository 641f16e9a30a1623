#include "svds/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace svds {

Scenario scenario_circle() {
  Scenario s;
  s.name = "circle";
  s.domain = Domain::circle(1.0);
  s.default_x0 = {0.5};
  s.mass_center = {0.0};
  s.field.dimension = 1;
  s.field.growth_c = 2.0;
  s.field.lipschitz_hint = 1.0;  // valid away from the set-valued point
  s.field.value = [](const Vec& x) {
    double c = std::fmod(x[0], 1.0);
    if (c < 0.0) c += 1.0;
    if (c >= 1.0) c = 0.0;
    const double wrap_dist = std::min(c, 1.0 - c);
    if (wrap_dist <= 1e-9) return VPolytope({{0.0}, {1.0}});
    return VPolytope({{1.0 - c}});
  };
  return s;
}

Scenario scenario_contraction_2d() {
  Scenario s;
  s.name = "contraction2d";
  s.domain = Domain::box({-1.0, -1.0}, {1.0, 1.0});
  s.default_x0 = {1.0, 1.0};
  s.mass_center = {0.0, 0.0};
  s.field.dimension = 2;
  s.field.growth_c = 1.0;
  s.field.lipschitz_hint = 1.0;
  s.field.value = [](const Vec& x) { return VPolytope({{-x[0], -x[1]}}, 0.05); };
  return s;
}

std::vector<std::string> scenario_names() { return {"circle", "contraction2d"}; }

std::optional<Scenario> find_scenario(const std::string& name) {
  if (name == "circle") return scenario_circle();
  if (name == "contraction2d") return scenario_contraction_2d();
  return std::nullopt;
}

SetValuedField field_from_spec(const nlohmann::json& spec, int dimension) {
  if (spec.value("kind", "") != "affine")
    throw std::invalid_argument("field spec: unsupported kind");
  const std::size_t dim = static_cast<std::size_t>(dimension);

  std::vector<Vec> matrix(dim, Vec(dim, 0.0));
  if (spec.contains("matrix")) {
    const auto& m = spec.at("matrix");
    if (m.size() != dim) throw std::invalid_argument("field spec: matrix shape");
    for (std::size_t i = 0; i < dim; ++i) {
      if (m[i].size() != dim) throw std::invalid_argument("field spec: matrix shape");
      for (std::size_t j = 0; j < dim; ++j) matrix[i][j] = m[i][j].get<double>();
    }
  }
  Vec offset(dim, 0.0);
  if (spec.contains("offset")) {
    const auto& b = spec.at("offset");
    if (b.size() != dim) throw std::invalid_argument("field spec: offset shape");
    for (std::size_t i = 0; i < dim; ++i) offset[i] = b[i].get<double>();
  }
  std::vector<Vec> table{Vec(dim, 0.0)};
  if (spec.contains("generators")) {
    for (const auto& row : spec.at("generators")) {
      if (row.size() != dim) throw std::invalid_argument("field spec: generator shape");
      Vec g(dim);
      for (std::size_t i = 0; i < dim; ++i) g[i] = row[i].get<double>();
      table.push_back(std::move(g));
    }
  }
  const double radius = spec.value("radius", 0.0);
  if (radius < 0.0) throw std::invalid_argument("field spec: negative radius");

  // defaults: Frobenius norm bounds both the Lipschitz constant and the
  // linear part of the growth estimate
  double frob2 = 0.0;
  for (const Vec& row : matrix) frob2 += norm2(row);
  const double frob = std::sqrt(frob2);
  double shift = norm(offset) + radius;
  for (const Vec& g : table) shift = std::max(shift, norm(offset) + norm(g) + radius);

  SetValuedField F;
  F.dimension = dimension;
  F.growth_c = spec.value("growth_c", std::max({frob, shift, 1e-9}));
  if (spec.contains("lipschitz"))
    F.lipschitz_hint = spec.at("lipschitz").get<double>();
  else
    F.lipschitz_hint = frob;
  F.value = [matrix, offset, table, radius, dim](const Vec& x) {
    std::vector<Vec> gens;
    gens.reserve(table.size());
    for (const Vec& g : table) {
      Vec v(dim);
      for (std::size_t i = 0; i < dim; ++i) v[i] = dot(matrix[i], x) + offset[i] + g[i];
      gens.push_back(std::move(v));
    }
    return VPolytope(std::move(gens), radius);
  };
  return F;
}

Domain domain_from_spec(const nlohmann::json& spec) {
  const std::string kind = spec.value("kind", "");
  if (kind == "circle") return Domain::circle(spec.value("period", 1.0));
  if (kind == "box") {
    Vec lo, hi;
    for (const auto& v : spec.at("lo")) lo.push_back(v.get<double>());
    for (const auto& v : spec.at("hi")) hi.push_back(v.get<double>());
    return Domain::box(std::move(lo), std::move(hi));
  }
  throw std::invalid_argument("domain spec: unsupported kind");
}

}  // namespace svds
