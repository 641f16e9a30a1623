#include "svds/field.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "svds/rng.hpp"

namespace svds {

namespace {

double sup_norm(const VPolytope& P) {
  double m = 0.0;
  for (const Vec& g : P.generators()) m = std::max(m, norm(g));
  return m + P.inflation_radius();
}

/* Upper estimate of the Hausdorff distance between two possibly inflated
 * values: generator sweeps are exact for the hulls; the radii enter as a
 * one-sided correction. */
double hausdorff_estimate(const VPolytope& A, const VPolytope& B) {
  const VPolytope hullA(A.generators());
  const VPolytope hullB(B.generators());
  double ab = 0.0;
  for (const Vec& a : A.generators())
    ab = std::max(ab, std::max(0.0, dist_point_polytope(a, hullB) - B.inflation_radius()));
  ab += A.inflation_radius();
  double ba = 0.0;
  for (const Vec& b : B.generators())
    ba = std::max(ba, std::max(0.0, dist_point_polytope(b, hullA) - A.inflation_radius()));
  ba += B.inflation_radius();
  return std::max(ab, ba);
}

}  // namespace

StandardFieldReport check_standard_field(const SetValuedField& F,
                                         const std::vector<Vec>& probes) {
  if (probes.empty()) throw std::invalid_argument("check_standard_field: no probes");
  StandardFieldReport rep;

  std::vector<VPolytope> values;
  values.reserve(probes.size());
  for (const Vec& x : probes) {
    require_dimension(x, static_cast<std::size_t>(F.dimension), "check_standard_field");
    VPolytope v = F(x);
    if (v.dimension() != F.dimension) {
      rep.values_ok = false;
      rep.detail = "value dimension mismatch";
    }
    const double ratio = sup_norm(v) / (F.growth_c * (1.0 + norm(x)));
    if (ratio > rep.worst_growth_ratio) {
      rep.worst_growth_ratio = ratio;
      if (ratio > 1.0 + 1e-12) rep.growth_witness = x;
    }
    values.push_back(std::move(v));
  }
  rep.growth_ok = rep.worst_growth_ratio <= 1.0 + 1e-12;

  // eps(eta) table over probe pairs, eta levels spread over observed separations
  std::vector<std::pair<double, double>> pairs;  // (separation, d_H estimate)
  for (std::size_t i = 0; i < probes.size(); ++i)
    for (std::size_t j = i + 1; j < probes.size(); ++j)
      pairs.emplace_back(distance(probes[i], probes[j]),
                         hausdorff_estimate(values[i], values[j]));
  if (!pairs.empty()) {
    double lo = pairs.front().first, hi = lo;
    for (auto& pr : pairs) {
      lo = std::min(lo, pr.first);
      hi = std::max(hi, pr.first);
    }
    lo = std::max(lo, 1e-12);
    hi = std::max(hi, lo * 2.0);
    const int levels = 6;
    for (int l = 0; l < levels; ++l) {
      const double eta = lo * std::pow(hi / lo, static_cast<double>(l) / (levels - 1));
      double eps = 0.0;
      for (auto& pr : pairs)
        if (pr.first <= eta + 1e-15) eps = std::max(eps, pr.second);
      rep.usc_table.push_back({eta, eps});
    }
  }
  return rep;
}

VPolytope eval_inflated(const SetValuedField& F, const Vec& x, double delta, int ball_samples) {
  if (delta < 0.0) throw std::invalid_argument("eval_inflated: negative delta");
  if (ball_samples < 1) throw std::invalid_argument("eval_inflated: ball_samples must be >= 1");
  require_dimension(x, static_cast<std::size_t>(F.dimension), "eval_inflated");

  if (delta == 0.0) return F(x);

  const std::size_t dim = x.size();
  std::vector<Vec> centers;
  centers.push_back(x);
  // closed-ball boundary points along the axes sharpen the hull ends
  for (std::size_t a = 0; a < dim; ++a) {
    Vec p = x, q = x;
    p[a] += delta;
    q[a] -= delta;
    centers.push_back(std::move(p));
    centers.push_back(std::move(q));
  }
  // Halton points of the ball, fixed bases, rejection from the cube
  static const unsigned bases[] = {2, 3, 5, 7, 11, 13};
  std::size_t index = 1;
  int accepted = 0;
  while (accepted < ball_samples) {
    Vec u(dim);
    double r2 = 0.0;
    for (std::size_t a = 0; a < dim; ++a) {
      u[a] = 2.0 * radical_inverse(index, bases[a % 6]) - 1.0;
      r2 += u[a] * u[a];
    }
    ++index;
    if (r2 > 1.0) continue;
    Vec p = x;
    axpy(p, delta, u);
    centers.push_back(std::move(p));
    ++accepted;
  }

  std::vector<Vec> gens;
  double min_radius = std::numeric_limits<double>::infinity();
  for (const Vec& z : centers) {
    const VPolytope v = F(z);
    min_radius = std::min(min_radius, v.inflation_radius());
    for (const Vec& g : v.generators()) gens.push_back(g);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return VPolytope(std::move(gens), delta + min_radius);
}

}  // namespace svds
