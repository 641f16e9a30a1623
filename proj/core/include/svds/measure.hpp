#pragma once

#include <optional>
#include <vector>

#include "svds/grid.hpp"
#include "svds/trajectory.hpp"

namespace svds {

/* Grid-cell histogram with unit total mass. */
class EmpiricalMeasure {
 public:
  EmpiricalMeasure(Grid grid, std::vector<double> weights);

  const Grid& grid() const { return grid_; }
  const std::vector<double>& weights() const { return w_; }

 private:
  Grid grid_;
  std::vector<double> w_;
};

/* Probability vector over a finite state set. */
struct DiscreteMeasure {
  std::vector<double> p;

  explicit DiscreteMeasure(std::vector<double> probs);
  int n() const { return static_cast<int>(p.size()); }
  std::vector<int> support() const;
};

/* Unnormalized cell occupation times of X over [a, b], computed exactly per
 * affine segment by boundary-crossing bookkeeping (no sampling).  Circle
 * segments integrate in the lift and wrap cell indices. */
std::vector<double> occupation_window(const Trajectory& X, double a, double b, const Grid& grid);

/* Empirical occupation measure over [0, t]. */
EmpiricalMeasure occupation_measure(const Trajectory& X, double t, const Grid& grid);

struct MeasureDistance {
  std::optional<double> w1;  // 1-D domains only; cell-center resolution
  double tv = 0.0;
};

/* Total variation always; Wasserstein-1 on intervals via the CDF integral
 * and on circles via the minimizing-shift circular CDF formula. */
MeasureDistance measure_distance(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu);

/* Mass of the cells whose centers lie within r of p (domain metric). */
double mass_near(const EmpiricalMeasure& mu, const Vec& p, double r);

}  // namespace svds
