#pragma once

#include <vector>

#include "svds/domain.hpp"
#include "svds/vec.hpp"

namespace svds {

/**
 * Piecewise-affine path: affine between knots, constant before the first
 * knot.  Evaluation past the last knot is an error.  Circle-valued paths
 * store lifts, so segments carry the actual increments rather than chords.
 */
class Trajectory {
 public:
  Trajectory(std::vector<double> times, std::vector<Vec> points);

  double start_time() const { return times_.front(); }
  double end_time() const { return times_.back(); }
  int dimension() const { return static_cast<int>(points_.front().size()); }
  std::size_t knots() const { return times_.size(); }

  const std::vector<double>& times() const { return times_; }
  const std::vector<Vec>& points() const { return points_; }

  Vec at(double t) const;

 private:
  std::vector<double> times_;
  std::vector<Vec> points_;
};

struct PathMetricResult {
  double value;             // truncated series
  double truncation_bound;  // tail bound 2^{-floor(K)}
};

/* Truncated uniform-on-compacts path metric
 *   sum_{k=0..floor(K)} 2^{-k} min{1, sup_{[-k,k]} d(x(t), y(t))},
 * with the sup taken exactly on the joint breakpoint grid (the pointwise
 * distance is convex on each joint affine segment).  Negative times use the
 * constant pre-extension.  A domain pointer switches the pointwise metric to
 * the wrap distance; half-period folds inside a segment are detected so the
 * segment sup stays exact.  Requires K >= 1 and both paths to reach K. */
PathMetricResult path_metric_D(const Trajectory& x, const Trajectory& y, double K,
                               const Domain* domain = nullptr);

}  // namespace svds
