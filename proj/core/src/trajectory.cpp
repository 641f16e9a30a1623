#include "svds/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace svds {

Trajectory::Trajectory(std::vector<double> times, std::vector<Vec> points)
    : times_(std::move(times)), points_(std::move(points)) {
  if (times_.empty() || times_.size() != points_.size())
    throw std::invalid_argument("Trajectory: times/points length mismatch");
  const std::size_t dim = points_.front().size();
  if (dim == 0) throw std::invalid_argument("Trajectory: zero-dimensional points");
  for (std::size_t i = 0; i < times_.size(); ++i) {
    if (!std::isfinite(times_[i])) throw std::invalid_argument("Trajectory: non-finite time");
    if (i > 0 && !(times_[i] > times_[i - 1]))
      throw std::invalid_argument("Trajectory: times not strictly increasing");
    if (points_[i].size() != dim || !all_finite(points_[i]))
      throw std::invalid_argument("Trajectory: bad point");
  }
}

Vec Trajectory::at(double t) const {
  if (t <= times_.front()) return points_.front();
  if (t > times_.back() + 1e-12) throw std::out_of_range("Trajectory::at: beyond last knot");
  if (t >= times_.back()) return points_.back();
  const auto it = std::upper_bound(times_.begin(), times_.end(), t);
  const std::size_t hi = static_cast<std::size_t>(it - times_.begin());
  const std::size_t lo = hi - 1;
  const double w = (t - times_[lo]) / (times_[hi] - times_[lo]);
  Vec r = points_[lo];
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += w * (points_[hi][i] - points_[lo][i]);
  return r;
}

namespace {

double pointwise(const Vec& a, const Vec& b, const Domain* dom) {
  return dom ? dom->distance(a, b) : distance(a, b);
}

/* nearest multiple of period classifies which fold branch a lifted
 * difference sits on */
long fold_branch(double diff, double period) {
  return std::lround(diff / period);
}

}  // namespace

PathMetricResult path_metric_D(const Trajectory& x, const Trajectory& y, double K,
                               const Domain* domain) {
  if (!(K >= 1.0)) throw std::invalid_argument("path_metric_D: K must be >= 1");
  if (x.dimension() != y.dimension())
    throw std::invalid_argument("path_metric_D: dimension mismatch");
  if (x.end_time() < K - 1e-12 || y.end_time() < K - 1e-12)
    throw std::invalid_argument("path_metric_D: window shorter than [-K, K]");

  const bool circular = domain && domain->kind() == Domain::Kind::circle;
  const double period = circular ? domain->period() : 0.0;
  const int kmax = static_cast<int>(std::floor(K + 1e-12));

  // joint breakpoint grid on [-kmax, kmax]
  std::set<double> grid;
  grid.insert(-static_cast<double>(kmax));
  grid.insert(static_cast<double>(kmax));
  for (double t : x.times())
    if (t > -K && t < K) grid.insert(t);
  for (double t : y.times())
    if (t > -K && t < K) grid.insert(t);
  for (int k = 0; k <= kmax; ++k) {
    grid.insert(static_cast<double>(k));
    grid.insert(-static_cast<double>(k));
  }

  std::vector<double> ts(grid.begin(), grid.end());
  std::vector<double> ds(ts.size());
  std::vector<long> branch(ts.size(), 0);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const Vec a = x.at(ts[i]);
    const Vec b = y.at(ts[i]);
    ds[i] = pointwise(a, b, domain);
    if (circular) branch[i] = fold_branch(a[0] - b[0], period);
  }

  double value = 0.0;
  double weight = 1.0;
  for (int k = 0; k <= kmax; ++k, weight *= 0.5) {
    double sup = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (ts[i] < -static_cast<double>(k) - 1e-15 || ts[i] > static_cast<double>(k) + 1e-15)
        continue;
      sup = std::max(sup, ds[i]);
      // a branch change inside the window means the lifted difference crossed
      // a half-period, where the wrap distance peaks at period/2
      if (circular && i > 0 && ts[i - 1] >= -static_cast<double>(k) - 1e-15 &&
          branch[i] != branch[i - 1])
        sup = std::max(sup, 0.5 * period);
    }
    value += weight * std::min(1.0, sup);
  }
  return {value, std::pow(2.0, -static_cast<double>(kmax))};
}

}  // namespace svds
