#include "svds/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace svds {

EmpiricalMeasure::EmpiricalMeasure(Grid grid, std::vector<double> weights)
    : grid_(std::move(grid)), w_(std::move(weights)) {
  if (w_.size() != grid_.cell_count())
    throw std::invalid_argument("EmpiricalMeasure: weight count mismatch");
  double total = 0.0;
  for (double w : w_) {
    if (!(w >= 0.0)) throw std::invalid_argument("EmpiricalMeasure: negative weight");
    total += w;
  }
  if (std::fabs(total - 1.0) > 1e-12)
    throw std::invalid_argument("EmpiricalMeasure: weights must sum to 1");
}

DiscreteMeasure::DiscreteMeasure(std::vector<double> probs) : p(std::move(probs)) {
  if (p.empty()) throw std::invalid_argument("DiscreteMeasure: empty");
  double total = 0.0;
  for (double v : p) {
    if (!(v >= 0.0)) throw std::invalid_argument("DiscreteMeasure: negative entry");
    total += v;
  }
  if (std::fabs(total - 1.0) > 1e-12)
    throw std::invalid_argument("DiscreteMeasure: entries must sum to 1");
}

std::vector<int> DiscreteMeasure::support() const {
  std::vector<int> s;
  for (int i = 0; i < n(); ++i)
    if (p[static_cast<std::size_t>(i)] > 0.0) s.push_back(i);
  return s;
}

namespace {

/* accumulates the exact time a single affine segment spends in each cell */
void accumulate_segment(const Grid& grid, double ta, const Vec& pa, double tb, const Vec& pb,
                        std::vector<double>& acc) {
  if (!(tb > ta)) return;
  const Domain& dom = grid.domain();
  const std::size_t dim = pa.size();

  std::vector<double> cuts;
  cuts.push_back(ta);
  cuts.push_back(tb);
  for (std::size_t a = 0; a < dim; ++a) {
    const double va = (pb[a] - pa[a]) / (tb - ta);
    if (va == 0.0) continue;
    const double lo = dom.kind() == Domain::Kind::circle ? 0.0 : dom.lower()[a];
    const double e = grid.edges()[a];
    // grid planes between the segment endpoints (lift coordinates on circles)
    const double s0 = (pa[a] - lo) / e;
    const double s1 = (pb[a] - lo) / e;
    const long first = static_cast<long>(std::ceil(std::min(s0, s1) - 1e-12));
    const long last = static_cast<long>(std::floor(std::max(s0, s1) + 1e-12));
    for (long i = first; i <= last; ++i) {
      const double t = ta + (lo + static_cast<double>(i) * e - pa[a]) / va;
      if (t > ta + 1e-15 && t < tb - 1e-15) cuts.push_back(t);
    }
  }
  std::sort(cuts.begin(), cuts.end());

  Vec mid(dim);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double dt = cuts[i + 1] - cuts[i];
    if (dt <= 0.0) continue;
    const double tm = 0.5 * (cuts[i] + cuts[i + 1]);
    const double w = (tm - ta) / (tb - ta);
    for (std::size_t a = 0; a < dim; ++a) mid[a] = pa[a] + w * (pb[a] - pa[a]);
    acc[grid.cell_of(mid)] += dt;
  }
}

}  // namespace

std::vector<double> occupation_window(const Trajectory& X, double a, double b, const Grid& grid) {
  if (!(b > a)) throw std::invalid_argument("occupation_window: empty window");
  if (b > X.end_time() + 1e-12)
    throw std::invalid_argument("occupation_window: window exceeds trajectory horizon");
  if (X.dimension() != grid.domain().dimension())
    throw std::invalid_argument("occupation_window: dimension mismatch");

  std::vector<double> acc(grid.cell_count(), 0.0);
  const auto& ts = X.times();
  const auto& ps = X.points();

  // constant stretch before the first knot
  if (a < ts.front()) {
    const double hi = std::min(b, ts.front());
    acc[grid.cell_of(ps.front())] += hi - a;
  }
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    const double lo = std::max(a, ts[i]);
    const double hi = std::min(b, ts[i + 1]);
    if (hi <= lo) continue;
    const double span = ts[i + 1] - ts[i];
    Vec pa(ps[i].size()), pb(ps[i].size());
    const double wa = (lo - ts[i]) / span;
    const double wb = (hi - ts[i]) / span;
    for (std::size_t c = 0; c < pa.size(); ++c) {
      pa[c] = ps[i][c] + wa * (ps[i + 1][c] - ps[i][c]);
      pb[c] = ps[i][c] + wb * (ps[i + 1][c] - ps[i][c]);
    }
    accumulate_segment(grid, lo, pa, hi, pb, acc);
  }
  return acc;
}

EmpiricalMeasure occupation_measure(const Trajectory& X, double t, const Grid& grid) {
  if (!(t > 0.0)) throw std::invalid_argument("occupation_measure: t must be positive");
  std::vector<double> acc = occupation_window(X, 0.0, t, grid);
  double total = 0.0;
  for (double v : acc) total += v;
  // normalizing by the accumulated total (== t up to roundoff) keeps the
  // unit-mass invariant tight
  for (double& v : acc) v /= total;
  return EmpiricalMeasure(grid, std::move(acc));
}

MeasureDistance measure_distance(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu) {
  if (!(mu.grid() == nu.grid())) throw std::invalid_argument("measure_distance: grid mismatch");
  const Grid& grid = mu.grid();
  MeasureDistance out;
  double tv = 0.0;
  for (std::size_t i = 0; i < mu.weights().size(); ++i)
    tv += std::fabs(mu.weights()[i] - nu.weights()[i]);
  out.tv = 0.5 * tv;

  if (grid.domain().dimension() != 1) return out;
  const std::size_t n = grid.cell_count();
  const double edge = grid.edges()[0];
  std::vector<double> cum(n, 0.0);
  double c = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    c += mu.weights()[i] - nu.weights()[i];
    cum[i] = c;
  }
  if (grid.domain().kind() == Domain::Kind::box) {
    double w1 = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) w1 += std::fabs(cum[i]) * edge;
    out.w1 = w1;
  } else {
    // circular transport: subtract the optimal constant shift (a median);
    // the last cumulative is 0 and stands for the two half-cells at the seam
    std::vector<double> vals(cum.begin(), cum.end() - 1);
    vals.push_back(0.0);
    std::vector<double> sorted = vals;
    std::sort(sorted.begin(), sorted.end());
    const double median = sorted[(sorted.size() - 1) / 2];
    double w1 = 0.0;
    for (double v : vals) w1 += std::fabs(v - median) * edge;
    out.w1 = w1;
  }
  return out;
}

double mass_near(const EmpiricalMeasure& mu, const Vec& p, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("mass_near: r must be positive");
  const Grid& grid = mu.grid();
  double mass = 0.0;
  for (std::size_t c = 0; c < grid.cell_count(); ++c) {
    if (grid.domain().distance(grid.rep(static_cast<CellId>(c)), p) <= r)
      mass += mu.weights()[c];
  }
  return mass;
}

}  // namespace svds
