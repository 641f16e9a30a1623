#include "svds/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "svds/rng.hpp"

namespace svds {

namespace {

std::size_t step_count(double T, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("step size must be positive");
  if (T < h - 1e-12) throw std::invalid_argument("horizon shorter than one step");
  return static_cast<std::size_t>(std::ceil(T / h - 1e-9));
}

Vec select_velocity(const VPolytope& value, const SelectionRule& rule, const Domain& domain,
                    const Vec& x, double t_next, double h, RngStream* rng) {
  switch (rule.kind) {
    case SelectionKind::min_norm:
      return project_point(Vec(value.generators().front().size(), 0.0), value);
    case SelectionKind::chase: {
      if (!rule.chase_target) throw std::invalid_argument("chase selection without target");
      const Vec target = rule.chase_target->at(t_next);
      Vec want = domain.displacement(x, target);
      for (double& w : want) w /= h;
      return project_point(want, value);
    }
    case SelectionKind::random_vertex: {
      const std::size_t i = rng->index(value.generators().size());
      return value.generators()[i];
    }
  }
  throw std::logic_error("unreachable selection kind");
}

}  // namespace

EulerRun euler_trajectory(const SetValuedField& F, const Domain& domain, const Vec& x0,
                          double h, double T, const SelectionRule& rule) {
  require_dimension(x0, static_cast<std::size_t>(F.dimension), "euler_trajectory");
  if (!domain.contains(x0)) throw std::invalid_argument("euler_trajectory: x0 outside domain");
  const std::size_t n = step_count(T, h);

  RngStream rng(rule.seed);
  std::vector<double> times(n + 1);
  std::vector<Vec> points(n + 1);
  std::vector<Vec> selections(n);
  std::size_t clips = 0;

  points[0] = x0;
  times[0] = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double tk1 = static_cast<double>(k + 1) * h;
    const VPolytope value = F(domain.canonical(points[k]));
    Vec v = select_velocity(value, rule, domain, points[k], tk1, h, &rng);
    Vec next = points[k];
    axpy(next, h, v);
    if (domain.kind() == Domain::Kind::box) {
      std::size_t hit = 0;
      next = domain.clip(next, &hit);
      if (hit) ++clips;
    }
    selections[k] = std::move(v);
    points[k + 1] = std::move(next);
    times[k + 1] = tk1;
  }
  return {Trajectory(std::move(times), std::move(points)), std::move(selections), clips};
}

std::vector<CellId> cell_image(const SetValuedField& F, const Grid& grid, double h, CellId c,
                               bool* clipped) {
  const Vec r = grid.rep(c);
  const VPolytope value = F(grid.domain().canonical(r));
  std::vector<Vec> gens;
  gens.reserve(value.generators().size());
  for (const Vec& g : value.generators()) {
    Vec p = r;
    axpy(p, h, g);
    gens.push_back(std::move(p));
  }
  const double lip = F.lipschitz_hint.value_or(0.0);
  const double radius = h * value.inflation_radius() + grid.cell_radius() * (1.0 + h * lip);
  std::vector<CellId> cells = grid.cells_meeting(gens, radius, clipped);
  if (cells.empty()) {
    // the whole image left the box grid; clip semantics keep the nearest cell
    if (clipped) *clipped = true;
    cells.push_back(grid.cell_of(grid.domain().clip(gens.front())));
  }
  return cells;
}

namespace {

/* memoizing propagator so tubes, semigroup checks and defect bounds share
 * bit-identical images */
class ImageCache {
 public:
  ImageCache(const SetValuedField& F, const Grid& grid, double h) : f_(F), grid_(grid), h_(h) {}

  const std::vector<CellId>& image(CellId c) {
    auto it = cache_.find(c);
    if (it != cache_.end()) return it->second;
    bool clip = false;
    std::vector<CellId> img = cell_image(f_, grid_, h_, c, &clip);
    clipped_ |= clip;
    return cache_.emplace(c, std::move(img)).first->second;
  }

  std::vector<CellId> advance(const std::vector<CellId>& slice) {
    std::vector<CellId> next;
    for (CellId c : slice) {
      const std::vector<CellId>& img = image(c);
      next.insert(next.end(), img.begin(), img.end());
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    return next;
  }

  bool clipped() const { return clipped_; }

 private:
  const SetValuedField& f_;
  const Grid& grid_;
  double h_;
  bool clipped_ = false;
  std::unordered_map<CellId, std::vector<CellId>> cache_;
};

std::vector<CellId> sorted_unique(std::vector<CellId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

ReachTube reachable_tube(const SetValuedField& F, const Grid& grid,
                         const std::vector<CellId>& start_cells, double h, double T) {
  if (start_cells.empty()) throw std::invalid_argument("reachable_tube: empty start set");
  const std::size_t n = step_count(T, h);
  ReachTube tube;
  tube.h = h;
  tube.certified = F.lipschitz_hint.has_value();
  tube.step_size_warning = F.lipschitz_hint && h * *F.lipschitz_hint > 0.5;
  tube.slices.reserve(n + 1);
  tube.slices.push_back(sorted_unique(start_cells));

  ImageCache cache(F, grid, h);
  for (std::size_t k = 0; k < n; ++k) tube.slices.push_back(cache.advance(tube.slices.back()));
  tube.clipped = cache.clipped();
  return tube;
}

double semigroup_check(const SetValuedField& F, const Grid& grid, double h, std::size_t j,
                       std::size_t k, const std::vector<CellId>& start_cells) {
  if (start_cells.empty()) throw std::invalid_argument("semigroup_check: empty start set");
  ImageCache cache(F, grid, h);
  std::vector<CellId> direct = sorted_unique(start_cells);
  for (std::size_t s = 0; s < j + k; ++s) direct = cache.advance(direct);

  std::vector<CellId> staged = sorted_unique(start_cells);
  for (std::size_t s = 0; s < j; ++s) staged = cache.advance(staged);
  for (std::size_t s = 0; s < k; ++s) staged = cache.advance(staged);

  if (direct == staged) return 0.0;

  // diagnostic distance, in cell units, should the tripwire ever fire
  const double unit = *std::min_element(grid.edges().begin(), grid.edges().end());
  auto semi = [&](const std::vector<CellId>& a, const std::vector<CellId>& b) {
    double worst = 0.0;
    for (CellId ca : a) {
      double best = std::numeric_limits<double>::infinity();
      for (CellId cb : b) best = std::min(best, grid.domain().distance(grid.rep(ca), grid.rep(cb)));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(semi(direct, staged), semi(staged, direct)) / unit;
}

namespace {

double sup_field_norm(const SetValuedField& F, const Grid& grid) {
  // coarse deterministic estimate over cell representatives
  const std::size_t n = grid.cell_count();
  const std::size_t stride = n > 4096 ? n / 4096 : 1;
  double m = 0.0;
  for (std::size_t c = 0; c < n; c += stride) {
    const VPolytope v = F(grid.domain().canonical(grid.rep(static_cast<CellId>(c))));
    double vn = 0.0;
    for (const Vec& g : v.generators()) vn = std::max(vn, norm(g));
    m = std::max(m, vn + v.inflation_radius());
  }
  return m;
}

}  // namespace

DefectBounds wapt_defect_bounds(const Trajectory& X, double t, double T,
                                const SetValuedField& F, const Grid& grid, double h) {
  if (!(T > 0.0) || !(h > 0.0)) throw std::invalid_argument("wapt_defect_bounds: bad window");
  const double ratio = T / h;
  const std::size_t steps = static_cast<std::size_t>(std::llround(ratio));
  if (std::fabs(ratio - static_cast<double>(steps)) > 1e-9 || steps == 0)
    throw std::invalid_argument("wapt_defect_bounds: T must be a multiple of h");
  if (t < X.start_time() - 1e-12 || t + T > X.end_time() + 1e-12)
    throw std::invalid_argument("wapt_defect_bounds: window outside trajectory");

  const Domain& domain = grid.domain();
  DefectBounds out;
  out.certified = F.lipschitz_hint.has_value();
  const double lip = F.lipschitz_hint.value_or(0.0);
  const double fsup = sup_field_norm(F, grid);
  out.model_error = h * fsup * (1.0 + lip * T * std::exp(lip * T));

  // samples of X on the window
  std::vector<Vec> xs(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) xs[k] = X.at(t + static_cast<double>(k) * h);

  // upper bound: Euler chaser from the grid point nearest X(t)
  {
    std::vector<double> times(steps + 1);
    std::vector<Vec> pts(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k) {
      times[k] = static_cast<double>(k) * h;
      pts[k] = xs[k];
    }
    const Trajectory target(std::move(times), std::move(pts));
    const Vec start = grid.rep(grid.cell_of(xs[0]));
    const EulerRun chaser =
        euler_trajectory(F, domain, start, h, T, SelectionRule::chase(&target));
    for (std::size_t k = 0; k <= steps; ++k)
      out.upper = std::max(out.upper, domain.distance(xs[k], chaser.trajectory.points()[k]));
  }

  // lower bound: certified tubes from candidate start cells
  {
    ImageCache cache(F, grid, h);
    const double r0 = std::min(grid.domain().diameter(), out.upper + out.model_error) +
                      grid.cell_radius();
    struct Cand {
      CellId cell;
      double d0;
    };
    std::vector<Cand> cands;
    for (std::size_t c = 0; c < grid.cell_count(); ++c) {
      const double d0 = domain.distance(xs[0], grid.rep(static_cast<CellId>(c)));
      if (d0 <= r0 + grid.cell_radius()) cands.push_back({static_cast<CellId>(c), d0});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.d0 < b.d0; });

    double best = std::numeric_limits<double>::infinity();
    for (const Cand& cand : cands) {
      // the k = 0 term alone already gives d0 - cell_radius
      if (cand.d0 - grid.cell_radius() >= best) break;
      std::vector<CellId> slice{cand.cell};
      double worst = cand.d0 - grid.cell_radius();
      for (std::size_t k = 1; k <= steps; ++k) {
        slice = cache.advance(slice);
        double dmin = std::numeric_limits<double>::infinity();
        for (CellId c : slice) dmin = std::min(dmin, domain.distance(xs[k], grid.rep(c)));
        worst = std::max(worst, dmin - grid.cell_radius());
        if (worst >= best) break;  // cannot improve the minimum
      }
      best = std::min(best, worst);
    }
    if (cands.empty()) best = 0.0;
    out.lower = std::max(0.0, best - out.model_error);
  }
  return out;
}

}  // namespace svds
