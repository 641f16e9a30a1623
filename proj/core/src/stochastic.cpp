#include "svds/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace svds {

StepSchedule::StepSchedule(double a_, double n0_, double alpha_) : a(a_), n0(n0_), alpha(alpha_) {
  if (!(a > 0.0)) throw std::invalid_argument("StepSchedule: a must be positive");
  if (!(n0 >= 0.0)) throw std::invalid_argument("StepSchedule: n0 must be nonnegative");
  if (!(alpha > 0.5) || !(alpha <= 1.0))
    throw std::invalid_argument("StepSchedule: alpha must lie in (1/2, 1]");
}

double StepSchedule::gamma(std::size_t n) const {
  return a / std::pow(static_cast<double>(n) + n0, alpha);
}

NoiseModel NoiseModel::uniform_ball(double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("NoiseModel: radius must be positive");
  NoiseModel m;
  m.kind = Kind::uniform_ball;
  m.radius = radius;
  return m;
}

NoiseModel NoiseModel::gaussian_truncated(double sigma, double cap) {
  if (!(sigma > 0.0) || !(cap > 0.0))
    throw std::invalid_argument("NoiseModel: sigma and cap must be positive");
  NoiseModel m;
  m.kind = Kind::gaussian_truncated;
  m.sigma = sigma;
  m.cap = cap;
  return m;
}

double NoiseModel::bound() const {
  switch (kind) {
    case Kind::zero:
      return 0.0;
    case Kind::uniform_ball:
      return radius;
    case Kind::gaussian_truncated:
      return cap;
  }
  return 0.0;
}

Vec NoiseModel::sample(RngStream& rng, int dim) const {
  Vec u(static_cast<std::size_t>(dim), 0.0);
  switch (kind) {
    case Kind::zero:
      return u;
    case Kind::uniform_ball: {
      // rejection from the cube keeps the draw symmetric, hence mean zero
      while (true) {
        double r2 = 0.0;
        for (double& c : u) {
          c = rng.uniform(-1.0, 1.0);
          r2 += c * c;
        }
        if (r2 <= 1.0) break;
      }
      for (double& c : u) c *= radius;
      return u;
    }
    case Kind::gaussian_truncated: {
      for (int tries = 0; tries < 1000000; ++tries) {
        double r2 = 0.0;
        for (double& c : u) {
          c = sigma * rng.gaussian();
          r2 += c * c;
        }
        if (r2 <= cap * cap) return u;
      }
      throw std::runtime_error("NoiseModel: truncation cap rejects everything");
    }
  }
  return u;
}

namespace {

/* single shared step expression so producers and checkers agree bitwise */
inline Vec sa_step(const Vec& x, double gamma, const Vec& v, const Vec& u) {
  Vec next = x;
  for (std::size_t i = 0; i < next.size(); ++i) next[i] += gamma * (v[i] + u[i]);
  return next;
}

VPolytope family_value(const SetValuedField& F, const Domain& domain, const Vec& x,
                       double delta) {
  const VPolytope base = F(domain.canonical(x));
  return delta > 0.0 ? inflate(base, delta) : base;
}

}  // namespace

SARun sa_run(const SetValuedField& F, const Domain& domain, const Vec& x0,
             const StepSchedule& schedule, const NoiseModel& noise, std::size_t n_steps,
             SelectionKind selection, std::uint64_t seed,
             const std::function<double(std::size_t)>& delta_n) {
  require_dimension(x0, static_cast<std::size_t>(F.dimension), "sa_run");
  if (n_steps < 1) throw std::invalid_argument("sa_run: need at least one step");
  if (!domain.contains(x0)) throw std::invalid_argument("sa_run: x0 outside domain");
  if (selection == SelectionKind::chase)
    throw std::invalid_argument("sa_run: chase selection not meaningful here");

  RngStream noise_rng(splitmix64(seed));
  RngStream select_rng(splitmix64(seed ^ 0x5E1EC7104ULL));

  SARun run;
  run.schedule = schedule;
  run.seed = seed;
  run.states.reserve(n_steps + 1);
  run.noises.reserve(n_steps);
  run.selections.reserve(n_steps);
  run.tau.reserve(n_steps + 1);
  run.states.push_back(x0);
  run.tau.push_back(0.0);
  if (delta_n) run.deltas.reserve(n_steps);

  const Vec origin(static_cast<std::size_t>(F.dimension), 0.0);
  for (std::size_t n = 0; n < n_steps; ++n) {
    const double gamma = schedule.gamma(n + 1);
    const double delta = delta_n ? delta_n(n) : 0.0;
    if (delta_n) {
      if (!run.deltas.empty() && delta > run.deltas.back() + 1e-15)
        run.deltas_nonincreasing = false;
      run.deltas.push_back(delta);
    }
    const VPolytope value = family_value(F, domain, run.states.back(), delta);
    Vec v;
    if (selection == SelectionKind::min_norm) {
      v = project_point(origin, value);
    } else {
      v = value.generators()[select_rng.index(value.generators().size())];
    }
    Vec u = noise.sample(noise_rng, F.dimension);
    Vec next = sa_step(run.states.back(), gamma, v, u);
    if (domain.kind() == Domain::Kind::box && !domain.contains(next))
      throw std::runtime_error("sa_run: iterate escaped the box domain at step " +
                               std::to_string(n + 1));
    run.tau.push_back(run.tau.back() + gamma);
    run.states.push_back(std::move(next));
    run.noises.push_back(std::move(u));
    run.selections.push_back(std::move(v));
  }
  return run;
}

Trajectory interpolate(const SARun& run) {
  return Trajectory(run.tau, run.states);
}

double noise_sup_stat(const SARun& run, std::size_t n, double T) {
  if (n < 1 || n > run.steps()) throw std::invalid_argument("noise_sup_stat: bad start index");
  const std::size_t N = run.steps();

  // largest feasible k: sum_{i=n}^{k-1} gamma_i <= T
  double budget = 0.0;
  std::size_t kmax = n;
  for (std::size_t k = n + 1;; ++k) {
    budget += run.schedule.gamma(k - 1);
    if (budget > T + 1e-15) break;
    if (k > N) throw std::invalid_argument("noise_sup_stat: horizon exceeds the run");
    kmax = k;
  }

  Vec acc(run.states.front().size(), 0.0);
  double sup = 0.0;
  for (std::size_t k = n + 1; k <= kmax; ++k) {
    // adds gamma_{k} U_{k} (term i = k-1 of the sum)
    axpy(acc, run.schedule.gamma(k), run.noises[k - 1]);
    sup = std::max(sup, norm(acc));
  }
  return sup;
}

bool check_recursion(const SARun& run, const SetValuedField& F, const Domain& domain) {
  const std::size_t N = run.steps();
  if (run.states.size() != N + 1 || run.selections.size() != N) return false;
  for (std::size_t n = 0; n < N; ++n) {
    const double gamma = run.schedule.gamma(n + 1);
    const Vec expect = sa_step(run.states[n], gamma, run.selections[n], run.noises[n]);
    if (expect != run.states[n + 1]) return false;
    const double delta = run.deltas.empty() ? 0.0 : run.deltas[n];
    const VPolytope value = family_value(F, domain, run.states[n], delta);
    if (dist_point_polytope(run.selections[n], value) > kTolGeo) return false;
    if (domain.kind() == Domain::Kind::box && !domain.contains(run.states[n + 1])) return false;
  }
  return true;
}

}  // namespace svds
