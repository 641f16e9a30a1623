#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "svds/dynamics.hpp"
#include "svds/field.hpp"

namespace svds {

/**
 * Power-law step schedule gamma_n = a / (n + n0)^alpha, n >= 1.
 * alpha in (1/2, 1] keeps the sum divergent with square-summable steps, and
 * makes both properties checkable analytically instead of empirically.
 */
struct StepSchedule {
  double a = 1.0;
  double n0 = 0.0;
  double alpha = 1.0;

  StepSchedule() = default;
  StepSchedule(double a_, double n0_, double alpha_);

  double gamma(std::size_t n) const;  // n >= 1
};

struct NoiseModel {
  enum class Kind { zero, uniform_ball, gaussian_truncated };

  Kind kind = Kind::zero;
  double radius = 0.0;  // uniform_ball
  double sigma = 0.0;   // gaussian_truncated
  double cap = 0.0;     // gaussian_truncated hard norm bound

  static NoiseModel zero() { return {}; }
  static NoiseModel uniform_ball(double radius);
  static NoiseModel gaussian_truncated(double sigma, double cap);

  /* uniform norm bound (the process is uniformly bounded by construction) */
  double bound() const;
  /* mean-zero symmetric draw with ||U|| <= bound(), deterministic per stream */
  Vec sample(RngStream& rng, int dim) const;
};

/**
 * One realization of the recursion
 *   x_{n+1} = x_n + gamma_{n+1} (v_n + U_{n+1}),  v_n in F_n(x_n),
 * with every intermediate quantity stored so the recursion is re-checkable
 * bit-exactly.  Circle states are lifts.  F_n = F dilated by delta_n when a
 * delta schedule is supplied, otherwise constant F.
 */
struct SARun {
  std::vector<Vec> states;      // x_0 .. x_N
  std::vector<Vec> noises;      // U_1 .. U_N
  std::vector<Vec> selections;  // v_0 .. v_{N-1}
  std::vector<double> deltas;   // per-step dilations; empty for constant F
  std::vector<double> tau;      // tau[i] = sum_{k<=i} gamma_k, tau[0] = 0
  StepSchedule schedule;
  std::uint64_t seed = 0;
  bool deltas_nonincreasing = true;

  std::size_t steps() const { return noises.size(); }
};

SARun sa_run(const SetValuedField& F, const Domain& domain, const Vec& x0,
             const StepSchedule& schedule, const NoiseModel& noise, std::size_t n_steps,
             SelectionKind selection, std::uint64_t seed,
             const std::function<double(std::size_t)>& delta_n = {});

/* Affine interpolation with knots at tau_n; on the circle the lift already
 * carries the actual increment, not the chord. */
Trajectory interpolate(const SARun& run);

/* Exact maximum of || sum_{i=n}^{k-1} gamma_{i+1} U_{i+1} || over the k with
 * sum_{i=n}^{k-1} gamma_i <= T.  Errors when the run is too short for T. */
double noise_sup_stat(const SARun& run, std::size_t n, double T);

/* Recomputes every step from the stored pieces; true iff all states match
 * bit-exactly and every v_n lies in F_n(x_n) within kTolGeo. */
bool check_recursion(const SARun& run, const SetValuedField& F, const Domain& domain);

}  // namespace svds
