#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "svds/convex.hpp"
#include "svds/vec.hpp"

namespace svds {

/**
 * Set-valued velocity field x -> F(x).  The evaluator must be pure (safe to
 * call concurrently) and return nonempty polytopes of matching dimension.
 * growth_c is the linear growth constant: sup_{v in F(x)} ||v|| <= c(1+||x||).
 * lipschitz_hint, when present, certifies d_H(F(x), F(y)) <= L ||x-y|| and
 * enables certified outer reach approximations.
 */
struct SetValuedField {
  int dimension = 1;
  std::function<VPolytope(const Vec&)> value;
  double growth_c = 1.0;
  std::optional<double> lipschitz_hint;

  VPolytope operator()(const Vec& x) const { return value(x); }
};

struct UscRow {
  double eta;  // probe separation
  double eps;  // largest Hausdorff-distance estimate among pairs within eta
};

struct StandardFieldReport {
  bool values_ok = true;   // nonempty values of the right dimension at every probe
  bool growth_ok = true;   // sup ||F(x)|| <= c (1 + ||x||)
  double worst_growth_ratio = 0.0;
  std::optional<Vec> growth_witness;
  std::vector<UscRow> usc_table;  // estimated, reported, not asserted
  std::string detail;
  bool pass() const { return values_ok && growth_ok; }
};

/* Probe-based verification of the testable standardness clauses: value shape
 * and growth are checked, upper semicontinuity is only estimated (it is a
 * limit statement) and reported as an eps(eta) table. */
StandardFieldReport check_standard_field(const SetValuedField& F, const std::vector<Vec>& probes);

/* Inner approximation of the delta-fattening
 *   F^delta(x) = { y : exists z in B(x,delta) with d(y, F(z)) < delta }.
 * Takes the hull of the values at x, at the axis points x +- delta e_j and at
 * ball_samples Halton points of B(x,delta), then dilates by delta (plus the
 * smallest value radius seen, so delta = 0 reproduces F(x) exactly).
 * Deterministic. */
VPolytope eval_inflated(const SetValuedField& F, const Vec& x, double delta, int ball_samples);

}  // namespace svds
