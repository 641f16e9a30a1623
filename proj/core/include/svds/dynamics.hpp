#pragma once

#include <cstdint>
#include <vector>

#include "svds/field.hpp"
#include "svds/grid.hpp"
#include "svds/trajectory.hpp"

namespace svds {

enum class SelectionKind { min_norm, chase, random_vertex };

/* Picks one velocity from each value set.  min_norm is the metric projection
 * of the origin (the canonical slow selection and the deterministic default);
 * chase projects the displacement toward a target path; random_vertex draws a
 * generator with a per-call seeded stream. */
struct SelectionRule {
  SelectionKind kind = SelectionKind::min_norm;
  const Trajectory* chase_target = nullptr;  // evaluated at absolute step times
  std::uint64_t seed = 0;

  static SelectionRule min_norm() { return {}; }
  static SelectionRule chase(const Trajectory* target) {
    return {SelectionKind::chase, target, 0};
  }
  static SelectionRule random_vertex(std::uint64_t seed) {
    return {SelectionKind::random_vertex, nullptr, seed};
  }
};

struct EulerRun {
  Trajectory trajectory;
  std::vector<Vec> selections;  // v_k, one per step
  std::size_t clip_events;      // box-boundary clips (signals a non-invariant model)
};

/* Explicit Euler for dz/dt in F(z): x_{k+1} = x_k + h v_k with v_k chosen by
 * the rule, knots at t_k = k h, wrap exact on circles (lift storage), clip
 * counted on boxes. */
EulerRun euler_trajectory(const SetValuedField& F, const Domain& domain, const Vec& x0,
                          double h, double T, const SelectionRule& rule = {});

struct ReachTube {
  double h = 0.0;
  std::vector<std::vector<CellId>> slices;  // slice k ~ time k h
  bool certified = false;                   // outer w.r.t. the Euler difference inclusion
  bool step_size_warning = false;           // h * lipschitz_hint > 0.5
  bool clipped = false;                     // some image left the box grid
};

/* One-step cell image shared by reachable tubes and field discretization:
 * cells meeting rep(c) + h F(rep(c)) dilated by h r_F + cell_radius (1 + h L). */
std::vector<CellId> cell_image(const SetValuedField& F, const Grid& grid, double h, CellId c,
                               bool* clipped = nullptr);

ReachTube reachable_tube(const SetValuedField& F, const Grid& grid,
                         const std::vector<CellId>& start_cells, double h, double T);

/* Propagates j steps, restarts from slice j for k more, and compares against
 * the direct slice j+k.  Exactly zero for this scheme; kept as a regression
 * tripwire.  Nonzero return is the Hausdorff distance of the two cell-center
 * sets in units of the smallest cell edge. */
double semigroup_check(const SetValuedField& F, const Grid& grid, double h, std::size_t j,
                       std::size_t k, const std::vector<CellId>& start_cells);

struct DefectBounds {
  double lower = 0.0;
  double upper = 0.0;
  double model_error = 0.0;  // Gronwall gap between Euler paths and true solutions
  bool certified = false;    // lower bound backed by a certified tube
};

/* Bounds on the shadowing defect inf_z sup_{s in [0,T]} d(X(t+s), z(s)) over
 * solutions z of the inclusion.  The upper bound chases X with an Euler
 * selection from the grid point nearest X(t); the lower bound propagates
 * certified tubes from every candidate start cell (a solution achieving
 * defect d must start within d of X(t)) and subtracts the discretization
 * slack.  The true defect lies in [lower, upper + model_error]. */
DefectBounds wapt_defect_bounds(const Trajectory& X, double t, double T,
                                const SetValuedField& F, const Grid& grid, double h);

}  // namespace svds
