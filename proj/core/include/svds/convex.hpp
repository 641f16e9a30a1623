#pragma once

#include <cstddef>
#include <vector>

#include "svds/vec.hpp"

namespace svds {

/* Absolute tolerance of convex projections. */
inline constexpr double kTolGeo = 1e-9;
inline constexpr std::size_t kProjIterCap = 10000;

/**
 * Convex compact set in V-representation: the convex hull of a finite
 * generator list, dilated by a closed Euclidean ball of radius
 * inflation_radius.  Closed under the constructions the library needs
 * (values of set-valued fields and their delta-fattenings) while keeping
 * point projections and generator-based Hausdorff distances cheap.
 */
class VPolytope {
 public:
  explicit VPolytope(std::vector<Vec> generators, double inflation_radius = 0.0);

  int dimension() const { return static_cast<int>(gens_.front().size()); }
  const std::vector<Vec>& generators() const { return gens_; }
  double inflation_radius() const { return radius_; }

 private:
  std::vector<Vec> gens_;
  double radius_;
};

/* Euclidean distance from p to the set; 0 if p lies inside.  Computed by an
 * exact active-set projection onto the hull (finite termination), then
 * corrected for the ball radius.  Throws on dimension mismatch and on
 * failure to converge within kProjIterCap iterations. */
double dist_point_polytope(const Vec& p, const VPolytope& P);

/* Closest point of the set to p (p itself when inside). */
Vec project_point(const Vec& p, const VPolytope& P);

struct HausdorffResult {
  double semi_ab;  // sup_{a in A} d(a, B)
  double semi_ba;  // sup_{b in B} d(b, A)
  double sym;      // max of the two
};

/* Hausdorff semidistances and distance between two uninflated polytopes.
 * The semidistance max over conv(A) of the convex map x -> d(x,B) is
 * attained at a generator, so generator sweeps are exact.  Inflated inputs
 * are rejected. */
HausdorffResult hausdorff(const VPolytope& A, const VPolytope& B);

/* Minkowski sum with a closed ball of radius delta >= 0. */
VPolytope inflate(const VPolytope& P, double delta);

}  // namespace svds
