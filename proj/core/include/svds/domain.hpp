#pragma once

#include <cstddef>
#include <vector>

#include "svds/vec.hpp"

namespace svds {

/**
 * The compact state space M: either an axis-aligned box in R^m or the circle
 * R/(period Z).  Circle states are stored as lifts on the real line; the
 * canonical representative lives in [0, period).  Lifts keep affine
 * interpolation and Euler steps exact across wraps.
 */
class Domain {
 public:
  enum class Kind { box, circle };

  static Domain box(Vec lo, Vec hi);
  static Domain circle(double period = 1.0);

  Kind kind() const { return kind_; }
  int dimension() const { return dim_; }
  const Vec& lower() const { return lo_; }
  const Vec& upper() const { return hi_; }
  double period() const { return period_; }

  bool contains(const Vec& x, double slack = 1e-12) const;

  /* circle representative in [0, period); identity on boxes */
  double canonical1(double x) const;
  Vec canonical(const Vec& x) const;

  /* metric of the state space (wrap distance on the circle) */
  double distance(const Vec& a, const Vec& b) const;

  /* shortest displacement from -> to (wrapped into (-period/2, period/2] on
   * the circle) */
  Vec displacement(const Vec& from, const Vec& to) const;

  /* clip into the box; clipped_axes counts coordinates that moved */
  Vec clip(const Vec& x, std::size_t* clipped_axes = nullptr) const;

  double diameter() const;

  bool operator==(const Domain& o) const {
    return kind_ == o.kind_ && lo_ == o.lo_ && hi_ == o.hi_ && period_ == o.period_;
  }

 private:
  Domain() = default;
  Kind kind_ = Kind::box;
  int dim_ = 0;
  Vec lo_, hi_;
  double period_ = 1.0;
};

}  // namespace svds
