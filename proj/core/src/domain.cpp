#include "svds/domain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace svds {

Domain Domain::box(Vec lo, Vec hi) {
  if (lo.empty() || lo.size() != hi.size())
    throw std::invalid_argument("Domain::box: bound dimensions mismatch");
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (!(lo[i] < hi[i])) throw std::invalid_argument("Domain::box: empty box");
  Domain d;
  d.kind_ = Kind::box;
  d.dim_ = static_cast<int>(lo.size());
  d.lo_ = std::move(lo);
  d.hi_ = std::move(hi);
  return d;
}

Domain Domain::circle(double period) {
  if (!(period > 0.0)) throw std::invalid_argument("Domain::circle: period must be positive");
  Domain d;
  d.kind_ = Kind::circle;
  d.dim_ = 1;
  d.period_ = period;
  return d;
}

bool Domain::contains(const Vec& x, double slack) const {
  if (static_cast<int>(x.size()) != dim_) return false;
  if (!all_finite(x)) return false;
  if (kind_ == Kind::circle) return true;  // every lift has a representative
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < lo_[i] - slack || x[i] > hi_[i] + slack) return false;
  return true;
}

double Domain::canonical1(double x) const {
  if (kind_ == Kind::box) return x;
  double r = std::fmod(x, period_);
  if (r < 0.0) r += period_;
  if (r >= period_) r = 0.0;  // guard against fmod rounding at the seam
  return r;
}

Vec Domain::canonical(const Vec& x) const {
  if (kind_ == Kind::box) return x;
  return Vec{canonical1(x[0])};
}

double Domain::distance(const Vec& a, const Vec& b) const {
  if (kind_ == Kind::box) return svds::distance(a, b);
  double d = std::fabs(canonical1(a[0]) - canonical1(b[0]));
  return std::min(d, period_ - d);
}

Vec Domain::displacement(const Vec& from, const Vec& to) const {
  if (kind_ == Kind::box) return sub(to, from);
  double d = canonical1(to[0]) - canonical1(from[0]);
  if (d > 0.5 * period_) d -= period_;
  if (d <= -0.5 * period_) d += period_;
  return Vec{d};
}

Vec Domain::clip(const Vec& x, std::size_t* clipped_axes) const {
  if (kind_ == Kind::circle) {
    if (clipped_axes) *clipped_axes = 0;
    return x;
  }
  Vec r = x;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double c = std::clamp(r[i], lo_[i], hi_[i]);
    if (c != r[i]) ++hits;
    r[i] = c;
  }
  if (clipped_axes) *clipped_axes = hits;
  return r;
}

double Domain::diameter() const {
  if (kind_ == Kind::circle) return 0.5 * period_;
  return svds::distance(lo_, hi_);
}

}  // namespace svds
