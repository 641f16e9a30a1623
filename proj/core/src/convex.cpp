#include "svds/convex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace svds {

VPolytope::VPolytope(std::vector<Vec> generators, double inflation_radius)
    : gens_(std::move(generators)), radius_(inflation_radius) {
  if (gens_.empty()) throw std::invalid_argument("VPolytope: empty generator list");
  if (radius_ < 0.0) throw std::invalid_argument("VPolytope: negative inflation radius");
  const std::size_t dim = gens_.front().size();
  if (dim == 0) throw std::invalid_argument("VPolytope: zero-dimensional generator");
  for (const Vec& g : gens_) {
    if (g.size() != dim) throw std::invalid_argument("VPolytope: mixed generator dimensions");
    if (!all_finite(g)) throw std::invalid_argument("VPolytope: non-finite generator");
  }
}

namespace {

/* Solve min ||sum_i lambda_i v_i||^2 subject to sum lambda_i = 1 over the
 * affine hull of the active set.  KKT system [G 1; 1^T 0] [lambda; mu] = [0; 1]
 * solved by Gaussian elimination with partial pivoting.  Returns false when
 * the system is numerically singular (affinely dependent active set). */
bool affine_min_norm(const std::vector<const Vec*>& pts, std::vector<double>& lambda) {
  const std::size_t k = pts.size();
  const std::size_t n = k + 1;
  std::vector<double> m(n * n, 0.0);
  std::vector<double> rhs(n, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i * n + j] = dot(*pts[i], *pts[j]);
    m[i * n + k] = 1.0;
    m[k * n + i] = 1.0;
  }
  rhs[k] = 1.0;

  double scale = 1.0;
  for (std::size_t i = 0; i < k; ++i) scale = std::max(scale, std::fabs(m[i * n + i]));

  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = std::fabs(m[perm[col] * n + col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::fabs(m[perm[r] * n + col]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best < 1e-13 * scale) return false;
    std::swap(perm[col], perm[piv]);
    const std::size_t prow = perm[col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const std::size_t row = perm[r];
      const double f = m[row * n + col] / m[prow * n + col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) m[row * n + c] -= f * m[prow * n + c];
      rhs[row] -= f * rhs[prow];
    }
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    const std::size_t row = perm[i];
    double s = rhs[row];
    for (std::size_t c = i + 1; c < n; ++c) s -= m[row * n + c] * x[c];
    x[i] = s / m[row * n + i];
  }
  lambda.assign(x.begin(), x.begin() + k);
  return true;
}

struct MinNormResult {
  Vec point;        // closest point of conv(V) to the origin
  double distance;  // its norm
};

/* Wolfe's minimum-norm-point algorithm over conv(V).  Terminates when the
 * duality gap ||x|| - <x, v*>/||x|| falls below tol (v* the support vertex in
 * direction -x), which certifies |distance - ||x||| <= tol. */
MinNormResult min_norm_point(const std::vector<Vec>& vraw, double tol, std::size_t iter_cap) {
  // exact duplicates contribute nothing
  std::vector<const Vec*> verts;
  verts.reserve(vraw.size());
  for (const Vec& v : vraw) {
    bool dup = false;
    for (const Vec* w : verts)
      if (*w == v) {
        dup = true;
        break;
      }
    if (!dup) verts.push_back(&v);
  }

  // closest single vertex
  std::size_t best = 0;
  double bestn = norm2(*verts[0]);
  for (std::size_t i = 1; i < verts.size(); ++i) {
    const double n2 = norm2(*verts[i]);
    if (n2 < bestn) {
      bestn = n2;
      best = i;
    }
  }
  if (verts.size() == 1) return {*verts[0], std::sqrt(bestn)};

  std::vector<std::size_t> active{best};
  std::vector<double> lambda{1.0};
  Vec x = *verts[best];

  auto rebuild = [&]() {
    std::fill(x.begin(), x.end(), 0.0);
    for (std::size_t i = 0; i < active.size(); ++i) axpy(x, lambda[i], *verts[active[i]]);
  };

  for (std::size_t iter = 0; iter < iter_cap; ++iter) {
    const double xn = norm(x);
    if (xn <= tol) return {x, xn};

    // support vertex in direction -x
    std::size_t j = 0;
    double jdot = dot(x, *verts[0]);
    for (std::size_t i = 1; i < verts.size(); ++i) {
      const double d = dot(x, *verts[i]);
      if (d < jdot) {
        jdot = d;
        j = i;
      }
    }
    const double lower = jdot / xn;  // supporting-hyperplane bound on the distance
    if (xn - lower <= tol) return {x, xn};

    if (std::find(active.begin(), active.end(), j) != active.end()) {
      // no vertex can improve; x is the affine minimizer over its own set
      return {x, xn};
    }
    active.push_back(j);
    lambda.push_back(0.0);

    // minor cycles: project onto the affine hull, retreat to the simplex
    for (std::size_t minor = 0; minor < iter_cap; ++minor) {
      std::vector<const Vec*> pts;
      pts.reserve(active.size());
      for (std::size_t idx : active) pts.push_back(verts[idx]);
      std::vector<double> beta;
      if (!affine_min_norm(pts, beta)) {
        // affinely dependent set: drop the smallest-weight member and retry
        std::size_t drop = 0;
        for (std::size_t i = 1; i < active.size(); ++i)
          if (lambda[i] < lambda[drop]) drop = i;
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(drop));
        lambda.erase(lambda.begin() + static_cast<std::ptrdiff_t>(drop));
        double tot = 0.0;
        for (double l : lambda) tot += l;
        if (tot <= 0.0) {
          lambda.assign(active.size(), 1.0 / static_cast<double>(active.size()));
        } else {
          for (double& l : lambda) l /= tot;
        }
        rebuild();
        continue;
      }
      bool feasible = true;
      for (double b : beta)
        if (b < -1e-14) {
          feasible = false;
          break;
        }
      if (feasible) {
        for (double& b : beta) b = std::max(b, 0.0);
        lambda = beta;
        rebuild();
        break;
      }
      // move toward beta until the first coordinate hits zero
      double theta = 1.0;
      for (std::size_t i = 0; i < beta.size(); ++i) {
        if (beta[i] < lambda[i] && beta[i] < 0.0) {
          theta = std::min(theta, lambda[i] / (lambda[i] - beta[i]));
        }
      }
      for (std::size_t i = 0; i < lambda.size(); ++i)
        lambda[i] = (1.0 - theta) * lambda[i] + theta * beta[i];
      for (std::size_t i = active.size(); i-- > 0;) {
        if (lambda[i] <= 1e-14) {
          active.erase(active.begin() + static_cast<std::ptrdiff_t>(i));
          lambda.erase(lambda.begin() + static_cast<std::ptrdiff_t>(i));
        }
      }
      double tot = 0.0;
      for (double l : lambda) tot += l;
      for (double& l : lambda) l /= tot;
      rebuild();
    }
  }
  throw std::runtime_error("min_norm_point: projection did not converge within iteration cap");
}

/* closest point of conv(generators) to p, via the shifted min-norm problem */
MinNormResult hull_projection(const Vec& p, const VPolytope& P) {
  std::vector<Vec> shifted;
  shifted.reserve(P.generators().size());
  for (const Vec& g : P.generators()) shifted.push_back(sub(g, p));
  MinNormResult r = min_norm_point(shifted, kTolGeo, kProjIterCap);
  r.point = add(r.point, p);
  return r;
}

}  // namespace

double dist_point_polytope(const Vec& p, const VPolytope& P) {
  require_dimension(p, static_cast<std::size_t>(P.dimension()), "dist_point_polytope");
  const MinNormResult r = hull_projection(p, P);
  return std::max(0.0, r.distance - P.inflation_radius());
}

Vec project_point(const Vec& p, const VPolytope& P) {
  require_dimension(p, static_cast<std::size_t>(P.dimension()), "project_point");
  const MinNormResult r = hull_projection(p, P);
  const double radius = P.inflation_radius();
  if (r.distance <= radius) return p;  // p inside the dilated set
  if (radius == 0.0) return r.point;
  // walk from the hull point toward p by the ball radius
  Vec dir = sub(p, r.point);
  const double n = norm(dir);
  Vec out = r.point;
  axpy(out, radius / n, dir);
  return out;
}

HausdorffResult hausdorff(const VPolytope& A, const VPolytope& B) {
  if (A.dimension() != B.dimension())
    throw std::invalid_argument("hausdorff: dimension mismatch");
  if (A.inflation_radius() != 0.0 || B.inflation_radius() != 0.0)
    throw std::invalid_argument("hausdorff: inflated sets unsupported");
  double ab = 0.0;
  for (const Vec& a : A.generators()) ab = std::max(ab, dist_point_polytope(a, B));
  double ba = 0.0;
  for (const Vec& b : B.generators()) ba = std::max(ba, dist_point_polytope(b, A));
  return {ab, ba, std::max(ab, ba)};
}

VPolytope inflate(const VPolytope& P, double delta) {
  if (delta < 0.0) throw std::invalid_argument("inflate: negative delta");
  return VPolytope(P.generators(), P.inflation_radius() + delta);
}

}  // namespace svds
