#include "svds/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace svds {

Grid::Grid(Domain domain, std::vector<int> cells_per_axis)
    : domain_(std::move(domain)), cells_(std::move(cells_per_axis)) {
  if (static_cast<int>(cells_.size()) != domain_.dimension())
    throw std::invalid_argument("Grid: cells_per_axis dimension mismatch");
  count_ = 1;
  edge_.resize(cells_.size());
  double diag2 = 0.0;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i] < 1) throw std::invalid_argument("Grid: cells_per_axis must be >= 1");
    const double extent = domain_.kind() == Domain::Kind::circle
                              ? domain_.period()
                              : domain_.upper()[i] - domain_.lower()[i];
    edge_[i] = extent / cells_[i];
    diag2 += edge_[i] * edge_[i];
    count_ *= static_cast<std::size_t>(cells_[i]);
  }
  if (count_ > 0xFFFFFFFFull) throw std::invalid_argument("Grid: too many cells");
  radius_ = 0.5 * std::sqrt(diag2);
}

CellId Grid::cell_of(const Vec& x) const {
  require_dimension(x, static_cast<std::size_t>(domain_.dimension()), "Grid::cell_of");
  if (domain_.kind() == Domain::Kind::circle) {
    const double c = domain_.canonical1(x[0]);
    long i = static_cast<long>(std::floor(c / edge_[0]));
    i = std::clamp<long>(i, 0, cells_[0] - 1);
    return static_cast<CellId>(i);
  }
  std::size_t idx = 0;
  for (std::size_t a = 0; a < edge_.size(); ++a) {
    long i = static_cast<long>(std::floor((x[a] - domain_.lower()[a]) / edge_[a]));
    i = std::clamp<long>(i, 0, cells_[a] - 1);
    idx = idx * static_cast<std::size_t>(cells_[a]) + static_cast<std::size_t>(i);
  }
  return static_cast<CellId>(idx);
}

Vec Grid::rep(CellId c) const {
  Vec r(edge_.size());
  std::size_t rest = c;
  for (std::size_t a = edge_.size(); a-- > 0;) {
    const std::size_t n = static_cast<std::size_t>(cells_[a]);
    const std::size_t i = rest % n;
    rest /= n;
    const double lo = domain_.kind() == Domain::Kind::circle ? 0.0 : domain_.lower()[a];
    r[a] = lo + (static_cast<double>(i) + 0.5) * edge_[a];
  }
  return r;
}

std::vector<CellId> Grid::cells_meeting(const std::vector<Vec>& generators, double radius,
                                        bool* clipped) const {
  if (generators.empty()) throw std::invalid_argument("cells_meeting: no generators");
  if (clipped) *clipped = false;
  const std::size_t dim = static_cast<std::size_t>(domain_.dimension());

  if (domain_.kind() == Domain::Kind::circle) {
    double lo = generators.front()[0], hi = lo;
    for (const Vec& g : generators) {
      lo = std::min(lo, g[0]);
      hi = std::max(hi, g[0]);
    }
    lo -= radius;
    hi += radius;
    const double period = domain_.period();
    std::vector<CellId> out;
    if (hi - lo >= period) {
      out.resize(count_);
      for (std::size_t i = 0; i < count_; ++i) out[i] = static_cast<CellId>(i);
      return out;
    }
    const long ilo = static_cast<long>(std::floor(lo / edge_[0]));
    const long ihi = static_cast<long>(std::floor(hi / edge_[0]));
    const long n = cells_[0];
    for (long i = ilo; i <= ihi; ++i) {
      long w = ((i % n) + n) % n;
      out.push_back(static_cast<CellId>(w));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // bounding-box candidate ranges per axis
  std::vector<long> ilo(dim), ihi(dim);
  bool cut = false;
  for (std::size_t a = 0; a < dim; ++a) {
    double lo = generators.front()[a], hi = lo;
    for (const Vec& g : generators) {
      lo = std::min(lo, g[a]);
      hi = std::max(hi, g[a]);
    }
    lo -= radius;
    hi += radius;
    long l = static_cast<long>(std::floor((lo - domain_.lower()[a]) / edge_[a]));
    long h = static_cast<long>(std::floor((hi - domain_.lower()[a]) / edge_[a]));
    if (l < 0 || h > cells_[a] - 1) cut = true;
    ilo[a] = std::clamp<long>(l, 0, cells_[a] - 1);
    ihi[a] = std::clamp<long>(h, 0, cells_[a] - 1);
  }
  if (clipped && cut) *clipped = true;

  std::vector<CellId> out;
  std::vector<long> idx(ilo);
  const bool exact_test = dim > 1;
  while (true) {
    bool keep = true;
    if (exact_test) {
      // distance between hull and cell via the Minkowski difference
      std::vector<Vec> diff;
      const std::size_t corners = std::size_t{1} << dim;
      diff.reserve(generators.size() * corners);
      for (const Vec& g : generators) {
        for (std::size_t mask = 0; mask < corners; ++mask) {
          Vec v(dim);
          for (std::size_t a = 0; a < dim; ++a) {
            const double lo = domain_.lower()[a] + static_cast<double>(idx[a]) * edge_[a];
            const double corner = (mask >> a) & 1 ? lo + edge_[a] : lo;
            v[a] = g[a] - corner;
          }
          diff.push_back(std::move(v));
        }
      }
      const VPolytope mdiff(std::move(diff));
      keep = dist_point_polytope(Vec(dim, 0.0), mdiff) <= radius + kTolGeo;
    }
    if (keep) {
      std::size_t flat = 0;
      for (std::size_t a = 0; a < dim; ++a)
        flat = flat * static_cast<std::size_t>(cells_[a]) + static_cast<std::size_t>(idx[a]);
      out.push_back(static_cast<CellId>(flat));
    }
    bool done = true;
    for (std::size_t a = dim; a-- > 0;) {
      if (++idx[a] <= ihi[a]) {
        done = false;
        break;
      }
      idx[a] = ilo[a];
    }
    if (done) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace svds
