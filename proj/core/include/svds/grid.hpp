#pragma once

#include <cstdint>
#include <vector>

#include "svds/convex.hpp"
#include "svds/domain.hpp"

namespace svds {

using CellId = std::uint32_t;

/**
 * Uniform cell decomposition of a Domain.  Box cells are half-open
 * hyper-rectangles indexed row-major; circle cells are arcs of the canonical
 * period.  rep() is the cell center, cell_radius the half-diagonal.
 */
class Grid {
 public:
  Grid(Domain domain, std::vector<int> cells_per_axis);

  const Domain& domain() const { return domain_; }
  const std::vector<int>& cells_per_axis() const { return cells_; }
  std::size_t cell_count() const { return count_; }
  double cell_radius() const { return radius_; }
  const std::vector<double>& edges() const { return edge_; }

  CellId cell_of(const Vec& x) const;
  Vec rep(CellId c) const;

  /* All cells meeting conv(generators) dilated by radius.  Exact interval
   * arithmetic in one dimension (wrap-aware on the circle); in higher
   * dimensions a bounding-box prefilter plus an exact polytope-to-cell
   * distance test.  Cells outside the box domain are dropped; *clipped is
   * set when that removes anything. */
  std::vector<CellId> cells_meeting(const std::vector<Vec>& generators, double radius,
                                    bool* clipped = nullptr) const;

  bool operator==(const Grid& o) const {
    return domain_ == o.domain_ && cells_ == o.cells_;
  }

 private:
  Domain domain_;
  std::vector<int> cells_;
  std::vector<double> edge_;
  std::size_t count_ = 0;
  double radius_ = 0.0;
};

}  // namespace svds
