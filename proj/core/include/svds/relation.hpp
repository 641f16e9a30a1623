#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "svds/dynamics.hpp"
#include "svds/measure.hpp"
#include "svds/rng.hpp"

namespace svds {

/**
 * Closed relation on a finite state set {0..n-1}: each state carries a
 * nonempty, sorted successor set.  The discrete-time analog of a set-valued
 * dynamical system; the invariance machinery below mirrors the classical
 * equivalence chain for such relations:
 *
 *   (1) subset inequality   mu(A) <= mu(F^{-1}(A)) for all A,
 *   (2) stationary Markov kernel supported on the relation,
 *   (3) edge coupling on Graph(F) with both marginals mu,
 *   (4) shift-invariant measure on admissible paths.
 *
 * (3) is certified constructively by max-flow, (2) is derived from (3), and
 * (4) is checked on finite path windows, so every positive answer is
 * independently re-checkable.
 */
class FiniteRelation {
 public:
  explicit FiniteRelation(std::vector<std::vector<int>> successors);

  int n() const { return static_cast<int>(succ_.size()); }
  const std::vector<int>& successors(int x) const { return succ_[static_cast<std::size_t>(x)]; }
  bool has_edge(int x, int y) const;

 private:
  std::vector<std::vector<int>> succ_;
};

/* Probability measure on Graph(F): weight per edge, total mass 1. */
struct EdgeCoupling {
  int n = 0;
  std::vector<std::vector<std::pair<int, double>>> rows;  // rows[x] = {(y, w)}

  double row_sum(int x) const;
  double col_sum(int y) const;
};

/* Row-stochastic kernel defined on (at least) the support of a measure. */
struct MarkovKernel {
  std::vector<std::vector<std::pair<int, double>>> rows;
  std::vector<char> defined;

  int n() const { return static_cast<int>(rows.size()); }
};

/* Condition (1) by exhaustive subset enumeration over the support of mu
 * (|support| <= 22).  Restricting A to support subsets is sufficient: mu(A)
 * only sees A through A n supp(mu) while mu(F^{-1}(A)) is monotone in A. */
bool check_condition_subsets(const FiniteRelation& F, const DiscreteMeasure& mu);

/* Condition (3) by max-flow on the bipartite transport network
 * source -> x (cap mu(x)) -> y in F(x) -> sink (cap mu(y)).  Exact integer
 * flow when mu has a common denominator <= 10^6, floating augmentation with
 * tolerance 1e-10 otherwise.  Returns the coupling iff the flow saturates. */
std::optional<EdgeCoupling> check_condition_flow(const FiniteRelation& F,
                                                 const DiscreteMeasure& mu);

/* kappa(x, .) = coupling row / mu(x) on support states; stationarity
 * sum_x mu(x) kappa(x,y) = mu(y) is asserted to 1e-10 before returning. */
MarkovKernel kernel_from_coupling(const EdgeCoupling& coupling, const DiscreteMeasure& mu);

double kernel_stationarity_residual(const MarkovKernel& kernel, const DiscreteMeasure& mu);

/* Condition (4) on windows of length k: builds the stationary Markov window
 * measure and returns the largest discrepancy between its two (k-1)-window
 * marginals; also verifies every positive window is a path of F. */
double pathspace_shift_check(const MarkovKernel& kernel, const DiscreteMeasure& mu, int k,
                             const FiniteRelation& F);

/* States lying on a directed cycle: nontrivial strongly connected components
 * plus self-loops.  In the finite case this is both the recurrent set and
 * the Birkhoff center (closure is the identity). */
std::vector<int> recurrent_set(const FiniteRelation& F);

/* States reachable at arbitrarily large path lengths from x: everything
 * reachable from the recurrent states reachable from x. */
std::vector<int> omega_limit(const FiniteRelation& F, int x);

/* Poincare recurrence: a coupling-certified invariant measure must give full
 * mass to the recurrent set.  Throws when the certificate does not verify;
 * a false return on a valid certificate indicates an implementation bug. */
bool poincare_verify(const FiniteRelation& F, const DiscreteMeasure& mu,
                     const EdgeCoupling& coupling);

/* The uniform measure on some directed cycle (lowest-index walk), with its
 * cyclic coupling; always certifies. */
std::pair<DiscreteMeasure, EdgeCoupling> some_invariant_measure(const FiniteRelation& F);

/* TV(A_k kappa, A_k) for the Cesaro average A_k = (1/k) sum_{j<k} mu0 kappa^j.
 * Telescopes to (1/k) TV(mu0 kappa^k, mu0) <= 1/k; the bound is asserted. */
double cesaro_invariance_defect(const MarkovKernel& kernel, const DiscreteMeasure& mu0,
                                std::size_t k);

/* Cell relation of a continuous field under one Euler step; shares
 * cell_image with reachable_tube so the j-step relation image equals tube
 * slice j exactly. */
FiniteRelation discretize_field(const SetValuedField& F, const Grid& grid, double h);

/* j-step image of a cell set under the relation (set-image composition). */
std::vector<int> relation_image(const FiniteRelation& F, const std::vector<int>& cells,
                                std::size_t steps);

/* Random instances for property and acceptance suites: each successor drawn
 * with probability edge_prob, one forced successor keeps values nonempty. */
FiniteRelation random_relation(int n, double edge_prob, RngStream& rng);

/* Random rational measure with the given denominator (balls into bins). */
DiscreteMeasure random_rational_measure(int n, int denominator, RngStream& rng);

}  // namespace svds
