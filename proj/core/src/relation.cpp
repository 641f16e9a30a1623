#include "svds/relation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace svds {

FiniteRelation::FiniteRelation(std::vector<std::vector<int>> successors)
    : succ_(std::move(successors)) {
  if (succ_.empty()) throw std::invalid_argument("FiniteRelation: empty state set");
  const int n = static_cast<int>(succ_.size());
  for (auto& s : succ_) {
    if (s.empty()) throw std::invalid_argument("FiniteRelation: empty successor set");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int y : s)
      if (y < 0 || y >= n) throw std::invalid_argument("FiniteRelation: successor out of range");
  }
}

bool FiniteRelation::has_edge(int x, int y) const {
  const auto& s = succ_[static_cast<std::size_t>(x)];
  return std::binary_search(s.begin(), s.end(), y);
}

double EdgeCoupling::row_sum(int x) const {
  double s = 0.0;
  for (const auto& [y, w] : rows[static_cast<std::size_t>(x)]) s += w;
  return s;
}

double EdgeCoupling::col_sum(int y) const {
  double s = 0.0;
  for (const auto& row : rows)
    for (const auto& [yy, w] : row)
      if (yy == y) s += w;
  return s;
}

bool check_condition_subsets(const FiniteRelation& F, const DiscreteMeasure& mu) {
  if (mu.n() != F.n()) throw std::invalid_argument("check_condition_subsets: size mismatch");
  const std::vector<int> supp = mu.support();
  const std::size_t s = supp.size();
  if (s > 22)
    throw std::invalid_argument(
        "check_condition_subsets: support too large for enumeration; use the flow check");
  if (s == 0) return true;

  // per state with mass: which support states its successors hit
  std::vector<int> pos(static_cast<std::size_t>(F.n()), -1);
  for (std::size_t i = 0; i < s; ++i) pos[static_cast<std::size_t>(supp[i])] = static_cast<int>(i);

  struct Hitter {
    std::uint32_t mask;
    double weight;
  };
  std::vector<Hitter> hitters;
  for (int x : supp) {
    std::uint32_t mask = 0;
    for (int y : F.successors(x))
      if (pos[static_cast<std::size_t>(y)] >= 0)
        mask |= 1u << pos[static_cast<std::size_t>(y)];
    hitters.push_back({mask, mu.p[static_cast<std::size_t>(x)]});
  }

  const std::size_t full = std::size_t{1} << s;
  // miss[B] = mass of support states whose successor mask avoids the complement of B,
  // built as a subset-sum (zeta) transform of the exact-mask masses
  std::vector<double> miss(full, 0.0);
  for (const Hitter& h : hitters) miss[h.mask] += h.weight;
  for (std::size_t bit = 0; bit < s; ++bit)
    for (std::size_t m = 0; m < full; ++m)
      if (m & (std::size_t{1} << bit)) miss[m] += miss[m ^ (std::size_t{1} << bit)];

  // mu(A) by incremental subset sums
  std::vector<double> muA(full, 0.0);
  for (std::size_t m = 1; m < full; ++m) {
    const std::size_t low = m & (~m + 1);
    std::size_t bit = 0;
    while ((std::size_t{1} << bit) != low) ++bit;
    muA[m] = muA[m ^ low] + mu.p[static_cast<std::size_t>(supp[bit])];
  }

  double supp_mass = 0.0;
  for (int x : supp) supp_mass += mu.p[static_cast<std::size_t>(x)];

  for (std::size_t m = 1; m < full; ++m) {
    // mu(F^{-1}(A)) over massive states = total - mass of states missing A
    const double inv = supp_mass - miss[(full - 1) ^ m];
    if (muA[m] > inv + 1e-12) return false;
  }
  return true;
}

namespace {

/* Dinic max-flow; Cap is int64 for the exact rational path, double otherwise. */
template <typename Cap>
class Dinic {
 public:
  explicit Dinic(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

  int add_edge(int a, int b, Cap cap) {
    edges_.push_back({b, head_[static_cast<std::size_t>(a)], cap});
    head_[static_cast<std::size_t>(a)] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({a, head_[static_cast<std::size_t>(b)], Cap{}});
    head_[static_cast<std::size_t>(b)] = static_cast<int>(edges_.size()) - 1;
    return static_cast<int>(edges_.size()) - 2;
  }

  Cap max_flow(int s, int t, Cap eps) {
    Cap total{};
    while (bfs(s, t, eps)) {
      iter_ = head_;
      while (true) {
        const Cap f = dfs(s, t, std::numeric_limits<Cap>::max(), eps);
        if (f <= eps) break;
        total += f;
      }
    }
    return total;
  }

  Cap flow_through(int edge_id) const { return edges_[static_cast<std::size_t>(edge_id) + 1].cap; }

 private:
  struct Edge {
    int to;
    int next;
    Cap cap;
  };

  bool bfs(int s, int t, Cap eps) {
    level_.assign(head_.size(), -1);
    std::vector<int> q{s};
    level_[static_cast<std::size_t>(s)] = 0;
    for (std::size_t qi = 0; qi < q.size(); ++qi) {
      const int u = q[qi];
      for (int e = head_[static_cast<std::size_t>(u)]; e >= 0;
           e = edges_[static_cast<std::size_t>(e)].next) {
        const Edge& ed = edges_[static_cast<std::size_t>(e)];
        if (ed.cap > eps && level_[static_cast<std::size_t>(ed.to)] < 0) {
          level_[static_cast<std::size_t>(ed.to)] = level_[static_cast<std::size_t>(u)] + 1;
          q.push_back(ed.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  Cap dfs(int u, int t, Cap limit, Cap eps) {
    if (u == t) return limit;
    for (int& e = iter_[static_cast<std::size_t>(u)]; e >= 0;
         e = edges_[static_cast<std::size_t>(e)].next) {
      Edge& ed = edges_[static_cast<std::size_t>(e)];
      if (ed.cap > eps &&
          level_[static_cast<std::size_t>(ed.to)] == level_[static_cast<std::size_t>(u)] + 1) {
        const Cap f = dfs(ed.to, t, std::min(limit, ed.cap), eps);
        if (f > eps) {
          ed.cap -= f;
          edges_[static_cast<std::size_t>(e ^ 1)].cap += f;
          return f;
        }
      }
    }
    return Cap{};
  }

  std::vector<Edge> edges_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

/* smallest common denominator <= cap, via per-entry continued fractions */
std::optional<long long> common_denominator(const DiscreteMeasure& mu, long long cap) {
  long long den = 1;
  for (double v : mu.p) {
    // best rational approximation p/q with q <= cap
    double x = v;
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
      const double fl = std::floor(x);
      const long long a = static_cast<long long>(fl);
      long long p2 = a * p1 + p0;
      long long q2 = a * q1 + q0;
      if (q2 > cap || q2 <= 0) break;
      p0 = p1;
      q0 = q1;
      p1 = p2;
      q1 = q2;
      const double frac = x - fl;
      if (frac < 1e-15 ||
          std::fabs(v - static_cast<double>(p1) / static_cast<double>(q1)) < 1e-13)
        break;
      x = 1.0 / frac;
    }
    if (q1 <= 0 || std::fabs(v - static_cast<double>(p1) / static_cast<double>(q1)) > 1e-12)
      return std::nullopt;
    const long long g = std::gcd(den, q1);
    if (den / g > cap / q1) return std::nullopt;  // lcm overflow past cap
    den = den / g * q1;
    if (den > cap) return std::nullopt;
  }
  // every entry must scale to an integer and the integers must total den
  long long total = 0;
  for (double v : mu.p) {
    const double scaled = v * static_cast<double>(den);
    const long long r = std::llround(scaled);
    if (std::fabs(scaled - static_cast<double>(r)) > 1e-6) return std::nullopt;
    total += r;
  }
  if (total != den) return std::nullopt;
  return den;
}

}  // namespace

std::optional<EdgeCoupling> check_condition_flow(const FiniteRelation& F,
                                                 const DiscreteMeasure& mu) {
  if (mu.n() != F.n()) throw std::invalid_argument("check_condition_flow: size mismatch");
  const int n = F.n();
  const int source = 2 * n;
  const int sink = 2 * n + 1;

  const std::optional<long long> den = common_denominator(mu, 1000000);

  EdgeCoupling coupling;
  coupling.n = n;
  coupling.rows.resize(static_cast<std::size_t>(n));

  if (den) {
    Dinic<long long> net(2 * n + 2);
    std::vector<std::pair<std::pair<int, int>, int>> edge_ids;
    std::vector<long long> mass(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
      mass[static_cast<std::size_t>(x)] =
          std::llround(mu.p[static_cast<std::size_t>(x)] * static_cast<double>(*den));
    for (int x = 0; x < n; ++x) {
      if (mass[static_cast<std::size_t>(x)] == 0) continue;
      net.add_edge(source, x, mass[static_cast<std::size_t>(x)]);
      for (int y : F.successors(x))
        edge_ids.push_back({{x, y}, net.add_edge(x, n + y, *den)});
    }
    for (int y = 0; y < n; ++y)
      if (mass[static_cast<std::size_t>(y)] > 0)
        net.add_edge(n + y, sink, mass[static_cast<std::size_t>(y)]);
    const long long flow = net.max_flow(source, sink, 0);
    if (flow != *den) return std::nullopt;
    for (const auto& [edge, id] : edge_ids) {
      const long long f = net.flow_through(id);
      if (f > 0)
        coupling.rows[static_cast<std::size_t>(edge.first)].emplace_back(
            edge.second, static_cast<double>(f) / static_cast<double>(*den));
    }
    return coupling;
  }

  Dinic<double> net(2 * n + 2);
  std::vector<std::pair<std::pair<int, int>, int>> edge_ids;
  for (int x = 0; x < n; ++x) {
    if (mu.p[static_cast<std::size_t>(x)] == 0.0) continue;
    net.add_edge(source, x, mu.p[static_cast<std::size_t>(x)]);
    for (int y : F.successors(x)) edge_ids.push_back({{x, y}, net.add_edge(x, n + y, 1.0)});
  }
  for (int y = 0; y < n; ++y)
    if (mu.p[static_cast<std::size_t>(y)] > 0.0)
      net.add_edge(n + y, sink, mu.p[static_cast<std::size_t>(y)]);
  const double flow = net.max_flow(source, sink, 1e-12);
  if (std::fabs(flow - 1.0) > 1e-10) return std::nullopt;
  for (const auto& [edge, id] : edge_ids) {
    const double f = net.flow_through(id);
    if (f > 1e-14)
      coupling.rows[static_cast<std::size_t>(edge.first)].emplace_back(edge.second, f);
  }
  return coupling;
}

MarkovKernel kernel_from_coupling(const EdgeCoupling& coupling, const DiscreteMeasure& mu) {
  if (coupling.n != mu.n()) throw std::invalid_argument("kernel_from_coupling: size mismatch");
  const int n = mu.n();
  for (int x = 0; x < n; ++x) {
    if (std::fabs(coupling.row_sum(x) - mu.p[static_cast<std::size_t>(x)]) > 1e-10)
      throw std::invalid_argument("kernel_from_coupling: first marginal mismatch");
  }
  for (int y = 0; y < n; ++y) {
    if (std::fabs(coupling.col_sum(y) - mu.p[static_cast<std::size_t>(y)]) > 1e-10)
      throw std::invalid_argument("kernel_from_coupling: second marginal mismatch");
  }

  MarkovKernel kernel;
  kernel.rows.resize(static_cast<std::size_t>(n));
  kernel.defined.assign(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    const double mass = mu.p[static_cast<std::size_t>(x)];
    if (mass <= 0.0) continue;
    kernel.defined[static_cast<std::size_t>(x)] = 1;
    for (const auto& [y, w] : coupling.rows[static_cast<std::size_t>(x)])
      kernel.rows[static_cast<std::size_t>(x)].emplace_back(y, w / mass);
  }
  const double residual = kernel_stationarity_residual(kernel, mu);
  if (residual > 1e-10)
    throw std::runtime_error("kernel_from_coupling: stationarity residual above tolerance");
  return kernel;
}

double kernel_stationarity_residual(const MarkovKernel& kernel, const DiscreteMeasure& mu) {
  const int n = mu.n();
  std::vector<double> push(static_cast<std::size_t>(n), 0.0);
  for (int x = 0; x < n; ++x) {
    const double mass = mu.p[static_cast<std::size_t>(x)];
    if (mass <= 0.0) continue;
    if (!kernel.defined[static_cast<std::size_t>(x)])
      return std::numeric_limits<double>::infinity();
    for (const auto& [y, w] : kernel.rows[static_cast<std::size_t>(x)])
      push[static_cast<std::size_t>(y)] += mass * w;
  }
  double worst = 0.0;
  for (int y = 0; y < n; ++y)
    worst = std::max(worst, std::fabs(push[static_cast<std::size_t>(y)] -
                                      mu.p[static_cast<std::size_t>(y)]));
  return worst;
}

double pathspace_shift_check(const MarkovKernel& kernel, const DiscreteMeasure& mu, int k,
                             const FiniteRelation& F) {
  if (k < 2) throw std::invalid_argument("pathspace_shift_check: window must be >= 2");
  constexpr std::size_t kWindowCap = 2000000;

  // enumerate positive-probability windows x_0..x_{k-1}
  std::map<std::vector<int>, double> left;   // marginal of x_1..x_{k-1}
  std::map<std::vector<int>, double> right;  // marginal of x_0..x_{k-2}
  std::size_t count = 0;

  std::vector<int> path(static_cast<std::size_t>(k));
  struct Frame {
    int depth;
    double prob;
  };

  for (int x0 = 0; x0 < mu.n(); ++x0) {
    if (mu.p[static_cast<std::size_t>(x0)] <= 0.0) continue;
    path[0] = x0;
    // depth-first over kernel support
    std::vector<std::pair<Frame, std::size_t>> stack;
    stack.push_back({{1, mu.p[static_cast<std::size_t>(x0)]}, 0});
    while (!stack.empty()) {
      auto [frame, next_child] = stack.back();
      stack.pop_back();
      if (frame.depth == k) {
        if (++count > kWindowCap)
          throw std::runtime_error("pathspace_shift_check: window state explosion");
        std::vector<int> tail(path.begin() + 1, path.end());
        std::vector<int> head(path.begin(), path.end() - 1);
        left[tail] += frame.prob;
        right[head] += frame.prob;
        continue;
      }
      const int x = path[static_cast<std::size_t>(frame.depth - 1)];
      if (!kernel.defined[static_cast<std::size_t>(x)])
        throw std::runtime_error("pathspace_shift_check: kernel undefined on a reachable state");
      const auto& row = kernel.rows[static_cast<std::size_t>(x)];
      if (next_child < row.size()) {
        stack.push_back({frame, next_child + 1});
        const auto& [y, w] = row[next_child];
        if (w > 0.0) {
          if (!F.has_edge(x, y))
            throw std::runtime_error("pathspace_shift_check: positive window leaves Graph(F)");
          path[static_cast<std::size_t>(frame.depth)] = y;
          stack.push_back({{frame.depth + 1, frame.prob * w}, 0});
        }
      }
    }
  }

  double defect = 0.0;
  for (const auto& [w, p] : left) {
    const auto it = right.find(w);
    defect = std::max(defect, std::fabs(p - (it == right.end() ? 0.0 : it->second)));
  }
  for (const auto& [w, p] : right) {
    if (left.find(w) == left.end()) defect = std::max(defect, p);
  }
  return defect;
}

namespace {

/* iterative Kosaraju; recursion depth would not survive large grids */
std::vector<int> scc_components(const FiniteRelation& F) {
  const int n = F.n();
  std::vector<std::vector<int>> rev(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y : F.successors(x)) rev[static_cast<std::size_t>(y)].push_back(x);

  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      auto& [u, i] = stack.back();
      const auto& su = F.successors(u);
      if (i < su.size()) {
        const int v = su[i++];
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          stack.push_back({v, 0});
        }
      } else {
        order.push_back(u);
        stack.pop_back();
      }
    }
  }

  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int ncomp = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[static_cast<std::size_t>(*it)] >= 0) continue;
    std::vector<int> stack{*it};
    comp[static_cast<std::size_t>(*it)] = ncomp;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : rev[static_cast<std::size_t>(u)]) {
        if (comp[static_cast<std::size_t>(v)] < 0) {
          comp[static_cast<std::size_t>(v)] = ncomp;
          stack.push_back(v);
        }
      }
    }
    ++ncomp;
  }
  return comp;
}

}  // namespace

std::vector<int> recurrent_set(const FiniteRelation& F) {
  const int n = F.n();
  const std::vector<int> comp = scc_components(F);
  std::vector<int> size(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) ++size[static_cast<std::size_t>(comp[static_cast<std::size_t>(x)])];
  std::vector<int> out;
  for (int x = 0; x < n; ++x) {
    if (size[static_cast<std::size_t>(comp[static_cast<std::size_t>(x)])] > 1 ||
        F.has_edge(x, x))
      out.push_back(x);
  }
  return out;
}

std::vector<int> omega_limit(const FiniteRelation& F, int x) {
  if (x < 0 || x >= F.n()) throw std::invalid_argument("omega_limit: state out of range");
  const int n = F.n();
  auto reach_from = [&](const std::vector<int>& starts) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack = starts;
    for (int s : starts) seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : F.successors(u)) {
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          stack.push_back(v);
        }
      }
    }
    return seen;
  };

  const std::vector<char> from_x = reach_from({x});
  const std::vector<int> rec = recurrent_set(F);
  std::vector<int> anchors;
  for (int r : rec)
    if (from_x[static_cast<std::size_t>(r)]) anchors.push_back(r);
  if (anchors.empty()) return {};
  const std::vector<char> from_anchors = reach_from(anchors);
  std::vector<int> out;
  for (int y = 0; y < n; ++y)
    if (from_anchors[static_cast<std::size_t>(y)]) out.push_back(y);
  return out;
}

bool poincare_verify(const FiniteRelation& F, const DiscreteMeasure& mu,
                     const EdgeCoupling& coupling) {
  if (coupling.n != F.n() || mu.n() != F.n())
    throw std::invalid_argument("poincare_verify: size mismatch");
  // the certificate must actually certify
  for (int x = 0; x < F.n(); ++x) {
    for (const auto& [y, w] : coupling.rows[static_cast<std::size_t>(x)]) {
      if (w < 0.0) throw std::invalid_argument("poincare_verify: negative coupling weight");
      if (w > 0.0 && !F.has_edge(x, y))
        throw std::invalid_argument("poincare_verify: coupling mass off Graph(F)");
    }
    if (std::fabs(coupling.row_sum(x) - mu.p[static_cast<std::size_t>(x)]) > 1e-10)
      throw std::invalid_argument("poincare_verify: coupling does not certify mu (rows)");
  }
  for (int y = 0; y < F.n(); ++y)
    if (std::fabs(coupling.col_sum(y) - mu.p[static_cast<std::size_t>(y)]) > 1e-10)
      throw std::invalid_argument("poincare_verify: coupling does not certify mu (columns)");

  const std::vector<int> rec = recurrent_set(F);
  std::vector<char> is_rec(static_cast<std::size_t>(F.n()), 0);
  for (int r : rec) is_rec[static_cast<std::size_t>(r)] = 1;
  for (int x : mu.support())
    if (!is_rec[static_cast<std::size_t>(x)]) return false;
  return true;
}

std::pair<DiscreteMeasure, EdgeCoupling> some_invariant_measure(const FiniteRelation& F) {
  const int n = F.n();
  // lowest-successor walk from state 0 must close a cycle within n+1 steps
  std::vector<int> walk{0};
  std::vector<int> seen_at(static_cast<std::size_t>(n), -1);
  seen_at[0] = 0;
  int cycle_start = -1;
  while (true) {
    const int next = F.successors(walk.back()).front();
    if (seen_at[static_cast<std::size_t>(next)] >= 0) {
      cycle_start = seen_at[static_cast<std::size_t>(next)];
      break;
    }
    seen_at[static_cast<std::size_t>(next)] = static_cast<int>(walk.size());
    walk.push_back(next);
  }
  const std::vector<int> cycle(walk.begin() + cycle_start, walk.end());
  const double w = 1.0 / static_cast<double>(cycle.size());

  std::vector<double> p(static_cast<std::size_t>(n), 0.0);
  EdgeCoupling coupling;
  coupling.n = n;
  coupling.rows.resize(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const int x = cycle[i];
    const int y = cycle[(i + 1) % cycle.size()];
    p[static_cast<std::size_t>(x)] += w;
    coupling.rows[static_cast<std::size_t>(x)].emplace_back(y, w);
  }
  return {DiscreteMeasure(std::move(p)), std::move(coupling)};
}

double cesaro_invariance_defect(const MarkovKernel& kernel, const DiscreteMeasure& mu0,
                                std::size_t k) {
  if (k < 1) throw std::invalid_argument("cesaro_invariance_defect: k must be >= 1");
  const int n = mu0.n();
  if (kernel.n() != n) throw std::invalid_argument("cesaro_invariance_defect: size mismatch");

  auto push = [&](const std::vector<double>& v) {
    std::vector<double> out(static_cast<std::size_t>(n), 0.0);
    for (int x = 0; x < n; ++x) {
      const double mass = v[static_cast<std::size_t>(x)];
      if (mass == 0.0) continue;
      if (!kernel.defined[static_cast<std::size_t>(x)])
        throw std::invalid_argument("cesaro_invariance_defect: kernel undefined on reached state");
      for (const auto& [y, w] : kernel.rows[static_cast<std::size_t>(x)])
        out[static_cast<std::size_t>(y)] += mass * w;
    }
    return out;
  };

  std::vector<double> current = mu0.p;
  std::vector<double> avg(static_cast<std::size_t>(n), 0.0);
  for (std::size_t j = 0; j < k; ++j) {
    for (int i = 0; i < n; ++i)
      avg[static_cast<std::size_t>(i)] += current[static_cast<std::size_t>(i)];
    current = push(current);
  }
  for (double& v : avg) v /= static_cast<double>(k);

  const std::vector<double> pushed = push(avg);
  double tv = 0.0;
  for (int i = 0; i < n; ++i)
    tv += std::fabs(pushed[static_cast<std::size_t>(i)] - avg[static_cast<std::size_t>(i)]);
  tv *= 0.5;
  if (tv > 1.0 / static_cast<double>(k) + 1e-12)
    throw std::runtime_error("cesaro_invariance_defect: telescoping bound violated");
  return tv;
}

FiniteRelation discretize_field(const SetValuedField& F, const Grid& grid, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("discretize_field: h must be positive");
  std::vector<std::vector<int>> succ(grid.cell_count());
  for (std::size_t c = 0; c < grid.cell_count(); ++c) {
    const std::vector<CellId> img = cell_image(F, grid, h, static_cast<CellId>(c));
    succ[c].assign(img.begin(), img.end());
  }
  return FiniteRelation(std::move(succ));
}

std::vector<int> relation_image(const FiniteRelation& F, const std::vector<int>& cells,
                                std::size_t steps) {
  std::vector<int> cur = cells;
  std::sort(cur.begin(), cur.end());
  cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
  for (std::size_t s = 0; s < steps; ++s) {
    std::vector<int> next;
    for (int x : cur) {
      const auto& sx = F.successors(x);
      next.insert(next.end(), sx.begin(), sx.end());
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cur = std::move(next);
  }
  return cur;
}

FiniteRelation random_relation(int n, double edge_prob, RngStream& rng) {
  if (n < 1) throw std::invalid_argument("random_relation: n must be >= 1");
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (rng.uniform01() < edge_prob) succ[static_cast<std::size_t>(x)].push_back(y);
    if (succ[static_cast<std::size_t>(x)].empty())
      succ[static_cast<std::size_t>(x)].push_back(static_cast<int>(rng.index(static_cast<std::size_t>(n))));
  }
  return FiniteRelation(std::move(succ));
}

DiscreteMeasure random_rational_measure(int n, int denominator, RngStream& rng) {
  if (n < 1 || denominator < 1)
    throw std::invalid_argument("random_rational_measure: bad parameters");
  std::vector<int> balls(static_cast<std::size_t>(n), 0);
  for (int b = 0; b < denominator; ++b) ++balls[rng.index(static_cast<std::size_t>(n))];
  std::vector<double> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    p[static_cast<std::size_t>(i)] =
        static_cast<double>(balls[static_cast<std::size_t>(i)]) / denominator;
  return DiscreteMeasure(std::move(p));
}

}  // namespace svds
