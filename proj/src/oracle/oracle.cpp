#include "pcm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "pcm/error.hpp"

namespace pcm::oracle {

double brute_mt(const PartialMatrix& m) {
  const std::size_t n = m.size();
  double best = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        const auto ij = m.get(i, j);
        const auto jk = m.get(j, k);
        const auto ki = m.get(k, i);
        if (ij && jk && ki) best = std::max(best, *ij * *jk * *ki);
      }
    }
  }
  return best;
}

std::vector<CycleProduct> brute_cycle_products(const PartialMatrix& m) {
  const std::size_t n = m.size();
  if (n > 8) throw Error(ErrorCode::TooLarge, "cycle enumeration is limited to n <= 8");

  std::vector<CycleProduct> out;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(n, false);

  std::function<void(std::size_t, double)> extend = [&](std::size_t v, double product) {
    const std::size_t start = path.front();
    for (std::size_t u = 0; u < n; ++u) {
      if (u == v || !m.specified(v, u)) continue;
      if (u == start) {
        // Each undirected cycle is reached twice; keep one direction.
        if (path.size() >= 3 && path[1] < path.back()) out.push_back({path, product * m.at(v, u)});
        continue;
      }
      if (u < start || on_path[u]) continue;
      on_path[u] = true;
      path.push_back(u);
      extend(u, product * m.at(v, u));
      path.pop_back();
      on_path[u] = false;
    }
  };

  for (std::size_t s = 0; s < n; ++s) {
    path = {s};
    on_path.assign(n, false);
    on_path[s] = true;
    extend(s, 1.0);
  }
  return out;
}

bool brute_pc_plus(const PartialMatrix& m, double tol) {
  for (const CycleProduct& c : brute_cycle_products(m)) {
    if (std::abs(c.product - 1.0) > tol * std::max(1.0, c.product)) return false;
  }
  return true;
}

std::vector<double> grid_points(const GridSpec& grid) {
  if (!(grid.lo > 0.0 && grid.lo < grid.hi) || grid.points < 2) {
    throw Error(ErrorCode::InvalidArgument, "grid needs 0 < lo < hi and at least 2 points");
  }
  std::vector<double> xs(grid.points);
  const double span = std::log(grid.hi / grid.lo);
  for (std::size_t t = 0; t < grid.points; ++t) {
    xs[t] = grid.lo * std::exp(span * static_cast<double>(t) / static_cast<double>(grid.points - 1));
  }
  return xs;
}

std::optional<std::pair<double, double>> grid_interval(const PartialMatrix& m, std::size_t i, std::size_t k,
                                                       const GridSpec& grid, double tol_cmp) {
  const double base = brute_mt(m);
  std::optional<std::pair<double, double>> found;
  for (double x : grid_points(grid)) {
    if (brute_mt(m.with_entry(i, k, x)) > base * (1.0 + tol_cmp)) continue;
    if (!found) found = std::pair{x, x};
    found->second = x;
  }
  return found;
}

std::pair<double, double> grid_minimax(const PartialMatrix& m, std::size_t i, std::size_t k, const GridSpec& grid) {
  double best_x = 0.0;
  double best_value = std::numeric_limits<double>::infinity();
  for (double x : grid_points(grid)) {
    double worst = 0.0;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j == i || j == k || !m.specified(i, j) || !m.specified(j, k)) continue;
      const double forward = m.at(i, j) * m.at(j, k) / x;
      worst = std::max({worst, forward, 1.0 / forward});
    }
    if (worst < best_value) {
      best_value = worst;
      best_x = x;
    }
  }
  if (!std::isfinite(best_value) || best_value == 0.0) {
    throw Error(ErrorCode::InvalidArgument, "entry has no common specified neighbour");
  }
  return {best_x, best_value};
}

}  // namespace pcm::oracle
