#pragma once

// Brute-force reference computations. Nothing here calls into the triad,
// cycle or interval code it is meant to check; only the matrix container is
// shared.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pcm/matrix.hpp"

namespace pcm::oracle {

/// Maximum of a_ij * a_jk * a_ki over all ordered triples of distinct
/// indices with all three entries specified; 1 if there is none.
double brute_mt(const PartialMatrix& m);

struct CycleProduct {
  /// Simple cycle, smallest vertex first; each cycle is listed once per
  /// direction-free vertex sequence.
  std::vector<std::size_t> cycle;
  double product = 1.0;
};

/// Every simple cycle of length >= 3 over specified entries, with its
/// product. Throws TooLarge for n > 8.
std::vector<CycleProduct> brute_cycle_products(const PartialMatrix& m);

/// All cycle products equal 1 within `tol` (relative).
bool brute_pc_plus(const PartialMatrix& m, double tol);

struct GridSpec {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t points = 10000;
};

/// Log-uniform samples lo * (hi/lo)^(t/(points-1)), t = 0..points-1.
std::vector<double> grid_points(const GridSpec& grid);

/// Smallest and largest grid x for which filling (i, k) with x keeps
/// brute_mt within brute_mt(m) * (1 + tol_cmp); empty when no grid point does.
std::optional<std::pair<double, double>> grid_interval(const PartialMatrix& m, std::size_t i, std::size_t k,
                                                       const GridSpec& grid, double tol_cmp = 1e-9);

/// The x on the grid minimizing the largest triad product through (i, k),
/// with that product; requires at least one common specified neighbour.
std::pair<double, double> grid_minimax(const PartialMatrix& m, std::size_t i, std::size_t k, const GridSpec& grid);

}  // namespace pcm::oracle
