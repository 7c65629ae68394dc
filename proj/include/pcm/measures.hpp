#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "pcm/graph.hpp"
#include "pcm/matrix.hpp"

namespace pcm {

/// The 3-cycle product c(i, j, k) = a_ij * a_jk * a_ki for i < j < k. The
/// opposite orientation c(k, j, i) is its reciprocal.
struct TriadProduct {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  double value = 1.0;

  double reversed() const { return 1.0 / value; }
  /// max(c(i,j,k), c(k,j,i)), always >= 1.
  double worst() const { return value >= 1.0 ? value : 1.0 / value; }
};

/// A 3-cycle in a fixed orientation: cycle[0] -> cycle[1] -> cycle[2] -> cycle[0].
struct OrientedTriad {
  std::array<std::size_t, 3> cycle{};
  double value = 1.0;
};

/// Every triad whose three entries are specified, lexicographic in (i, j, k).
std::vector<TriadProduct> specified_triads(const PartialMatrix& m);

/// Maximum oriented 3-cycle product over specified triads; 1 when there are none.
double mt(const PartialMatrix& m);
double mt(const ReciprocalMatrix& m);

/// The lexicographically first triad whose oriented product equals the
/// maximum, in the orientation attaining it; empty when no triad is specified.
std::optional<OrientedTriad> max_triad(const PartialMatrix& m);

/// Partial consistency: mt(m) = 1 within tol.cons.
bool is_pcm(const PartialMatrix& m, const Tolerances& tol = {});

struct PcPlusResult {
  bool pc_plus = true;
  /// Per vertex, w_i such that a_ij = w_i / w_j along the BFS spanning
  /// forest; each component's smallest vertex has weight 1.
  std::vector<double> weights;
  /// First specified entry (lexicographic) that disagrees with the weights.
  std::optional<Edge> violating_edge;
  /// Tree path closed by the violating edge, normalized.
  std::vector<std::size_t> cycle;
  /// Product of entries around `cycle` in its stored orientation.
  double cycle_product = 1.0;
};

/// Every fully specified cycle product is 1, tested through spanning-forest
/// weights: true iff a_ij = w_i / w_j within tol.cons for each specified entry.
PcPlusResult check_pc_plus(const PartialMatrix& m, const Tolerances& tol = {});
bool is_pc_plus(const PartialMatrix& m, const Tolerances& tol = {});

/// Product a_{c0 c1} a_{c1 c2} ... a_{c_last c0}; all entries must be specified.
double cycle_product(const PartialMatrix& m, const std::vector<std::size_t>& cycle);

/// Triad data around an unspecified entry (i, k).
struct TriadSets {
  /// All fully specified triads; none passes through (i, k).
  std::vector<TriadProduct> c;
  /// Common specified neighbours j of i and k, ascending.
  std::vector<std::size_t> neighbors;
  /// s_j = a_ij * a_jk, aligned with `neighbors`.
  std::vector<double> s;
  std::optional<double> max_s;
  std::optional<double> min_s;

  bool s_empty() const { return s.empty(); }
};

/// Throws EntrySpecified if (i, k) is specified.
TriadSets triad_sets_for_entry(const PartialMatrix& m, std::size_t i, std::size_t k);

/// The oriented products that filling (i, k) with x would create:
/// c(i, j, k) = s_j / x and c(k, j, i) = x / s_j for each common neighbour j.
std::vector<double> entry_triad_products(const TriadSets& sets, double x);

/// Koczkodaj-style index 1 - 1/mt(m), in [0, 1).
double koczkodaj_index(const PartialMatrix& m);

}  // namespace pcm
