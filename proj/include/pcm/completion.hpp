#pragma once

#include <cstddef>
#include <vector>

#include "pcm/graph.hpp"
#include "pcm/matrix.hpp"

namespace pcm {

/// Values x for one unspecified entry that keep MT at `mt_context`:
/// [max S / MT, MT * min S]. `minimax` = sqrt(max S * min S) minimizes the
/// largest new triad product, which then equals `minimax_value`.
struct FeasibleInterval {
  double lo = 0.0;
  double hi = 0.0;
  double minimax = 1.0;
  double minimax_value = 1.0;
  double mt_context = 1.0;
  /// No common specified neighbour: nothing constrains x.
  bool unconstrained = false;

  bool contains(double x, double tol) const { return x >= lo * (1.0 - tol) && x <= hi * (1.0 + tol); }
  bool empty(double tol) const { return lo > hi * (1.0 + tol); }
};

/// The interval for (i, k) with the current mt(m) as context. With no
/// common neighbour the interval is (min positive double, +inf) and minimax
/// is 1. Throws EntrySpecified.
FeasibleInterval feasible_interval(const PartialMatrix& m, std::size_t i, std::size_t k);

enum class Selection { Minimax, Midpoint, Lo, Hi };

double select_value(const FeasibleInterval& interval, Selection selection);

/// The value a_ij * a_jk forced on (i, k) by the smallest common neighbour j.
/// Throws EntrySpecified, NoCommonNeighbor, or NeighborDisagreement when two
/// neighbours force different values.
double complete_one_entry_consistent(const PartialMatrix& m, std::size_t i, std::size_t k,
                                     const Tolerances& tol = {});

/// Cross-block parameters: C = k * u * v^(-T) with u column `u_col` of the
/// first block and v column `v_col` of the second (both block-local).
struct JoinOptions {
  double k = 1.0;
  std::size_t u_col = 0;
  std::size_t v_col = 0;
};

/// [[A, C], [C^(-T), B]] with C = k * u * v^(-T). MT of the result is
/// max(MT(A), MT(B)); consistent blocks give a consistent result.
ReciprocalMatrix join_blocks(const ReciprocalMatrix& a, const ReciprocalMatrix& b, std::size_t u_col,
                             std::size_t v_col, double k);

/// Consistent completion of a PCM whose graph has chordal components: each
/// component is filled along its chordal ordering, then components are
/// joined. Throws NotPCM or ComponentNotChordal (witness: chordless cycle).
ReciprocalMatrix complete_consistent_chordal(const PartialMatrix& m, const Tolerances& tol = {},
                                             OrderingRule rule = OrderingRule::Descending,
                                             const JoinOptions& join = {});

/// Consistent completion of a PC+ matrix of any pattern, through
/// spanning-forest weights. Throws NotPCPlus (witness: violating cycle).
ReciprocalMatrix complete_consistent_pc_plus(const PartialMatrix& m, const Tolerances& tol = {},
                                             const JoinOptions& join = {});

struct CompletionStep {
  Edge edge;
  FeasibleInterval interval;
  double value = 1.0;
  double mt_before = 1.0;
  double mt_after = 1.0;
};

struct CompletionReport {
  std::vector<CompletionStep> steps;
  ReciprocalMatrix result;
};

struct MtCompletionOptions {
  Selection selection = Selection::Minimax;
  OrderingRule ordering = OrderingRule::Descending;
  JoinOptions join;
};

/// Completion that keeps MT equal to that of the specified data. Each
/// component is filled along a chordal ordering, every value taken from its
/// feasible interval; components are then joined. Throws ComponentNotChordal.
CompletionReport complete_mt_preserving(const PartialMatrix& m, const MtCompletionOptions& options = {},
                                        const Tolerances& tol = {});

}  // namespace pcm
