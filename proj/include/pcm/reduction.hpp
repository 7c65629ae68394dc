#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "pcm/completion.hpp"
#include "pcm/measures.hpp"

namespace pcm {

struct WorstTriad {
  OrientedTriad triad;
  /// Another oriented triad product lies within tol.cmp of the maximum.
  bool tie = false;
};

/// The oriented triad with the largest product. Among near-maximal triads
/// (within tol.cmp) the lexicographically first index triple wins. Throws
/// TooSmall for n < 3.
WorstTriad worst_triad(const ReciprocalMatrix& m, const Tolerances& tol = {});

/// Which entries of the worst triad a reduction step may re-solve.
/// `Best` tries all three and keeps the lowest resulting MT; `OuterPair` always
/// re-solves the entry joining the smallest and largest index of the triad.
enum class EdgeRule { Best, OuterPair };

struct ReductionStep {
  Edge edge;
  /// Entry (edge.a, edge.b) before and after the step.
  double old_value = 1.0;
  double new_value = 1.0;
  FeasibleInterval interval;
  double mt_before = 1.0;
  double mt_after = 1.0;
  bool tie = false;
};

struct StepResult {
  ReciprocalMatrix matrix;
  ReductionStep step;
};

/// Unspecifies one entry of the worst triad and refills it with the minimax
/// point of its feasible interval. Only that entry pair changes.
StepResult reduce_step(const ReciprocalMatrix& m, EdgeRule rule = EdgeRule::Best, const Tolerances& tol = {});

enum class StopReason { TargetReached, MaxSteps, TieEncountered, NoStrictDecrease };

std::string_view to_string(StopReason reason);

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  StopReason stop_reason = StopReason::TargetReached;
  ReciprocalMatrix result;
};

/// Repeats reduce_step until mt <= target_mt (within tol.cmp), `max_steps`
/// steps have been taken, or a step fails to lower MT. A step that does not
/// lower MT is not applied; the stop reason then records whether the worst
/// triad was tied.
ReductionTrace reduce(const ReciprocalMatrix& m, double target_mt, std::size_t max_steps,
                      EdgeRule rule = EdgeRule::Best, const Tolerances& tol = {});

}  // namespace pcm
