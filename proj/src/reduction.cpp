#include "pcm/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "pcm/error.hpp"

namespace pcm {

WorstTriad worst_triad(const ReciprocalMatrix& m, const Tolerances& tol) {
  if (m.size() < 3) throw Error(ErrorCode::TooSmall, "a triad needs at least 3 alternatives");
  const auto triads = specified_triads(m.partial());

  double top = 1.0;
  for (const TriadProduct& t : triads) top = std::max(top, t.worst());
  const double cutoff = top / (1.0 + tol.cmp);

  WorstTriad out;
  std::size_t near_max = 0;
  bool picked = false;
  for (const TriadProduct& t : triads) {
    for (double v : {t.value, t.reversed()}) {
      if (v >= cutoff) ++near_max;
    }
    if (!picked && t.worst() >= cutoff) {
      out.triad = t.value >= 1.0 ? OrientedTriad{{t.i, t.j, t.k}, t.value}
                                 : OrientedTriad{{t.k, t.j, t.i}, t.reversed()};
      picked = true;
    }
  }
  out.tie = near_max > 1;
  return out;
}

namespace {

struct Candidate {
  PartialMatrix matrix;
  ReductionStep step;
};

Candidate resolve_entry(const ReciprocalMatrix& m, Edge e) {
  Candidate c{m.partial().without_entry(e.a, e.b), {}};
  c.step.edge = e;
  c.step.old_value = m(e.a, e.b);
  c.step.interval = feasible_interval(c.matrix, e.a, e.b);
  c.step.new_value = select_value(c.step.interval, Selection::Minimax);
  c.matrix.set(e.a, e.b, c.step.new_value);
  c.step.mt_after = mt(c.matrix);
  return c;
}

}  // namespace

StepResult reduce_step(const ReciprocalMatrix& m, EdgeRule rule, const Tolerances& tol) {
  const WorstTriad worst = worst_triad(m, tol);
  const auto& [p, q, r] = worst.triad.cycle;

  std::vector<Edge> edges;
  if (rule == EdgeRule::OuterPair) {
    edges.push_back(Edge::make(std::min({p, q, r}), std::max({p, q, r})));
  } else {
    edges = {Edge::make(p, q), Edge::make(q, r), Edge::make(r, p)};
    std::sort(edges.begin(), edges.end());
  }

  std::vector<Candidate> candidates;
  for (const Edge& e : edges) candidates.push_back(resolve_entry(m, e));
  double lowest = candidates.front().step.mt_after;
  for (const Candidate& c : candidates) lowest = std::min(lowest, c.step.mt_after);

  for (Candidate& c : candidates) {
    if (c.step.mt_after > lowest * (1.0 + tol.cmp)) continue;
    c.step.mt_before = mt(m);
    c.step.tie = worst.tie;
    return StepResult{ReciprocalMatrix(std::move(c.matrix)), c.step};
  }
  // Unreachable: the lowest candidate always qualifies.
  throw Error(ErrorCode::InvalidArgument, "no reduction candidate");
}

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::TargetReached: return "target_reached";
    case StopReason::MaxSteps: return "max_steps";
    case StopReason::TieEncountered: return "tie_encountered";
    case StopReason::NoStrictDecrease: return "no_strict_decrease";
  }
  return "unknown";
}

ReductionTrace reduce(const ReciprocalMatrix& m, double target_mt, std::size_t max_steps, EdgeRule rule,
                      const Tolerances& tol) {
  tol.check();
  if (!(target_mt >= 1.0)) throw Error(ErrorCode::InvalidArgument, "target MT must be at least 1");
  if (m.size() < 3) throw Error(ErrorCode::TooSmall, "reduction needs at least 3 alternatives");

  ReductionTrace trace{{}, StopReason::TargetReached, m};
  while (true) {
    const double current = mt(trace.result);
    if (current <= target_mt * (1.0 + tol.cmp)) {
      trace.stop_reason = StopReason::TargetReached;
      break;
    }
    if (trace.steps.size() >= max_steps) {
      trace.stop_reason = StopReason::MaxSteps;
      break;
    }
    StepResult next = reduce_step(trace.result, rule, tol);
    if (!(next.step.mt_after < current * (1.0 - tol.cmp))) {
      trace.stop_reason = next.step.tie ? StopReason::TieEncountered : StopReason::NoStrictDecrease;
      break;
    }
    trace.steps.push_back(next.step);
    trace.result = std::move(next.matrix);
  }
  return trace;
}

}  // namespace pcm
