#include "pcm/completion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "pcm/error.hpp"
#include "pcm/measures.hpp"

namespace pcm {

namespace {

std::string entry_name(std::size_t i, std::size_t k) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(k + 1) + ")";
}

std::vector<std::size_t> to_global(const std::vector<std::size_t>& local, const std::vector<std::size_t>& vertices) {
  std::vector<std::size_t> out;
  out.reserve(local.size());
  for (std::size_t v : local) out.push_back(vertices[v]);
  return normalize_cycle(std::move(out));
}

// Every component must be chordal; returns the components.
std::vector<std::vector<std::size_t>> chordal_components(const SpecGraph& g) {
  auto components = connected_components(g);
  for (const auto& component : components) {
    const auto check = check_chordal(g.induced(component));
    if (!check.chordal) {
      throw Error(ErrorCode::ComponentNotChordal, "a connected component of the specification graph is not chordal",
                  to_global(check.chordless_cycle, component));
    }
  }
  return components;
}

// Fills every cross-component entry: the components are merged left to
// right, each new block attached with C = k * u * v^(-T).
void join_components(PartialMatrix& m, const std::vector<std::vector<std::size_t>>& components,
                     const JoinOptions& join) {
  if (components.size() < 2) return;
  if (!(std::isfinite(join.k) && join.k > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "join scale k must be positive");
  }
  std::vector<std::size_t> merged = components.front();
  for (std::size_t c = 1; c < components.size(); ++c) {
    const auto& block = components[c];
    if (join.u_col >= merged.size() || join.v_col >= block.size()) {
      throw Error(ErrorCode::InvalidArgument, "join column index out of range");
    }
    const std::size_t u = merged[join.u_col];
    const std::size_t v = block[join.v_col];
    for (std::size_t a : merged) {
      for (std::size_t b : block) m.set(a, b, join.k * m.at(a, u) / m.at(b, v));
    }
    merged.insert(merged.end(), block.begin(), block.end());
    std::sort(merged.begin(), merged.end());
  }
}

}  // namespace

FeasibleInterval feasible_interval(const PartialMatrix& m, std::size_t i, std::size_t k) {
  const TriadSets sets = triad_sets_for_entry(m, i, k);
  FeasibleInterval interval;
  interval.mt_context = mt(m);
  if (sets.s_empty()) {
    interval.lo = std::numeric_limits<double>::min();
    interval.hi = std::numeric_limits<double>::infinity();
    interval.unconstrained = true;
    return interval;
  }
  const double max_s = *sets.max_s;
  const double min_s = *sets.min_s;
  interval.lo = max_s / interval.mt_context;
  interval.hi = interval.mt_context * min_s;
  interval.minimax = std::sqrt(max_s * min_s);
  interval.minimax_value = std::sqrt(max_s / min_s);
  return interval;
}

double select_value(const FeasibleInterval& interval, Selection selection) {
  if (interval.unconstrained) return 1.0;
  switch (selection) {
    case Selection::Minimax: return interval.minimax;
    case Selection::Midpoint: return 0.5 * (interval.lo + interval.hi);
    case Selection::Lo: return interval.lo;
    case Selection::Hi: return interval.hi;
  }
  return interval.minimax;
}

double complete_one_entry_consistent(const PartialMatrix& m, std::size_t i, std::size_t k, const Tolerances& tol) {
  if (i == k || m.specified(i, k)) {
    throw Error(ErrorCode::EntrySpecified, "entry " + entry_name(i, k) + " is specified", {i, k});
  }
  const auto neighbors = common_neighbors(SpecGraph::from_matrix(m), i, k);
  if (neighbors.empty()) {
    throw Error(ErrorCode::NoCommonNeighbor, "entry " + entry_name(i, k) + " has no common specified neighbour",
                {i, k});
  }
  const double x = m.at(i, neighbors.front()) * m.at(neighbors.front(), k);
  for (std::size_t j : neighbors) {
    if (!approx_equal(m.at(i, j) * m.at(j, k), x, tol.cons)) {
      throw Error(ErrorCode::NeighborDisagreement,
                  "neighbours " + std::to_string(neighbors.front() + 1) + " and " + std::to_string(j + 1) +
                      " force different values on " + entry_name(i, k),
                  {i, j, k});
    }
  }
  return x;
}

ReciprocalMatrix join_blocks(const ReciprocalMatrix& a, const ReciprocalMatrix& b, std::size_t u_col,
                             std::size_t v_col, double k) {
  const std::size_t n1 = a.size();
  const std::size_t n2 = b.size();
  if (u_col >= n1 || v_col >= n2) throw Error(ErrorCode::InvalidArgument, "join column index out of range");
  PartialMatrix r(n1 + n2);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = i + 1; j < n1; ++j) r.set(i, j, a(i, j));
  }
  for (std::size_t i = 0; i < n2; ++i) {
    for (std::size_t j = i + 1; j < n2; ++j) r.set(n1 + i, n1 + j, b(i, j));
  }
  std::vector<std::size_t> first(n1);
  std::vector<std::size_t> second(n2);
  for (std::size_t i = 0; i < n1; ++i) first[i] = i;
  for (std::size_t i = 0; i < n2; ++i) second[i] = n1 + i;
  join_components(r, {first, second}, JoinOptions{k, u_col, v_col});
  return ReciprocalMatrix(std::move(r));
}

ReciprocalMatrix complete_consistent_chordal(const PartialMatrix& m, const Tolerances& tol, OrderingRule rule,
                                             const JoinOptions& join) {
  tol.check();
  if (!is_pcm(m, tol)) {
    const auto worst = max_triad(m);
    throw Error(ErrorCode::NotPCM, "a fully specified triad is inconsistent",
                {worst->cycle.begin(), worst->cycle.end()});
  }
  const SpecGraph g = SpecGraph::from_matrix(m);
  const auto components = chordal_components(g);

  PartialMatrix work = m;
  for (const auto& component : components) {
    for (const Edge& e : chordal_ordering(g.induced(component), rule)) {
      const std::size_t i = component[e.a];
      const std::size_t k = component[e.b];
      work.set(i, k, complete_one_entry_consistent(work, i, k, tol));
    }
  }
  join_components(work, components, join);
  return ReciprocalMatrix(std::move(work));
}

ReciprocalMatrix complete_consistent_pc_plus(const PartialMatrix& m, const Tolerances& tol, const JoinOptions& join) {
  tol.check();
  const PcPlusResult check = check_pc_plus(m, tol);
  if (!check.pc_plus) {
    throw Error(ErrorCode::NotPCPlus,
                "cycle product " + std::to_string(check.cycle_product) + " through entry " +
                    entry_name(check.violating_edge->a, check.violating_edge->b) + " is not 1",
                check.cycle);
  }
  const auto components = connected_components(SpecGraph::from_matrix(m));
  PartialMatrix work = m;
  for (const auto& component : components) {
    for (std::size_t a = 0; a < component.size(); ++a) {
      for (std::size_t b = a + 1; b < component.size(); ++b) {
        const std::size_t i = component[a];
        const std::size_t j = component[b];
        if (!work.specified(i, j)) work.set(i, j, check.weights[i] / check.weights[j]);
      }
    }
  }
  join_components(work, components, join);
  return ReciprocalMatrix(std::move(work));
}

CompletionReport complete_mt_preserving(const PartialMatrix& m, const MtCompletionOptions& options,
                                        const Tolerances& tol) {
  tol.check();
  const SpecGraph g = SpecGraph::from_matrix(m);
  const auto components = chordal_components(g);

  PartialMatrix work = m;
  std::vector<CompletionStep> steps;
  for (const auto& component : components) {
    SpecGraph current = g.induced(component);
    for (const Edge& e : chordal_ordering(current, options.ordering)) {
      const std::size_t i = component[e.a];
      const std::size_t k = component[e.b];

      // A chordal fill step cannot leave two common neighbours non-adjacent:
      // they would close a chordless 4-cycle with i and k.
      const auto nb = common_neighbors(current, e.a, e.b);
      for (std::size_t p = 0; p < nb.size(); ++p) {
        for (std::size_t q = p + 1; q < nb.size(); ++q) {
          if (!current.has_edge(nb[p], nb[q])) throw std::logic_error("chordal ordering step without forced chord");
        }
      }

      CompletionStep step;
      step.edge = Edge::make(i, k);
      step.mt_before = mt(work);
      step.interval = feasible_interval(work, i, k);
      if (step.interval.empty(tol.cmp)) throw std::logic_error("empty feasible interval on a chordal fill step");
      step.value = select_value(step.interval, options.selection);
      work.set(i, k, step.value);
      step.mt_after = mt(work);
      current.add_edge(e.a, e.b);
      steps.push_back(step);
    }
  }
  join_components(work, components, options.join);
  return CompletionReport{std::move(steps), ReciprocalMatrix(std::move(work))};
}

}  // namespace pcm
