#include "pcm/measures.hpp"

#include <algorithm>
#include <string>

#include "pcm/error.hpp"

namespace pcm {

std::vector<TriadProduct> specified_triads(const PartialMatrix& m) {
  std::vector<TriadProduct> out;
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!m.specified(i, j)) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!m.specified(j, k) || !m.specified(k, i)) continue;
        out.push_back({i, j, k, m.at(i, j) * m.at(j, k) * m.at(k, i)});
      }
    }
  }
  return out;
}

double mt(const PartialMatrix& m) {
  double best = 1.0;
  for (const TriadProduct& t : specified_triads(m)) best = std::max(best, t.worst());
  return best;
}

double mt(const ReciprocalMatrix& m) { return mt(m.partial()); }

std::optional<OrientedTriad> max_triad(const PartialMatrix& m) {
  std::optional<OrientedTriad> best;
  for (const TriadProduct& t : specified_triads(m)) {
    const double w = t.worst();
    if (best && w <= best->value) continue;
    if (t.value >= 1.0) {
      best = OrientedTriad{{t.i, t.j, t.k}, t.value};
    } else {
      best = OrientedTriad{{t.k, t.j, t.i}, t.reversed()};
    }
  }
  return best;
}

bool is_pcm(const PartialMatrix& m, const Tolerances& tol) { return mt(m) <= 1.0 + tol.cons; }

double cycle_product(const PartialMatrix& m, const std::vector<std::size_t>& cycle) {
  double p = 1.0;
  for (std::size_t idx = 0; idx < cycle.size(); ++idx) {
    p *= m.at(cycle[idx], cycle[(idx + 1) % cycle.size()]);
  }
  return p;
}

PcPlusResult check_pc_plus(const PartialMatrix& m, const Tolerances& tol) {
  const std::size_t n = m.size();
  const SpecGraph g = SpecGraph::from_matrix(m);
  PcPlusResult result;
  result.weights.assign(n, 1.0);

  std::vector<BfsTree> trees;
  std::vector<std::size_t> tree_of(n, 0);
  for (const auto& component : connected_components(g)) {
    BfsTree tree = bfs_tree(g, component.front());
    for (std::size_t v : tree.order) {
      tree_of[v] = trees.size();
      if (tree.parent[v]) {
        const std::size_t p = *tree.parent[v];
        // a_pv = w_p / w_v
        result.weights[v] = result.weights[p] / m.at(p, v);
      }
    }
    trees.push_back(std::move(tree));
  }

  for (const Edge& e : g.edges()) {
    const double expected = result.weights[e.a] / result.weights[e.b];
    if (approx_equal(m.at(e.a, e.b), expected, tol.cons)) continue;
    result.pc_plus = false;
    result.violating_edge = e;
    // Path b -> ... -> a in the tree, closed by the edge a -> b.
    result.cycle = normalize_cycle(tree_path(trees[tree_of[e.a]], e.b, e.a));
    result.cycle_product = cycle_product(m, result.cycle);
    break;
  }
  return result;
}

bool is_pc_plus(const PartialMatrix& m, const Tolerances& tol) { return check_pc_plus(m, tol).pc_plus; }

TriadSets triad_sets_for_entry(const PartialMatrix& m, std::size_t i, std::size_t k) {
  if (i == k || m.specified(i, k)) {
    throw Error(ErrorCode::EntrySpecified,
                "entry (" + std::to_string(i + 1) + "," + std::to_string(k + 1) + ") is specified", {i, k});
  }
  TriadSets sets;
  sets.c = specified_triads(m);
  sets.neighbors = common_neighbors(SpecGraph::from_matrix(m), i, k);
  for (std::size_t j : sets.neighbors) sets.s.push_back(m.at(i, j) * m.at(j, k));
  if (!sets.s.empty()) {
    const auto [lo, hi] = std::minmax_element(sets.s.begin(), sets.s.end());
    sets.min_s = *lo;
    sets.max_s = *hi;
  }
  return sets;
}

std::vector<double> entry_triad_products(const TriadSets& sets, double x) {
  std::vector<double> out;
  out.reserve(2 * sets.s.size());
  for (double s : sets.s) {
    out.push_back(s / x);
    out.push_back(x / s);
  }
  return out;
}

double koczkodaj_index(const PartialMatrix& m) { return 1.0 - 1.0 / mt(m); }

}  // namespace pcm
