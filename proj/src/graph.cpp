#include "pcm/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "pcm/error.hpp"
#include "pcm/matrix.hpp"

namespace pcm {

SpecGraph::SpecGraph(std::size_t n) : n_(n), adj_(n * n, 0) {}

SpecGraph::SpecGraph(std::size_t n, std::span<const Edge> edges) : SpecGraph(n) {
  for (const Edge& e : edges) add_edge(e.a, e.b);
}

SpecGraph SpecGraph::from_matrix(const PartialMatrix& m) {
  SpecGraph g(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m.specified(i, j)) g.add_edge(i, j);
    }
  }
  return g;
}

SpecGraph SpecGraph::complete(std::size_t n) {
  SpecGraph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

void SpecGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_ || u == v) {
    throw Error(ErrorCode::InvalidArgument,
                "invalid edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "}");
  }
  if (adj_[u * n_ + v] == 0) ++edge_count_;
  adj_[u * n_ + v] = 1;
  adj_[v * n_ + u] = 1;
}

void SpecGraph::remove_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_ || u == v) return;
  if (adj_[u * n_ + v] != 0) --edge_count_;
  adj_[u * n_ + v] = 0;
  adj_[v * n_ + u] = 0;
}

std::vector<std::size_t> SpecGraph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < n_; ++u) {
    if (has_edge(v, u)) out.push_back(u);
  }
  return out;
}

std::vector<Edge> SpecGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (has_edge(i, j)) out.push_back({i, j});
    }
  }
  return out;
}

std::vector<Edge> SpecGraph::non_edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (!has_edge(i, j)) out.push_back({i, j});
    }
  }
  return out;
}

SpecGraph SpecGraph::induced(std::span<const std::size_t> vertices) const {
  SpecGraph sub(vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (has_edge(vertices[a], vertices[b])) sub.add_edge(a, b);
    }
  }
  return sub;
}

std::vector<std::size_t> normalize_cycle(std::vector<std::size_t> cycle) {
  if (cycle.size() < 2) return cycle;
  auto smallest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), smallest, cycle.end());
  if (cycle.size() > 2 && cycle[1] > cycle.back()) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

namespace {

// Shortest path from u to w that avoids v and every other neighbour of v.
// Together with v it closes a chordless cycle.
std::optional<std::vector<std::size_t>> chordless_cycle_through(const SpecGraph& g, std::size_t v,
                                                                std::size_t u, std::size_t w) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> blocked(n, false);
  blocked[v] = true;
  for (std::size_t x : g.neighbors(v)) blocked[x] = true;
  blocked[u] = false;
  blocked[w] = false;

  std::vector<std::optional<std::size_t>> prev(n);
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{u};
  seen[u] = true;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    if (x == w) break;
    for (std::size_t y : g.neighbors(x)) {
      // u and w are non-adjacent, so the path must pass through the interior.
      if (seen[y] || blocked[y] || (x == u && y == w)) continue;
      seen[y] = true;
      prev[y] = x;
      queue.push_back(y);
    }
  }
  if (!seen[w]) return std::nullopt;

  std::vector<std::size_t> cycle{v};
  std::vector<std::size_t> path;
  for (std::optional<std::size_t> x = w; x; x = prev[*x]) path.push_back(*x);
  std::reverse(path.begin(), path.end());
  cycle.insert(cycle.end(), path.begin(), path.end());
  return normalize_cycle(std::move(cycle));
}

std::vector<std::size_t> find_chordless_cycle(const SpecGraph& g) {
  const std::size_t n = g.vertex_count();
  // Any chordless cycle of length >= 4 has a vertex v with two non-adjacent
  // cycle neighbours u, w, and the rest of the cycle avoids N[v].
  for (std::size_t v = 0; v < n; ++v) {
    const auto nb = g.neighbors(v);
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (g.has_edge(nb[a], nb[b])) continue;
        if (auto c = chordless_cycle_through(g, v, nb[a], nb[b])) return *c;
      }
    }
  }
  return {};
}

}  // namespace

ChordalityResult check_chordal(const SpecGraph& g) {
  const std::size_t n = g.vertex_count();
  ChordalityResult result;

  // Maximum cardinality search; ties go to the smallest vertex.
  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> numbered(n, false);
  std::vector<std::size_t> visit;
  visit.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::optional<std::size_t> pick;
    for (std::size_t v = 0; v < n; ++v) {
      if (!numbered[v] && (!pick || weight[v] > weight[*pick])) pick = v;
    }
    numbered[*pick] = true;
    visit.push_back(*pick);
    for (std::size_t u : g.neighbors(*pick)) {
      if (!numbered[u]) ++weight[u];
    }
  }

  result.elimination_order.assign(visit.rbegin(), visit.rend());
  std::vector<std::size_t> pos(n);
  for (std::size_t p = 0; p < n; ++p) pos[result.elimination_order[p]] = p;

  for (std::size_t v : result.elimination_order) {
    std::vector<std::size_t> later;
    for (std::size_t u : g.neighbors(v)) {
      if (pos[u] > pos[v]) later.push_back(u);
    }
    if (later.empty()) continue;
    const std::size_t parent =
        *std::min_element(later.begin(), later.end(), [&](std::size_t a, std::size_t b) { return pos[a] < pos[b]; });
    for (std::size_t w : later) {
      if (w == parent || g.has_edge(parent, w)) continue;
      result.chordal = false;
      if (auto c = chordless_cycle_through(g, v, parent, w)) {
        result.chordless_cycle = *c;
      } else {
        result.chordless_cycle = find_chordless_cycle(g);
      }
      return result;
    }
  }
  return result;
}

bool is_chordal(const SpecGraph& g) { return check_chordal(g).chordal; }

std::vector<std::vector<std::size_t>> connected_components(const SpecGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> components;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> members;
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      members.push_back(x);
      for (std::size_t y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    components.push_back(std::move(members));
  }
  return components;
}

bool is_connected(const SpecGraph& g) { return connected_components(g).size() <= 1; }

ChordalOrdering chordal_ordering(const SpecGraph& g, OrderingRule rule) {
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "chordal ordering needs a connected graph");
  const auto check = check_chordal(g);
  if (!check.chordal) throw Error(ErrorCode::NotChordal, "graph is not chordal", check.chordless_cycle);

  SpecGraph current = g;
  ChordalOrdering order;
  std::vector<Edge> remaining = g.non_edges();
  if (rule == OrderingRule::Descending) std::reverse(remaining.begin(), remaining.end());

  while (!remaining.empty()) {
    bool added = false;
    for (auto it = remaining.begin(); it != remaining.end(); ++it) {
      current.add_edge(it->a, it->b);
      if (is_chordal(current)) {
        order.push_back(*it);
        remaining.erase(it);
        added = true;
        break;
      }
      current.remove_edge(it->a, it->b);
    }
    if (!added) {
      // Unreachable for chordal input: some non-edge always keeps it chordal.
      throw Error(ErrorCode::NotChordal, "greedy chordal fill stalled");
    }
  }
  return order;
}

BfsTree bfs_tree(const SpecGraph& g, std::size_t root) {
  const std::size_t n = g.vertex_count();
  BfsTree tree;
  tree.root = root;
  tree.parent.assign(n, std::nullopt);
  tree.depth.assign(n, 0);
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    tree.order.push_back(x);
    for (std::size_t y : g.neighbors(x)) {
      if (seen[y]) continue;
      seen[y] = true;
      tree.parent[y] = x;
      tree.depth[y] = tree.depth[x] + 1;
      queue.push_back(y);
    }
  }
  return tree;
}

std::vector<std::size_t> tree_path(const BfsTree& tree, std::size_t u, std::size_t v) {
  std::vector<std::size_t> from_u{u};
  std::vector<std::size_t> from_v{v};
  while (u != v) {
    if (tree.depth[u] >= tree.depth[v]) {
      u = *tree.parent[u];
      from_u.push_back(u);
    } else {
      v = *tree.parent[v];
      from_v.push_back(v);
    }
  }
  // Both halves end at the common ancestor; keep it once.
  from_v.pop_back();
  from_u.insert(from_u.end(), from_v.rbegin(), from_v.rend());
  return from_u;
}

SpecGraph spanning_tree(const SpecGraph& g) {
  if (g.vertex_count() == 0) return g;
  const BfsTree tree = bfs_tree(g, 0);
  if (tree.order.size() != g.vertex_count()) {
    throw Error(ErrorCode::NotConnected, "spanning tree needs a connected graph");
  }
  SpecGraph t(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (tree.parent[v]) t.add_edge(*tree.parent[v], v);
  }
  return t;
}

std::vector<std::size_t> common_neighbors(const SpecGraph& g, std::size_t i, std::size_t k) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < g.vertex_count(); ++j) {
    if (j != i && j != k && g.has_edge(i, j) && g.has_edge(j, k)) out.push_back(j);
  }
  return out;
}

}  // namespace pcm
