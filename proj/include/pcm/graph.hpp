#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pcm {

class PartialMatrix;

/// Unordered vertex pair, stored with a < b.
struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;

  static Edge make(std::size_t u, std::size_t v) { return u < v ? Edge{u, v} : Edge{v, u}; }
  auto operator<=>(const Edge&) const = default;
};

/// Undirected simple graph on vertices 0..n-1; edges mark specified entries.
class SpecGraph {
 public:
  SpecGraph() = default;
  explicit SpecGraph(std::size_t n);
  SpecGraph(std::size_t n, std::span<const Edge> edges);

  static SpecGraph from_matrix(const PartialMatrix& m);
  static SpecGraph complete(std::size_t n);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool has_edge(std::size_t u, std::size_t v) const { return u != v && adj_[u * n_ + v] != 0; }
  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);

  /// Ascending.
  std::vector<std::size_t> neighbors(std::size_t v) const;
  /// Lexicographic.
  std::vector<Edge> edges() const;
  /// Lexicographic.
  std::vector<Edge> non_edges() const;

  /// Subgraph induced by `vertices`, relabelled 0..m-1 in the given order.
  SpecGraph induced(std::span<const std::size_t> vertices) const;

  friend bool operator==(const SpecGraph&, const SpecGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint8_t> adj_;
};

struct ChordalityResult {
  bool chordal = true;
  /// Maximum-cardinality-search elimination order; a perfect elimination
  /// ordering exactly when `chordal` holds.
  std::vector<std::size_t> elimination_order;
  /// Chordless cycle of length >= 4 when not chordal, smallest vertex first,
  /// oriented so the second vertex is smaller than the last.
  std::vector<std::size_t> chordless_cycle;
};

ChordalityResult check_chordal(const SpecGraph& g);
bool is_chordal(const SpecGraph& g);

/// Components sorted by smallest member, members ascending.
std::vector<std::vector<std::size_t>> connected_components(const SpecGraph& g);
bool is_connected(const SpecGraph& g);

/// Which end of the lexicographic list of candidate non-edges the greedy
/// chordal fill scans first.
enum class OrderingRule { Descending, Ascending };

using ChordalOrdering = std::vector<Edge>;

/// All non-edges of a connected chordal graph, ordered so that adding them
/// one at a time keeps the graph chordal. Greedy: the first candidate in scan
/// order whose addition stays chordal is taken at each step.
/// Throws NotChordal or NotConnected.
ChordalOrdering chordal_ordering(const SpecGraph& g, OrderingRule rule = OrderingRule::Descending);

/// Breadth-first search tree from `root`; parent[root] and parents of
/// unreached vertices are empty.
struct BfsTree {
  std::size_t root = 0;
  std::vector<std::optional<std::size_t>> parent;
  std::vector<std::size_t> order;
  std::vector<std::size_t> depth;
};

BfsTree bfs_tree(const SpecGraph& g, std::size_t root);

/// Vertices on the tree path from u to v, both ends included. Both must be
/// reached by the search.
std::vector<std::size_t> tree_path(const BfsTree& tree, std::size_t u, std::size_t v);

/// BFS spanning tree from vertex 0, neighbours in ascending order.
/// Throws NotConnected.
SpecGraph spanning_tree(const SpecGraph& g);

/// All j adjacent to both i and k, ascending.
std::vector<std::size_t> common_neighbors(const SpecGraph& g, std::size_t i, std::size_t k);

/// Rotates a cycle so the smallest vertex comes first and the second vertex
/// is smaller than the last.
std::vector<std::size_t> normalize_cycle(std::vector<std::size_t> cycle);

}  // namespace pcm
