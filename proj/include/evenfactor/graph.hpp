#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace evenfactor {

/// Subset of vertex indices of some graph; bit i set means vertex i is a member.
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Undirected edge, normalized so that u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  auto operator<=>(const Edge&) const = default;
};

Edge make_edge(std::size_t a, std::size_t b);

/**
 * Simple undirected graph on vertices 0..n-1 with one adjacency bitset per
 * vertex. Values are immutable once built; "modifying" operations return a
 * new graph.
 */
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  /// Throws std::invalid_argument on loops, out-of-range endpoints or
  /// repeated edges.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(std::size_t a, std::size_t b) const { return adj_[a].test(b); }
  const VertexSet& neighbors(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].count(); }

  /// All edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;
  /// Neighbor lists in increasing order.
  std::vector<std::vector<std::size_t>> adjacency_lists() const;

  Graph with_edge(std::size_t a, std::size_t b) const;
  Graph without_edge(std::size_t a, std::size_t b) const;

  /// Non-adjacent pairs (u < v) in lexicographic order.
  std::vector<Edge> non_edges() const;

  /// Subgraph induced by `keep`, relabelled in increasing index order.
  Graph induced(const VertexSet& keep) const;

  VertexSet empty_set() const { return VertexSet(order()); }

  bool operator==(const Graph& other) const = default;

 private:
  void add_edge(std::size_t a, std::size_t b);

  std::vector<VertexSet> adj_;
  std::size_t edge_count_ = 0;
};

/// Parameters of K_s v (K_{n_1} u ... u K_{n_t}).
struct FamilySpec {
  std::size_t core = 0;
  std::vector<std::size_t> parts;

  /// Throws std::invalid_argument unless parts are positive and non-increasing.
  void validate() const;
  std::size_t order() const;
};

Graph complete(std::size_t n);
Graph disjoint_union(std::span<const Graph> parts);
Graph join(const Graph& g, const Graph& h);

/// Core vertices get labels 0..s-1, then each part in the given order.
Graph build_family(const FamilySpec& spec);

/// K_delta v (K_{n-2delta+1} u (delta-1)K_1).
FamilySpec extremal_spec(std::size_t n, std::size_t delta);
Graph extremal(std::size_t n, std::size_t delta);

struct GraphStats {
  std::size_t n = 0;
  std::size_t edge_count = 0;
  std::optional<std::size_t> min_degree;  // absent when n == 0
  bool is_connected = true;
  std::vector<std::size_t> component_sizes;  // non-increasing
};

GraphStats graph_stats(const Graph& g);

std::optional<std::size_t> min_degree(const Graph& g);
bool is_connected(const Graph& g);

/// Connected components of g - removed, each as a vertex set over g's indices.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed);
std::vector<VertexSet> components(const Graph& g);

/// o(G - S): components of the graph with S deleted that have odd order.
std::size_t odd_components_minus(const Graph& g, const VertexSet& s);

}  // namespace evenfactor
