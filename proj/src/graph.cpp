#include "evenfactor/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace evenfactor {

Edge make_edge(std::size_t a, std::size_t b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) + " " +
                                  std::to_string(e.v));
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    if (g.adjacent(e.u, e.v))
      throw std::invalid_argument("repeated edge " + std::to_string(e.u) + " " +
                                  std::to_string(e.v));
    g.add_edge(e.u, e.v);
  }
  return g;
}

void Graph::add_edge(std::size_t a, std::size_t b) {
  adj_[a].set(b);
  adj_[b].set(a);
  ++edge_count_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < order(); ++u)
    for (auto v = adj_[u].find_next(u); v != VertexSet::npos; v = adj_[u].find_next(v))
      out.push_back({u, v});
  return out;
}

std::vector<std::vector<std::size_t>> Graph::adjacency_lists() const {
  std::vector<std::vector<std::size_t>> out(order());
  for (std::size_t u = 0; u < order(); ++u)
    for (auto v = adj_[u].find_first(); v != VertexSet::npos; v = adj_[u].find_next(v))
      out[u].push_back(v);
  return out;
}

Graph Graph::with_edge(std::size_t a, std::size_t b) const {
  if (a == b || a >= order() || b >= order() || adjacent(a, b))
    throw std::invalid_argument("with_edge: not a non-edge");
  Graph g = *this;
  g.add_edge(a, b);
  return g;
}

Graph Graph::without_edge(std::size_t a, std::size_t b) const {
  if (a >= order() || b >= order() || !adjacent(a, b))
    throw std::invalid_argument("without_edge: not an edge");
  Graph g = *this;
  g.adj_[a].reset(b);
  g.adj_[b].reset(a);
  --g.edge_count_;
  return g;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < order(); ++u)
    for (std::size_t v = u + 1; v < order(); ++v)
      if (!adjacent(u, v)) out.push_back({u, v});
  return out;
}

Graph Graph::induced(const VertexSet& keep) const {
  std::vector<std::size_t> label(order(), 0);
  std::size_t k = 0;
  for (auto v = keep.find_first(); v != VertexSet::npos; v = keep.find_next(v)) label[v] = k++;
  Graph g(k);
  for (const Edge& e : edges())
    if (keep.test(e.u) && keep.test(e.v)) g.add_edge(label[e.u], label[e.v]);
  return g;
}

void FamilySpec::validate() const {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) throw std::invalid_argument("family part sizes must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("family parts must be non-increasing");
  }
}

std::size_t FamilySpec::order() const {
  return std::accumulate(parts.begin(), parts.end(), core);
}

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

Graph disjoint_union(std::span<const Graph> parts) {
  std::size_t n = 0;
  std::vector<Edge> edges;
  for (const Graph& p : parts) {
    for (const Edge& e : p.edges()) edges.push_back({e.u + n, e.v + n});
    n += p.order();
  }
  return Graph::from_edges(n, edges);
}

Graph join(const Graph& g, const Graph& h) {
  const std::size_t ng = g.order();
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : h.edges()) edges.push_back({e.u + ng, e.v + ng});
  for (std::size_t u = 0; u < ng; ++u)
    for (std::size_t v = 0; v < h.order(); ++v) edges.push_back({u, ng + v});
  return Graph::from_edges(ng + h.order(), edges);
}

Graph build_family(const FamilySpec& spec) {
  spec.validate();
  std::vector<Graph> cliques;
  cliques.reserve(spec.parts.size());
  for (std::size_t p : spec.parts) cliques.push_back(complete(p));
  return join(complete(spec.core), disjoint_union(cliques));
}

FamilySpec extremal_spec(std::size_t n, std::size_t delta) {
  if (delta < 1) throw std::invalid_argument("extremal: delta must be at least 1");
  if (n + 1 < 2 * delta + 1)
    throw std::invalid_argument("extremal: need n - 2*delta + 1 >= 1");
  FamilySpec spec{delta, {n - 2 * delta + 1}};
  spec.parts.insert(spec.parts.end(), delta - 1, 1);
  return spec;
}

Graph extremal(std::size_t n, std::size_t delta) { return build_family(extremal_spec(n, delta)); }

std::optional<std::size_t> min_degree(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  std::size_t best = g.degree(0);
  for (std::size_t v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
  std::vector<VertexSet> out;
  VertexSet unseen = ~removed;
  while (unseen.any()) {
    VertexSet comp(g.order());
    VertexSet frontier(g.order());
    frontier.set(unseen.find_first());
    while (frontier.any()) {
      comp |= frontier;
      VertexSet next(g.order());
      for (auto v = frontier.find_first(); v != VertexSet::npos; v = frontier.find_next(v))
        next |= g.neighbors(v);
      frontier = next & unseen & ~comp;
    }
    unseen &= ~comp;
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.empty_set()); }

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

GraphStats graph_stats(const Graph& g) {
  GraphStats st;
  st.n = g.order();
  st.edge_count = g.edge_count();
  st.min_degree = min_degree(g);
  for (const VertexSet& c : components(g)) st.component_sizes.push_back(c.count());
  std::sort(st.component_sizes.begin(), st.component_sizes.end(), std::greater<>());
  st.is_connected = st.component_sizes.size() <= 1;
  return st;
}

std::size_t odd_components_minus(const Graph& g, const VertexSet& s) {
  if (s.size() != g.order()) throw std::invalid_argument("vertex set size does not match graph");
  std::size_t odd = 0;
  for (const VertexSet& c : components(g, s)) odd += c.count() % 2;
  return odd;
}

}  // namespace evenfactor
