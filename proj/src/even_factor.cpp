#include "evenfactor/even_factor.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>

namespace evenfactor {

std::string_view to_string(FactorStatus status) {
  switch (status) {
    case FactorStatus::exists: return "exists";
    case FactorStatus::not_exists: return "not_exists";
    case FactorStatus::unknown: return "unknown";
  }
  return "unknown";
}

CycleBasis cycle_space_basis(const Graph& g) {
  CycleBasis basis;
  basis.edges = g.edges();
  const std::size_t n = g.order();
  const std::size_t m = basis.edges.size();

  std::map<Edge, std::size_t> index;
  for (std::size_t i = 0; i < m; ++i) index.emplace(basis.edges[i], i);

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(n, kNone), depth(n, 0);
  std::vector<bool> seen(n, false), tree(m, false);
  const auto adj = g.adjacency_lists();
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : adj[u]) {
        if (seen[v]) continue;
        seen[v] = true;
        parent[v] = u;
        depth[v] = depth[u] + 1;
        tree[index.at(make_edge(u, v))] = true;
        queue.push_back(v);
      }
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (tree[i]) continue;
    boost::dynamic_bitset<> cycle(m);
    cycle.set(i);
    std::size_t a = basis.edges[i].u, b = basis.edges[i].v;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      cycle.set(index.at(make_edge(a, parent[a])));
      a = parent[a];
    }
    basis.cycles.push_back(std::move(cycle));
  }
  return basis;
}

std::vector<Edge> bridges(const Graph& g) {
  const CycleBasis basis = cycle_space_basis(g);
  boost::dynamic_bitset<> on_cycle(basis.edges.size());
  for (const auto& c : basis.cycles) on_cycle |= c;
  std::vector<Edge> out;
  for (std::size_t i = 0; i < basis.edges.size(); ++i)
    if (!on_cycle.test(i)) out.push_back(basis.edges[i]);
  return out;
}

std::size_t cycle_space_dimension(const Graph& g) {
  return g.edge_count() + components(g).size() - g.order();
}

bool is_even_factor(const Graph& g, std::span<const Edge> edges) {
  std::vector<std::size_t> deg(g.order(), 0);
  std::vector<Edge> sorted;
  for (const Edge& raw : edges) {
    if (raw.u >= g.order() || raw.v >= g.order() || raw.u == raw.v) return false;
    const Edge e = make_edge(raw.u, raw.v);
    if (!g.adjacent(e.u, e.v)) return false;
    sorted.push_back(e);
    ++deg[e.u];
    ++deg[e.v];
  }
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  return std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d >= 2 && d % 2 == 0; });
}

namespace {

class EvenSubgraphSearch {
 public:
  EvenSubgraphSearch(std::size_t n, std::vector<Edge> edges, std::uint64_t max_candidates)
      : edges_(std::move(edges)), incident_(n), max_candidates_(max_candidates) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      incident_[edges_[i].u].push_back(i);
      incident_[edges_[i].v].push_back(i);
    }
  }

  EvenFactorResult run() {
    State st;
    st.value.assign(edges_.size(), kOpen);
    st.chosen.assign(incident_.size(), 0);
    st.open.resize(incident_.size());
    std::vector<std::size_t> queue;
    for (std::size_t v = 0; v < incident_.size(); ++v) {
      st.open[v] = incident_[v].size();
      queue.push_back(v);
    }
    EvenFactorResult result;
    if (propagate(st, queue) && search(st)) {
      result.status = FactorStatus::exists;
      std::vector<Edge> cert;
      for (std::size_t i = 0; i < edges_.size(); ++i)
        if (solution_.value[i] == 1) cert.push_back(edges_[i]);
      result.certificate = std::move(cert);
    } else {
      result.status = capped_ ? FactorStatus::unknown : FactorStatus::not_exists;
    }
    result.search_cost = candidates_;
    return result;
  }

 private:
  static constexpr signed char kOpen = -1;

  struct State {
    std::vector<signed char> value;
    std::vector<std::size_t> chosen;
    std::vector<std::size_t> open;
  };

  void assign(State& st, std::size_t e, signed char val, std::vector<std::size_t>& queue) const {
    st.value[e] = val;
    for (std::size_t w : {edges_[e].u, edges_[e].v}) {
      --st.open[w];
      st.chosen[w] += static_cast<std::size_t>(val);
      queue.push_back(w);
    }
  }

  // Enforces: a closed vertex has positive even degree; a vertex with one
  // open edge has that edge's value fixed by parity.
  bool propagate(State& st, std::vector<std::size_t>& queue) const {
    while (!queue.empty()) {
      const std::size_t v = queue.back();
      queue.pop_back();
      if (st.open[v] == 0) {
        if (st.chosen[v] == 0 || st.chosen[v] % 2 != 0) return false;
      } else if (st.open[v] == 1) {
        signed char forced;
        if (st.chosen[v] % 2 == 1) forced = 1;
        else if (st.chosen[v] >= 2) forced = 0;
        else return false;
        for (std::size_t e : incident_[v]) {
          if (st.value[e] == kOpen) {
            assign(st, e, forced, queue);
            break;
          }
        }
      }
    }
    return true;
  }

  bool search(const State& st) {
    std::size_t pick = incident_.size();
    for (std::size_t v = 0; v < incident_.size(); ++v)
      if (st.open[v] > 0 && (pick == incident_.size() || st.open[v] < st.open[pick])) pick = v;
    if (pick == incident_.size()) {
      solution_ = st;
      return true;
    }

    std::vector<std::size_t> free_edges;
    for (std::size_t e : incident_[pick])
      if (st.value[e] == kOpen) free_edges.push_back(e);
    const std::size_t k = free_edges.size();
    const std::uint64_t limit = k >= 64 ? std::numeric_limits<std::uint64_t>::max()
                                        : (std::uint64_t{1} << k) - 1;
    for (std::uint64_t mask = 0;; ++mask) {
      const auto total = st.chosen[pick] + static_cast<std::size_t>(std::popcount(mask));
      if (total >= 2 && total % 2 == 0) {
        if (++candidates_ > max_candidates_) {
          capped_ = true;
          return false;
        }
        State next = st;
        std::vector<std::size_t> queue;
        for (std::size_t i = 0; i < k; ++i)
          assign(next, free_edges[i], static_cast<signed char>((mask >> i) & 1u), queue);
        if (propagate(next, queue) && search(next)) return true;
        if (capped_) return false;
      }
      if (mask == limit) break;
    }
    return false;
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
  std::uint64_t max_candidates_;
  std::uint64_t candidates_ = 0;
  bool capped_ = false;
  State solution_;
};

}  // namespace

EvenFactorResult has_even_factor(const Graph& g, const SearchCaps& caps) {
  const std::size_t n = g.order();
  if (n == 0) return {FactorStatus::exists, std::vector<Edge>{}, 0};
  for (std::size_t v = 0; v < n; ++v)
    if (g.degree(v) <= 1) return {FactorStatus::not_exists, std::nullopt, 0};

  Graph core = g;
  for (const Edge& b : bridges(g)) core = core.without_edge(b.u, b.v);
  for (std::size_t v = 0; v < n; ++v)
    if (core.degree(v) <= 1) return {FactorStatus::not_exists, std::nullopt, 0};

  if (cycle_space_dimension(core) > caps.max_dim) return {FactorStatus::unknown, std::nullopt, 0};

  EvenSubgraphSearch search(n, core.edges(), caps.max_candidates);
  EvenFactorResult result = search.run();
  if (result.status == FactorStatus::exists && !is_even_factor(g, *result.certificate))
    throw std::logic_error("even-factor search produced an invalid certificate");
  return result;
}

EvenFactorResult has_even_factor_naive(const Graph& g) {
  const std::vector<Edge> edges = g.edges();
  const std::size_t m = edges.size();
  if (m > kNaiveEdgeCap) throw std::invalid_argument("naive even-factor oracle: too many edges");
  const std::size_t n = g.order();

  std::vector<std::size_t> deg(n, 0);
  std::size_t bad = n;  // vertices whose degree is zero or odd
  auto is_bad = [](std::size_t d) { return d == 0 || d % 2 == 1; };
  std::uint64_t current = 0;
  const std::uint64_t total = std::uint64_t{1} << m;

  EvenFactorResult result;
  for (std::uint64_t step = 0; step < total; ++step) {
    if (step > 0) {
      const auto flip = static_cast<std::size_t>(std::countr_zero(step));
      const bool adding = ((current >> flip) & 1u) == 0;
      current ^= std::uint64_t{1} << flip;
      for (std::size_t w : {edges[flip].u, edges[flip].v}) {
        bad -= is_bad(deg[w]) ? 1 : 0;
        deg[w] = adding ? deg[w] + 1 : deg[w] - 1;
        bad += is_bad(deg[w]) ? 1 : 0;
      }
    }
    ++result.search_cost;
    if (bad == 0) {
      std::vector<Edge> cert;
      for (std::size_t i = 0; i < m; ++i)
        if ((current >> i) & 1u) cert.push_back(edges[i]);
      result.status = FactorStatus::exists;
      result.certificate = std::move(cert);
      return result;
    }
  }
  result.status = FactorStatus::not_exists;
  return result;
}

ConditionReport check_yan_kano_condition(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kConditionOrderCap)
    throw std::invalid_argument("Yan-Kano condition check: graph order exceeds enumeration cap");

  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= std::uint32_t{1} << e.v;
    adj[e.v] |= std::uint32_t{1} << e.u;
  }
  const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;

  auto odd_components = [&](std::uint32_t removed) {
    std::uint32_t unseen = all & ~removed;
    std::size_t odd = 0;
    while (unseen != 0) {
      std::uint32_t comp = unseen & (~unseen + 1);
      std::uint32_t frontier = comp;
      while (frontier != 0) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
        frontier = next & unseen & ~comp;
        comp |= frontier;
      }
      unseen &= ~comp;
      odd += static_cast<std::size_t>(std::popcount(comp)) % 2;
    }
    return odd;
  };

  ConditionReport report;
  for (std::uint64_t s = 0; s <= all; ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size < 2) continue;
    const std::size_t odd = odd_components(static_cast<std::uint32_t>(s));
    if (odd >= size) {
      report.holds = false;
      report.witness = VertexSet(n, s);
      report.witness_odd_components = odd;
      return report;
    }
  }
  return report;
}

}  // namespace evenfactor
