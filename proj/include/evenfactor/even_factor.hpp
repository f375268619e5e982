#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "evenfactor/graph.hpp"

namespace evenfactor {

enum class FactorStatus { exists, not_exists, unknown };

std::string_view to_string(FactorStatus status);

struct EvenFactorResult {
  FactorStatus status = FactorStatus::unknown;
  /// Present iff status == exists; edges of a spanning subgraph in which
  /// every vertex has positive even degree.
  std::optional<std::vector<Edge>> certificate;
  /// Number of candidate assignments (search) or edge subsets (naive) examined.
  std::uint64_t search_cost = 0;
};

struct SearchCaps {
  std::size_t max_dim = 40;
  std::uint64_t max_candidates = std::uint64_t{1} << 30;
};

/// Fundamental cycles of a BFS spanning forest. `cycles[i]` is a bitset over
/// indices into `edges` (which is g.edges()).
struct CycleBasis {
  std::vector<Edge> edges;
  std::vector<boost::dynamic_bitset<>> cycles;
};

CycleBasis cycle_space_basis(const Graph& g);

/// Edges that lie on no cycle.
std::vector<Edge> bridges(const Graph& g);

/// m - n + c.
std::size_t cycle_space_dimension(const Graph& g);

/**
 * Exact even-factor decision.
 *
 * Bridges are dropped first (no even subgraph uses one) and any vertex left
 * with degree < 2 answers not_exists. The remaining search runs over even
 * subgraphs of the bridgeless graph: pick the unfinished vertex with the
 * fewest undecided edges, branch over parity-consistent choices for those
 * edges, and propagate forced edges at vertices with one undecided edge left.
 * Returns unknown when the cycle space is wider than caps.max_dim or more than
 * caps.max_candidates branches are tried.
 */
EvenFactorResult has_even_factor(const Graph& g, const SearchCaps& caps = {});

inline constexpr std::size_t kNaiveEdgeCap = 24;

/// Enumerates all 2^m edge subsets (Gray order). Throws std::invalid_argument
/// when m > kNaiveEdgeCap.
EvenFactorResult has_even_factor_naive(const Graph& g);

/// Independent check: every listed edge is in g, no repeats, and every vertex
/// of g has positive even degree in the listed subgraph.
bool is_even_factor(const Graph& g, std::span<const Edge> edges);

struct ConditionReport {
  bool holds = true;
  /// First violating S (increasing bitmask order); present iff !holds.
  std::optional<VertexSet> witness;
  std::size_t witness_odd_components = 0;
};

inline constexpr std::size_t kConditionOrderCap = 24;

/// o(G - S) < |S| for every S with |S| >= 2. Throws std::invalid_argument when
/// n > kConditionOrderCap.
ConditionReport check_yan_kano_condition(const Graph& g);

}  // namespace evenfactor
