#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "json.hpp"

#include "evenfactor/graph.hpp"

namespace evenfactor {

/// Size threshold: e(K_delta v (K_{n-2delta+1} u (delta-1)K_1)) in closed form.
/// Requires n >= 2 delta.
std::int64_t edge_threshold(std::int64_t n, std::int64_t delta);

/// Spectral radius of the same extremal graph, as the largest root of the
/// characteristic cubic of its equitable quotient matrix. Requires n >= 2 delta.
double spectral_threshold(std::int64_t n, std::int64_t delta);

enum class Theorem {
  size,      // size (edge-count) condition
  spectral,  // spectral-radius condition
};

/// Hypotheses on (n, delta): even n with n >= max(6d-4, (d^2+7d+4)/6) for the
/// size condition, n >= max(5d-3, d^2/3+d) for the spectral one. Integer
/// arithmetic only. Throws std::invalid_argument for delta < 2.
bool applicability(std::int64_t n, std::int64_t delta, Theorem theorem);

/// (n, delta) when g is isomorphic to the extremal graph for those
/// parameters, decided from degree classes and their adjacency structure.
std::optional<std::pair<std::size_t, std::size_t>> recognize_extremal(const Graph& g);

enum class Guarantee {
  by_size,
  by_spectral,
  extremal_exception,
  none,
};

std::string_view to_string(Guarantee g);

enum class VerdictMode { edges, spectral, both };

/// Comparison slack for rho(G) >= theta; both come out of floating-point
/// routines that agree to ~1e-12 on the extremal graph itself.
inline constexpr double kSpectralCompareTol = 1e-9;

struct Verdict {
  std::size_t n = 0;
  std::optional<std::size_t> delta_G;
  bool thm11_applicable = false;
  bool thm12_applicable = false;
  std::optional<std::int64_t> edge_threshold;
  std::optional<double> spectral_threshold;
  std::size_t e_G = 0;
  std::optional<double> rho_G;
  bool meets_edge = false;
  bool meets_spectral = false;
  bool is_extremal = false;
  Guarantee guarantee = Guarantee::none;
  std::string reason;
};

/// Reports what the size and spectral conditions imply for g. Never runs the
/// even-factor oracle. `delta_override` replaces delta(G) for what-if queries.
Verdict verdict(const Graph& g, VerdictMode which,
                std::optional<std::size_t> delta_override = std::nullopt);

nlohmann::ordered_json to_json(const Verdict& v);

}  // namespace evenfactor
