#include "evenfactor/thresholds.hpp"

#include <stdexcept>
#include <vector>

#include "evenfactor/cubic.hpp"
#include "evenfactor/spectral.hpp"

namespace evenfactor {

std::int64_t edge_threshold(std::int64_t n, std::int64_t delta) {
  if (delta < 1 || n < 2 * delta) throw std::invalid_argument("edge_threshold: need n >= 2*delta");
  const std::int64_t k = n - delta + 1;
  return k * (k - 1) / 2 + delta * (delta - 1);
}

double spectral_threshold(std::int64_t n, std::int64_t delta) {
  if (delta < 2 || n < 2 * delta)
    throw std::invalid_argument("spectral_threshold: need delta >= 2 and n >= 2*delta");
  return largest_real_root(char_poly(quotient_bstar(n, delta)), static_cast<double>(n - delta));
}

bool applicability(std::int64_t n, std::int64_t delta, Theorem theorem) {
  if (delta < 2) throw std::invalid_argument("applicability: delta must be at least 2");
  if (n % 2 != 0) return false;
  switch (theorem) {
    case Theorem::size:
      return n >= 6 * delta - 4 && 6 * n >= delta * delta + 7 * delta + 4;
    case Theorem::spectral:
      return n >= 5 * delta - 3 && 3 * n >= delta * delta + 3 * delta;
  }
  return false;
}

std::optional<std::pair<std::size_t, std::size_t>> recognize_extremal(const Graph& g) {
  const std::size_t n = g.order();
  const auto delta_opt = min_degree(g);
  if (!delta_opt) return std::nullopt;
  const std::size_t delta = *delta_opt;
  if (delta < 2 || n < 2 * delta) return std::nullopt;

  VertexSet core(n), small(n), big(n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t d = g.degree(v);
    if (d == n - 1) core.set(v);
    else if (d == delta) small.set(v);
    else if (d == n - delta) big.set(v);
    else return std::nullopt;
  }
  if (core.count() != delta) return std::nullopt;

  // n == 2 delta: the single big-part vertex also has degree delta.
  if (n == 2 * delta) {
    if (small.count() != delta) return std::nullopt;
  } else if (small.count() != delta - 1 || big.count() != n - 2 * delta + 1) {
    return std::nullopt;
  }
  for (auto v = small.find_first(); v != VertexSet::npos; v = small.find_next(v))
    if (g.neighbors(v) != core) return std::nullopt;
  for (auto v = big.find_first(); v != VertexSet::npos; v = big.find_next(v)) {
    VertexSet expected = core | big;
    expected.reset(v);
    if (g.neighbors(v) != expected) return std::nullopt;
  }
  return std::make_pair(n, delta);
}

std::string_view to_string(Guarantee g) {
  switch (g) {
    case Guarantee::by_size: return "even_factor_guaranteed_by_1.1";
    case Guarantee::by_spectral: return "even_factor_guaranteed_by_1.2";
    case Guarantee::extremal_exception: return "extremal_exception";
    case Guarantee::none: return "no_guarantee";
  }
  return "no_guarantee";
}

Verdict verdict(const Graph& g, VerdictMode which, std::optional<std::size_t> delta_override) {
  Verdict v;
  v.n = g.order();
  v.e_G = g.edge_count();
  if (v.n == 0) {
    v.reason = "empty graph";
    return v;
  }
  v.delta_G = delta_override ? delta_override : min_degree(g);
  v.rho_G = spectral_radius(g).rho;

  const auto n = static_cast<std::int64_t>(v.n);
  const auto delta = static_cast<std::int64_t>(*v.delta_G);
  if (delta >= 2 && n >= 2 * delta) {
    v.edge_threshold = edge_threshold(n, delta);
    v.spectral_threshold = spectral_threshold(n, delta);
    v.meets_edge = static_cast<std::int64_t>(v.e_G) >= *v.edge_threshold;
    v.meets_spectral = *v.rho_G >= *v.spectral_threshold - kSpectralCompareTol;
  }
  if (delta >= 2) {
    v.thm11_applicable = applicability(n, delta, Theorem::size);
    v.thm12_applicable = applicability(n, delta, Theorem::spectral);
  }
  const auto rec = recognize_extremal(g);
  v.is_extremal = rec && rec->second == *v.delta_G;

  const bool connected = is_connected(g);
  std::vector<Guarantee> considered;
  if (which != VerdictMode::spectral && v.thm11_applicable && v.meets_edge)
    considered.push_back(Guarantee::by_size);
  if (which != VerdictMode::edges && v.thm12_applicable && v.meets_spectral)
    considered.push_back(Guarantee::by_spectral);

  if (!connected) {
    v.reason = "graph is disconnected";
  } else if (delta < 2) {
    v.reason = "minimum degree below 2";
  } else if (n % 2 != 0) {
    v.reason = "odd order";
  } else if (considered.empty()) {
    const bool any_applicable = (which != VerdictMode::spectral && v.thm11_applicable) ||
                                (which != VerdictMode::edges && v.thm12_applicable);
    v.reason = any_applicable ? "threshold not met" : "order below hypothesis floor";
  } else if (v.is_extremal) {
    v.guarantee = Guarantee::extremal_exception;
    v.reason = "graph is the extremal graph";
  } else {
    v.guarantee = considered.front();
  }
  return v;
}

nlohmann::ordered_json to_json(const Verdict& v) {
  nlohmann::ordered_json j;
  auto opt = [](const auto& o) { return o ? nlohmann::ordered_json(*o) : nlohmann::ordered_json(); };
  j["n"] = v.n;
  j["delta_G"] = opt(v.delta_G);
  j["thm11_applicable"] = v.thm11_applicable;
  j["thm12_applicable"] = v.thm12_applicable;
  j["edge_threshold"] = opt(v.edge_threshold);
  j["spectral_threshold"] = opt(v.spectral_threshold);
  j["e_G"] = v.e_G;
  j["rho_G"] = opt(v.rho_G);
  j["meets_edge"] = v.meets_edge;
  j["meets_spectral"] = v.meets_spectral;
  j["is_extremal"] = v.is_extremal;
  j["guarantee"] = std::string(to_string(v.guarantee));
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

}  // namespace evenfactor
