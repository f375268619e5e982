#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "evenfactor/even_factor.hpp"
#include "evenfactor/graph.hpp"
#include "evenfactor/thresholds.hpp"

namespace evenfactor {

/// SplitMix64 (Steele, Lea, Flood 2014). 64-bit state, portable output.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, bound), bound > 0, by rejection (no modulo bias).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform double in [0, 1) from the top 53 bits.
  double unit();

 private:
  std::uint64_t state_;
};

/// Erdos-Renyi G(n, p), pairs visited in lexicographic order.
Graph random_graph(std::size_t n, double p, SplitMix64& rng);
/// G(n, p) redrawn until connected; std::nullopt after `attempts` failures.
std::optional<Graph> random_connected_graph(std::size_t n, double p, SplitMix64& rng,
                                            int attempts = 1000);
/// K_n minus a uniformly random k-subset of its edges.
Graph complement_sample(std::size_t n, std::size_t k, SplitMix64& rng);

struct SweepRow {
  std::uint64_t row_id = 0;
  std::string graph6;
  std::size_t n = 0;
  std::optional<std::size_t> delta;
  std::size_t e = 0;
  std::optional<double> rho;
  std::optional<std::int64_t> e_thr;
  std::optional<double> rho_thr;
  bool meets_e = false;
  bool meets_rho = false;
  bool is_extremal = false;
  std::string oracle = "skipped";
  std::uint64_t cost_candidates = 0;
  double elapsed_ms = 0.0;
};

struct Counterexample {
  std::uint64_t row_id = 0;
  std::string graph6;
  std::string reason;
};

struct SweepReport {
  std::string campaign;
  std::uint64_t seed = 0;
  std::vector<SweepRow> rows;
  std::vector<Counterexample> counterexamples;
  /// Rows the oracle could not decide within its caps.
  std::vector<std::uint64_t> unknown;
  /// Free-form notes: extremal exclusions, sampler give-ups, summaries.
  std::vector<std::string> log;

  bool passed() const { return counterexamples.empty(); }
};

inline constexpr std::string_view kCsvHeader =
    "campaign,seed,row_id,graph6,n,delta,e,rho,e_thr,rho_thr,meets_e,meets_rho,is_extremal,"
    "oracle,cost_candidates,elapsed_ms";

std::string to_csv(const SweepReport& report);
nlohmann::ordered_json to_json(const SweepReport& report);

struct HarnessOptions {
  unsigned jobs = 1;
  bool timings = false;
  SearchCaps caps;
};

/// Runs fn(i) for i in [0, count) on `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn);

/// Merge monotonicity: for K_s v (K_{n1} u ... u K_{nt}) with parts >= p and
/// n1 < n-s-p(t-1), both e and rho are strictly below those of
/// K_s v (K_{n-s-p(t-1)} u (t-1)K_p). Rows describe the left graph; e_thr and
/// rho_thr hold the right graph's values.
SweepReport lemma_merge_sweep(std::size_t max_n, std::size_t max_s, const std::vector<std::size_t>& ps,
                              const HarnessOptions& options = {});

enum class SoundnessVariant { edges, spectral };

/// Samples dense connected graphs with delta(G) >= delta meeting the chosen
/// threshold and checks that the oracle finds an even factor whenever the
/// verdict (with delta as the minimum-degree parameter) guarantees one.
SweepReport soundness_sweep(const std::vector<std::size_t>& ns, std::size_t delta,
                            std::size_t samples, std::uint64_t seed, SoundnessVariant which,
                            const HarnessOptions& options = {});

struct TightnessCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct TightnessReport {
  std::size_t n = 0;
  std::size_t delta = 0;
  std::optional<std::string> refused;
  std::string graph6;
  std::vector<TightnessCheck> checks;
  /// Oracle status on the extremal graph itself; recorded, never asserted.
  FactorStatus oracle_finding = FactorStatus::unknown;
  std::optional<std::vector<Edge>> oracle_certificate;
  SweepReport supergraphs;

  bool passed() const;
};

TightnessReport tightness_report(std::size_t n, std::size_t delta, const HarnessOptions& options = {});
nlohmann::ordered_json to_json(const TightnessReport& report);

/// rho(G + e) > rho(G) - 2 tol for random connected G and random non-edge e.
/// rho_thr holds rho(G + e).
SweepReport subgraph_monotonicity_sweep(std::size_t samples, std::uint64_t seed,
                                        const HarnessOptions& options = {});

}  // namespace evenfactor
