#include "evenfactor/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "evenfactor/graph_io.hpp"
#include "evenfactor/spectral.hpp"

namespace evenfactor {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("SplitMix64::below: bound must be positive");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return x % bound;
}

double SplitMix64::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Graph random_graph(std::size_t n, double p, SplitMix64& rng) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.unit() < p) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

std::optional<Graph> random_connected_graph(std::size_t n, double p, SplitMix64& rng, int attempts) {
  for (int i = 0; i < attempts; ++i) {
    Graph g = random_graph(n, p, rng);
    if (is_connected(g)) return g;
  }
  return std::nullopt;
}

Graph complement_sample(std::size_t n, std::size_t k, SplitMix64& rng) {
  std::vector<Edge> pairs = complete(n).edges();
  if (k > pairs.size()) throw std::invalid_argument("complement_sample: k exceeds C(n,2)");
  for (std::size_t i = 0; i < k; ++i) std::swap(pairs[i], pairs[i + rng.below(pairs.size() - i)]);
  return Graph::from_edges(n, std::span<const Edge>(pairs).subspan(k));
}

namespace {

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

template <class T>
std::string opt_str(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_floating_point_v<T>) return fmt_double(*v);
  else return std::to_string(*v);
}

const char* b(bool v) { return v ? "true" : "false"; }

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

SweepRow base_row(std::uint64_t id, const Graph& g) {
  SweepRow row;
  row.row_id = id;
  row.graph6 = write_graph6(g);
  row.n = g.order();
  row.delta = min_degree(g);
  row.e = g.edge_count();
  return row;
}

// Round-trip cross-check shared by every campaign.
std::optional<std::string> roundtrip_mismatch(const SweepRow& row) {
  const Graph back = parse_graph6(row.graph6);
  if (back.edge_count() != row.e || back.order() != row.n) return "graph6 round-trip changed e or n";
  return std::nullopt;
}

void enumerate_partitions(std::size_t total, std::size_t parts, std::size_t min_part,
                          std::size_t max_part, std::vector<std::size_t>& prefix,
                          std::vector<std::vector<std::size_t>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(prefix);
    return;
  }
  for (std::size_t x = std::min(max_part, total); x >= min_part; --x) {
    if (x * parts < total) break;
    if (total - x < min_part * (parts - 1)) continue;
    prefix.push_back(x);
    enumerate_partitions(total - x, parts - 1, min_part, x, prefix, out);
    prefix.pop_back();
  }
}

struct OracleOutcome {
  FactorStatus status = FactorStatus::unknown;
  std::uint64_t cost = 0;
  bool certificate_ok = false;
};

OracleOutcome run_oracle(const Graph& g, const SearchCaps& caps) {
  const EvenFactorResult r = has_even_factor(g, caps);
  OracleOutcome out{r.status, r.search_cost, false};
  if (r.status == FactorStatus::exists && r.certificate)
    out.certificate_ok = is_even_factor(g, *r.certificate);
  return out;
}

bool guaranteed(Guarantee g) { return g == Guarantee::by_size || g == Guarantee::by_spectral; }

}  // namespace

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < std::min<std::size_t>(jobs, count); ++w) {
    workers.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::string to_csv(const SweepReport& report) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const SweepRow& r : report.rows) {
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.3f", r.elapsed_ms);
    os << report.campaign << ',' << report.seed << ',' << r.row_id << ',' << r.graph6 << ',' << r.n
       << ',' << opt_str(r.delta) << ',' << r.e << ',' << opt_str(r.rho) << ',' << opt_str(r.e_thr)
       << ',' << opt_str(r.rho_thr) << ',' << b(r.meets_e) << ',' << b(r.meets_rho) << ','
       << b(r.is_extremal) << ',' << r.oracle << ',' << r.cost_candidates << ',' << elapsed << '\n';
  }
  return os.str();
}

nlohmann::ordered_json to_json(const SweepReport& report) {
  nlohmann::ordered_json j;
  j["campaign"] = report.campaign;
  j["seed"] = report.seed;
  j["rows"] = report.rows.size();
  j["passed"] = report.passed();
  auto ces = nlohmann::ordered_json::array();
  for (const auto& c : report.counterexamples)
    ces.push_back({{"row_id", c.row_id}, {"graph6", c.graph6}, {"reason", c.reason}});
  j["counterexamples"] = ces;
  j["unknown"] = report.unknown;
  j["log"] = report.log;
  return j;
}

SweepReport lemma_merge_sweep(std::size_t max_n, std::size_t max_s, const std::vector<std::size_t>& ps,
                              const HarnessOptions& options) {
  if (max_n > 16) throw std::invalid_argument("lemma_merge_sweep: max_n must be at most 16");
  struct Instance {
    FamilySpec lhs, rhs;
  };
  std::vector<Instance> instances;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (std::size_t s = 1; s <= max_s && s < n; ++s)
      for (std::size_t p : ps) {
        if (p == 0) throw std::invalid_argument("lemma_merge_sweep: p must be positive");
        for (std::size_t t = 2; t * p <= n - s; ++t) {
          const std::size_t top = n - s - p * (t - 1);
          std::vector<std::vector<std::size_t>> parts;
          std::vector<std::size_t> prefix;
          enumerate_partitions(n - s, t, p, top - 1, prefix, parts);
          FamilySpec rhs{s, {top}};
          rhs.parts.insert(rhs.parts.end(), t - 1, p);
          for (auto& pt : parts) instances.push_back({FamilySpec{s, std::move(pt)}, rhs});
        }
      }

  SweepReport report;
  report.campaign = "lemma_merge";
  report.rows.resize(instances.size());
  std::vector<std::optional<std::string>> failures(instances.size());
  parallel_for(instances.size(), options.jobs, [&](std::size_t i) {
    const auto start = Clock::now();
    const Graph left = build_family(instances[i].lhs);
    const Graph right = build_family(instances[i].rhs);
    SweepRow row = base_row(i, left);
    row.rho = spectral_radius(left).rho;
    row.e_thr = static_cast<std::int64_t>(right.edge_count());
    row.rho_thr = spectral_radius(right).rho;
    row.meets_e = static_cast<std::int64_t>(row.e) < *row.e_thr;
    row.meets_rho = *row.rho < *row.rho_thr - 1e-9;
    row.is_extremal = recognize_extremal(left).has_value();
    if (options.timings) row.elapsed_ms = ms_since(start);
    if (!row.meets_e) failures[i] = "edge count not strictly smaller after merge";
    else if (!row.meets_rho) failures[i] = "spectral radius not strictly smaller after merge";
    else failures[i] = roundtrip_mismatch(row);
    report.rows[i] = std::move(row);
  });
  for (std::size_t i = 0; i < failures.size(); ++i)
    if (failures[i]) report.counterexamples.push_back({i, report.rows[i].graph6, *failures[i]});
  report.log.push_back("instances=" + std::to_string(instances.size()));
  return report;
}

SweepReport soundness_sweep(const std::vector<std::size_t>& ns, std::size_t delta,
                            std::size_t samples, std::uint64_t seed, SoundnessVariant which,
                            const HarnessOptions& options) {
  if (delta < 2) throw std::invalid_argument("soundness_sweep: delta must be at least 2");
  constexpr int kRetryBudget = 10000;
  SweepReport report;
  report.campaign = which == SoundnessVariant::edges ? "soundness_edges" : "soundness_spectral";
  report.seed = seed;
  SplitMix64 rng(seed);

  std::vector<Graph> graphs;
  for (std::size_t n : ns) {
    if (n % 2 != 0 || n < 2 * delta)
      throw std::invalid_argument("soundness_sweep: each n must be even and at least 2*delta");
    const auto sn = static_cast<std::int64_t>(n), sd = static_cast<std::int64_t>(delta);
    const std::size_t pairs = n * (n - 1) / 2;
    const std::int64_t e_thr = edge_threshold(sn, sd);
    const double theta = spectral_threshold(sn, sd);
    std::size_t budget = pairs - static_cast<std::size_t>(e_thr);
    if (which == SoundnessVariant::spectral) {
      // rho <= sqrt(2e - n + 1) on connected graphs bounds the edges needed.
      const auto min_e = static_cast<std::size_t>(std::ceil((theta * theta + double(n) - 1) / 2 - 1e-9));
      budget = pairs - std::min(pairs, min_e);
    }
    for (std::size_t i = 0; i < samples; ++i) {
      bool accepted = false;
      for (int attempt = 0; attempt < kRetryBudget && !accepted; ++attempt) {
        Graph g = complement_sample(n, rng.below(budget + 1), rng);
        if (!is_connected(g) || min_degree(g).value_or(0) < delta) continue;
        if (which == SoundnessVariant::spectral &&
            spectral_radius(g).rho < theta - kSpectralCompareTol)
          continue;
        graphs.push_back(std::move(g));
        accepted = true;
      }
      if (!accepted)
        report.log.push_back("sampler gave up: n=" + std::to_string(n) + " sample=" + std::to_string(i));
    }
  }

  const VerdictMode mode = which == SoundnessVariant::edges ? VerdictMode::edges : VerdictMode::spectral;
  report.rows.resize(graphs.size());
  std::vector<Verdict> verdicts(graphs.size());
  std::vector<OracleOutcome> oracle(graphs.size());
  parallel_for(graphs.size(), options.jobs, [&](std::size_t i) {
    const auto start = Clock::now();
    const Graph& g = graphs[i];
    SweepRow row = base_row(i, g);
    const Verdict v = verdict(g, mode, delta);
    row.rho = v.rho_G;
    row.e_thr = v.edge_threshold;
    row.rho_thr = v.spectral_threshold;
    row.meets_e = v.meets_edge;
    row.meets_rho = v.meets_spectral;
    row.is_extremal = v.is_extremal;
    oracle[i] = run_oracle(g, options.caps);
    row.oracle = std::string(to_string(oracle[i].status));
    row.cost_candidates = oracle[i].cost;
    if (options.timings) row.elapsed_ms = ms_since(start);
    verdicts[i] = v;
    report.rows[i] = std::move(row);
  });

  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const SweepRow& row = report.rows[i];
    if (auto bad = roundtrip_mismatch(row)) report.counterexamples.push_back({i, row.graph6, *bad});
    if (verdicts[i].guarantee == Guarantee::extremal_exception) {
      report.log.push_back("row " + std::to_string(i) + ": extremal_exception, oracle " + row.oracle);
      continue;
    }
    if (!guaranteed(verdicts[i].guarantee)) {
      report.log.push_back("row " + std::to_string(i) + ": not guaranteed (" + verdicts[i].reason + ")");
      continue;
    }
    switch (oracle[i].status) {
      case FactorStatus::unknown: report.unknown.push_back(i); break;
      case FactorStatus::not_exists:
        report.counterexamples.push_back({i, row.graph6, "guaranteed graph has no even factor"});
        break;
      case FactorStatus::exists:
        if (!oracle[i].certificate_ok)
          report.counterexamples.push_back({i, row.graph6, "certificate failed verification"});
        break;
    }
  }
  return report;
}

bool TightnessReport::passed() const {
  if (refused) return false;
  for (const auto& c : checks)
    if (!c.pass) return false;
  return supergraphs.passed() && supergraphs.unknown.empty();
}

TightnessReport tightness_report(std::size_t n, std::size_t delta, const HarnessOptions& options) {
  TightnessReport rep;
  rep.n = n;
  rep.delta = delta;
  rep.supergraphs.campaign = "tightness_supergraphs";
  const auto sn = static_cast<std::int64_t>(n), sd = static_cast<std::int64_t>(delta);
  if (delta < 2 || n < 2 * delta) {
    rep.refused = "need delta >= 2 and n >= 2*delta";
    return rep;
  }
  const bool size_ok = applicability(sn, sd, Theorem::size);
  const bool spectral_ok = applicability(sn, sd, Theorem::spectral);
  if (!size_ok && !spectral_ok) {
    rep.refused = "neither the size nor the spectral hypotheses hold for (n, delta)";
    return rep;
  }

  const Graph g = extremal(n, delta);
  rep.graph6 = write_graph6(g);
  const std::int64_t e_thr = edge_threshold(sn, sd);
  const double theta = spectral_threshold(sn, sd);
  const double rho = spectral_radius(g).rho;
  rep.checks.push_back({"edge_count_equals_threshold", static_cast<std::int64_t>(g.edge_count()) == e_thr,
                        std::to_string(g.edge_count()) + " vs " + std::to_string(e_thr)});
  rep.checks.push_back({"rho_equals_threshold", std::abs(rho - theta) <= 1e-8,
                        fmt_double(rho) + " vs " + fmt_double(theta)});

  VertexSet core(n);
  for (std::size_t v = 0; v < delta; ++v) core.set(v);
  if (n <= kConditionOrderCap) {
    const ConditionReport cond = check_yan_kano_condition(g);
    const bool ok = !cond.holds && cond.witness && *cond.witness == core &&
                    cond.witness_odd_components == delta;
    std::string detail = cond.holds ? "condition holds" : "witness size ";
    if (cond.witness)
      detail += std::to_string(cond.witness->count()) + ", odd components " +
                std::to_string(cond.witness_odd_components);
    rep.checks.push_back({"condition_fails_at_join_core", ok, detail});
  } else {
    const std::size_t odd = odd_components_minus(g, core);
    rep.checks.push_back({"condition_fails_at_join_core", odd == delta,
                          "odd components " + std::to_string(odd)});
  }
  const auto rec = recognize_extremal(g);
  rep.checks.push_back({"recognized_as_extremal", rec && rec->first == n && rec->second == delta, ""});
  const Verdict self = verdict(g, VerdictMode::both);
  rep.checks.push_back({"verdict_is_extremal_exception", self.guarantee == Guarantee::extremal_exception,
                        std::string(to_string(self.guarantee))});

  const EvenFactorResult finding = has_even_factor(g, options.caps);
  rep.oracle_finding = finding.status;
  rep.oracle_certificate = finding.certificate;

  const std::vector<Edge> missing = g.non_edges();
  SweepReport& sup = rep.supergraphs;
  sup.rows.resize(missing.size());
  std::vector<Verdict> verdicts(missing.size());
  std::vector<OracleOutcome> oracle(missing.size());
  parallel_for(missing.size(), options.jobs, [&](std::size_t i) {
    const auto start = Clock::now();
    const Graph h = g.with_edge(missing[i].u, missing[i].v);
    SweepRow row = base_row(i, h);
    const Verdict v = verdict(h, VerdictMode::both, delta);
    row.rho = v.rho_G;
    row.e_thr = v.edge_threshold;
    row.rho_thr = v.spectral_threshold;
    row.meets_e = v.meets_edge;
    row.meets_rho = v.meets_spectral;
    row.is_extremal = v.is_extremal;
    oracle[i] = run_oracle(h, options.caps);
    row.oracle = std::string(to_string(oracle[i].status));
    row.cost_candidates = oracle[i].cost;
    if (options.timings) row.elapsed_ms = ms_since(start);
    verdicts[i] = v;
    sup.rows[i] = std::move(row);
  });
  for (std::size_t i = 0; i < missing.size(); ++i) {
    const SweepRow& row = sup.rows[i];
    if (!guaranteed(verdicts[i].guarantee))
      sup.counterexamples.push_back({i, row.graph6, "verdict did not flip: " + verdicts[i].reason});
    if (size_ok && !row.meets_e)
      sup.counterexamples.push_back({i, row.graph6, "edge threshold not met"});
    if (spectral_ok && !row.meets_rho)
      sup.counterexamples.push_back({i, row.graph6, "spectral threshold not met"});
    if (oracle[i].status == FactorStatus::unknown) sup.unknown.push_back(i);
    else if (oracle[i].status == FactorStatus::not_exists || !oracle[i].certificate_ok)
      sup.counterexamples.push_back({i, row.graph6, "oracle did not confirm an even factor"});
  }
  return rep;
}

nlohmann::ordered_json to_json(const TightnessReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["delta"] = report.delta;
  if (report.refused) {
    j["refused"] = *report.refused;
    j["passed"] = false;
    return j;
  }
  j["graph6"] = report.graph6;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = checks;
  nlohmann::ordered_json finding;
  finding["status"] = std::string(to_string(report.oracle_finding));
  if (report.oracle_certificate) {
    auto cert = nlohmann::ordered_json::array();
    for (const Edge& e : *report.oracle_certificate) cert.push_back({e.u, e.v});
    finding["certificate"] = cert;
  }
  j["oracle_finding_on_extremal"] = finding;
  auto sup = to_json(report.supergraphs);
  sup.erase("seed");
  j["single_edge_supergraphs"] = sup;
  j["passed"] = report.passed();
  return j;
}

SweepReport subgraph_monotonicity_sweep(std::size_t samples, std::uint64_t seed,
                                        const HarnessOptions& options) {
  const PowerIterationOptions power;
  SweepReport report;
  report.campaign = "subgraph_monotonicity";
  report.seed = seed;
  SplitMix64 rng(seed);

  std::vector<std::pair<Graph, Edge>> instances;
  std::size_t skipped_complete = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t n = 4 + rng.below(9);
    const double p = 0.2 + 0.6 * rng.unit();
    auto g = random_connected_graph(n, p, rng);
    if (!g) {
      report.log.push_back("sampler gave up: sample=" + std::to_string(i));
      continue;
    }
    const std::vector<Edge> missing = g->non_edges();
    if (missing.empty()) {
      ++skipped_complete;
      continue;
    }
    const Edge e = missing[rng.below(missing.size())];
    instances.emplace_back(std::move(*g), e);
  }

  report.rows.resize(instances.size());
  parallel_for(instances.size(), options.jobs, [&](std::size_t i) {
    const auto start = Clock::now();
    const auto& [g, e] = instances[i];
    SweepRow row = base_row(i, g);
    row.rho = spectral_radius(g, power).rho;
    row.rho_thr = spectral_radius(g.with_edge(e.u, e.v), power).rho;
    row.meets_rho = *row.rho_thr > *row.rho - 2 * power.tol;
    if (options.timings) row.elapsed_ms = ms_since(start);
    report.rows[i] = std::move(row);
  });

  double lo = INFINITY, hi = -INFINITY;
  for (const SweepRow& row : report.rows) {
    const double margin = *row.rho_thr - *row.rho;
    lo = std::min(lo, margin);
    hi = std::max(hi, margin);
    if (!row.meets_rho)
      report.counterexamples.push_back({row.row_id, row.graph6, "spectral radius dropped after adding an edge"});
    if (auto bad = roundtrip_mismatch(row)) report.counterexamples.push_back({row.row_id, row.graph6, *bad});
  }
  if (!report.rows.empty()) {
    std::vector<double> margins;
    for (const SweepRow& row : report.rows) margins.push_back(*row.rho_thr - *row.rho);
    std::sort(margins.begin(), margins.end());
    report.log.push_back("margin min=" + fmt_double(lo) + " median=" +
                         fmt_double(margins[margins.size() / 2]) + " max=" + fmt_double(hi));
  }
  if (skipped_complete) report.log.push_back("complete graphs skipped=" + std::to_string(skipped_complete));
  return report;
}

}  // namespace evenfactor
