// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "evenfactor/cubic.hpp"
#include "evenfactor/even_factor.hpp"
#include "evenfactor/graph.hpp"
#include "evenfactor/graph_io.hpp"
#include "evenfactor/harness.hpp"
#include "evenfactor/identities.hpp"
#include "evenfactor/spectral.hpp"
#include "evenfactor/thresholds.hpp"

using namespace evenfactor;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<Outcome()> run;
};

std::int64_t even_at_least(std::int64_t v) { return v % 2 == 0 ? v : v + 1; }

std::int64_t size_floor(std::int64_t d) {
  return even_at_least(std::max(6 * d - 4, (d * d + 7 * d + 4 + 5) / 6));
}

Outcome edge_threshold_exact() {
  int cases = 0, bad = 0;
  for (std::int64_t d = 2; d <= 6; ++d)
    for (std::int64_t n = size_floor(d); n <= 60; n += 2, ++cases)
      if (edge_threshold(n, d) != static_cast<std::int64_t>(extremal(n, d).edge_count())) ++bad;
  return {bad == 0 && cases > 0, std::to_string(cases) + " (n, delta) pairs, " + std::to_string(bad) + " mismatches"};
}

template <class F>
void spectral_grid(F&& f) {
  for (std::int64_t d = 2; d <= 4; ++d)
    for (std::int64_t n = 2 * d; n <= 40; n += 2) f(n, d);
}

Outcome quotient_equality() {
  double worst = 0;
  int cases = 0;
  spectral_grid([&](std::int64_t n, std::int64_t d) {
    const double power = spectral_radius(extremal(n, d)).rho;
    const double cubic = largest_real_root(char_poly(quotient_bstar(n, d)), double(n - d));
    worst = std::max(worst, std::abs(power - cubic));
    ++cases;
  });
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d pairs, max |difference| = %.3g", cases, worst);
  return {worst <= 1e-8, buf};
}

Outcome strict_floor() {
  double margin = INFINITY;
  spectral_grid([&](std::int64_t n, std::int64_t d) {
    margin = std::min(margin, spectral_threshold(n, d) - double(n - d));
  });
  char buf[96];
  std::snprintf(buf, sizeof buf, "min(theta - (n - delta)) = %.6g", margin);
  return {margin > 1e-6, buf};
}

Outcome merge_sweeps() {
  const SweepReport r = lemma_merge_sweep(14, 4, {1, 2});
  return {r.passed() && !r.rows.empty(),
          std::to_string(r.rows.size()) + " instances, " + std::to_string(r.counterexamples.size()) +
              " violations"};
}

Outcome oracle_equivalence() {
  std::size_t exhaustive = 0, random = 0, disagreements = 0;
  auto compare = [&](const Graph& g) {
    const auto fast = has_even_factor(g);
    const auto slow = has_even_factor_naive(g);
    bool ok = fast.status == slow.status;
    if (fast.status == FactorStatus::exists) ok = ok && is_even_factor(g, *fast.certificate);
    if (!ok) ++disagreements;
  };
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::vector<Edge> pairs = complete(n).edges();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) edges.push_back(pairs[i]);
      const Graph g = Graph::from_edges(n, edges);
      if (!is_connected(g)) continue;
      compare(g);
      ++exhaustive;
    }
  }
  SplitMix64 rng(20240501);
  while (random < 2000) {
    const std::size_t n = 7 + rng.below(3);
    const Graph g = random_graph(n, 0.2 + 0.5 * rng.unit(), rng);
    if (g.edge_count() > 20) continue;
    compare(g);
    ++random;
  }
  return {disagreements == 0, std::to_string(exhaustive) + " connected graphs on <= 6 vertices, " +
                                  std::to_string(random) + " random graphs on 7..9 vertices, " +
                                  std::to_string(disagreements) + " disagreements"};
}

Outcome condition_implication() {
  SplitMix64 rng(6);
  int graphs = 0, holds = 0, counterexamples = 0;
  const std::size_t orders[] = {6, 8, 10};
  while (graphs < 2000) {
    const std::size_t n = orders[rng.below(3)];
    auto g = random_connected_graph(n, 0.3 + 0.6 * rng.unit(), rng);
    if (!g) continue;
    ++graphs;
    if (!check_yan_kano_condition(*g).holds) continue;
    ++holds;
    if (has_even_factor(*g).status != FactorStatus::exists) ++counterexamples;
  }
  return {counterexamples == 0 && holds > 0,
          std::to_string(graphs) + " graphs, condition held on " + std::to_string(holds) + ", " +
              std::to_string(counterexamples) + " counterexamples"};
}

Outcome soundness() {
  std::string detail;
  bool ok = true;
  for (auto which : {SoundnessVariant::edges, SoundnessVariant::spectral}) {
    const SweepReport r = soundness_sweep({8, 10}, 2, 500, 42, which);
    ok = ok && r.passed() && r.unknown.empty() && r.rows.size() == 1000;
    if (!detail.empty()) detail += "; ";
    detail += r.campaign + ": " + std::to_string(r.rows.size()) + " rows, " +
              std::to_string(r.counterexamples.size()) + " counterexamples, " +
              std::to_string(r.unknown.size()) + " unknown";
  }
  return {ok, detail};
}

Outcome identity_grid() {
  const auto grid = run_identity_grid(8, 20);
  std::size_t failures = 0;
  for (const auto& c : grid) failures += !c.pass;
  return {failures == 0 && !grid.empty(),
          std::to_string(grid.size()) + " checks, " + std::to_string(failures) + " failures"};
}

Outcome tightness() {
  bool ok = true;
  std::string detail;
  for (auto [n, d] : {std::pair<std::size_t, std::size_t>{8, 2}, {10, 2}}) {
    const TightnessReport r = tightness_report(n, d);
    ok = ok && r.passed();
    if (!detail.empty()) detail += "; ";
    detail += "(" + std::to_string(n) + "," + std::to_string(d) + ") " + (r.passed() ? "ok" : "FAILED") +
              ", oracle on extremal graph: " + std::string(to_string(r.oracle_finding)) + ", " +
              std::to_string(r.supergraphs.rows.size()) + " supergraphs confirmed";
  }
  return {ok, detail};
}

Outcome graph6_roundtrip() {
  SplitMix64 rng(10000);
  int bad = 0;
  for (int i = 0; i < 10000; ++i) {
    const Graph g = random_graph(rng.below(31), rng.unit(), rng);
    if (!(parse_graph6(write_graph6(g)) == g)) ++bad;
  }
  return {bad == 0, "10000 graphs, " + std::to_string(bad) + " mismatches"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "edge threshold equals counted edges of the extremal graph", 1, edge_threshold_exact},
      {2, "power iteration equals quotient cubic root", 10, quotient_equality},
      {3, "spectral threshold strictly above n - delta", 10, strict_floor},
      {4, "merge monotonicity sweeps (edges and radius)", 60, merge_sweeps},
      {5, "cycle-space oracle agrees with naive oracle", 300, oracle_equivalence},
      {6, "condition implies an even factor", 300, condition_implication},
      {7, "threshold soundness at desk scale", 600, soundness},
      {8, "proof identity and inequality grid", 30, identity_grid},
      {9, "tightness reports for (8,2) and (10,2)", 60, tightness},
      {10, "graph6 round trip", 60, graph6_roundtrip},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_s;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("[%s] %2d %s: %s (%.2fs of %.0fs budget)\n", pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), o.detail.c_str(), secs, c.budget_s);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
