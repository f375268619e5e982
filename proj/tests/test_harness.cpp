#include "doctest.h"

#include <set>

#include "evenfactor/graph_io.hpp"
#include "evenfactor/harness.hpp"
#include "evenfactor/spectral.hpp"

using namespace evenfactor;

TEST_SUITE("harness") {

TEST_CASE("SplitMix64 reference values") {
  // First outputs for seed 1234567 from the reference C implementation.
  SplitMix64 rng(1234567);
  CHECK(rng.next() == 6457827717110365317ULL);
  CHECK(rng.next() == 3203168211198807973ULL);
  CHECK(rng.next() == 9817491932198370423ULL);
}

TEST_CASE("bounded draws stay in range and hit every value") {
  SplitMix64 rng(1);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const auto x = rng.below(7);
    CHECK(x < 7);
    seen.insert(x);
    const double u = rng.unit();
    CHECK((u >= 0.0 && u < 1.0));
  }
  CHECK(seen.size() == 7);
  CHECK_THROWS(rng.below(0));
}

TEST_CASE("complement sampling removes exactly k edges") {
  SplitMix64 rng(2);
  for (std::size_t k = 0; k <= 10; ++k) CHECK(complement_sample(8, k, rng).edge_count() == 28 - k);
  CHECK_THROWS(complement_sample(4, 7, rng));
}

TEST_CASE("merge sweep instance counts and values") {
  const SweepReport r = lemma_merge_sweep(10, 2, {1});
  CHECK(r.passed());
  bool found = false;
  for (const auto& row : r.rows) {
    const Graph g = parse_graph6(row.graph6);
    if (g == build_family({2, {4, 4}})) {
      found = true;
      CHECK(row.e == 29);
      CHECK(row.e_thr == 38);
      CHECK(*row.rho < *row.rho_thr);
    }
  }
  CHECK(found);
  for (const auto& row : r.rows) CHECK(row.meets_e);
}

TEST_CASE("merge sweep excludes the merged partition") {
  const SweepReport r = lemma_merge_sweep(6, 1, {1});
  // s=1: n=5 gives (2,2); n=6 gives (3,2) and (2,2,1); smaller n give nothing.
  CHECK(r.rows.size() == 3);
}

TEST_CASE("soundness sweep is deterministic and clean") {
  const auto a = soundness_sweep({8}, 2, 60, 42, SoundnessVariant::edges);
  const auto b = soundness_sweep({8}, 2, 60, 42, SoundnessVariant::edges, {3, false, {}});
  CHECK(to_csv(a) == to_csv(b));
  CHECK(a.passed());
  CHECK(a.unknown.empty());
  CHECK(a.rows.size() == 60);
  for (const auto& row : a.rows) {
    CHECK(row.e >= 23);
    CHECK(row.delta >= 2);
  }
  const auto c = soundness_sweep({8}, 2, 60, 43, SoundnessVariant::edges);
  CHECK(to_csv(c) != to_csv(a));
}

TEST_CASE("spectral soundness rows meet the spectral threshold") {
  const auto r = soundness_sweep({10}, 2, 40, 7, SoundnessVariant::spectral, {2, false, {}});
  CHECK(r.passed());
  for (const auto& row : r.rows) CHECK(*row.rho >= *row.rho_thr - 1e-9);
}

TEST_CASE("csv schema") {
  const auto r = soundness_sweep({8}, 2, 3, 1, SoundnessVariant::edges);
  const std::string csv = to_csv(r);
  CHECK(csv.rfind(std::string(kCsvHeader) + "\n", 0) == 0);
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  CHECK(lines == 4);
  CHECK(csv.find("soundness_edges,1,0,") != std::string::npos);
}

TEST_CASE("tightness report") {
  const TightnessReport r = tightness_report(8, 2);
  CHECK_FALSE(r.refused);
  for (const auto& c : r.checks) CHECK_MESSAGE(c.pass, c.name);
  CHECK(r.passed());
  CHECK(r.supergraphs.rows.size() == 5);
  CHECK(r.oracle_finding == FactorStatus::exists);
  const auto j = to_json(r);
  CHECK(j["passed"] == true);

  const TightnessReport bad = tightness_report(6, 3);
  REQUIRE(bad.refused);
  CHECK_FALSE(bad.passed());
}

TEST_CASE("monotonicity sweep") {
  const auto r = subgraph_monotonicity_sweep(200, 7);
  CHECK(r.passed());
  CHECK(!r.rows.empty());
  for (const auto& row : r.rows) CHECK(*row.rho_thr > *row.rho - 2e-10);

  // A chord lifts the 6-cycle above 2.
  std::vector<Edge> e;
  for (std::size_t i = 0; i < 6; ++i) e.push_back(make_edge(i, (i + 1) % 6));
  const Graph c6 = Graph::from_edges(6, e);
  CHECK(spectral_radius(c6.with_edge(0, 3)).rho > 2.0 + 1e-6);
}

TEST_CASE("parallel_for covers every index and rethrows") {
  std::vector<int> hits(100, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i]++; });
  for (int h : hits) CHECK(h == 1);
  CHECK_THROWS(parallel_for(10, 3, [](std::size_t i) {
    if (i == 5) throw std::runtime_error("boom");
  }));
}

}
