#include "doctest.h"

#include "evenfactor/spectral.hpp"
#include "evenfactor/thresholds.hpp"

using namespace evenfactor;

TEST_SUITE("thresholds") {

TEST_CASE("edge threshold") {
  CHECK(edge_threshold(8, 2) == 23);
  CHECK(edge_threshold(14, 3) == 72);
  CHECK(edge_threshold(6, 3) == 12);
  CHECK(extremal(6, 3).edge_count() == 12);
  CHECK_THROWS_AS(edge_threshold(5, 3), std::invalid_argument);
}

TEST_CASE("spectral threshold") {
  CHECK(spectral_threshold(8, 2) == doctest::Approx(6.0969240956).epsilon(1e-10));
  const double t20 = spectral_threshold(20, 2);
  CHECK(t20 > 18);
  CHECK(t20 < 19);
  CHECK(std::abs(t20 - spectral_radius(extremal(20, 2)).rho) <= 1e-8);
  for (std::int64_t d = 2; d <= 6; ++d)
    for (std::int64_t n = 2 * d; n <= 40; ++n) CHECK(spectral_threshold(n, d) > double(n - d));
  CHECK_THROWS_AS(spectral_threshold(8, 1), std::invalid_argument);
}

TEST_CASE("applicability") {
  CHECK(applicability(8, 2, Theorem::size));
  CHECK_FALSE(applicability(7, 2, Theorem::size));
  CHECK(applicability(8, 2, Theorem::spectral));
  CHECK_FALSE(applicability(6, 2, Theorem::spectral));
  CHECK_FALSE(applicability(6, 3, Theorem::size));
  CHECK(applicability(14, 3, Theorem::size));
  CHECK_FALSE(applicability(12, 3, Theorem::size));
  // Quadratic term dominates for large delta: 6n >= d^2 + 7d + 4.
  CHECK_FALSE(applicability(312, 40, Theorem::size));
  CHECK(applicability(312, 39, Theorem::size));
  CHECK_THROWS_AS(applicability(8, 1, Theorem::size), std::invalid_argument);
}

TEST_CASE("recognizing the extremal graph") {
  const auto r = recognize_extremal(extremal(10, 2));
  REQUIRE(r);
  CHECK(r->first == 10);
  CHECK(r->second == 2);
  CHECK_FALSE(recognize_extremal(complete(10)));
  // Pendant vertex 7 joined to the big clique.
  CHECK_FALSE(recognize_extremal(extremal(8, 2).with_edge(2, 7)));
  CHECK(recognize_extremal(extremal(6, 3)));
  for (std::size_t d = 2; d <= 5; ++d)
    for (std::size_t n = 2 * d + 1; n <= 20; ++n) {
      const auto rec = recognize_extremal(extremal(n, d));
      REQUIRE(rec);
      CHECK(rec->second == d);
    }
}

TEST_CASE("verdicts") {
  const Verdict ext = verdict(extremal(8, 2), VerdictMode::both);
  CHECK(ext.meets_edge);
  CHECK(ext.meets_spectral);
  CHECK(ext.is_extremal);
  CHECK(ext.guarantee == Guarantee::extremal_exception);

  const Verdict k8 = verdict(complete(8), VerdictMode::edges);
  CHECK(k8.delta_G == 7);
  CHECK_FALSE(k8.thm11_applicable);
  CHECK(k8.guarantee == Guarantee::none);

  const Graph g = extremal(8, 2);
  for (const Edge& e : g.non_edges()) {
    const Verdict v = verdict(g.with_edge(e.u, e.v), VerdictMode::edges, 2);
    CHECK(v.e_G == 24);
    CHECK(v.guarantee == Guarantee::by_size);
    const Verdict s = verdict(g.with_edge(e.u, e.v), VerdictMode::spectral, 2);
    CHECK(s.guarantee == Guarantee::by_spectral);
  }
}

TEST_CASE("verdict reasons") {
  const Graph parts[] = {complete(4), complete(4)};
  CHECK(verdict(disjoint_union(parts), VerdictMode::both).reason == "graph is disconnected");
  CHECK(verdict(complete(7), VerdictMode::both).reason == "odd order");
  const Edge p[] = {{0, 1}, {1, 2}, {2, 3}};
  CHECK(verdict(Graph::from_edges(4, p), VerdictMode::both).reason == "minimum degree below 2");
  CHECK(verdict(Graph(0), VerdictMode::both).guarantee == Guarantee::none);
}

TEST_CASE("verdict json has stable keys and nulls for absent values") {
  const auto j = to_json(verdict(extremal(8, 2), VerdictMode::both));
  CHECK(j.dump().find("\"guarantee\":\"extremal_exception\"") != std::string::npos);
  CHECK(j.begin().key() == "n");
  CHECK(j["e_G"] == 23);
  CHECK(j["edge_threshold"] == 23);
  const auto e = to_json(verdict(Graph(0), VerdictMode::both));
  CHECK(e["delta_G"].is_null());
  CHECK(e["rho_G"].is_null());
}

}
