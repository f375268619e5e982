#include "doctest.h"

#include <cmath>

#include "evenfactor/cubic.hpp"
#include "evenfactor/harness.hpp"
#include "evenfactor/graph_io.hpp"
#include "evenfactor/spectral.hpp"

using namespace evenfactor;

namespace {

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(make_edge(i, (i + 1) % n));
  return Graph::from_edges(n, e);
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("regular graphs") {
  const auto k5 = spectral_radius(complete(5));
  CHECK(k5.rho == doctest::Approx(4).epsilon(1e-10));
  CHECK(k5.residual <= 1e-10);
  CHECK(spectral_radius(cycle(6)).rho == doctest::Approx(2).epsilon(1e-10));
  // Bipartite: A alone would oscillate between +rho and -rho.
  CHECK(spectral_radius(cycle(8)).rho == doctest::Approx(2).epsilon(1e-10));
  const Edge p2[] = {{0, 1}};
  CHECK(spectral_radius(Graph::from_edges(2, p2)).rho == doctest::Approx(1).epsilon(1e-10));
}

TEST_CASE("edgeless and disconnected graphs") {
  CHECK(spectral_radius(Graph(4)).rho == 0.0);
  const Graph parts[] = {complete(3), complete(5)};
  CHECK(spectral_radius(disjoint_union(parts)).rho == doctest::Approx(4).epsilon(1e-10));
  CHECK_THROWS_AS(spectral_radius(Graph(0)), std::invalid_argument);
}

TEST_CASE("extremal(8,2) matches its quotient cubic") {
  const double rho = spectral_radius(extremal(8, 2)).rho;
  CHECK(rho == doctest::Approx(6.0969240956).epsilon(1e-10));
  const double root = largest_real_root(CubicPoly{-5, -8, 8}, 6);
  CHECK(std::abs(rho - root) <= 1e-8);
}

TEST_CASE("star K_{1,4} has radius 2") {
  CHECK(spectral_radius(parse_graph6("D?{")).rho == doctest::Approx(2).epsilon(1e-10));
}

TEST_CASE("quotient largest root equals the graph radius on realized families") {
  for (std::int64_t d = 2; d <= 5; ++d)
    for (std::int64_t n = 2 * d + 1; n <= 30; ++n) {
      const double power = spectral_radius(extremal(n, d)).rho;
      const double cubic = largest_real_root(char_poly(quotient_bstar(n, d)), double(n - d));
      CHECK(std::abs(power - cubic) <= 1e-8);
    }
}

TEST_CASE("radius lies between the average degree and n - 1") {
  SplitMix64 rng(21);
  for (int i = 0; i < 100; ++i) {
    auto g = random_connected_graph(3 + rng.below(12), 0.3 + 0.5 * rng.unit(), rng);
    REQUIRE(g);
    const auto r = spectral_radius(*g);
    CHECK(r.residual <= 1e-10);
    CHECK(r.rho >= 2.0 * g->edge_count() / g->order() - 1e-9);
    CHECK(r.rho <= g->order() - 1 + 1e-9);
  }
}

TEST_CASE("iteration cap raises with the best estimate") {
  PowerIterationOptions opts;
  opts.max_iter = 1;
  opts.tol = 1e-15;
  try {
    spectral_radius(extremal(12, 3), opts);
    FAIL("expected non-convergence");
  } catch (const ConvergenceError& e) {
    CHECK(e.best_estimate().rho > 0);
  }
}

}
