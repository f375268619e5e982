#include "evenfactor/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace evenfactor {
namespace {

struct ComponentRun {
  SpectralResult result;
  bool converged = false;
};

ComponentRun iterate_component(const std::vector<std::vector<std::size_t>>& adj,
                               const PowerIterationOptions& options) {
  const std::size_t k = adj.size();
  std::vector<double> x(k, 1.0), ax(k, 0.0);
  ComponentRun run;
  for (std::size_t it = 1; it <= options.max_iter; ++it) {
    for (std::size_t v = 0; v < k; ++v) {
      double sum = 0.0;
      for (std::size_t w : adj[v]) sum += x[w];
      ax[v] = sum;
    }
    double num = 0.0, den = 0.0;
    for (std::size_t v = 0; v < k; ++v) {
      num += x[v] * ax[v];
      den += x[v] * x[v];
    }
    const double rho = num / den;
    double residual = 0.0;
    for (std::size_t v = 0; v < k; ++v) residual = std::max(residual, std::abs(ax[v] - rho * x[v]));

    run.result = {rho, it, residual};
    if (residual <= options.tol) {
      run.converged = true;
      return run;
    }
    // x <- (A + I) x, rescaled to unit infinity norm.
    double scale = 0.0;
    for (std::size_t v = 0; v < k; ++v) {
      x[v] += ax[v];
      scale = std::max(scale, std::abs(x[v]));
    }
    for (double& xv : x) xv /= scale;
  }
  return run;
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, const PowerIterationOptions& options) {
  if (g.order() == 0) throw std::invalid_argument("spectral_radius: empty graph");

  SpectralResult best;
  bool all_converged = true;
  for (const VertexSet& comp : components(g)) {
    const Graph sub = g.induced(comp);
    const ComponentRun run = iterate_component(sub.adjacency_lists(), options);
    all_converged = all_converged && run.converged;
    best.rho = std::max(best.rho, run.result.rho);
    best.iterations = std::max(best.iterations, run.result.iterations);
    best.residual = std::max(best.residual, run.result.residual);
  }
  if (!all_converged)
    throw ConvergenceError("power iteration did not converge within max_iter", best);
  return best;
}

}  // namespace evenfactor
