#pragma once

#include <cstddef>
#include <stdexcept>

#include "evenfactor/graph.hpp"

namespace evenfactor {

struct SpectralResult {
  double rho = 0.0;
  std::size_t iterations = 0;
  /// ||A v - rho v||_inf with ||v||_inf = 1, maximised over components.
  double residual = 0.0;
};

struct PowerIterationOptions {
  double tol = 1e-10;
  std::size_t max_iter = 1'000'000;
};

/// Raised when power iteration does not reach the residual tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& message, SpectralResult best)
      : std::runtime_error(message), best_(best) {}
  const SpectralResult& best_estimate() const { return best_; }

 private:
  SpectralResult best_;
};

/**
 * Largest adjacency eigenvalue, one power iteration per connected component
 * (maximum taken over components). Iterates on A + I from the all-ones vector
 * so that bipartite components converge; rho is the Rayleigh quotient of the
 * final iterate. Requires n >= 1.
 */
SpectralResult spectral_radius(const Graph& g, const PowerIterationOptions& options = {});

}  // namespace evenfactor
