#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/rational.hpp>

#include "evenfactor/graph.hpp"

namespace evenfactor {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);

/// a2 x^2 + a1 x + a0.
struct QuadraticPoly {
  std::int64_t a2 = 0, a1 = 0, a0 = 0;

  template <class T>
  T operator()(const T& x) const {
    return (T(a2) * x + T(a1)) * x + T(a0);
  }
  bool operator==(const QuadraticPoly&) const = default;
};

/// Monic x^3 + c2 x^2 + c1 x + c0 with exact integer coefficients.
struct CubicPoly {
  std::int64_t c2 = 0, c1 = 0, c0 = 0;

  template <class T>
  T operator()(const T& x) const {
    return ((x + T(c2)) * x + T(c1)) * x + T(c0);
  }
  QuadraticPoly derivative() const { return {3, 2 * c2, c1}; }
  bool operator==(const CubicPoly&) const = default;
};

/// Quotient matrix of a three-block partition: core, big clique, small parts.
struct QuotientMatrix3 {
  std::array<std::array<std::int64_t, 3>, 3> entries{};
  std::array<std::string, 3> labels{"core", "big", "small"};

  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries[i][j]; }
  bool operator==(const QuotientMatrix3& other) const { return entries == other.entries; }
};

/// Partition K_s | K_{n-2s+1} | (s-1)K_1 of K_s v (K_{n-2s+1} u (s-1)K_1).
QuotientMatrix3 quotient_b2(std::int64_t n, std::int64_t s);
/// Same shape with s = delta.
QuotientMatrix3 quotient_bstar(std::int64_t n, std::int64_t delta);
/// Partition K_s | K_{n-s-(delta+1-s)(s-1)} | (s-1)K_{delta+1-s}.
QuotientMatrix3 quotient_b3(std::int64_t n, std::int64_t s, std::int64_t delta);

/// Size of the big clique in the B3 partition.
std::int64_t b3_big_part(std::int64_t n, std::int64_t s, std::int64_t delta);

/// det(xI - M), expanded in integers.
CubicPoly char_poly(const QuotientMatrix3& m);

/// Block row sums of g over the partition, or nullopt if some block is empty
/// or the partition is not equitable.
std::optional<QuotientMatrix3> equitable_quotient(const Graph& g,
                                                  const std::array<VertexSet, 3>& blocks);

class RootNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest real root, required to be >= lower_bound; accurate to about 1e-12.
/// Newton's method from above the Cauchy bound, polished by bisection.
double largest_real_root(const CubicPoly& p, double lower_bound);

}  // namespace evenfactor
