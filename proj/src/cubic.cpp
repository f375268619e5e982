#include "evenfactor/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace evenfactor {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

QuotientMatrix3 quotient_b2(std::int64_t n, std::int64_t s) {
  if (s < 2 || n - 2 * s + 1 < 1)
    throw std::invalid_argument("B2 partition needs s >= 2 and n - 2s + 1 >= 1");
  QuotientMatrix3 m;
  m.entries = {{{s - 1, n - 2 * s + 1, s - 1}, {s, n - 2 * s, 0}, {s, 0, 0}}};
  return m;
}

QuotientMatrix3 quotient_bstar(std::int64_t n, std::int64_t delta) { return quotient_b2(n, delta); }

std::int64_t b3_big_part(std::int64_t n, std::int64_t s, std::int64_t delta) {
  return n - s - (delta + 1 - s) * (s - 1);
}

QuotientMatrix3 quotient_b3(std::int64_t n, std::int64_t s, std::int64_t delta) {
  const std::int64_t big = b3_big_part(n, s, delta);
  if (s < 2 || delta + 1 - s < 1 || big < 1)
    throw std::invalid_argument("B3 partition needs s >= 2, s <= delta and a non-empty big part");
  QuotientMatrix3 m;
  m.entries = {{{s - 1, big, (s - 1) * (delta + 1 - s)}, {s, big - 1, 0}, {s, 0, delta - s}}};
  return m;
}

CubicPoly char_poly(const QuotientMatrix3& m) {
  const auto& a = m.entries;
  const std::int64_t trace = a[0][0] + a[1][1] + a[2][2];
  const std::int64_t minors = (a[0][0] * a[1][1] - a[0][1] * a[1][0]) +
                              (a[0][0] * a[2][2] - a[0][2] * a[2][0]) +
                              (a[1][1] * a[2][2] - a[1][2] * a[2][1]);
  const std::int64_t det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  return {-trace, minors, -det};
}

std::optional<QuotientMatrix3> equitable_quotient(const Graph& g,
                                                  const std::array<VertexSet, 3>& blocks) {
  QuotientMatrix3 q;
  for (std::size_t i = 0; i < 3; ++i) {
    if (blocks[i].size() != g.order() || blocks[i].none()) return std::nullopt;
    for (std::size_t j = 0; j < 3; ++j) {
      std::optional<std::size_t> row_sum;
      for (auto v = blocks[i].find_first(); v != VertexSet::npos; v = blocks[i].find_next(v)) {
        const std::size_t c = (g.neighbors(v) & blocks[j]).count();
        if (row_sum && *row_sum != c) return std::nullopt;
        row_sum = c;
      }
      q.entries[i][j] = static_cast<std::int64_t>(*row_sum);
    }
  }
  return q;
}

double largest_real_root(const CubicPoly& p, double lower_bound) {
  using Real = long double;
  const Real bound =
      1 + std::max({std::abs(Real(p.c2)), std::abs(Real(p.c1)), std::abs(Real(p.c0))});
  const QuadraticPoly dp = p.derivative();
  const Real lb = lower_bound;

  // Above the Cauchy bound p and p' are positive; iterates decrease
  // monotonically towards the largest root.
  Real x = std::max(lb, bound);
  for (int it = 0; it < 500; ++it) {
    const Real slope = dp(x);
    if (slope <= 0) break;
    const Real step = p(x) / slope;
    x -= step;
    if (x < lb) break;
    if (std::abs(step) <= 1e-16L * std::max(Real(1), std::abs(x))) break;
  }
  if (x < lb) {
    if (p(lb) > 0)
      throw RootNotFound("no real root at or above " + std::to_string(lower_bound));
    x = lb;
  }

  // Bisection on a bracket [lo, hi] with p(lo) <= 0 < p(hi).
  Real hi = x, lo = x;
  Real width = 1e-12L * std::max(Real(1), std::abs(x));
  while (p(hi) <= 0) hi += width, width *= 2;
  width = 1e-12L * std::max(Real(1), std::abs(x));
  for (int k = 0; k < 20 && p(lo) > 0; ++k) lo -= width, width *= 2;
  if (p(lo) > 0) return static_cast<double>(x);  // tangential root, no sign change
  for (int it = 0; it < 200 && hi - lo > 1e-15L * std::max(Real(1), std::abs(hi)); ++it) {
    const Real mid = (lo + hi) / 2;
    (p(mid) > 0 ? hi : lo) = mid;
  }
  const Real root = (lo + hi) / 2;
  if (root < lb - 1e-12L)
    throw RootNotFound("no real root at or above " + std::to_string(lower_bound));
  return static_cast<double>(root);
}

}  // namespace evenfactor
