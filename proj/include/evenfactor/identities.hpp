#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "evenfactor/cubic.hpp"

namespace evenfactor {

struct IdentityParams {
  std::int64_t n = 0;
  std::int64_t s = 0;
  std::int64_t delta = 0;
  std::optional<std::string> x;
};

enum class Relation { eq, gt, ge, approx };

/// One machine-checked equality or inequality. Rational values are compared
/// exactly; real values (anything evaluated at theta) use
/// |lhs - rhs| <= 1e-9 * max(1, |rhs|).
struct IdentityCheck {
  std::string name;
  IdentityParams params;
  Relation relation = Relation::eq;
  std::variant<Rational, double> lhs{Rational(0)};
  std::variant<Rational, double> rhs{Rational(0)};
  bool pass = false;
  /// Set when the parameters fall outside the claim's hypotheses; such a
  /// check is reported but never evaluated.
  std::optional<std::string> skipped;
};

inline constexpr double kRealIdentityTol = 1e-9;

nlohmann::ordered_json to_json(const IdentityCheck& c);

// Polynomials of the size and spectral arguments, written out once. Each is
// certified against an independently computed difference by the checks below.

/// x^3 - (d+5)x^2 + (2n+d+7)x - 4n + 3d - 3 (edge-count difference, s <= d-1).
inline CubicPoly size_gap_cubic(std::int64_t n, std::int64_t d) {
  return {-(d + 5), 2 * n + d + 7, -4 * n + 3 * d - 3};
}
/// x^2 - (s+d-2)x + sn + dn - n - 2s^2 - 2ds + 2s - 2d^2 + 2d (phi_B2 - phi_B*).
inline QuadraticPoly spectral_gap_quadratic(std::int64_t n, std::int64_t s, std::int64_t d) {
  return {1, -(s + d - 2), s * n + d * n - n - 2 * s * s - 2 * d * s + 2 * s - 2 * d * d + 2 * d};
}
/// (s-3)x^2 + (n - ds + s + 2d - 4)x + s^4 - (d+5)s^3 + (n+2d+8)s^2 - (2n+5)s + (2-d)n + 2d^2 - d.
inline QuadraticPoly b3_gap_quadratic(std::int64_t n, std::int64_t s, std::int64_t d) {
  const std::int64_t s2 = s * s, s3 = s2 * s, s4 = s3 * s;
  return {s - 3, n - d * s + s + 2 * d - 4,
          s4 - (d + 5) * s3 + (n + 2 * d + 8) * s2 - (2 * n + 5) * s + (2 - d) * n + 2 * d * d - d};
}
/// (s-2)x^2 + (s^2 - (3d+1)s + 6d - 2)x + s^4 - (d+5)s^3 + (2d+8)s^2 + (2d^2-d-5)s - 3d^2 + 3d.
inline QuadraticPoly b3_gap_lower_quadratic(std::int64_t s, std::int64_t d) {
  const std::int64_t s2 = s * s, s3 = s2 * s, s4 = s3 * s;
  return {s - 2, s2 - (3 * d + 1) * s + 6 * d - 2,
          s4 - (d + 5) * s3 + (2 * d + 8) * s2 + (2 * d * d - d - 5) * s - 3 * d * d + 3 * d};
}
/// Closed-form expansion of det(xI - B3) in n, s, d.
CubicPoly b3_char_poly_display(std::int64_t n, std::int64_t s, std::int64_t delta);
/// Closed-form derivative of the B3 characteristic polynomial.
QuadraticPoly b3_char_poly_derivative_display(std::int64_t n, std::int64_t s, std::int64_t delta);
/// x^3 - (n-d-1)x^2 - (n+d^2-2d)x + d^2 n - dn - 2d^3 + 2d^2.
CubicPoly bstar_char_poly_display(std::int64_t n, std::int64_t delta);

/// e(G*) - e(G2) by edge counting versus (s-d)(2n-3s-3d+3)/2.
IdentityCheck check_edge_diff_case1(std::int64_t n, std::int64_t s, std::int64_t delta);
/// e(G*) - e(G3) by edge counting versus (d-s) f(s) / 2.
IdentityCheck check_edge_diff_case3(std::int64_t n, std::int64_t s, std::int64_t delta);
/// phi_B2(x) - phi_B*(x) from the quotient matrices versus (s-d) f(x).
std::vector<IdentityCheck> check_phi_diff_case1(std::int64_t n, std::int64_t s, std::int64_t delta,
                                                const std::vector<Rational>& xs);
/// phi_B3(theta) - phi_B*(theta) versus (d-s) g(theta), and phi_B*(theta) ~ 0.
IdentityCheck check_phi_diff_case3(std::int64_t n, std::int64_t s, std::int64_t delta, double theta);
/// Exact version of the previous identity at three rational points.
std::vector<IdentityCheck> certify_phi_diff_case3(std::int64_t n, std::int64_t s,
                                                  std::int64_t delta);

/// Every sign claim and bounding chain for the given (n, s, delta). Claims
/// whose hypotheses exclude the parameters come back with `skipped` set.
std::vector<IdentityCheck> check_sign_claims(std::int64_t n, std::int64_t s, std::int64_t delta);

/// Full sweep: delta in [2, delta_max]; n from each theorem's floor to
/// floor + n_extra; s over each claim's range. Skipped checks are omitted.
std::vector<IdentityCheck> run_identity_grid(std::int64_t delta_max, std::int64_t n_extra);

}  // namespace evenfactor
