#include "evenfactor/identities.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "evenfactor/graph.hpp"
#include "evenfactor/thresholds.hpp"

namespace evenfactor {
namespace {

using Value = std::variant<Rational, double>;
using Real = long double;

Rational q(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

Real as_real(const Value& v) {
  if (const auto* r = std::get_if<Rational>(&v))
    return static_cast<Real>(r->numerator()) / static_cast<Real>(r->denominator());
  return std::get<double>(v);
}

bool holds(Relation rel, const Value& lhs, const Value& rhs) {
  const auto* a = std::get_if<Rational>(&lhs);
  const auto* b = std::get_if<Rational>(&rhs);
  if (a && b) {
    switch (rel) {
      case Relation::eq:
      case Relation::approx: return *a == *b;
      case Relation::gt: return *a > *b;
      case Relation::ge: return *a >= *b;
    }
  }
  const Real l = as_real(lhs), r = as_real(rhs);
  const Real tol = kRealIdentityTol * std::max<Real>(1, std::abs(r));
  switch (rel) {
    case Relation::eq:
    case Relation::approx: return std::abs(l - r) <= tol;
    case Relation::gt: return l > r;
    case Relation::ge: return l >= r - tol;
  }
  return false;
}

IdentityCheck make(std::string name, IdentityParams params, Relation rel, Value lhs, Value rhs) {
  IdentityCheck c;
  c.name = std::move(name);
  c.params = std::move(params);
  c.relation = rel;
  c.pass = holds(rel, lhs, rhs);
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  return c;
}

IdentityCheck skip(std::string name, IdentityParams params, std::string reason) {
  IdentityCheck c;
  c.name = std::move(name);
  c.params = std::move(params);
  c.skipped = std::move(reason);
  return c;
}

std::string format_value(const Value& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return to_string(*r);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(v));
  return buf;
}

std::string_view relation_name(Relation rel) {
  switch (rel) {
    case Relation::eq: return "eq";
    case Relation::gt: return "gt";
    case Relation::ge: return "ge";
    case Relation::approx: return "approx";
  }
  return "eq";
}

std::int64_t edges_of(const FamilySpec& spec) {
  return static_cast<std::int64_t>(build_family(spec).edge_count());
}

FamilySpec g3_spec(std::int64_t n, std::int64_t s, std::int64_t delta) {
  const std::int64_t big = b3_big_part(n, s, delta);
  const std::int64_t small = delta + 1 - s;
  if (s < 1 || small < 1 || big < small)
    throw std::invalid_argument("G3 needs 1 <= s <= delta and a big part no smaller than the rest");
  FamilySpec spec{static_cast<std::size_t>(s), {static_cast<std::size_t>(big)}};
  spec.parts.insert(spec.parts.end(), static_cast<std::size_t>(s - 1),
                    static_cast<std::size_t>(small));
  return spec;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

std::int64_t even_at_least(std::int64_t v) { return v % 2 == 0 ? v : v + 1; }

bool size_hypotheses(std::int64_t n, std::int64_t d) {
  return d >= 2 && applicability(n, d, Theorem::size);
}

bool spectral_hypotheses(std::int64_t n, std::int64_t d) {
  return d >= 2 && applicability(n, d, Theorem::spectral);
}

void append_coefficients(std::vector<IdentityCheck>& out, const std::string& prefix,
                         const IdentityParams& p, std::initializer_list<std::int64_t> computed,
                         std::initializer_list<std::int64_t> closed) {
  static constexpr std::string_view kSuffix[] = {"x2", "x1", "x0"};
  auto a = computed.begin();
  auto b = closed.begin();
  for (std::size_t i = 0; a != computed.end(); ++i, ++a, ++b)
    out.push_back(make(prefix + "_coeff_" + std::string(kSuffix[i + 3 - computed.size()]), p,
                       Relation::eq, q(*a), q(*b)));
}

// Size argument, s in [3, delta-1] (and the s = 2 escape route).
void size_case3_claims(std::vector<IdentityCheck>& out, std::int64_t n, std::int64_t s,
                       std::int64_t d) {
  const IdentityParams p{n, s, d, std::nullopt};
  const bool in_range = s >= 3 && s <= d - 1;
  const bool escape = s == 2 && d >= 3;
  if (!in_range && !escape) {
    out.push_back(skip("size_f_positive", p, "needs 3 <= s <= delta-1 (or s = 2, delta >= 3)"));
    return;
  }
  if (!size_hypotheses(n, d)) {
    out.push_back(skip("size_f_positive", p, "n outside the size-condition hypotheses"));
    return;
  }
  const CubicPoly f = size_gap_cubic(n, d);
  const QuadraticPoly df = f.derivative();
  const Rational fs = f(q(s));
  out.push_back(make("size_f_positive", p, Relation::gt, fs, q(0)));
  out.push_back(make("size_edge_gap_case3_positive", p, Relation::gt, q(d - s) * fs / q(2), q(0)));
  if (escape) return;

  const Rational axis = q(d + 5, 3);
  out.push_back(make("size_f_prime_at_axis", p, Relation::eq, df(axis), q(6 * n - d * d - 7 * d - 4, 3)));
  out.push_back(make("size_f_prime_at_axis_nonneg", p, Relation::ge, df(axis), q(0)));
  out.push_back(make("size_f_monotone", p, Relation::ge, fs, f(q(3))));
  out.push_back(make("size_f3_closed_form", p, Relation::eq, f(q(3)), q(2 * n - 3 * d)));
  out.push_back(make("size_f3_floor", p, Relation::ge, q(2 * n - 3 * d), q(9 * d - 8)));
  out.push_back(make("size_f3_floor_positive", p, Relation::gt, q(9 * d - 8), q(0)));
}

// Size argument, s >= delta + 1.
void size_case1_claims(std::vector<IdentityCheck>& out, std::int64_t n, std::int64_t s,
                       std::int64_t d) {
  const IdentityParams p{n, s, d, std::nullopt};
  if (s < d + 1 || 2 * s > n) {
    out.push_back(skip("size_edge_gap_case1_positive", p, "needs delta+1 <= s <= n/2"));
    return;
  }
  if (!size_hypotheses(n, d)) {
    out.push_back(skip("size_edge_gap_case1_positive", p, "n outside the size-condition hypotheses"));
    return;
  }
  const Rational gap = q(s - d) * q(2 * n - 3 * s - 3 * d + 3) / q(2);
  const Rational floor = q(s - d) * q(n - 6 * d + 6) / q(4);
  out.push_back(make("size_edge_gap_case1_chain", p, Relation::ge, gap, floor));
  out.push_back(make("size_edge_gap_case1_positive", p, Relation::gt, floor, q(0)));
}

// Spectral argument, s >= delta + 1: phi_B2 - phi_B* = (s - d) f(x) > 0 beyond n - d.
void spectral_case1_claims(std::vector<IdentityCheck>& out, std::int64_t n, std::int64_t s,
                           std::int64_t d) {
  const IdentityParams p{n, s, d, std::nullopt};
  if (s < d + 1 || d < 2) {
    out.push_back(skip("spectral_f_positive", p, "needs s >= delta+1 and delta >= 2"));
    return;
  }
  const Rational floor_n = q(5 * d - 3);
  const Rational floor_value =
      floor_n * floor_n / q(2) - (q(5 * d, 2) - q(2)) * floor_n;
  out.push_back(make("spectral_f_floor_value", p, Relation::eq, floor_value, q(5 * d - 3, 2)));
  out.push_back(make("spectral_f_floor_positive", p, Relation::gt, q(5 * d - 3, 2), q(0)));

  if (2 * s > n || !spectral_hypotheses(n, d)) {
    out.push_back(skip("spectral_f_positive", p, "needs s <= n/2 and the spectral-condition hypotheses"));
    return;
  }
  const QuadraticPoly f = spectral_gap_quadratic(n, s, d);
  const Rational at = f(q(n - d));
  const Rational nn = q(n);
  const Rational chain = nn * nn / q(2) - (q(5 * d, 2) - q(2)) * nn;
  out.push_back(make("spectral_f_axis_below", p, Relation::gt, q(n - d), q(s + d - 2, 2)));
  out.push_back(make("spectral_f_at_n_minus_delta", p, Relation::eq, at,
                     q(-2 * s * s - (d - 2) * s + n * n - (2 * d - 1) * n)));
  out.push_back(make("spectral_f_chain_s_half", p, Relation::ge, at, chain));
  out.push_back(make("spectral_f_chain_n_floor", p, Relation::ge, chain, q(5 * d - 3, 2)));
  out.push_back(make("spectral_f_positive", p, Relation::gt, at, q(0)));
}

// Spectral argument, s in [3, delta-1] (and the s = 2 escape route).
void spectral_case3_claims(std::vector<IdentityCheck>& out, std::int64_t n, std::int64_t s,
                           std::int64_t d) {
  const IdentityParams p{n, s, d, std::nullopt};
  const bool in_range = s >= 3 && s <= d - 1;
  const bool escape = s == 2 && d >= 3;
  if (!in_range && !escape) {
    out.push_back(skip("phi_b3_at_theta_positive", p, "needs 3 <= s <= delta-1 (or s = 2, delta >= 3)"));
    return;
  }

  if (in_range) {
    // Chains in (s, delta) alone.
    const Rational dd = q(d);
    const Rational h_vertex = q(3 * d - s - 1, 2);
    const QuadraticPoly h = b3_gap_lower_quadratic(s, d);
    const QuadraticPoly dh = {0, 2 * h.a2, h.a1};
    const Rational x0 = dd * dd / q(3) + dd;
    out.push_back(make("b3_gap_lower_derivative_at_vertex", p, Relation::eq, dh(h_vertex), q(0)));
    out.push_back(make("b3_gap_lower_vertex_below_floor", p, Relation::gt, x0, q(3 * d - 4, 2)));
    out.push_back(make("b3_gap_lower_derivative_at_floor_nonneg", p, Relation::ge, dh(x0), q(0)));
    out.push_back(make("b3_gap_lower_vertex_bound", p, Relation::ge, q(3 * d - 4, 2), h_vertex));

    const std::int64_t s2 = s * s, s3 = s2 * s, s4 = s3 * s;
    const Rational hx0 = h(x0);
    const Rational h_closed =
        dd / q(9) * (dd * (q(s - 2) * dd * dd - q(3 * (s - 2)) * dd + q(3 * s2 - 3 * s + 3)) -
                     q(9 * s3 - 27 * s2 + 18 * s - 9)) +
        q(s * (s3 - 5 * s2 + 8 * s - 5));
    const std::int64_t t = s + 1;
    const Rational step1 =
        dd / q(9) * (dd * q((s - 2) * t * t - 3 * (s - 2) * t + 3 * s2 - 3 * s + 3) -
                     q(9 * s3 - 27 * s2 + 18 * s - 9)) + q(s);
    const Rational step2 = dd / q(9) * (dd * q(s3 - 3 * s + 7) - q(9 * s3 - 27 * s2 + 18 * s - 9)) + q(s);
    const Rational step3 = dd / q(9) * q(t * (s3 - 3 * s + 7) - 9 * s3 + 27 * s2 - 18 * s + 9) + q(s);
    const Rational step4 = dd / q(9) * q(s4 - 8 * s3 + 24 * s2 - 14 * s + 16) + q(s);
    out.push_back(make("b3_gap_lower_floor_closed_form", p, Relation::eq, hx0, h_closed));
    out.push_back(make("b3_gap_lower_chain_1", p, Relation::ge, h_closed, step1));
    out.push_back(make("b3_gap_lower_chain_2", p, Relation::eq, step1, step2));
    out.push_back(make("b3_gap_lower_chain_3", p, Relation::ge, step2, step3));
    out.push_back(make("b3_gap_lower_chain_4", p, Relation::eq, step3, step4));
    out.push_back(make("b3_gap_lower_chain_5", p, Relation::gt, step4, q(6 * d + s)));

    const Rational e_floor =
        (dd * dd * (dd * dd + q(6 * s - 15) * dd - q(6 * s2 - 6 * s - 21)) +
         q(9 * s2 - 18 * s - 27) * dd - q(9 * s2 - 36 * s)) / q(9);
    const Rational c1 =
        (q(s2 - s + 7) * dd * dd + q(9 * s2 - 18 * s - 27) * dd - q(9 * s2 - 36 * s)) / q(9);
    const Rational c2 =
        q((s2 - s + 7) * t * t + (9 * s2 - 18 * s - 27) * t - 9 * s2 + 36 * s, 9);
    const Rational c3 = q(16 * (s2 - s + 7) - 9 * s2 + 36 * s, 9);
    const Rational end = q(7 * s2 + 20 * s + 112, 9);
    const Rational quad_at_floor =
        x0 * x0 + q(-2 * s2 + 2 * d * s + 5 * s - 7 * d + 1) * x0 +
        q(3 * d * s2 - s2 - 3 * d * d * s - 7 * d * s + 4 * s + 8 * d * d - 4 * d);
    out.push_back(make("dphi_b3_floor_closed_form", p, Relation::eq, quad_at_floor, e_floor));
    out.push_back(make("dphi_b3_chain_delta", p, Relation::ge, e_floor, c1));
    out.push_back(make("dphi_b3_chain_delta_floor", p, Relation::ge, c1, c2));
    out.push_back(make("dphi_b3_chain_s", p, Relation::ge, c2, c3));
    out.push_back(make("dphi_b3_chain_end", p, Relation::eq, c3, end));
    out.push_back(make("dphi_b3_chain_end_positive", p, Relation::gt, end, q(0)));
  }

  if (!spectral_hypotheses(n, d)) {
    out.push_back(skip("phi_b3_at_theta_positive", p, "n outside the spectral-condition hypotheses"));
    return;
  }
  out.push_back(make("b3_order_floor", p, Relation::ge, q(n), q(s * (d + 2 - s))));
  if (b3_big_part(n, s, d) < 1) return;

  const QuotientMatrix3 b3 = quotient_b3(n, s, d);
  const CubicPoly phi3 = char_poly(b3);
  const CubicPoly phi3_closed = b3_char_poly_display(n, s, d);
  const QuadraticPoly dphi = phi3.derivative();
  const QuadraticPoly dphi_closed = b3_char_poly_derivative_display(n, s, d);
  append_coefficients(out, "phi_b3_closed_form", p, {phi3.c2, phi3.c1, phi3.c0},
                      {phi3_closed.c2, phi3_closed.c1, phi3_closed.c0});
  append_coefficients(out, "dphi_b3_closed_form", p, {dphi.a2, dphi.a1, dphi.a0},
                      {dphi_closed.a2, dphi_closed.a1, dphi_closed.a0});

  const double theta = spectral_threshold(n, d);
  IdentityParams pt = p;
  pt.x = "theta";
  out.push_back(make("phi_b3_at_theta_positive", pt, Relation::gt,
                     static_cast<double>(phi3(static_cast<Real>(theta))), q(0)));
  const double rho3 = largest_real_root(phi3, 0.0);
  out.push_back(make("rho_g3_below_theta", pt, Relation::gt, theta, rho3));

  const Rational at = dphi(q(n - d));
  out.push_back(make("dphi_b3_axis_below", p, Relation::gt, q(n - d),
                     q(n + s * s - d * s - 3 * s + 2 * d - 1, 3)));
  out.push_back(make("dphi_b3_positive", p, Relation::gt, at, q(0)));
  if (escape) return;

  const std::int64_t s2 = s * s;
  const Rational dd = q(d);
  const Rational x0 = dd * dd / q(3) + dd;
  const Rational closed = q(n * n + (-2 * s2 + 2 * d * s + 5 * s - 7 * d + 1) * n + 3 * d * s2 - s2 -
                            3 * d * d * s - 7 * d * s + 4 * s + 8 * d * d - 4 * d);
  const Rational at_floor = x0 * x0 + q(-2 * s2 + 2 * d * s + 5 * s - 7 * d + 1) * x0 +
                            q(3 * d * s2 - s2 - 3 * d * d * s - 7 * d * s + 4 * s + 8 * d * d - 4 * d);
  out.push_back(make("dphi_b3_at_n_minus_delta", p, Relation::eq, at, closed));
  out.push_back(make("dphi_b3_chain_n", p, Relation::ge, closed, at_floor));

  const QuadraticPoly g = b3_gap_quadratic(n, s, d);
  const QuadraticPoly h = b3_gap_lower_quadratic(s, d);
  if (s > 3) {
    out.push_back(make("b3_gap_axis_below", p, Relation::gt, q(n - d),
                       -q(n - d * s + s + 2 * d - 4) / q(2 * (s - 3))));
  } else {
    // Leading coefficient vanishes at s = 3; g is affine there.
    out.push_back(make("b3_gap_affine_slope_positive", p, Relation::gt,
                       q(n - d * s + s + 2 * d - 4), q(0)));
  }
  out.push_back(make("b3_gap_at_n_minus_delta", p, Relation::eq, g(q(n - d)), h(q(n))));
  out.push_back(make("b3_gap_at_theta_exceeds", pt, Relation::gt,
                     static_cast<double>(g(static_cast<Real>(theta))), g(q(n - d))));
  out.push_back(make("b3_gap_lower_monotone", p, Relation::ge, h(q(n)), h(x0)));
  out.push_back(make("b3_gap_lower_positive", p, Relation::gt, h(q(n)), q(0)));
}

}  // namespace

nlohmann::ordered_json to_json(const IdentityCheck& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  nlohmann::ordered_json params;
  params["n"] = c.params.n;
  params["s"] = c.params.s;
  params["delta"] = c.params.delta;
  if (c.params.x) params["x"] = *c.params.x;
  j["params"] = params;
  if (c.skipped) {
    j["skipped"] = *c.skipped;
    return j;
  }
  j["relation"] = std::string(relation_name(c.relation));
  j["lhs"] = format_value(c.lhs);
  j["rhs"] = format_value(c.rhs);
  j["pass"] = c.pass;
  return j;
}

CubicPoly b3_char_poly_display(std::int64_t n, std::int64_t s, std::int64_t d) {
  const std::int64_t big_minus_one = n - s - (d + 1 - s) * (s - 1) - 1;
  const std::int64_t c0 = (d - s) * (n - (d + 1 - s) * (s - 1) - 1 + s * (s - 1) * big_minus_one) +
                          s * (s - 1) * big_minus_one;
  return {-(n + s * s - d * s - 3 * s + 2 * d - 1),
          d * n - s * n - n + d * s * s - s * s - d * d * s - d * s + 4 * s + d * d - 2 * d, c0};
}

QuadraticPoly b3_char_poly_derivative_display(std::int64_t n, std::int64_t s, std::int64_t d) {
  return {3, -2 * (n + s * s - d * s - 3 * s + 2 * d - 1),
          d * n - s * n - n + d * s * s - s * s - d * d * s - d * s + 4 * s + d * d - 2 * d};
}

CubicPoly bstar_char_poly_display(std::int64_t n, std::int64_t d) {
  return {-(n - d - 1), -(n + d * d - 2 * d), d * d * n - d * n - 2 * d * d * d + 2 * d * d};
}

IdentityCheck check_edge_diff_case1(std::int64_t n, std::int64_t s, std::int64_t delta) {
  if (s < 1 || delta < 1 || n < 2 * s || n < 2 * delta)
    throw std::invalid_argument("edge_diff_case1: need n >= 2s, n >= 2 delta, s, delta >= 1");
  const auto un = static_cast<std::size_t>(n);
  const std::int64_t lhs = edges_of(extremal_spec(un, static_cast<std::size_t>(delta))) -
                           edges_of(extremal_spec(un, static_cast<std::size_t>(s)));
  const Rational rhs = q(s - delta) * q(2 * n - 3 * s - 3 * delta + 3) / q(2);
  return make("edge_diff_case1", {n, s, delta, std::nullopt}, Relation::eq, q(lhs), rhs);
}

IdentityCheck check_edge_diff_case3(std::int64_t n, std::int64_t s, std::int64_t delta) {
  if (s < 2 || s > delta || n < 2 * delta)
    throw std::invalid_argument("edge_diff_case3: need 2 <= s <= delta and n >= 2 delta");
  const std::int64_t lhs = edges_of(extremal_spec(static_cast<std::size_t>(n),
                                                  static_cast<std::size_t>(delta))) -
                           edges_of(g3_spec(n, s, delta));
  const Rational rhs = q(delta - s) * size_gap_cubic(n, delta)(q(s)) / q(2);
  return make("edge_diff_case3", {n, s, delta, std::nullopt}, Relation::eq, q(lhs), rhs);
}

std::vector<IdentityCheck> check_phi_diff_case1(std::int64_t n, std::int64_t s, std::int64_t delta,
                                                const std::vector<Rational>& xs) {
  const CubicPoly phi2 = char_poly(quotient_b2(n, s));
  const CubicPoly phis = char_poly(quotient_bstar(n, delta));
  const QuadraticPoly f = spectral_gap_quadratic(n, s, delta);
  std::vector<IdentityCheck> out;
  for (const Rational& x : xs)
    out.push_back(make("phi_diff_case1", {n, s, delta, to_string(x)}, Relation::eq,
                       phi2(x) - phis(x), q(s - delta) * f(x)));
  return out;
}

IdentityCheck check_phi_diff_case3(std::int64_t n, std::int64_t s, std::int64_t delta, double theta) {
  const CubicPoly phi3 = char_poly(quotient_b3(n, s, delta));
  const CubicPoly phis = char_poly(quotient_bstar(n, delta));
  const Real t = theta;
  const Real lhs = phi3(t) - phis(t);
  const Real rhs = Real(delta - s) * b3_gap_quadratic(n, s, delta)(t);
  IdentityCheck c = make("phi_diff_case3", {n, s, delta, "theta"}, Relation::approx,
                         static_cast<double>(lhs), static_cast<double>(rhs));
  // theta must be a root of phi_B*; scale by the size of the cubic term.
  const Real vanish_tol = kRealIdentityTol * std::max<Real>(1, t * t * t);
  c.pass = c.pass && std::abs(phis(t)) <= vanish_tol;
  return c;
}

std::vector<IdentityCheck> certify_phi_diff_case3(std::int64_t n, std::int64_t s,
                                                  std::int64_t delta) {
  const CubicPoly phi3 = char_poly(quotient_b3(n, s, delta));
  const CubicPoly phis = char_poly(quotient_bstar(n, delta));
  const QuadraticPoly g = b3_gap_quadratic(n, s, delta);
  std::vector<IdentityCheck> out;
  for (const Rational& x : {q(0), q(1), q(2)})
    out.push_back(make("phi_diff_case3_exact", {n, s, delta, to_string(x)}, Relation::eq,
                       phi3(x) - phis(x), q(delta - s) * g(x)));
  return out;
}

std::vector<IdentityCheck> check_sign_claims(std::int64_t n, std::int64_t s, std::int64_t delta) {
  std::vector<IdentityCheck> out;
  size_case3_claims(out, n, s, delta);
  size_case1_claims(out, n, s, delta);
  spectral_case1_claims(out, n, s, delta);
  spectral_case3_claims(out, n, s, delta);
  return out;
}

std::vector<IdentityCheck> run_identity_grid(std::int64_t delta_max, std::int64_t n_extra) {
  std::vector<IdentityCheck> out;
  auto keep = [&out](std::vector<IdentityCheck> checks) {
    for (auto& c : checks)
      if (!c.skipped) out.push_back(std::move(c));
  };
  for (std::int64_t d = 2; d <= delta_max; ++d) {
    const std::int64_t size_floor =
        even_at_least(std::max(6 * d - 4, ceil_div(d * d + 7 * d + 4, 6)));
    const std::int64_t spectral_floor =
        even_at_least(std::max(5 * d - 3, ceil_div(d * d + 3 * d, 3)));

    for (std::int64_t n = size_floor; n <= size_floor + n_extra; ++n) {
      for (std::int64_t s = d; 2 * s <= n; ++s) out.push_back(check_edge_diff_case1(n, s, d));
      for (std::int64_t s = 2; s <= d; ++s)
        if (b3_big_part(n, s, d) >= d + 1 - s) out.push_back(check_edge_diff_case3(n, s, d));
    }

    for (std::int64_t n = spectral_floor; n <= spectral_floor + n_extra; ++n) {
      for (std::int64_t s = std::max<std::int64_t>(d, 2); 2 * s <= n; ++s)
        keep(check_phi_diff_case1(n, s, d, {q(0), q(1), q(2), q(n - d)}));
      const CubicPoly bs = char_poly(quotient_bstar(n, d));
      const CubicPoly bs_closed = bstar_char_poly_display(n, d);
      append_coefficients(out, "phi_bstar_closed_form", {n, d, d, std::nullopt},
                          {bs.c2, bs.c1, bs.c0}, {bs_closed.c2, bs_closed.c1, bs_closed.c0});
      const double theta = spectral_threshold(n, d);
      for (std::int64_t s = 2; s <= d; ++s) {
        if (b3_big_part(n, s, d) < 1) continue;
        out.push_back(check_phi_diff_case3(n, s, d, theta));
        keep(certify_phi_diff_case3(n, s, d));
      }
    }

    const std::int64_t lo = std::min(size_floor, spectral_floor);
    const std::int64_t hi = std::max(size_floor, spectral_floor) + n_extra;
    for (std::int64_t n = lo; n <= hi; n += 2)
      for (std::int64_t s = 2; 2 * s <= n; ++s) keep(check_sign_claims(n, s, d));
  }
  return out;
}

}  // namespace evenfactor
