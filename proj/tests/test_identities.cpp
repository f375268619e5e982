#include "doctest.h"

#include "evenfactor/identities.hpp"
#include "evenfactor/thresholds.hpp"

using namespace evenfactor;

namespace {

const IdentityCheck* find(const std::vector<IdentityCheck>& checks, const std::string& name) {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

Rational rat(const IdentityCheck& c, bool left) {
  return std::get<Rational>(left ? c.lhs : c.rhs);
}

}  // namespace

TEST_SUITE("identities") {

TEST_CASE("edge differences") {
  const auto a = check_edge_diff_case1(12, 3, 2);
  CHECK(a.pass);
  CHECK(rat(a, true) == Rational(6));
  CHECK(check_edge_diff_case1(12, 6, 6).pass);
  CHECK(rat(check_edge_diff_case1(12, 6, 6), true) == Rational(0));
  CHECK(check_edge_diff_case1(16, 4, 3).pass);

  const auto b = check_edge_diff_case3(14, 3, 4);
  CHECK(b.pass);
  CHECK(rat(b, true) == Rational(8));
  CHECK(rat(check_edge_diff_case3(14, 4, 4), true) == Rational(0));
  CHECK(check_edge_diff_case3(20, 2, 5).pass);
}

TEST_CASE("characteristic polynomial differences") {
  for (const auto& c : check_phi_diff_case1(10, 4, 3, {Rational(0), Rational(1), Rational(2)}))
    CHECK(c.pass);
  for (const auto& c : check_phi_diff_case1(10, 3, 3, {Rational(0), Rational(5), Rational(-7, 2)})) {
    CHECK(c.pass);
    CHECK(rat(c, true) == Rational(0));
  }
  const auto at = check_phi_diff_case1(12, 5, 2, {Rational(10)});
  REQUIRE(at.size() == 1);
  CHECK(at[0].pass);
  CHECK(rat(at[0], false) / Rational(3) > Rational(0));

  CHECK(check_phi_diff_case3(14, 3, 4, spectral_threshold(14, 4)).pass);
  CHECK(check_phi_diff_case3(20, 2, 5, spectral_threshold(20, 5)).pass);
  CHECK(check_phi_diff_case3(14, 4, 4, spectral_threshold(14, 4)).pass);
  // A value that is not the threshold fails the vanishing test.
  CHECK_FALSE(check_phi_diff_case3(14, 3, 4, spectral_threshold(14, 4) + 0.5).pass);
  for (const auto& c : certify_phi_diff_case3(14, 3, 4)) CHECK(c.pass);
}

TEST_CASE("closed-form polynomials match computed ones") {
  for (std::int64_t d = 3; d <= 9; ++d)
    for (std::int64_t s = 2; s < d; ++s)
      for (std::int64_t n = 3 * d; n <= 3 * d + 15; ++n) {
        if (b3_big_part(n, s, d) < 1) continue;
        const CubicPoly p = char_poly(quotient_b3(n, s, d));
        const CubicPoly q = b3_char_poly_display(n, s, d);
        CHECK((p.c2 == q.c2 && p.c1 == q.c1 && p.c0 == q.c0));
        const QuadraticPoly dp = p.derivative();
        const QuadraticPoly dq = b3_char_poly_derivative_display(n, s, d);
        CHECK((dp.a2 == dq.a2 && dp.a1 == dq.a1 && dp.a0 == dq.a0));
      }
  const CubicPoly b = bstar_char_poly_display(8, 2);
  CHECK((b.c2 == -5 && b.c1 == -8 && b.c0 == 8));
}

TEST_CASE("sign claims at hand-evaluated points") {
  const auto a = check_sign_claims(14, 3, 4);
  const auto* f3 = find(check_sign_claims(14, 3, 4), "size_f3_closed_form");
  CHECK(f3 == nullptr);  // n = 14 < 6*4-4
  const auto size = check_sign_claims(20, 3, 4);
  const auto* g = find(size, "size_f3_closed_form");
  REQUIRE(g);
  CHECK(rat(*g, false) == Rational(2 * 20 - 12));

  CHECK(size_gap_cubic(14, 3)(Rational(3)) == Rational(19));
  const auto fl = check_sign_claims(14, 2, 3);
  const auto* esc = find(fl, "size_f_positive");
  REQUIRE(esc);
  CHECK_FALSE(esc->skipped);
  CHECK(esc->pass);

  const auto sp = check_sign_claims(7, 3, 2);
  const auto* floor = find(sp, "spectral_f_floor_value");
  REQUIRE(floor);
  CHECK(rat(*floor, false) == Rational(7, 2));
  CHECK(floor->pass);

  const auto d = check_sign_claims(9, 3, 4);
  const auto* end = find(d, "dphi_b3_chain_end");
  REQUIRE(end);
  CHECK(rat(*end, false) == Rational(235, 9));
  CHECK(end->pass);
  for (const auto& c : a)
    if (!c.skipped) CHECK(c.pass);
}

TEST_CASE("claims outside their range are skipped, not evaluated") {
  const auto c = check_sign_claims(8, 2, 2);
  const auto* f = find(c, "size_f_positive");
  REQUIRE(f);
  CHECK(f->skipped);
  CHECK(to_json(*f).contains("skipped"));
  CHECK_FALSE(to_json(*f).contains("pass"));
}

TEST_CASE("the affine boundary case s = 3") {
  const auto c = check_sign_claims(24, 3, 5);
  CHECK(find(c, "b3_gap_affine_slope_positive"));
  CHECK_FALSE(find(c, "b3_gap_axis_below"));
  const auto e = check_sign_claims(24, 4, 5);
  CHECK(find(e, "b3_gap_axis_below"));
}

TEST_CASE("json lines") {
  const auto j = to_json(check_edge_diff_case1(12, 3, 2));
  CHECK(j["name"] == "edge_diff_case1");
  CHECK(j["params"]["n"] == 12);
  CHECK(j["lhs"] == "6");
  CHECK(j["pass"] == true);
  const auto t = to_json(check_phi_diff_case3(14, 3, 4, spectral_threshold(14, 4)));
  CHECK(t["params"]["x"] == "theta");
  CHECK(t["lhs"].get<std::string>().find('.') != std::string::npos);
}

TEST_CASE("small grid passes") {
  const auto grid = run_identity_grid(4, 4);
  CHECK(grid.size() > 100);
  for (const auto& c : grid) {
    CHECK_FALSE(c.skipped);
    CHECK_MESSAGE(c.pass, to_json(c).dump());
  }
}

}
