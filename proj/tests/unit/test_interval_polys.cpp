#include <cmath>

#include <gtest/gtest.h>

#include "ellipuc/circle_polys.hpp"
#include "ellipuc/interval_polys.hpp"
#include "ellipuc/measures.hpp"

using namespace ellipuc;

namespace {

constexpr double kW = 0.31;
constexpr double kM2 = 0.97643307753352367149745235253;

const EllipticContext& ctx() {
  static const auto c = make_context(0.6);
  return c;
}

}  // namespace

TEST(IntervalPolys, ChebyshevTables) {
  // Monomial evaluation is only well conditioned for moderate degree.
  for (int m : {0, 1, 5, 12, 20}) {
    const auto& t = chebyshev_T(m);
    const auto& v = chebyshev_V(m);
    ASSERT_EQ(t.size(), static_cast<size_t>(m + 1));
    for (double th : {0.2, 1.3, 2.7}) {
      RealPoly tp(t.begin(), t.end());
      RealPoly vp(v.begin(), v.end());
      EXPECT_NEAR(eval_poly(tp, std::cos(th)), std::cos(m * th), 1e-9);
      EXPECT_NEAR(eval_poly(vp, std::cos(th)),
                  std::cos((m + 0.5) * th) / std::cos(th / 2), 1e-8);
    }
  }
}

TEST(IntervalPolys, ChebyshevIntegerRecurrence) {
  for (int m = 1; m < 40; ++m) {
    const auto& prev = chebyshev_T(m - 1);
    const auto& cur = chebyshev_T(m);
    const auto& next = chebyshev_T(m + 1);
    for (int s = 0; s <= m + 1; ++s) {
      const std::int64_t shifted = s >= 1 && s - 1 <= m ? 2 * cur[s - 1] : 0;
      const std::int64_t back = s <= m - 1 ? prev[s] : 0;
      EXPECT_EQ(next[s], shifted - back) << m << ' ' << s;
    }
  }
  std::int64_t at_one = 0;
  for (auto c : chebyshev_V(40)) at_one += c;
  EXPECT_EQ(at_one, 1);
}

TEST(IntervalPolys, MomentTwo) {
  const auto c = moments_cn(4, kW, ctx());
  EXPECT_NEAR(interval_moments(c, 2), kM2, 1e-15);
  EXPECT_EQ(interval_moments(c, 3), 0.0);
  EXPECT_EQ(interval_moments(c, 0), 1.0);
}

TEST(IntervalPolys, RecurrencesAgree) {
  for (Family f : {Family::cn, Family::dn}) {
    const auto a = reflection(f, 24, kW, ctx());
    const auto phis = szego_build_all(a, 23);
    const auto r = v_coeffs(a);
    std::vector<SymmetricIntervalPolynomial> s;
    for (int n = 0; n <= 22; ++n) s.push_back(dgt(phis[n], n == 0 ? -1.0 : a.values[n - 1]));
    EXPECT_LE(symmetric_recurrence_residual(s, r), 1e-12);
    const auto routes = split_PQ_recurrences(a);
    EXPECT_LE(routes.max_disagreement, 1e-12);
    const auto sp = split_polys(phis, a);
    EXPECT_LE(split_recurrence_residual(sp.P, routes.direct.P), 1e-11);
    EXPECT_LE(split_recurrence_residual(sp.Q, routes.direct.Q), 1e-11);
    const auto kappa = kappa_from_v(r);
    EXPECT_EQ(kappa[0], 1.0);
  }
}

TEST(IntervalPolys, ExplicitCnRecurrence) {
  const auto a = reflection_cn(24, kW, ctx());
  const auto direct = split_PQ_direct(a);
  const auto explicit_rec = cn_P_recurrence_explicit(10, kW, ctx());
  for (int n = 0; n <= 10; ++n) {
    EXPECT_NEAR(explicit_rec.b[n], direct.P.b[n], 1e-12) << n;
    if (n >= 1) EXPECT_NEAR(explicit_rec.u[n], direct.P.u[n], 1e-12) << n;
  }
}

TEST(IntervalPolys, GramOnInterval) {
  const auto a = reflection_cn(24, kW, ctx());
  const auto phis = szego_build_all(a, 23);
  const auto m = cn_measure(kW, ctx(), 200);
  const auto g = interval_gram(a, phis, m, 12, 6);
  EXPECT_LE(g.s_off, 1e-10);
  EXPECT_LE(g.s_diag, 1e-10);
  EXPECT_LE(g.p_off, 1e-10);
  EXPECT_LE(g.p_diag, 1e-10);
  EXPECT_LE(g.q_off, 1e-10);
  EXPECT_LE(g.q_diag, 1e-10);
}

TEST(IntervalPolys, AskeyWilsonLimit) {
  const double q = std::exp(-0.8);
  const auto r = askey_wilson_limit_check(q, 10, 33);
  const auto r45 = askey_wilson_limit_check(0.45, 10, 17);
  EXPECT_LE(r45.max_ratio_spread, 1e-8);
  EXPECT_LE(r.max_u_error, 1e-12);
  EXPECT_LE(r.max_b_error, 1e-12);
  EXPECT_LE(r.max_ratio_spread, 1e-10);
  EXPECT_GT(r.ratio_constant, 1.0);
}

TEST(IntervalPolys, DisplayNearOneModulus) {
  const auto near = EllipticContext::from_complement(std::sqrt(1e-8 * (2 - 1e-8)));
  const auto a = reflection_cn(12, 0.4, near);
  const auto rec = split_PQ_direct(a);
  const double q = std::exp(-0.8);
  EXPECT_NEAR(rec.P.u[1], aw_u_display(1, q), 1e-4);
}
