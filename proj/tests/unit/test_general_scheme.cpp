#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "ellipuc/circle_polys.hpp"
#include "ellipuc/continued_fraction.hpp"
#include "ellipuc/errors.hpp"
#include "ellipuc/general_scheme.hpp"

using namespace ellipuc;

namespace {

constexpr double kMagnusPartial = 0.39999999998862600009278886529;

std::vector<long> quotients_as_long(const ContinuedFractionData& cf) {
  std::vector<long> out;
  for (const auto& a : cf.quotients) out.push_back(static_cast<long>(a));
  return out;
}

}  // namespace

TEST(ContinuedFraction, PiMinusThree) {
  const auto cf = continued_fraction("0.14159265358979323846264338327950288", 40);
  const std::vector<long> head{0, 7, 15, 1, 292, 1, 1, 1};
  const auto q = quotients_as_long(cf);
  ASSERT_GE(q.size(), head.size());
  EXPECT_TRUE(std::equal(head.begin(), head.end(), q.begin()));
}

TEST(ContinuedFraction, GoldenAndThirds) {
  const auto g = continued_fraction("0.61803398874989484820458683436563811772", 40);
  const auto q = quotients_as_long(g);
  ASSERT_GT(q.size(), 10u);
  for (size_t i = 1; i < q.size(); ++i) EXPECT_EQ(q[i], 1) << i;

  const auto approx = continued_fraction("0.333333333333", 40);
  EXPECT_EQ(quotients_as_long(approx), (std::vector<long>{0, 3}));
  EXPECT_TRUE(approx.precision_limited);

  const auto exact = continued_fraction("1/3", 40);
  EXPECT_EQ(quotients_as_long(exact), (std::vector<long>{0, 3}));
  EXPECT_TRUE(exact.terminated);
}

TEST(ContinuedFraction, BestApproximations) {
  const auto g = continued_fraction("0.61803398874989484820458683436563811772", 40);
  const auto best = best_approximations(g, 13);
  ASSERT_GE(best.size(), 2u);
  EXPECT_EQ(best[0].n, 13);
  EXPECT_EQ(best[0].m, 8);
  const auto shallow = continued_fraction("0.6180339887", 40);
  EXPECT_THROW(best_approximations(shallow, 1000000), InsufficientDepthError);
}

TEST(ContinuedFraction, RationalDenominator) {
  EXPECT_EQ(rational_denominator(0.375, 1000), 8);
  EXPECT_EQ(rational_denominator(std::numbers::pi - 3, 1000), 0);
}

TEST(GeneralScheme, MagnusProfile) {
  const auto f = magnus_profile();
  EXPECT_DOUBLE_EQ(f(0.0), 1.0);
  EXPECT_DOUBLE_EQ(f(1.0), -1.0);
  EXPECT_NEAR(f(0.5), 0.0, 1e-16);
  for (double x : {0.1, 0.37, 0.8}) {
    EXPECT_NEAR(f(x + 1), -f(x), 1e-15);
    EXPECT_NEAR(f(x + 2), f(x), 1e-15);
  }
  EXPECT_NEAR(f.fourier_sum(0.3, 3999), kMagnusPartial, 1e-15);
  EXPECT_NEAR(f.tail(3999), 4 / (std::numbers::pi * std::numbers::pi * 3998), 1e-18);
}

TEST(GeneralScheme, CnProfileMatchesMoments) {
  const auto ctx = make_context(0.6);
  const auto p = PeriodicProfile::cn(ctx);
  const auto sm = scheme_moments(p, 0.31, 16);
  const auto c = moments_cn(16, 0.31, ctx);
  for (int n = 0; n <= 16; ++n) EXPECT_NEAR(sm.c(n), c(n), 1e-14);
  EXPECT_FALSE(sm.resonant);
  EXPECT_NEAR(p.fourier_sum(0.7, 60), p(0.7), 1e-13);

  const auto m = scheme_measure(p, 0.31, 60);
  for (int n = 0; n <= 10; ++n) {
    EXPECT_NEAR(moment_from_measure(m, n).real(), c(n), 1e-12);
  }
}

TEST(GeneralScheme, PipelinePositivity) {
  const auto r = scheme_pipeline(magnus_profile(), 0.6180339887498949, 30);
  EXPECT_TRUE(r.delta_positive);
  EXPECT_TRUE(r.a_inside);
  EXPECT_TRUE(r.failure.empty());

  const auto res = scheme_pipeline(magnus_profile(), 0.25, 12);
  EXPECT_TRUE(res.resonant);
}

TEST(GeneralScheme, JsonProfiles) {
  const auto p = PeriodicProfile::from_json(
      R"({"period": 1.0, "coefficients": [[0, 0.5], [1, 0.25]]})");
  EXPECT_NEAR(p(0.0), 1.0, 1e-15);
  EXPECT_NEAR(p(0.5), 0.0, 1e-15);
  EXPECT_EQ(p.support(), 1);
  const auto cn = PeriodicProfile::from_json(R"({"tag": "cn", "k": 0.6})");
  EXPECT_EQ(cn.tag(), "cn");
  EXPECT_THROW(PeriodicProfile::from_json(R"({"period": 1.0, "coefficients": [[0, 0.7]]})"),
               DomainError);
  EXPECT_THROW(PeriodicProfile::from_json(R"({"period": 1.0, "coefficients": [[1, -0.1], [0, 1.2]]})"),
               DomainError);
  EXPECT_ANY_THROW(PeriodicProfile::from_json("not json"));
}

TEST(GeneralScheme, ConstantProfileRejected) {
  const auto flat = PeriodicProfile::from_coefficients(1.0, {{0, 1.0}});
  const auto r = scheme_pipeline(flat, 0.3, 4);
  EXPECT_FALSE(r.delta_positive);
  EXPECT_FALSE(r.failure.empty());
}

TEST(GeneralScheme, MagnusSparsity) {
  const auto r = magnus_sparsity_check("0.61803398874989484820458683436563811772", 20);
  EXPECT_TRUE(r.passed()) << r.violations << ' ' << r.inconclusive;
  EXPECT_TRUE(r.nonzero_a_predicted);
  EXPECT_GT(r.min_h, 0.0);
  ASSERT_GE(r.rows.size(), 13u);
  const auto& row = r.rows[12];
  EXPECT_EQ(row.n, 13);
  EXPECT_EQ(row.predicted[1], 13);
}
