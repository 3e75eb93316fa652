#include <cmath>

#include <gtest/gtest.h>

#include "ellipuc/ebc.hpp"
#include "ellipuc/errors.hpp"

using namespace ellipuc;

namespace {

constexpr double kE52 = 5.22135345610948409922601880614;
constexpr double kE4 = 3.01654161619956785311114377869;

EbcParams ref() { return make_ebc_params(0.31, make_context(0.6)); }

double binomial(int n, int j) {
  double b = 1.0;
  for (int i = 0; i < j; ++i) b = b * (n - i) / (i + 1);
  return b;
}

}  // namespace

TEST(Ebc, FixtureValues) {
  EXPECT_NEAR(ebc(5, 2, ref()), kE52, 4e-15);
  EXPECT_NEAR(elliptic_number(4, ref()), kE4, 2e-15);
}

TEST(Ebc, BoundaryAndSymmetry) {
  const auto p = ref();
  for (int n = 0; n <= 30; ++n) {
    EXPECT_EQ(ebc(n, 0, p), 1.0);
    EXPECT_EQ(ebc(n, n, p), 1.0);
    EXPECT_EQ(ebc(n, -1, p), 0.0);
    EXPECT_EQ(ebc(n, n + 1, p), 0.0);
    for (int j = 0; j <= n; ++j) EXPECT_EQ(ebc(n, j, p), ebc(n, n - j, p));
  }
  EXPECT_EQ(elliptic_number(7, p), ebc(7, 1, p));
}

TEST(Ebc, SixRecurrences) {
  const auto res = verify_ebc_recurrences(40, ref());
  ASSERT_EQ(res.size(), 6u);
  for (const auto& r : res) EXPECT_LE(r.max_residual, 1e-11) << r.name;
}

TEST(Ebc, BinomialLimit) {
  const auto p = make_ebc_params(1e-8, make_context(0.6));
  for (int n = 0; n <= 20; ++n) {
    for (int j = 0; j <= n; ++j) {
      EXPECT_NEAR(ebc(n, j, p) / binomial(n, j), 1.0, 1e-5);
    }
  }
}

TEST(Ebc, ModulusLimits) {
  const auto small = make_ebc_params(0.31, make_context(0.001));
  EXPECT_NEAR(ebc(6, 2, small), ebc_k0_limit(6, 2, 0.31), 1e-4);
  const auto big = make_ebc_params(0.31, make_context(0.999999));
  EXPECT_NEAR(ebc(6, 2, big), ebc_k1_limit(6, 2, 0.31), 1e-3);
  for (int n = 0; n <= 10; ++n) {
    for (int j = 0; j <= n; ++j) {
      const auto g = ebc_k0_qbinomial(n, j, 0.31);
      EXPECT_NEAR(g.real(), ebc_k0_limit(n, j, 0.31), 1e-10);
      EXPECT_NEAR(g.imag(), 0.0, 1e-10);
    }
  }
}

TEST(Ebc, LatticeRejected) {
  const auto ctx = make_context(0.6);
  EXPECT_THROW(make_ebc_params(4 * ctx.big_K() / 7, ctx), DegeneracyError);
  EXPECT_THROW(make_ebc_params(2 * ctx.big_K(), ctx), DegeneracyError);
  EXPECT_THROW(make_ebc_params(0.0, ctx), DomainError);
  EXPECT_NO_THROW(make_ebc_params(0.31, ctx));
}

TEST(Ebc, DegenerateDenominatorThrows) {
  const auto ctx = make_context(0.6);
  // Skip the lattice screen to reach the vanishing sn factor directly.
  const EbcParams p{2 * ctx.big_K(), ctx};
  EXPECT_THROW(ebc(4, 2, p), DegeneracyError);
}
