#include "ellipuc/ebc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ellipuc/continued_fraction.hpp"
#include "ellipuc/errors.hpp"
#include "ellipuc/qseries.hpp"

namespace ellipuc {

namespace {

constexpr double kDegenerateSn = 1e-10;

double checked_denominator(double value, long s) {
  if (std::abs(value) < kDegenerateSn) {
    throw DegeneracyError("vanishing denominator factor at s = " +
                              std::to_string(s) + " (w on the lattice)",
                          s);
  }
  return value;
}

}  // namespace

EbcParams make_ebc_params(double w, const EllipticContext& ctx,
                          long max_denominator) {
  if (!std::isfinite(w) || w == 0.0) {
    throw DomainError("EBC step parameter w must be finite and nonzero");
  }
  const long den = rational_denominator(w / (4.0 * ctx.big_K()),
                                       max_denominator);
  if (den != 0) {
    throw DegeneracyError("w is a rational multiple of K (denominator " +
                              std::to_string(den) + ")",
                          den);
  }
  return {w, ctx};
}

double ebc(long n, long j, const EbcParams& p) {
  if (n < 0 || j < 0 || j > n) return 0.0;
  const long jj = std::min(j, n - j);
  double result = 1.0;
  for (long s = 0; s < jj; ++s) {
    const double num = p.ctx.sncndn(p.w * static_cast<double>(n - s)).sn;
    const double den = checked_denominator(
        p.ctx.sncndn(p.w * static_cast<double>(s + 1)).sn, s);
    result *= num / den;
  }
  return result;
}

double elliptic_number(long n, const EbcParams& p) {
  const double num = p.ctx.sncndn(p.w * static_cast<double>(n)).sn;
  const double den = checked_denominator(p.ctx.sncndn(p.w).sn, 0);
  return num / den;
}

std::vector<IdentityResidual> verify_ebc_recurrences(int n_max,
                                                     const EbcParams& p) {
  if (n_max < 1) throw DomainError("verify_ebc_recurrences: n_max >= 1");
  std::vector<double> cn(n_max + 1), dn(n_max + 1);
  for (int m = 0; m <= n_max; ++m) {
    const auto t = p.ctx.sncndn(p.w * m);
    cn[m] = t.cn;
    dn[m] = t.dn;
  }
  std::vector<std::vector<double>> E(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    E[n].resize(n + 1);
    for (int j = 0; j <= n; ++j) E[n][j] = ebc(n, j, p);
  }
  auto e = [&](int n, int j) {
    return (j < 0 || j > n) ? 0.0 : E[n][j];
  };
  std::vector<IdentityResidual> out = {
      {"rec_E", 0.0},  {"rec_E1", 0.0}, {"rec_E2", 0.0},
      {"rec_E3", 0.0}, {"rec_E4", 0.0}, {"rec_E5", 0.0},
  };
  auto track = [&](int id, double r) {
    out[id].max_residual = std::max(out[id].max_residual, std::abs(r));
  };
  for (int n = 1; n <= n_max; ++n) {
    for (int j = 1; j <= n; ++j) {
      const double Enj = e(n, j);
      const double lo = e(n - 1, j - 1);
      const double hi = e(n - 1, j);
      const int r = n - j;
      track(0, cn[j] * dn[r] * Enj - cn[n] * lo - dn[n] * hi);
      track(1, cn[r] * dn[j] * Enj - cn[n] * hi - dn[n] * lo);
      track(2, cn[r] * Enj - dn[r] * lo - cn[n] * dn[j] * hi);
      track(3, cn[j] * Enj - dn[j] * hi - cn[n] * dn[r] * lo);
      track(4, dn[r] * Enj - cn[r] * lo - dn[n] * cn[j] * hi);
      track(5, dn[j] * Enj - cn[j] * hi - dn[n] * cn[r] * lo);
    }
  }
  return out;
}

double ebc_k0_limit(long n, long j, double w) {
  if (n < 0 || j < 0 || j > n) return 0.0;
  double result = 1.0;
  for (long s = 0; s < j; ++s) {
    const double den = checked_denominator(std::sin(w * (s + 1)), s);
    result *= std::sin(w * (n - s)) / den;
  }
  return result;
}

std::complex<double> ebc_k0_qbinomial(long n, long j, double w) {
  if (n < 0 || j < 0 || j > n) return 0.0;
  const std::complex<double> q = std::polar(1.0, -2.0 * w);
  std::complex<double> gauss = 1.0;
  for (long i = 1; i <= j; ++i) {
    const std::complex<double> den = 1.0 - std::pow(q, static_cast<int>(i));
    if (std::abs(den) < kDegenerateSn) {
      throw DegeneracyError("q-binomial denominator vanishes", i);
    }
    gauss *= (1.0 - std::pow(q, static_cast<int>(n - j + i))) / den;
  }
  const double phase = w * static_cast<double>(n * j - j * j);
  return std::polar(1.0, phase) * gauss;
}

double ebc_k1_limit(long n, long j, double w) {
  if (n < 0 || j < 0 || j > n) return 0.0;
  if (!(w > 0.0)) throw DomainError("ebc_k1_limit: w must be positive");
  const double q = std::exp(-2.0 * w);
  const QPochhammerCache plain(q, q, n);
  const QPochhammerCache minus(-q, q, n);
  return plain(n) / (plain(j) * plain(n - j)) * minus(j) * minus(n - j) /
         minus(n);
}

}  // namespace ellipuc
