#include "ellipuc/fourier_oracle.hpp"

#include <cmath>
#include <numbers>

#include "ellipuc/errors.hpp"

namespace ellipuc::oracle {

namespace {

void require_terms(int S) {
  if (S < 1) throw DomainError("Fourier oracle needs S >= 1");
}

}  // namespace

SeriesValue fourier_cn(double u, const EllipticContext& ctx, int S) {
  require_terms(S);
  const double pi = std::numbers::pi;
  const double K = ctx.big_K();
  const double q = ctx.nome_q();
  const double prefactor = pi / (ctx.k() * K);
  // Terms s and 1 - s are complex conjugates; sum them as 2 cos.
  double sum = 0.0;
  for (int s = S; s >= 1; --s) {
    const double h = s - 0.5;
    const double coeff = std::pow(q, h) / (1.0 + std::pow(q, 2.0 * h));
    sum += 2.0 * coeff * std::cos(pi * u * h / K);
  }
  const double tail = 2.0 * prefactor * std::pow(q, S - 0.5) / (1.0 - q);
  return {prefactor * sum, tail};
}

SeriesValue fourier_dn(double u, const EllipticContext& ctx, int S) {
  require_terms(S);
  const double pi = std::numbers::pi;
  const double K = ctx.big_K();
  const double q = ctx.nome_q();
  const double prefactor = pi / K;
  double sum = 0.0;
  for (int s = S; s >= 1; --s) {
    const double coeff = std::pow(q, s) / (1.0 + std::pow(q, 2.0 * s));
    sum += 2.0 * coeff * std::cos(pi * u * s / K);
  }
  sum += 0.5;
  const double tail = 2.0 * prefactor * std::pow(q, S + 1) / (1.0 - q);
  return {prefactor * sum, tail};
}

SeriesValue fourier_sn(double u, const EllipticContext& ctx, int S) {
  require_terms(S);
  const double pi = std::numbers::pi;
  const double K = ctx.big_K();
  const double q = ctx.nome_q();
  const double prefactor = 2.0 * pi / (K * ctx.k());
  const double t = pi * u / (2.0 * K);
  double sum = 0.0;
  for (int j = S; j >= 1; --j) {
    // 1 / (q^{1/2-j} - q^{j-1/2}) without forming the large power.
    const double h = j - 0.5;
    const double coeff = std::pow(q, h) / (1.0 - std::pow(q, 2.0 * h));
    sum += coeff * std::sin((2 * j - 1) * t);
  }
  const double tail =
      prefactor * std::pow(q, S + 0.5) / ((1.0 - q) * (1.0 - q));
  return {prefactor * sum, tail};
}

}  // namespace ellipuc::oracle
