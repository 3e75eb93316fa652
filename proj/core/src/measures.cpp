#include "ellipuc/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ellipuc/errors.hpp"

namespace ellipuc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_trunc(int S) {
  if (S < 1) throw DomainError("measure truncation S must be >= 1");
}

// 1/(q^x + q^{-x}) without forming q^{-x}.
double inverse_cosh_weight(double q, double x) {
  const double t = std::pow(q, std::abs(x));
  return t / (1.0 + t * t);
}

}  // namespace

double reduce_angle(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

int truncation_for_tail(double eps, const EllipticContext& ctx) {
  if (!(eps > 0.0)) throw DomainError("tail target must be positive");
  const double q = ctx.nome_q();
  const double arg = eps * (1.0 - q) * ctx.k() * ctx.big_K() /
                     (2.0 * std::numbers::pi);
  const double S = std::ceil(0.5 + std::log(arg) / std::log(q));
  return std::max(1, static_cast<int>(S));
}

DiscretePointMeasure cn_measure(double w, const EllipticContext& ctx, int S) {
  require_trunc(S);
  const double pi = std::numbers::pi;
  const double K = ctx.big_K();
  const double q = ctx.nome_q();
  const double pref = pi / (ctx.k() * K);
  DiscretePointMeasure m;
  m.trunc = S;
  for (long s = -S + 1; s <= S; ++s) {
    const double h = s - 0.5;
    m.index.push_back(s);
    m.angles.push_back(reduce_angle(pi * w * h / K));
    m.weights.push_back(pref * inverse_cosh_weight(q, h));
  }
  m.tail_bound = 2.0 * pref * std::pow(q, S - 0.5) / (1.0 - q);
  return m;
}

DiscretePointMeasure dn_measure(double w, const EllipticContext& ctx, int S) {
  require_trunc(S);
  const double pi = std::numbers::pi;
  const double K = ctx.big_K();
  const double q = ctx.nome_q();
  const double pref = pi / K;
  DiscretePointMeasure m;
  m.trunc = S;
  for (long s = -S; s <= S; ++s) {
    m.index.push_back(s);
    m.angles.push_back(reduce_angle(pi * w * static_cast<double>(s) / K));
    m.weights.push_back(pref * inverse_cosh_weight(q, static_cast<double>(s)));
  }
  m.tail_bound = 2.0 * pref * std::pow(q, S + 1) / (1.0 - q);
  return m;
}

DiscretePointMeasure reflected_cn_measure(double w, const EllipticContext& ctx,
                                          int S) {
  DiscretePointMeasure m = cn_measure(w, ctx, S);
  const double pi = std::numbers::pi;
  for (size_t i = 0; i < m.size(); ++i) {
    const double h = m.index[i] - 0.5;
    m.angles[i] = reduce_angle(pi * w * h / ctx.big_K() - pi);
  }
  return m;
}

DiscretePointMeasure family_measure(Family f, double w,
                                    const EllipticContext& ctx, int S) {
  return f == Family::cn ? cn_measure(w, ctx, S) : dn_measure(w, ctx, S);
}

std::complex<double> moment_from_measure(const DiscretePointMeasure& m,
                                         long n) {
  double re = 0.0;
  double im = 0.0;
  for (size_t i = 0; i < m.size(); ++i) {
    const double phase = static_cast<double>(n) * m.angles[i];
    re += m.weights[i] * std::cos(phase);
    im += m.weights[i] * std::sin(phase);
  }
  return {re, im};
}

double GramMatrix::max_off_diagonal() const {
  double worst = 0.0;
  for (size_t n = 0; n < g.size(); ++n) {
    for (size_t k = 0; k < g[n].size(); ++k) {
      if (n != k) worst = std::max(worst, std::abs(g[n][k]));
    }
  }
  return worst;
}

GramMatrix gram_check(const DiscretePointMeasure& m,
                      const std::vector<MonicCirclePolynomial>& polys) {
  const size_t P = polys.size();
  std::vector<std::vector<std::complex<double>>> acc(
      P, std::vector<std::complex<double>>(P, 0.0));
  std::vector<std::complex<double>> values(P);
  for (size_t i = 0; i < m.size(); ++i) {
    const std::complex<double> z = std::polar(1.0, m.angles[i]);
    for (size_t n = 0; n < P; ++n) values[n] = polys[n].eval(z);
    for (size_t n = 0; n < P; ++n) {
      for (size_t k = 0; k < P; ++k) {
        acc[n][k] += m.weights[i] * values[n] * std::conj(values[k]);
      }
    }
  }
  GramMatrix out;
  out.g.assign(P, std::vector<double>(P, 0.0));
  for (size_t n = 0; n < P; ++n) {
    for (size_t k = 0; k < P; ++k) {
      out.g[n][k] = acc[n][k].real();
      out.max_imag = std::max(out.max_imag, std::abs(acc[n][k].imag()));
    }
  }
  return out;
}

DensityReport density_report(const DiscretePointMeasure& m, double tol) {
  if (m.size() < 2) throw DomainError("density_report needs >= 2 points");
  std::vector<double> sorted = m.angles;
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> distinct;
  for (double a : sorted) {
    if (distinct.empty() || a - distinct.back() > tol) distinct.push_back(a);
  }
  // Wrap-around duplicate: a point just below 2pi equals one at 0.
  if (distinct.size() > 1 && distinct.front() + kTwoPi - distinct.back() <= tol) {
    distinct.pop_back();
  }
  DensityReport r;
  r.distinct = distinct.size();
  if (distinct.size() == 1) return r;
  r.min_gap = kTwoPi;
  for (size_t i = 0; i < distinct.size(); ++i) {
    const double next = i + 1 < distinct.size() ? distinct[i + 1]
                                                 : distinct.front() + kTwoPi;
    const double gap = next - distinct[i];
    r.min_gap = std::min(r.min_gap, gap);
    r.max_gap = std::max(r.max_gap, gap);
  }
  return r;
}

}  // namespace ellipuc
