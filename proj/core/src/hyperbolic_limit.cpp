#include "ellipuc/hyperbolic_limit.hpp"

#include <cmath>
#include <numbers>

#include "ellipuc/errors.hpp"

namespace ellipuc {

namespace {

void require_positive_w(double w) {
  if (!(w > 0.0) || !std::isfinite(w)) {
    throw DomainError("hyperbolic family needs w > 0");
  }
}

}  // namespace

ReflectionSequence hyp_reflections(int N, double w) {
  require_positive_w(w);
  ReflectionSequence out;
  for (int n = 0; n < N; ++n) {
    const double a = 1.0 / std::cosh(w * (n + 1));
    out.values.push_back(n % 2 == 0 ? a : -a);
  }
  return out;
}

MomentSequence hyp_moments(int n_max, double w) {
  require_positive_w(w);
  MomentSequence out;
  for (int n = 0; n <= n_max; ++n) out.values.push_back(1.0 / std::cosh(w * n));
  return out;
}

MonicCirclePolynomial hyp_poly(int n, double w) {
  require_positive_w(w);
  if (n < 0) throw DomainError("hyp_poly: degree must be >= 0");
  const double q = std::exp(-2.0 * w);
  // Overall factor 2 (-1)^n q^{-n/2}/(1 + q^{-n}) = (-1)^n / cosh(nw), and the
  // 2phi1 series (q^{-n}, -q; -q^{1-n}; z q^{1/2}).
  const double lead = (n % 2 == 0 ? 1.0 : -1.0) / std::cosh(w * n);
  const double qn = std::pow(q, -n);
  const double q1n = std::pow(q, 1 - n);
  const double root_q = std::sqrt(q);
  std::vector<double> coeffs(n + 1);
  double term = 1.0;
  double qs = 1.0;  // q^s
  for (int s = 0; s <= n; ++s) {
    coeffs[s] = lead * term;
    if (s == n) break;
    const double num = (1.0 - qn * qs) * (1.0 + q * qs);
    const double den = (1.0 - q * qs) * (1.0 + q1n * qs);
    term *= num / den * root_q;
    qs *= q;
  }
  return MonicCirclePolynomial(std::move(coeffs));
}

HyperbolicWeight::HyperbolicWeight(double w)
    : w_(w), series_base_(std::exp(-2.0 * w)), ctx_(solve_k_from_w(w)) {}

double HyperbolicWeight::operator()(double theta) const {
  const double pi = std::numbers::pi;
  const double K = ctx_.big_K();
  return K / (pi * pi) * ctx_.sncndn(K * theta / pi).dn;
}

double HyperbolicWeight::reflected(double theta) const {
  const double pi = std::numbers::pi;
  const double K = ctx_.big_K();
  return ctx_.k_prime() * K / (pi * pi) / ctx_.sncndn(K * theta / pi).dn;
}

double HyperbolicWeight::cosine_moment(int n, int nodes) const {
  if (nodes < 2) throw DomainError("quadrature needs >= 2 nodes");
  const double step = 2.0 * std::numbers::pi / nodes;
  double acc = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double theta = step * j;
    acc += (*this)(theta) * std::cos(n * theta);
  }
  return acc * step;
}

double hyp_weight(double theta, double w) {
  return HyperbolicWeight(w)(theta);
}

DiscretePointMeasure k0_degenerate_measure(Family f, double w) {
  DiscretePointMeasure m;
  m.trunc = 0;
  m.tail_bound = 0.0;
  if (f == Family::cn) {
    m.index = {0, 1};
    m.angles = {reduce_angle(-w), reduce_angle(w)};
    m.weights = {0.5, 0.5};
  } else {
    m.index = {0};
    m.angles = {0.0};
    m.weights = {1.0};
  }
  return m;
}

}  // namespace ellipuc
