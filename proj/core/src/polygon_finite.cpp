#include "ellipuc/polygon_finite.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "ellipuc/errors.hpp"
#include "ellipuc/measures.hpp"
#include "ellipuc/qseries.hpp"

namespace ellipuc {

namespace {

// 1/(q^x + q^{-x})
double sech_term(double q, double x) {
  const double t = std::pow(q, std::abs(x));
  return t / (1.0 + t * t);
}

void require_base(double q) {
  if (!(q > 0.0) || !(q < 1.0)) throw DomainError("need 0 < q < 1");
}

// Direct-sum weights for general M: fold the infinite cn grid onto the 2N
// roots of -1. Point s lands on j with j - 1/2 = M(s - 1/2) mod 2N.
std::vector<double> folded_weights(int N, int M, const EllipticContext& ctx) {
  const double q = ctx.nome_q();
  const double pref = std::numbers::pi / (ctx.k() * ctx.big_K());
  const int S = truncation_for_tail(1e-18, ctx);
  std::vector<double> rho(2 * N, 0.0);
  for (long s = -S + 1; s <= S; ++s) {
    long j = M * s - (M - 1) / 2;
    j = ((j + N - 1) % (2 * N) + 2 * N) % (2 * N) - N + 1;
    rho[static_cast<size_t>(j + N - 1)] += pref * sech_term(q, s - 0.5);
  }
  return rho;
}

}  // namespace

double RamanujanRoutes::max_spread() const {
  const double v[] = {direct, product, dn_form, poisson};
  return *std::max_element(std::begin(v), std::end(v)) -
         *std::min_element(std::begin(v), std::end(v));
}

double SWeightRoutes::max_spread() const {
  const double v[] = {direct, product, dn_form};
  return *std::max_element(std::begin(v), std::end(v)) -
         *std::min_element(std::begin(v), std::end(v));
}

RamanujanRoutes ramanujan_F(double alpha, double q) {
  require_base(q);
  RamanujanRoutes r{};
  const double lq = -std::log(q);

  // Bilateral sum; terms beyond |n + alpha| = L are below 1e-25 in total.
  const long L = static_cast<long>(std::ceil(60.0 / lq)) + 2;
  const long base = static_cast<long>(std::floor(alpha));
  double direct = 0.0;
  for (long d = L; d >= 1; --d) {
    direct += sech_term(q, -base + d + alpha) + sech_term(q, -base - d + alpha);
  }
  r.direct = direct + sech_term(q, -base + alpha);

  const double q2 = q * q;
  const double num = q_pochhammer_inf(-std::pow(q, 1 + 2 * alpha), q2) *
                     q_pochhammer_inf(-std::pow(q, 1 - 2 * alpha), q2) *
                     std::pow(q_pochhammer_inf(q2, q2), 2);
  const double den = q_pochhammer_inf(-std::pow(q, 2 + 2 * alpha), q2) *
                     q_pochhammer_inf(-std::pow(q, 2 - 2 * alpha), q2) *
                     std::pow(q_pochhammer_inf(q, q2), 2);
  r.product = sech_term(q, alpha) * num / den;

  const auto ctx = EllipticContext::from_nome(q);
  const auto dual = ctx.complementary();  // modulus k', quarter period K'
  r.dn_form = ctx.big_K() / std::numbers::pi *
              dual.sncndn(2.0 * alpha * ctx.big_K_prime()).dn;

  const double pi = std::numbers::pi;
  double poisson = 0.0;
  for (int s = 200; s >= 1; --s) {
    const double arg = pi * pi * s / lq;
    if (arg > 700.0) continue;
    poisson += 2.0 / std::cosh(arg) * std::cos(2.0 * pi * s * alpha);
  }
  r.poisson = pi / (2.0 * lq) * (1.0 + poisson);
  return r;
}

double S_dn_form_at(double x, int N, const EllipticContext& ctx) {
  const auto lt = landen_2N(ctx, N);
  const auto dual = lt.ctx.complementary();  // modulus k~', period K~'
  return lt.ctx.big_K() / std::numbers::pi *
         dual.sncndn(x / N * lt.ctx.big_K_prime()).dn;
}

SWeightRoutes S_weights(int j, int N, const EllipticContext& ctx) {
  if (N < 1 || j < -N + 1 || j > N) {
    throw DomainError("S_weights: need N >= 1 and -N+1 <= j <= N");
  }
  const double q = ctx.nome_q();
  const double h = j - 0.5;
  SWeightRoutes r{};

  const long L = static_cast<long>(std::ceil(60.0 / (-std::log(q) * 2 * N))) + 2;
  double direct = 0.0;
  for (long m = L; m >= 1; --m) {
    direct += sech_term(q, h + 2.0 * N * m) + sech_term(q, h - 2.0 * N * m);
  }
  r.direct = direct + sech_term(q, h);

  const double b = std::pow(q, 4 * N);
  const double num = q_pochhammer_inf(-std::pow(q, 2 * N + 2 * j - 1), b) *
                     q_pochhammer_inf(-std::pow(q, 2 * N - 2 * j + 1), b) *
                     std::pow(q_pochhammer_inf(b, b), 2);
  const double den = q_pochhammer_inf(-std::pow(q, 4 * N + 2 * j - 1), b) *
                     q_pochhammer_inf(-std::pow(q, 4 * N - 2 * j + 1), b) *
                     std::pow(q_pochhammer_inf(std::pow(q, 2 * N), b), 2);
  r.product = sech_term(q, h) * num / den;

  r.dn_form = S_dn_form_at(h, N, ctx);
  return r;
}

PolygonCase build_polygon_case(int N, const EllipticContext& ctx, int M) {
  if (N < 1) throw DomainError("build_polygon_case: N must be >= 1");
  if (M < 1 || M % 2 == 0 || std::gcd(M, N) != 1) {
    throw DomainError("build_polygon_case: M must be odd and co-prime with N");
  }
  PolygonCase pc(ctx);
  pc.N = N;
  pc.M = M;
  pc.w = ctx.big_K() * M / N;
  pc.experimental = M != 1;
  try {
    pc.a = reflection_cn(2 * N, pc.w, ctx);
    throw Error("expected a terminal reflection parameter at index " +
                std::to_string(2 * N - 1));
  } catch (const FiniteCaseSignal& sig) {
    if (sig.index() != 2 * N - 1) {
      throw Error("terminal reflection parameter at unexpected index " +
                  std::to_string(sig.index()));
    }
    pc.a.values = sig.values();
    pc.a.values.back() = -1.0;
    pc.a.finite = true;
  }
  pc.polys = szego_build_all(pc.a, 2 * N);
  const double pi = std::numbers::pi;
  for (int j = -N + 1; j <= N; ++j) {
    pc.j.push_back(j);
    pc.angles.push_back(reduce_angle(pi * (j - 0.5) / N));
  }
  if (M == 1) {
    const double pref = pi / (ctx.k() * ctx.big_K());
    for (int j : pc.j) pc.weights.push_back(pref * S_weights(j, N, ctx).product);
  } else {
    pc.weights = folded_weights(N, M, ctx);
  }
  return pc;
}

double finite_moment_check(const PolygonCase& pc, int n) {
  if (n < 0 || n > 2 * pc.N - 1) {
    throw DomainError("finite_moment_check: need 0 <= n <= 2N-1");
  }
  double re = 0.0;
  for (size_t i = 0; i < pc.weights.size(); ++i) {
    re += pc.weights[i] * std::cos(n * pc.angles[i]);
  }
  const double target = pc.ctx.sncndn(pc.ctx.big_K() * pc.M * n / pc.N).cn;
  return std::abs(re - target);
}

FiniteGramReport finite_gram_check(const PolygonCase& pc) {
  const int top = 2 * pc.N - 1;
  FiniteGramReport r;
  std::vector<MonicCirclePolynomial> polys(pc.polys.begin(),
                                           pc.polys.begin() + top + 1);
  DiscretePointMeasure m;
  m.index.assign(pc.j.begin(), pc.j.end());
  m.angles = pc.angles;
  m.weights = pc.weights;
  const GramMatrix g = gram_check(m, polys);
  r.gram = g.g;
  r.max_off_diagonal = g.max_off_diagonal();
  double h = 1.0;
  for (int n = 0; n <= top; ++n) {
    r.max_diagonal_error = std::max(r.max_diagonal_error, std::abs(g.g[n][n] - h));
    h *= 1.0 - pc.a.values[n] * pc.a.values[n];
  }
  double h_top = 1.0;
  for (int s = 0; s < top; ++s) h_top *= 1.0 - pc.a.values[s] * pc.a.values[s];
  for (size_t i = 0; i < pc.angles.size(); ++i) {
    const std::complex<double> z = std::polar(1.0, pc.angles[i]);
    const std::complex<double> deriv =
        2.0 * pc.N * std::pow(z, 2 * pc.N - 1);
    const std::complex<double> rho =
        h_top / (pc.polys[top].eval(1.0 / z) * deriv);
    r.residue_weights.push_back(rho.real());
    r.max_residue_imag = std::max(r.max_residue_imag, std::abs(rho.imag()));
    r.max_weight_diff =
        std::max(r.max_weight_diff, std::abs(rho.real() - pc.weights[i]));
  }
  return r;
}

}  // namespace ellipuc
