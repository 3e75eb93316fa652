#include "ellipuc/interval_polys.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ellipuc/errors.hpp"
#include "ellipuc/hyperbolic_limit.hpp"

namespace ellipuc {

namespace {

constexpr int kMaxChebyshev = 40;

using IntTable = std::vector<std::vector<std::int64_t>>;

IntTable build_table(std::vector<std::int64_t> first) {
  IntTable t;
  t.push_back({1});
  t.push_back(std::move(first));
  for (int m = 1; m < kMaxChebyshev; ++m) {
    std::vector<std::int64_t> next(m + 2, 0);
    for (int i = 0; i <= m; ++i) next[i + 1] += 2 * t[m][i];
    for (size_t i = 0; i < t[m - 1].size(); ++i) next[i] -= t[m - 1][i];
    t.push_back(std::move(next));
  }
  return t;
}

const IntTable& t_table() {
  static const IntTable table = build_table({0, 1});
  return table;
}

const IntTable& v_table() {
  static const IntTable table = build_table({-1, 2});
  return table;
}

void add_scaled(RealPoly& acc, const std::vector<std::int64_t>& basis,
                double f) {
  if (acc.size() < basis.size()) acc.resize(basis.size(), 0.0);
  for (size_t i = 0; i < basis.size(); ++i) {
    acc[i] += f * static_cast<double>(basis[i]);
  }
}

double reflection_at(const ReflectionSequence& a, long n) {
  if (n == -1) return -1.0;
  if (n < -1 || n >= static_cast<long>(a.values.size())) {
    throw DomainError("reflection index " + std::to_string(n) +
                      " outside the supplied sequence");
  }
  return a.values[static_cast<size_t>(n)];
}

double residual_three_term(const RealPoly& next, const RealPoly& cur,
                           const RealPoly* prev, double b, double u) {
  // next + b cur + u prev - x cur
  const size_t n = std::max(next.size(), cur.size() + 1);
  double worst = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double r = i < next.size() ? next[i] : 0.0;
    if (i < cur.size()) r += b * cur[i];
    if (prev && i < prev->size()) r += u * (*prev)[i];
    if (i >= 1 && i - 1 < cur.size()) r -= cur[i - 1];
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

}  // namespace

double eval_poly(const RealPoly& p, double x) {
  double acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

const std::vector<std::int64_t>& chebyshev_T(int m) {
  if (m < 0 || m > kMaxChebyshev) throw DomainError("Chebyshev degree > 40");
  return t_table()[m];
}

const std::vector<std::int64_t>& chebyshev_V(int m) {
  if (m < 0 || m > kMaxChebyshev) throw DomainError("Chebyshev degree > 40");
  return v_table()[m];
}

SymmetricIntervalPolynomial dgt(const MonicCirclePolynomial& phi,
                                double a_prev) {
  if (a_prev == 1.0) {
    throw DomainError("dgt: a_{n-1} = 1 makes the transform degenerate");
  }
  const int n = phi.degree();
  // z^{s - n/2} + z^{n/2 - s} = 2 T_{|2s - n|}(x) with x = cos(theta/2).
  const double scale = 2.0 / (std::ldexp(1.0, n) * (1.0 - a_prev));
  SymmetricIntervalPolynomial out;
  out.coeffs.assign(n + 1, 0.0);
  for (int s = 0; s <= n; ++s) {
    add_scaled(out.coeffs, chebyshev_T(std::abs(2 * s - n)), scale * phi[s]);
  }
  // Odd/even coefficients opposite to n's parity cancel exactly in theory;
  // clear them so that symmetry holds as stored.
  for (int i = 0; i <= n; ++i) {
    if ((n - i) % 2 != 0) out.coeffs[i] = 0.0;
  }
  return out;
}

IntervalRecurrence v_coeffs(const ReflectionSequence& a) {
  IntervalRecurrence r;
  const long N = static_cast<long>(a.values.size());
  r.v.push_back(0.0);
  for (long n = 1; n <= N; ++n) {
    const double prev = reflection_at(a, n - 1);
    const double prev2 = n >= 2 ? reflection_at(a, n - 2) : -1.0;
    r.v.push_back(0.25 * (1.0 + prev) * (1.0 - prev2));
  }
  return r;
}

std::vector<double> kappa_from_v(const IntervalRecurrence& r) {
  std::vector<double> kappa{1.0};
  for (size_t n = 1; n < r.v.size(); ++n) kappa.push_back(kappa.back() * r.v[n]);
  return kappa;
}

SplitPair split_PQ_via_v(const IntervalRecurrence& r) {
  const auto& v = r.v;
  const long V = static_cast<long>(v.size()) - 1;  // highest v index
  SplitPair out;
  // P: b_n needs v_{2n+1}, u_n needs v_{2n}.
  for (long n = 0; 2 * n + 1 <= V; ++n) {
    out.P.b.push_back(2.0 * (v[2 * n] + v[2 * n + 1]) - 1.0);
  }
  out.P.u.push_back(0.0);
  for (long n = 1; 2 * n <= V; ++n) out.P.u.push_back(4.0 * v[2 * n] * v[2 * n - 1]);
  // Q: b_n needs v_{2n+2}, u_n needs v_{2n+1}.
  for (long n = 0; 2 * n + 2 <= V; ++n) {
    out.Q.b.push_back(2.0 * (v[2 * n + 2] + v[2 * n + 1]) - 1.0);
  }
  out.Q.u.push_back(0.0);
  for (long n = 1; 2 * n + 1 <= V; ++n) {
    out.Q.u.push_back(4.0 * v[2 * n] * v[2 * n + 1]);
  }
  return out;
}

SplitPair split_PQ_direct(const ReflectionSequence& a) {
  const long N = static_cast<long>(a.values.size());
  auto at = [&](long n) { return reflection_at(a, n); };
  SplitPair out;
  for (long n = 0; 2 * n < N; ++n) {
    // a_{2n-2} only enters multiplied by (1 + a_{2n-1}), which is 0 at n = 0.
    const double a2n2 = n >= 1 ? at(2 * n - 2) : 0.0;
    out.P.b.push_back(0.5 * (at(2 * n) * (1.0 - at(2 * n - 1)) -
                             a2n2 * (1.0 + at(2 * n - 1))));
  }
  out.P.u.push_back(0.0);
  for (long n = 1; 2 * n - 1 < N; ++n) {
    const double a2n2 = at(2 * n - 2);
    out.P.u.push_back(0.25 * (1.0 + at(2 * n - 1)) * (1.0 - a2n2 * a2n2) *
                      (1.0 - at(2 * n - 3 >= -1 ? 2 * n - 3 : -1)));
  }
  for (long n = 0; 2 * n + 1 < N; ++n) {
    out.Q.b.push_back(0.5 * (at(2 * n + 1) * (1.0 - at(2 * n)) -
                             at(2 * n - 1) * (1.0 + at(2 * n))));
  }
  out.Q.u.push_back(0.0);
  for (long n = 1; 2 * n < N; ++n) {
    const double a2n1 = at(2 * n - 1);
    out.Q.u.push_back(0.25 * (1.0 + at(2 * n)) * (1.0 - a2n1 * a2n1) *
                      (1.0 - at(2 * n - 2)));
  }
  return out;
}

SplitRoutes split_PQ_recurrences(const ReflectionSequence& a) {
  SplitRoutes r{split_PQ_via_v(v_coeffs(a)), split_PQ_direct(a), 0.0};
  auto compare = [&](const std::vector<double>& x, const std::vector<double>& y) {
    const size_t n = std::min(x.size(), y.size());
    for (size_t i = 0; i < n; ++i) {
      r.max_disagreement = std::max(r.max_disagreement, std::abs(x[i] - y[i]));
    }
  };
  compare(r.via_v.P.u, r.direct.P.u);
  compare(r.via_v.P.b, r.direct.P.b);
  compare(r.via_v.Q.u, r.direct.Q.u);
  compare(r.via_v.Q.b, r.direct.Q.b);
  return r;
}

std::vector<double> chebyshev_expansion(const MonicCirclePolynomial& phi_2n,
                                        double a_odd) {
  if (phi_2n.degree() % 2 != 0) {
    throw DomainError("chebyshev_expansion needs an even-degree polynomial");
  }
  const int n = phi_2n.degree() / 2;
  const double scale = std::ldexp(1.0, 1 - n) / (1.0 - a_odd);
  std::vector<double> t(n + 1);
  t[0] = scale * phi_2n[n];
  for (int s = 1; s <= n; ++s) t[s] = scale * (phi_2n[n + s] + phi_2n[n - s]);
  return t;
}

SplitPolys split_polys(const std::vector<MonicCirclePolynomial>& phis,
                       const ReflectionSequence& a) {
  SplitPolys out;
  const int top = static_cast<int>(phis.size()) - 1;
  for (int n = 0; 2 * n <= top; ++n) {
    const auto t = chebyshev_expansion(phis[2 * n], reflection_at(a, 2 * n - 1));
    RealPoly p;
    for (int s = 0; s <= n; ++s) add_scaled(p, chebyshev_T(s), t[s]);
    out.P.push_back(std::move(p));
  }
  for (int n = 0; 2 * n + 1 <= top; ++n) {
    const auto& phi = phis[2 * n + 1];
    const double scale = 1.0 / (std::ldexp(1.0, n) * (1.0 - reflection_at(a, 2 * n)));
    RealPoly q;
    for (int s = 0; s <= 2 * n + 1; ++s) {
      const int m = s <= n ? n - s : s - n - 1;
      add_scaled(q, chebyshev_V(m), scale * phi[s]);
    }
    out.Q.push_back(std::move(q));
  }
  return out;
}

double split_recurrence_residual(const std::vector<RealPoly>& polys,
                                 const SplitRecurrence& rec) {
  double worst = 0.0;
  for (size_t n = 0; n + 1 < polys.size(); ++n) {
    if (n >= rec.b.size() || (n >= 1 && n >= rec.u.size())) break;
    const RealPoly* prev = n >= 1 ? &polys[n - 1] : nullptr;
    const double u = n >= 1 ? rec.u[n] : 0.0;
    worst = std::max(worst,
                     residual_three_term(polys[n + 1], polys[n], prev, rec.b[n], u));
  }
  return worst;
}

double symmetric_recurrence_residual(
    const std::vector<SymmetricIntervalPolynomial>& s,
    const IntervalRecurrence& r) {
  double worst = 0.0;
  for (size_t n = 0; n + 1 < s.size() && n < r.v.size(); ++n) {
    const RealPoly* prev = n >= 1 ? &s[n - 1].coeffs : nullptr;
    worst = std::max(worst, residual_three_term(s[n + 1].coeffs, s[n].coeffs,
                                                prev, 0.0, r.v[n]));
  }
  return worst;
}

double interval_moments(const MomentSequence& c, int n) {
  if (n < 0) throw DomainError("interval_moments: n must be >= 0");
  if (n % 2 != 0) return 0.0;
  double binom = 1.0;
  double acc = 0.0;
  for (int j = 0; j <= n; ++j) {
    acc += binom * c(j - n / 2);
    binom = binom * (n - j) / (j + 1);
  }
  return std::ldexp(acc, -n);
}

SplitRecurrence cn_P_recurrence_explicit(int n_max, double w,
                                         const EllipticContext& ctx) {
  auto cn = [&](double u) { return ctx.sncndn(u).cn; };
  auto dn = [&](double u) { return ctx.sncndn(u).dn; };
  SplitRecurrence r;
  r.u.push_back(0.0);
  for (int n = 1; n <= n_max; ++n) {
    const double sn = ctx.sncndn(w * (2 * n - 1)).sn;
    r.u.push_back(sn * sn * (1.0 - dn(2.0 * w * n)) *
                  (1.0 + dn(2.0 * w * (n - 1))) / 4.0);
  }
  for (int n = 0; n <= n_max; ++n) {
    const double d = dn(2.0 * w * n);
    r.b.push_back((cn(w * (2 * n + 1)) * (1.0 + d) -
                   cn(w * (2 * n - 1)) * (1.0 - d)) /
                  2.0);
  }
  return r;
}

IntervalGramReport interval_gram(const ReflectionSequence& a,
                                 const std::vector<MonicCirclePolynomial>& phis,
                                 const DiscretePointMeasure& m, int n_s,
                                 int n_pq) {
  if (static_cast<int>(phis.size()) <= std::max(n_s, 2 * n_pq + 1)) {
    throw DomainError("interval_gram: not enough circle polynomials");
  }
  IntervalGramReport rep;

  std::vector<SymmetricIntervalPolynomial> S;
  for (int n = 0; n <= n_s; ++n) S.push_back(dgt(phis[n], reflection_at(a, n - 1)));
  const auto kappa = kappa_from_v(v_coeffs(a));

  std::vector<MonicCirclePolynomial> head(phis.begin(),
                                          phis.begin() + 2 * n_pq + 2);
  const SplitPolys pq = split_polys(head, a);
  const SplitPair rec = split_PQ_direct(a);

  std::vector<std::vector<double>> gs(n_s + 1, std::vector<double>(n_s + 1, 0.0));
  std::vector<std::vector<double>> gp(n_pq + 1, std::vector<double>(n_pq + 1, 0.0));
  std::vector<std::vector<double>> gq(n_pq + 1, std::vector<double>(n_pq + 1, 0.0));
  std::vector<double> sp(n_s + 1), sm(n_s + 1), pv(n_pq + 1), qv(n_pq + 1);
  for (size_t i = 0; i < m.size(); ++i) {
    const double rho = m.weights[i];
    const double xs = std::cos(0.5 * m.angles[i]);
    const double y = std::cos(m.angles[i]);
    for (int n = 0; n <= n_s; ++n) {
      sp[n] = S[n](xs);
      sm[n] = S[n](-xs);
    }
    for (int n = 0; n <= n_pq; ++n) {
      pv[n] = eval_poly(pq.P[n], y);
      qv[n] = eval_poly(pq.Q[n], y);
    }
    for (int n = 0; n <= n_s; ++n) {
      for (int k = 0; k <= n_s; ++k) {
        gs[n][k] += rho * 0.5 * (sp[n] * sp[k] + sm[n] * sm[k]);
      }
    }
    for (int n = 0; n <= n_pq; ++n) {
      for (int k = 0; k <= n_pq; ++k) {
        gp[n][k] += rho * pv[n] * pv[k];
        gq[n][k] += rho * (1.0 + y) * qv[n] * qv[k];
      }
    }
  }
  auto scan = [](const std::vector<std::vector<double>>& g,
                 const std::vector<double>& diag, double& off, double& d) {
    for (size_t n = 0; n < g.size(); ++n) {
      for (size_t k = 0; k < g.size(); ++k) {
        if (n == k) {
          d = std::max(d, std::abs(g[n][n] - diag[n]));
        } else {
          off = std::max(off, std::abs(g[n][k]));
        }
      }
    }
  };
  std::vector<double> kappa_s(kappa.begin(), kappa.begin() + n_s + 1);
  std::vector<double> H{1.0}, HQ{1.0 + reflection_at(a, 0)};
  for (int n = 1; n <= n_pq; ++n) {
    H.push_back(H.back() * rec.P.u.at(n));
    HQ.push_back(HQ.back() * rec.Q.u.at(n));
  }
  scan(gs, kappa_s, rep.s_off, rep.s_diag);
  scan(gp, H, rep.p_off, rep.p_diag);
  scan(gq, HQ, rep.q_off, rep.q_diag);
  return rep;
}

double aw_u_display(int n, double q) {
  const double num = std::pow(1.0 - std::pow(q, n), 2) *
                     std::pow(1.0 - std::pow(q, 2 * n - 1), 2) *
                     std::pow(1.0 + std::pow(q, n - 1), 2);
  const double den = std::pow(1.0 + std::pow(q, 2 * n - 1), 2) *
                     (1.0 + std::pow(q, 2 * n)) * (1.0 + std::pow(q, 2 * n - 2));
  return 0.25 * num / den;
}

double aw_b_display(int n, double q) {
  const double num = 2.0 * (q + 1.0) * std::pow(q, n) -
                     (1.0 - q) * (1.0 - std::pow(q, 2 * n));
  const double den = (1.0 + std::pow(q, 2 * n - 1)) * (1.0 + std::pow(q, 2 * n + 1));
  return std::pow(q, n - 0.5) * num / den;
}

double aw_weight(double x, double q) {
  if (!(q > 0.0) || !(q < 1.0)) throw DomainError("aw_weight: need 0 < q < 1");
  double w = 1.0;
  double qs = std::sqrt(q);  // q^{s + 1/2}
  for (int s = 0; s < 100000 && qs > 1e-17; ++s) {
    const double q2 = qs * qs;
    w *= (1.0 + 2.0 * x * qs + q2) / (1.0 - 2.0 * x * qs + q2);
    qs *= q;
  }
  return w;
}

AskeyWilsonReport askey_wilson_limit_check(double q, int n_max, int m_grid) {
  if (!(q > 0.0) || !(q < 1.0)) throw DomainError("need 0 < q < 1");
  if (m_grid < 2) throw DomainError("need at least two grid points");
  AskeyWilsonReport rep;
  const double w = -0.5 * std::log(q);
  const auto a = hyp_reflections(2 * n_max + 2, w);
  const auto rec = split_PQ_direct(a);
  for (int n = 1; n <= n_max; ++n) {
    rep.max_u_error = std::max(rep.max_u_error, std::abs(rec.P.u[n] - aw_u_display(n, q)));
  }
  for (int n = 0; n <= n_max; ++n) {
    rep.max_b_error = std::max(rep.max_b_error, std::abs(rec.P.b[n] - aw_b_display(n, q)));
  }
  const auto ctx = EllipticContext::from_nome(std::sqrt(q));
  rep.ratio_constant = 1.0 / std::sqrt(ctx.k_prime());
  const double pi = std::numbers::pi;
  for (int i = 0; i < m_grid; ++i) {
    const double theta = i * pi / (2.0 * (m_grid - 1));
    const double dn = ctx.sncndn(2.0 * ctx.big_K() * theta / pi).dn;
    const double ratio = aw_weight(std::cos(2.0 * theta), q) / dn;
    rep.max_ratio_spread = std::max(rep.max_ratio_spread,
                                    std::abs(ratio - rep.ratio_constant));
  }
  return rep;
}

}  // namespace ellipuc
