#include "ellipuc/elliptic_derivative.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ellipuc/errors.hpp"

namespace ellipuc {

namespace {

double max_diff(const Coeffs& a, const Coeffs& b) {
  const size_t n = std::max(a.size(), b.size());
  double worst = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double x = i < a.size() ? a[i] : 0.0;
    const double y = i < b.size() ? b[i] : 0.0;
    worst = std::max(worst, std::abs(x - y));
  }
  return worst;
}

Coeffs scaled(const MonicCirclePolynomial& p, double f) {
  Coeffs out = p.coeffs();
  for (double& c : out) c *= f;
  return out;
}

}  // namespace

Coeffs apply_E(const Coeffs& p, const EbcParams& params) {
  if (p.size() <= 1) return {0.0};
  Coeffs out(p.size() - 1);
  for (size_t n = 1; n < p.size(); ++n) {
    out[n - 1] = p[n] * elliptic_number(static_cast<long>(n), params);
  }
  return out;
}

Coeffs apply_W_j(const Coeffs& p, int j, double theta) {
  if (j < 1) throw DomainError("apply_W_j: j must be >= 1");
  if (p.size() <= 1) return {0.0};
  Coeffs out(p.size() - 1);
  for (size_t n = 1; n < p.size(); ++n) {
    out[n - 1] = p[n] * std::sin(static_cast<double>(n) * j * theta);
  }
  return out;
}

double beta_j(int j, const EbcParams& params) {
  const auto& ctx = params.ctx;
  const double q = ctx.nome_q();
  const double h = j - 0.5;
  // 1/(q^{-h} - q^{h}) = q^h/(1 - q^{2h})
  const double ratio = std::pow(q, h) / (1.0 - std::pow(q, 2.0 * h));
  const double sn_w = ctx.sncndn(params.w).sn;
  return 2.0 * std::numbers::pi * ratio / (ctx.big_K() * ctx.k() * sn_w);
}

SeriesResult E_via_W_expansion(const Coeffs& p, const EbcParams& params,
                               int J) {
  if (J < 1) throw DomainError("E_via_W_expansion: J must be >= 1");
  const double theta = std::numbers::pi * params.w / (2.0 * params.ctx.big_K());
  Coeffs sum(std::max<size_t>(p.size(), 2) - 1, 0.0);
  for (int j = J; j >= 1; --j) {
    const Coeffs term = apply_W_j(p, 2 * j - 1, theta);
    const double b = beta_j(j, params);
    for (size_t i = 0; i < term.size(); ++i) sum[i] += b * term[i];
  }
  // |W_j z^n| <= 1 and beta_j decays like q^{j-1/2}.
  double coeff_sum = 0.0;
  for (size_t i = 1; i < p.size(); ++i) coeff_sum += std::abs(p[i]);
  const double q = params.ctx.nome_q();
  const double tail = std::abs(beta_j(J + 1, params)) / (1.0 - q) * coeff_sum;
  return {sum, tail};
}

IntertwiningReport verify_intertwining(int n_max, const EbcParams& params) {
  if (n_max < 1) throw DomainError("verify_intertwining: n_max >= 1");
  std::vector<MonicCirclePolynomial> C, D;
  for (int n = 0; n <= n_max; ++n) {
    C.push_back(explicit_cn_poly(n, params));
    D.push_back(explicit_dn_poly(n, params));
  }
  IntertwiningReport r;
  for (int n = 1; n <= n_max; ++n) {
    const double en = elliptic_number(n, params);
    const Coeffs EC = apply_E(C[n].coeffs(), params);
    const Coeffs ED = apply_E(D[n].coeffs(), params);
    r.cn_to_dn = std::max(r.cn_to_dn, max_diff(scaled(D[n - 1], en), EC));
    r.dn_to_cn = std::max(r.dn_to_cn, max_diff(scaled(C[n - 1], en), ED));
    if (n >= 2) {
      const double f = en * elliptic_number(n - 1, params);
      r.square_cn = std::max(
          r.square_cn, max_diff(apply_E(EC, params), scaled(C[n - 2], f)));
      r.square_dn = std::max(
          r.square_dn, max_diff(apply_E(ED, params), scaled(D[n - 2], f)));
    }
  }
  return r;
}

}  // namespace ellipuc
