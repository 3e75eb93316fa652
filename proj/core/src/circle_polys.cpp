#include "ellipuc/circle_polys.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ellipuc/errors.hpp"

namespace ellipuc {

namespace {

constexpr double kTerminalReflection = 1e-12;
constexpr double kSingularPivot = 1e-13;

template <class Real>
using Matrix = std::vector<std::vector<Real>>;

// Determinant by Gaussian elimination with partial pivoting; also reports the
// smallest pivot magnitude encountered.
template <class Real>
Real determinant(Matrix<Real> m, Real* min_pivot) {
  using std::abs;
  const size_t n = m.size();
  Real det = 1;
  Real smallest = std::numeric_limits<Real>::max();
  for (size_t col = 0; col < n; ++col) {
    size_t best = col;
    for (size_t r = col + 1; r < n; ++r) {
      if (abs(m[r][col]) > abs(m[best][col])) best = r;
    }
    if (best != col) {
      std::swap(m[best], m[col]);
      det = -det;
    }
    const Real pivot = m[col][col];
    if (abs(pivot) < smallest) smallest = abs(pivot);
    det *= pivot;
    if (pivot == 0) break;
    for (size_t r = col + 1; r < n; ++r) {
      const Real f = m[r][col] / pivot;
      if (f == 0) continue;
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  if (min_pivot) *min_pivot = n == 0 ? Real(1) : smallest;
  return det;
}

template <class Real>
const Real& moment_at(const std::vector<Real>& c, long n) {
  const size_t idx = static_cast<size_t>(n < 0 ? -n : n);
  if (idx >= c.size()) {
    throw DomainError("moment index " + std::to_string(n) + " out of range");
  }
  return c[idx];
}

template <class Real>
Matrix<Real> toeplitz_matrix(const std::vector<Real>& c, int n) {
  Matrix<Real> m(n, std::vector<Real>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = moment_at(c, j - i);
  }
  return m;
}

template <class Real>
std::vector<double> determinant_coeffs(const std::vector<Real>& c, int n) {
  if (n < 0) throw DomainError("determinant_poly: degree must be >= 0");
  if (n == 0) return {1.0};
  if (c.size() <= static_cast<size_t>(n)) {
    throw DomainError("determinant_poly: need moments c_0..c_" +
                      std::to_string(n));
  }
  Real min_pivot = 0;
  const Real delta = determinant(toeplitz_matrix(c, n), &min_pivot);
  if (min_pivot < Real(kSingularPivot)) {
    throw NearSingularError("Toeplitz matrix of order " + std::to_string(n) +
                            " is numerically singular");
  }
  // Rows i = 0..n-1 hold c_{j-i}, j = 0..n; drop column s for each minor.
  std::vector<double> coeffs(n + 1);
  for (int s = 0; s <= n; ++s) {
    Matrix<Real> minor(n, std::vector<Real>(n));
    for (int i = 0; i < n; ++i) {
      int col = 0;
      for (int j = 0; j <= n; ++j) {
        if (j == s) continue;
        minor[i][col++] = moment_at(c, j - i);
      }
    }
    const Real sign = ((n + s) % 2 == 0) ? Real(1) : Real(-1);
    coeffs[s] = static_cast<double>(
        sign * determinant<Real>(std::move(minor), nullptr) / delta);
  }
  return coeffs;
}

void require_moments(const MomentSequence& c, long needed) {
  if (static_cast<long>(c.values.size()) <= needed) {
    throw DomainError("moment sequence too short: need c_0..c_" +
                      std::to_string(needed));
  }
}

}  // namespace

const char* family_name(Family f) { return f == Family::cn ? "cn" : "dn"; }

MonicCirclePolynomial::MonicCirclePolynomial(std::vector<double> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("polynomial needs a coefficient");
  if (!(std::abs(coeffs_.back() - 1.0) <= 1e-8)) {
    throw DomainError("polynomial is not monic (leading coefficient " +
                      std::to_string(coeffs_.back()) + ")");
  }
}

double MonicCirclePolynomial::eval(double z) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

std::complex<double> MonicCirclePolynomial::eval(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

double MomentSequence::operator()(long n) const {
  const size_t idx = static_cast<size_t>(n < 0 ? -n : n);
  if (idx >= values.size()) {
    throw DomainError("moment index " + std::to_string(n) + " out of range");
  }
  return values[idx];
}

ReflectionSequence reflection(Family f, int N, double w,
                              const EllipticContext& ctx) {
  if (N < 0) throw DomainError("reflection: N must be >= 0");
  ReflectionSequence out;
  out.values.reserve(N);
  for (int m = 0; m < N; ++m) {
    const auto t = ctx.sncndn(w * (m + 1));
    const bool even = m % 2 == 0;
    double a;
    if (f == Family::cn) {
      a = even ? t.cn : -t.dn;
    } else {
      a = even ? t.dn : -t.cn;
    }
    out.values.push_back(a);
    if (std::abs(a) >= 1.0 - kTerminalReflection) {
      throw FiniteCaseSignal(m, out.values);
    }
  }
  return out;
}

ReflectionSequence reflection_cn(int N, double w, const EllipticContext& ctx) {
  return reflection(Family::cn, N, w, ctx);
}

ReflectionSequence reflection_dn(int N, double w, const EllipticContext& ctx) {
  return reflection(Family::dn, N, w, ctx);
}

MomentSequence moments(Family f, int n_max, double w,
                       const EllipticContext& ctx) {
  if (n_max < 0) throw DomainError("moments: n_max must be >= 0");
  MomentSequence out;
  out.values.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    const auto t = ctx.sncndn(w * n);
    out.values.push_back(f == Family::cn ? t.cn : t.dn);
  }
  return out;
}

MomentSequence moments_cn(int n_max, double w, const EllipticContext& ctx) {
  return moments(Family::cn, n_max, w, ctx);
}

MomentSequence moments_dn(int n_max, double w, const EllipticContext& ctx) {
  return moments(Family::dn, n_max, w, ctx);
}

std::vector<Extended> moments_extended(Family f, int n_max, const Extended& w,
                                       const ExtendedEllipticContext& ctx) {
  std::vector<Extended> out;
  out.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    const auto t = ctx.sncndn(w * n);
    out.push_back(f == Family::cn ? t.cn : t.dn);
  }
  return out;
}

template <class Real>
std::vector<std::vector<Real>> szego_family(const std::vector<Real>& a,
                                            int n) {
  if (n < 0 || static_cast<size_t>(n) > a.size()) {
    throw DomainError("szego_build: degree exceeds available reflections");
  }
  std::vector<std::vector<Real>> phi;
  phi.reserve(n + 1);
  phi.push_back({Real(1)});
  for (int m = 0; m < n; ++m) {
    const auto& prev = phi.back();
    std::vector<Real> next(m + 2, Real(0));
    for (int s = 0; s <= m; ++s) {
      next[s + 1] += prev[s];
      // z^m Phi_m(1/z) has coefficient prev[m - s] at z^s.
      next[s] -= a[m] * prev[m - s];
    }
    phi.push_back(std::move(next));
  }
  return phi;
}

template std::vector<std::vector<double>> szego_family<double>(
    const std::vector<double>&, int);
template std::vector<std::vector<Extended>> szego_family<Extended>(
    const std::vector<Extended>&, int);

std::vector<MonicCirclePolynomial> szego_build_all(const ReflectionSequence& a,
                                                   int n) {
  auto family = szego_family(a.values, n);
  std::vector<MonicCirclePolynomial> out;
  out.reserve(family.size());
  for (auto& coeffs : family) out.emplace_back(std::move(coeffs));
  return out;
}

MonicCirclePolynomial szego_build(const ReflectionSequence& a, int n) {
  auto family = szego_family(a.values, n);
  return MonicCirclePolynomial(std::move(family.back()));
}

MonicCirclePolynomial explicit_poly(Family f, int n, const EbcParams& p) {
  if (n < 0) throw DomainError("explicit_poly: degree must be >= 0");
  const bool even = n % 2 == 0;
  // Even n uses the dn prefactor for the cn family; odd n uses cn. The dn
  // family swaps the two.
  const bool use_dn = (f == Family::cn) == even;
  std::vector<double> coeffs(n + 1);
  for (int s = 0; s <= n; ++s) {
    const auto t = p.ctx.sncndn(p.w * (n - s));
    const double pref = use_dn ? t.dn : t.cn;
    const double sign = ((s + (even ? 0 : 1)) % 2 == 0) ? 1.0 : -1.0;
    coeffs[s] = sign * pref * ebc(n, s, p);
  }
  return MonicCirclePolynomial(std::move(coeffs));
}

MonicCirclePolynomial explicit_cn_poly(int n, const EbcParams& p) {
  return explicit_poly(Family::cn, n, p);
}

MonicCirclePolynomial explicit_dn_poly(int n, const EbcParams& p) {
  return explicit_poly(Family::dn, n, p);
}

MonicCirclePolynomial determinant_poly(const MomentSequence& c, int n) {
  std::vector<long double> wide(c.values.begin(), c.values.end());
  return MonicCirclePolynomial(determinant_coeffs(wide, n));
}

MonicCirclePolynomial determinant_poly_extended(const std::vector<Extended>& c,
                                                int n) {
  return MonicCirclePolynomial(determinant_coeffs(c, n));
}

template <class Real>
LevinsonResult<Real> levinson(const std::vector<Real>& c, int N) {
  using std::abs;
  if (N < 0 || c.size() < static_cast<size_t>(N) + 1) {
    throw DomainError("levinson: need moments c_0..c_N");
  }
  LevinsonResult<Real> out;
  out.h.push_back(c[0]);
  out.phi.push_back({Real(1)});
  if (!(c[0] > 0)) throw PositivityError("h_0 = c_0 is not positive", 0);
  for (int n = 0; n < N; ++n) {
    const auto& phi = out.phi.back();
    Real acc = 0;
    for (int s = 0; s <= n; ++s) acc += phi[s] * c[s + 1];
    const Real a = acc / out.h.back();
    if (!(abs(a) < 1)) {
      throw PositivityError("reflection parameter |a_" + std::to_string(n) +
                                "| >= 1: positivity lost",
                            n);
    }
    std::vector<Real> next(n + 2, Real(0));
    for (int s = 0; s <= n; ++s) {
      next[s + 1] += phi[s];
      next[s] -= a * phi[n - s];
    }
    const Real h = out.h.back() * (1 - a * a);
    if (!(h > 0)) {
      throw PositivityError(
          "h_" + std::to_string(n + 1) + " is not positive", n + 1);
    }
    out.a.push_back(a);
    out.h.push_back(h);
    out.phi.push_back(std::move(next));
  }
  return out;
}

template LevinsonResult<double> levinson<double>(const std::vector<double>&,
                                                 int);
template LevinsonResult<Extended> levinson<Extended>(
    const std::vector<Extended>&, int);

LevinsonOutput levinson_reflections(const MomentSequence& c, int N) {
  auto r = levinson(c.values, N);
  return {{std::move(r.a), false}, std::move(r.h)};
}

namespace {

template <class Real>
ToeplitzReport toeplitz_from_levinson(const std::vector<Real>& c, int n_max,
                                      const MomentSequence& fallback) {
  ToeplitzReport report;
  if (n_max < 1) return report;
  int computed = 0;
  try {
    const auto r = levinson(c, n_max - 1);
    Real delta = r.h[0];
    report.delta.push_back(static_cast<double>(delta));
    for (int n = 1; n < n_max; ++n) {
      delta *= r.h[n];
      report.delta.push_back(static_cast<double>(delta));
    }
    computed = n_max;
  } catch (const PositivityError&) {
    report.all_positive = false;
    computed = 0;
    report.delta.clear();
  }
  for (int n = computed + 1; n <= n_max; ++n) {
    report.delta.push_back(toeplitz_det_elimination(fallback, n));
  }
  for (double d : report.delta) {
    if (!(d > 0.0)) report.all_positive = false;
  }
  return report;
}

}  // namespace

ToeplitzReport toeplitz_dets(const MomentSequence& c, int n_max) {
  require_moments(c, std::max(n_max - 1, 0));
  return toeplitz_from_levinson(c.values, n_max, c);
}

ToeplitzReport toeplitz_dets_extended(const std::vector<Extended>& c,
                                      int n_max) {
  MomentSequence fallback;
  for (const auto& v : c) fallback.values.push_back(static_cast<double>(v));
  require_moments(fallback, std::max(n_max - 1, 0));
  return toeplitz_from_levinson(c, n_max, fallback);
}

double toeplitz_det_elimination(const MomentSequence& c, int n) {
  if (n < 1) return 1.0;
  require_moments(c, n - 1);
  std::vector<long double> wide(c.values.begin(), c.values.end());
  return static_cast<double>(
      determinant<long double>(toeplitz_matrix(wide, n), nullptr));
}

double functional_orthogonality(const MonicCirclePolynomial& poly,
                                const MomentSequence& c, int m) {
  double acc = 0.0;
  for (int s = 0; s <= poly.degree(); ++s) acc += poly[s] * c(s - m);
  return acc;
}

double h_closed_form(Family f, int n, double w, const EllipticContext& ctx) {
  if (n < 0) throw DomainError("h_closed_form: n must be >= 0");
  const int k_power = f == Family::cn ? 2 * (n / 2) : 2 * ((n + 1) / 2);
  double h = std::pow(ctx.k(), k_power);
  for (int s = 1; s <= n; ++s) {
    const double sn = ctx.sncndn(w * s).sn;
    h *= sn * sn;
  }
  return h;
}

MonicCirclePolynomial reflect_sign(const MonicCirclePolynomial& poly) {
  std::vector<double> coeffs = poly.coeffs();
  const int n = poly.degree();
  for (int s = 0; s <= n; ++s) {
    if ((n + s) % 2 != 0) coeffs[s] = -coeffs[s];
  }
  return MonicCirclePolynomial(std::move(coeffs));
}

ReflectionSequence reflect_sign(const ReflectionSequence& a) {
  ReflectionSequence out = a;
  for (size_t n = 0; n < out.values.size(); ++n) {
    if (n % 2 == 0) out.values[n] = -out.values[n];
  }
  return out;
}

MomentSequence reflect_sign(const MomentSequence& c) {
  MomentSequence out = c;
  for (size_t n = 0; n < out.values.size(); ++n) {
    if (n % 2 != 0) out.values[n] = -out.values[n];
  }
  return out;
}

std::pair<double, double> value_at_pm1(const ReflectionSequence& a, int n) {
  if (n < 0 || static_cast<size_t>(n) > a.values.size()) {
    throw DomainError("value_at_pm1: degree exceeds available reflections");
  }
  double plus = 1.0;
  double minus = n % 2 == 0 ? 1.0 : -1.0;
  for (int s = 0; s < n; ++s) {
    plus *= 1.0 - a.values[s];
    minus *= 1.0 + (s % 2 == 0 ? a.values[s] : -a.values[s]);
  }
  return {plus, minus};
}

ThreeTermReport three_term_check(
    const ReflectionSequence& a,
    const std::vector<MonicCirclePolynomial>& polys) {
  ThreeTermReport report;
  const int top = static_cast<int>(polys.size()) - 1;
  if (top >= 1 && a.values.size() < static_cast<size_t>(top)) {
    throw DomainError("three_term_check: not enough reflection parameters");
  }
  // Multiplied through by a_{n-1} and scaled by max(|a_{n-1}|, |a_n|), so a
  // tiny a_{n-1} does not blow up the ratio a_n/a_{n-1}.
  for (int n = 1; n < top; ++n) {
    const double prev = a.values[n - 1];
    const double cur_a = a.values[n];
    const double scale = std::max(std::abs(prev), std::abs(cur_a));
    if (scale == 0.0) {
      report.skipped.push_back(n);
      continue;
    }
    const double low_f = cur_a * (1.0 - prev * prev);
    const auto& next = polys[n + 1];
    const auto& cur = polys[n];
    const auto& low = polys[n - 1];
    for (int s = 0; s <= n + 1; ++s) {
      double r = prev * next[s];
      if (s <= n) r -= cur_a * cur[s];
      if (s >= 1) {
        r -= prev * cur[s - 1];
        if (s - 1 <= n - 1) r += low_f * low[s - 1];
      }
      report.max_residual = std::max(report.max_residual, std::abs(r) / scale);
    }
  }
  return report;
}

double max_coeff_diff(const MonicCirclePolynomial& p,
                      const MonicCirclePolynomial& q) {
  const int n = std::max(p.degree(), q.degree());
  double worst = 0.0;
  for (int s = 0; s <= n; ++s) {
    const double x = s <= p.degree() ? p[s] : 0.0;
    const double y = s <= q.degree() ? q[s] : 0.0;
    worst = std::max(worst, std::abs(x - y));
  }
  return worst;
}

}  // namespace ellipuc
