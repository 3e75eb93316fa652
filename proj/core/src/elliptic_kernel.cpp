#include "ellipuc/elliptic_kernel.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/constants/constants.hpp>

#include "ellipuc/errors.hpp"

namespace ellipuc {

namespace {

template <class Real>
Real pi_v() {
  return boost::math::constants::pi<Real>();
}

template <class Real>
bool is_finite(const Real& x) {
  using std::isfinite;
  using boost::multiprecision::isfinite;
  return isfinite(x);
}

// Theta constants theta_2, theta_3, theta_4 at nome q (q small enough that
// the series converge in a handful of terms).
template <class Real>
std::array<Real, 3> theta_constants(const Real& q) {
  using std::pow;
  using std::abs;
  const Real eps = std::numeric_limits<Real>::epsilon();
  // theta_2 / (2 q^{1/4}) = sum q^{n(n+1)}
  Real t2 = 1;
  Real t3 = 1;
  Real t4 = 1;
  for (int n = 1; n < 200; ++n) {
    const Real a = pow(q, Real(n) * Real(n + 1));
    const Real b = pow(q, Real(n) * Real(n));
    t2 += a;
    t3 += 2 * b;
    t4 += (n % 2 == 0 ? 2 : -2) * b;
    if (b < eps * Real(1e-3)) break;
  }
  using std::sqrt;
  t2 *= 2 * sqrt(sqrt(q));
  return {t2, t3, t4};
}

}  // namespace

template <class Real>
Real agm(Real a, Real b) {
  using std::abs;
  using std::sqrt;
  const Real tol = 4 * std::numeric_limits<Real>::epsilon();
  for (int i = 0; i < 128; ++i) {
    if (abs(a - b) <= tol * a) break;
    const Real next = (a + b) / 2;
    b = sqrt(a * b);
    a = next;
  }
  return (a + b) / 2;
}

template <class Real>
BasicEllipticContext<Real>::BasicEllipticContext(Real k, Real k_prime)
    : k_(std::move(k)), k_prime_(std::move(k_prime)) {
  using std::exp;
  if (!(k_ > 0) || !(k_prime_ > 0) || k_ > 1 || k_prime_ > 1 ||
      !is_finite(k_) || !is_finite(k_prime_)) {
    throw DomainError("elliptic modulus must satisfy 0 < k < 1");
  }
  const Real half_pi = pi_v<Real>() / 2;
  big_K_ = half_pi / agm(Real(1), k_prime_);
  big_K_prime_ = half_pi / agm(Real(1), k_);
  nome_q_ = exp(-pi_v<Real>() * big_K_prime_ / big_K_);
}

template <class Real>
BasicEllipticContext<Real> BasicEllipticContext<Real>::from_modulus(Real k) {
  using std::sqrt;
  if (!(k > 0) || !(k < 1)) {
    throw DomainError("make_context: modulus k must lie in (0, 1)");
  }
  Real kp = sqrt((1 - k) * (1 + k));
  return BasicEllipticContext(std::move(k), std::move(kp));
}

template <class Real>
BasicEllipticContext<Real> BasicEllipticContext<Real>::from_complement(
    Real k_prime) {
  using std::sqrt;
  if (!(k_prime > 0) || !(k_prime < 1)) {
    throw DomainError("complementary modulus k' must lie in (0, 1)");
  }
  Real k = sqrt((1 - k_prime) * (1 + k_prime));
  return BasicEllipticContext(std::move(k), std::move(k_prime));
}

template <class Real>
BasicEllipticContext<Real> BasicEllipticContext<Real>::from_nome(Real q) {
  using std::exp;
  using std::log;
  if (!(q > 0) || !(q < 1)) {
    throw DomainError("nome must lie in (0, 1)");
  }
  const Real pi = pi_v<Real>();
  // Above the self-dual nome the series converge slowly; use q' instead,
  // for which k and k' trade places.
  const bool dual = q > exp(-pi);
  const Real qq = dual ? Real(exp(pi * pi / log(q))) : q;
  const auto [t2, t3, t4] = theta_constants(qq);
  Real k = (t2 / t3) * (t2 / t3);
  Real kp = (t4 / t3) * (t4 / t3);
  if (dual) std::swap(k, kp);
  return BasicEllipticContext(std::move(k), std::move(kp));
}

template <class Real>
BasicEllipticContext<Real> BasicEllipticContext<Real>::complementary() const {
  return BasicEllipticContext(k_prime_, k_);
}

// Bulirsch's descending-Landen evaluation, started from k' rather than
// k'^2 so that k' down to the underflow threshold is usable.
template <class Real>
JacobiTriple<Real> BasicEllipticContext<Real>::sncndn(const Real& u) const {
  using std::abs;
  using std::cos;
  using std::sin;
  using std::sqrt;
  constexpr int kMaxLevels = 48;
  const Real tol =
      sqrt(std::numeric_limits<Real>::epsilon() * Real(0.01));
  std::array<Real, kMaxLevels> m;
  std::array<Real, kMaxLevels> n;
  Real a = 1;
  Real b = k_prime_;
  Real c = 1;
  int levels = 0;
  while (levels < kMaxLevels) {
    m[levels] = a;
    n[levels] = b;
    c = (a + b) / 2;
    if (abs(a - b) <= tol * a) {
      ++levels;
      break;
    }
    b = sqrt(a * b);
    a = c;
    ++levels;
  }
  const Real x = c * u;
  Real sn = sin(x);
  Real cn = cos(x);
  Real dn = 1;
  if (sn != 0) {
    Real t = cn / sn;
    c = t * c;
    while (levels--) {
      const Real& top = m[levels];
      t = c * t;
      c = dn * c;
      dn = (n[levels] + t) / (top + t);
      t = c / top;
    }
    t = 1 / sqrt(c * c + 1);
    sn = sn < 0 ? Real(-t) : t;
    cn = c * sn;
  }
  return {sn, cn, dn};
}

template class BasicEllipticContext<double>;
template class BasicEllipticContext<Extended>;
template double agm<double>(double, double);
template Extended agm<Extended>(Extended, Extended);

EllipticContext solve_k_from_w(double w) {
  if (!(w > 0) || !std::isfinite(w)) {
    throw DomainError("solve_k_from_w: w must be positive");
  }
  if (w < 0.008 || w > 1400) {
    throw DomainError("solve_k_from_w: w = " + std::to_string(w) +
                      " is outside the representable range [0.008, 1400]");
  }
  const double pi = std::numbers::pi;
  const bool use_k = w >= pi;
  // use_k: r(t) = pi K'/K with k = e^t is decreasing in t.
  // otherwise: k' = e^t and r(t) is increasing in t.
  auto ratio = [&](double t) {
    const auto ctx = use_k ? EllipticContext::from_modulus(std::exp(t))
                           : EllipticContext::from_complement(std::exp(t));
    return pi * ctx.big_K_prime() / ctx.big_K();
  };
  double lo = -707.0;
  double hi = std::log(std::sqrt(0.5));
  for (int iter = 0; iter < 400; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double r = ratio(mid);
    const bool go_right = use_k ? (r > w) : (r < w);
    (go_right ? lo : hi) = mid;
  }
  const double t = 0.5 * (lo + hi);
  return use_k ? EllipticContext::from_modulus(std::exp(t))
               : EllipticContext::from_complement(std::exp(t));
}

LandenTransform landen_2N(const EllipticContext& ctx, int N) {
  if (N < 1) throw DomainError("landen_2N: N must be >= 1");
  const double K = ctx.big_K();
  double mu = 1.0;
  double sn4 = 1.0;
  for (int r = 1; r <= N; ++r) {
    const double odd = ctx.sncndn((2 * r - 1) * K / (2.0 * N)).sn;
    const double even = ctx.sncndn(r * K / N).sn;
    mu *= (odd * odd) / (even * even);
    sn4 *= odd * odd * odd * odd;
  }
  const double k_tilde = std::pow(ctx.k(), 2 * N) * sn4;
  return {EllipticContext::from_modulus(k_tilde), mu};
}

}  // namespace ellipuc
