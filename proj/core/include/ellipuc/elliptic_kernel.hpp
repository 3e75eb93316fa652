#pragma once

// Complete elliptic integrals, the nome and the Jacobi functions sn, cn, dn
// for a real modulus 0 < k < 1.
//
// The context is parametrized by both k and k' = sqrt(1 - k^2) so that either
// can be tiny without the other losing accuracy: a context close to k = 1 is
// built from its complement, and k itself may then round to 1.0 in double.

#include "ellipuc/extended.hpp"

namespace ellipuc {

template <class Real>
struct JacobiTriple {
  Real sn;
  Real cn;
  Real dn;
};

template <class Real>
class BasicEllipticContext {
 public:
  // 0 < k < 1.
  static BasicEllipticContext from_modulus(Real k);
  // 0 < k' < 1; k = sqrt(1 - k'^2) is derived.
  static BasicEllipticContext from_complement(Real k_prime);
  // 0 < q < 1; modulus recovered from theta-function quotients.
  static BasicEllipticContext from_nome(Real q);

  const Real& k() const noexcept { return k_; }
  const Real& k_prime() const noexcept { return k_prime_; }
  const Real& big_K() const noexcept { return big_K_; }
  const Real& big_K_prime() const noexcept { return big_K_prime_; }
  const Real& nome_q() const noexcept { return nome_q_; }

  // Context for the complementary modulus k' (K and K' swap).
  BasicEllipticContext complementary() const;

  JacobiTriple<Real> sncndn(const Real& u) const;

 private:
  BasicEllipticContext(Real k, Real k_prime);

  Real k_;
  Real k_prime_;
  Real big_K_;
  Real big_K_prime_;
  Real nome_q_;
};

using EllipticContext = BasicEllipticContext<double>;
using ExtendedEllipticContext = BasicEllipticContext<Extended>;

// Arithmetic-geometric mean of two positive numbers.
template <class Real>
Real agm(Real a, Real b);

inline EllipticContext make_context(double k) {
  return EllipticContext::from_modulus(k);
}

inline double jacobi_sn(double u, const EllipticContext& ctx) {
  return ctx.sncndn(u).sn;
}
inline double jacobi_cn(double u, const EllipticContext& ctx) {
  return ctx.sncndn(u).cn;
}
inline double jacobi_dn(double u, const EllipticContext& ctx) {
  return ctx.sncndn(u).dn;
}

// Modulus with pi K'/K = w, found by monotone bisection on log k (w >= pi)
// or log k' (w < pi). Accepts 0.008 <= w <= 1400; outside that range one of
// k, k' underflows.
EllipticContext solve_k_from_w(double w);

struct LandenTransform {
  EllipticContext ctx;  // nome q^{2N}
  double mu;
};

// Order-2N transformation: k~ = k^{2N} prod sn^4((2r-1)K/2N),
// K~ = K/(2 N mu), K~' = K'/mu.
LandenTransform landen_2N(const EllipticContext& ctx, int N);

}  // namespace ellipuc
