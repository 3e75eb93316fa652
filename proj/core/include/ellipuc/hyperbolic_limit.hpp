#pragma once

// The k -> 1 family (moments 1/cosh(wn)) and the trivial k -> 0 measures.
//
// Two different bases appear here: the q-series base q = exp(-2w) of the
// coefficient formula, and the elliptic nome exp(-pi K'/K) = exp(-w) of the
// dn-weight. They are kept in separately named fields and never mixed.

#include <vector>

#include "ellipuc/circle_polys.hpp"
#include "ellipuc/elliptic_kernel.hpp"
#include "ellipuc/measures.hpp"

namespace ellipuc {

// a_n = (-1)^n / cosh(w(n+1))
ReflectionSequence hyp_reflections(int N, double w);
// c_n = 1 / cosh(wn)
MomentSequence hyp_moments(int n_max, double w);

// Coefficients from the basic-hypergeometric formula, base exp(-2w).
MonicCirclePolynomial hyp_poly(int n, double w);

// Weight of the k -> 1 family on [0, 2pi).
class HyperbolicWeight {
 public:
  explicit HyperbolicWeight(double w);

  double w() const noexcept { return w_; }
  // exp(-2w), the base of the coefficient formula.
  double series_base() const noexcept { return series_base_; }
  // Context with pi K'/K = w; its nome is exp(-w).
  const EllipticContext& weight_context() const noexcept { return ctx_; }

  // (K/pi^2) dn(K theta/pi)
  double operator()(double theta) const;
  // rho(theta + pi) = (k' K/pi^2)/dn(K theta/pi)
  double reflected(double theta) const;

  // Trapezoid rule for int_0^{2pi} rho(theta) cos(n theta) d theta.
  double cosine_moment(int n, int nodes = 4096) const;

 private:
  double w_;
  double series_base_;
  EllipticContext ctx_;
};

double hyp_weight(double theta, double w);

// k -> 0: cn gives masses 1/2 at exp(+-iw); dn gives mass 1 at z = 1.
DiscretePointMeasure k0_degenerate_measure(Family f, double w);

}  // namespace ellipuc
