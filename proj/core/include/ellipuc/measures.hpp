#pragma once

#include <complex>
#include <vector>

#include "ellipuc/circle_polys.hpp"
#include "ellipuc/elliptic_kernel.hpp"

namespace ellipuc {

// Truncated point measure on the unit circle. Angles are reduced to
// [0, 2pi); index[i] is the family's summation index s of point i.
struct DiscretePointMeasure {
  std::vector<long> index;
  std::vector<double> angles;
  std::vector<double> weights;
  int trunc = 0;
  double tail_bound = 0.0;

  size_t size() const noexcept { return angles.size(); }
};

// Smallest S whose geometric tail is below eps.
int truncation_for_tail(double eps, const EllipticContext& ctx);

// Points exp(i pi w (s - 1/2)/K), s = -S+1..S.
DiscretePointMeasure cn_measure(double w, const EllipticContext& ctx, int S);
// Points exp(i pi w s/K), |s| <= S.
DiscretePointMeasure dn_measure(double w, const EllipticContext& ctx, int S);
// cn points rotated by pi, same weights.
DiscretePointMeasure reflected_cn_measure(double w, const EllipticContext& ctx,
                                          int S);
DiscretePointMeasure family_measure(Family f, double w,
                                    const EllipticContext& ctx, int S);

// sum rho_s z_s^n
std::complex<double> moment_from_measure(const DiscretePointMeasure& m, long n);

struct GramMatrix {
  // g[n][m] = sum rho_s Phi_n(z_s) conj(Phi_m(z_s)), real part.
  std::vector<std::vector<double>> g;
  double max_imag = 0.0;
  double max_off_diagonal() const;
};
GramMatrix gram_check(const DiscretePointMeasure& m,
                      const std::vector<MonicCirclePolynomial>& polys);

struct DensityReport {
  size_t distinct = 0;
  double min_gap = 0.0;
  double max_gap = 0.0;
};
// Angles closer than tol (circular distance) count as one point.
DensityReport density_report(const DiscretePointMeasure& m, double tol = 1e-9);

double reduce_angle(double theta);

}  // namespace ellipuc
