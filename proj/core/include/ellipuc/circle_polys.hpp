#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "ellipuc/ebc.hpp"
#include "ellipuc/elliptic_kernel.hpp"

namespace ellipuc {

enum class Family { cn, dn };

const char* family_name(Family f);

// Monic polynomial with real coefficients W_0..W_n, lowest degree first.
class MonicCirclePolynomial {
 public:
  MonicCirclePolynomial() : coeffs_{1.0} {}
  // Throws DomainError unless coeffs is non-empty with leading entry within
  // 1e-8 of 1. The leading entry is kept as computed.
  explicit MonicCirclePolynomial(std::vector<double> coeffs);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  double operator[](int s) const { return coeffs_.at(static_cast<size_t>(s)); }

  double eval(double z) const;
  std::complex<double> eval(std::complex<double> z) const;

 private:
  std::vector<double> coeffs_;
};

struct ReflectionSequence {
  std::vector<double> values;
  // Set when the last entry is the terminal |a| = 1 of a finite system.
  bool finite = false;
};

struct MomentSequence {
  std::vector<double> values;  // c_0..c_N; c_{-n} = c_n implied
  double operator()(long n) const;
};

ReflectionSequence reflection_cn(int N, double w, const EllipticContext& ctx);
ReflectionSequence reflection_dn(int N, double w, const EllipticContext& ctx);
ReflectionSequence reflection(Family f, int N, double w,
                              const EllipticContext& ctx);

MomentSequence moments_cn(int n_max, double w, const EllipticContext& ctx);
MomentSequence moments_dn(int n_max, double w, const EllipticContext& ctx);
MomentSequence moments(Family f, int n_max, double w,
                       const EllipticContext& ctx);

// Szegő recurrence Phi_{n+1} = z Phi_n - a_n z^n Phi_n(1/z), all degrees
// 0..n. Coefficient vectors, lowest degree first.
template <class Real>
std::vector<std::vector<Real>> szego_family(const std::vector<Real>& a, int n);

MonicCirclePolynomial szego_build(const ReflectionSequence& a, int n);
std::vector<MonicCirclePolynomial> szego_build_all(const ReflectionSequence& a,
                                                   int n);

MonicCirclePolynomial explicit_cn_poly(int n, const EbcParams& p);
MonicCirclePolynomial explicit_dn_poly(int n, const EbcParams& p);
MonicCirclePolynomial explicit_poly(Family f, int n, const EbcParams& p);

// Bordered Toeplitz determinant expansion; slow oracle for small n.
// Throws NearSingularError when the smallest elimination pivot of the n x n
// moment matrix falls below 1e-13.
MonicCirclePolynomial determinant_poly(const MomentSequence& c, int n);
// Same expansion on extended-precision moments.
MonicCirclePolynomial determinant_poly_extended(const std::vector<Extended>& c,
                                                int n);

template <class Real>
struct LevinsonResult {
  std::vector<Real> a;  // a_0..a_{N-1}
  std::vector<Real> h;  // h_0..h_N
  std::vector<std::vector<Real>> phi;  // Phi_0..Phi_N
};

// Moments -> reflection parameters. Needs c_0..c_N. Throws PositivityError
// (index n) when h_n <= 0 or |a_n| >= 1.
template <class Real>
LevinsonResult<Real> levinson(const std::vector<Real>& c, int N);

struct LevinsonOutput {
  ReflectionSequence a;
  std::vector<double> h;
};
LevinsonOutput levinson_reflections(const MomentSequence& c, int N);

// Moments of either family in extended precision, from an extended context.
std::vector<Extended> moments_extended(Family f, int n_max, const Extended& w,
                                       const ExtendedEllipticContext& ctx);

// Delta_1..Delta_{n_max} via Delta_{n+1} = Delta_n h_n (Levinson byproduct).
struct ToeplitzReport {
  std::vector<double> delta;  // delta[i] = Delta_{i+1}
  bool all_positive = true;
};
ToeplitzReport toeplitz_dets(const MomentSequence& c, int n_max);
ToeplitzReport toeplitz_dets_extended(const std::vector<Extended>& c,
                                      int n_max);
// Direct O(n^3) elimination; oracle for small n.
double toeplitz_det_elimination(const MomentSequence& c, int n);

// sum_s W_{ns} c_{s-m}; zero for m < n, h_n for m = n.
double functional_orthogonality(const MonicCirclePolynomial& poly,
                                const MomentSequence& c, int m);

// h_n = mu_n prod_{s=1}^n sn^2(ws); mu_n = k^{2 floor(n/2)} for cn and
// k^{2 ceil(n/2)} for dn.
double h_closed_form(Family f, int n, double w, const EllipticContext& ctx);

// Phi_n(z) -> (-1)^n Phi_n(-z) and the matching transport of a and c.
MonicCirclePolynomial reflect_sign(const MonicCirclePolynomial& poly);
ReflectionSequence reflect_sign(const ReflectionSequence& a);
MomentSequence reflect_sign(const MomentSequence& c);

// (Phi_n(1), Phi_n(-1)) from the product formulas.
std::pair<double, double> value_at_pm1(const ReflectionSequence& a, int n);

struct ThreeTermReport {
  double max_residual = 0.0;
  std::vector<int> skipped;  // n with a_{n-1} == a_n == 0
};
// Residual of Phi_{n+1} + d_n Phi_n - z(Phi_n + b_n Phi_{n-1}) for
// 1 <= n < polys.size() - 1, with d_n, b_n taken from a. Evaluated as
// a_{n-1} times that expression over max(|a_{n-1}|, |a_n|).
ThreeTermReport three_term_check(const ReflectionSequence& a,
                                 const std::vector<MonicCirclePolynomial>& polys);

double max_coeff_diff(const MonicCirclePolynomial& p,
                      const MonicCirclePolynomial& q);

extern template std::vector<std::vector<double>> szego_family<double>(
    const std::vector<double>&, int);
extern template std::vector<std::vector<Extended>> szego_family<Extended>(
    const std::vector<Extended>&, int);
extern template LevinsonResult<double> levinson<double>(
    const std::vector<double>&, int);
extern template LevinsonResult<Extended> levinson<Extended>(
    const std::vector<Extended>&, int);

}  // namespace ellipuc
