#pragma once

// Delsarte–Genin images of real-reflection circle polynomials: symmetric
// polynomials S_n on [-1, 1] and their quadratic split into P_n, Q_n.
//
// Half-integer powers of z never appear; everything goes through integer
// coefficient algebra and Chebyshev bases.

#include <cstdint>
#include <vector>

#include "ellipuc/circle_polys.hpp"
#include "ellipuc/measures.hpp"

namespace ellipuc {

// Monomial coefficients, lowest degree first.
using RealPoly = std::vector<double>;

double eval_poly(const RealPoly& p, double x);

// Exact integer coefficients of T_m and of V_m (third kind,
// V_m(cos t) = cos((m + 1/2)t)/cos(t/2)) for 0 <= m <= 40.
const std::vector<std::int64_t>& chebyshev_T(int m);
const std::vector<std::int64_t>& chebyshev_V(int m);

struct SymmetricIntervalPolynomial {
  RealPoly coeffs;
  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  double operator()(double x) const { return eval_poly(coeffs, x); }
};

// S_n from Phi_n; a_prev = a_{n-1} (use -1 for n = 0).
SymmetricIntervalPolynomial dgt(const MonicCirclePolynomial& phi,
                                double a_prev);

// v_0..v_N for N = a.size(), with v_0 = 0 from the convention a_{-1} = -1.
struct IntervalRecurrence {
  std::vector<double> v;
};
IntervalRecurrence v_coeffs(const ReflectionSequence& a);

// kappa_n = v_1...v_n, n = 0..N.
std::vector<double> kappa_from_v(const IntervalRecurrence& r);

// Three-term data X_{n+1} + b_n X_n + u_n X_{n-1} = x X_n. u[0] is unused.
struct SplitRecurrence {
  std::vector<double> u;
  std::vector<double> b;
};
struct SplitPair {
  SplitRecurrence P;
  SplitRecurrence Q;
};
SplitPair split_PQ_via_v(const IntervalRecurrence& r);
SplitPair split_PQ_direct(const ReflectionSequence& a);

struct SplitRoutes {
  SplitPair via_v;
  SplitPair direct;
  double max_disagreement;
};
SplitRoutes split_PQ_recurrences(const ReflectionSequence& a);

// P_n = sum_s t[s] T_s(x) from Phi_{2n}, with a_odd = a_{2n-1}.
std::vector<double> chebyshev_expansion(const MonicCirclePolynomial& phi_2n,
                                        double a_odd);

// P_0..P_n and Q_0..Q_n from Phi_0..Phi_{2n+1}. The a values supply the
// normalizations a_{2m-1} (P) and a_{2m} (Q).
struct SplitPolys {
  std::vector<RealPoly> P;
  std::vector<RealPoly> Q;
};
SplitPolys split_polys(const std::vector<MonicCirclePolynomial>& phis,
                       const ReflectionSequence& a);

// Residual of X_{n+1} + b_n X_n + u_n X_{n-1} - x X_n, coefficientwise.
double split_recurrence_residual(const std::vector<RealPoly>& polys,
                                 const SplitRecurrence& rec);
// Residual of S_{n+1} + v_n S_{n-1} - x S_n.
double symmetric_recurrence_residual(
    const std::vector<SymmetricIntervalPolynomial>& s,
    const IntervalRecurrence& r);

// M_n = 2^{-n} sum_j C(n, j) c_{j - n/2} for even n, 0 for odd n.
double interval_moments(const MomentSequence& c, int n);

// The cn-family recurrence coefficients of P_n written through Jacobi
// functions: u_n for n >= 1 and b_n for n >= 0.
SplitRecurrence cn_P_recurrence_explicit(int n_max, double w,
                                         const EllipticContext& ctx);

struct IntervalGramReport {
  double s_off = 0.0, s_diag = 0.0;  // diag error vs kappa_n
  double p_off = 0.0, p_diag = 0.0;  // vs H_n = u_1...u_n
  double q_off = 0.0, q_diag = 0.0;  // weight (1 + x), vs (1 + a_0) prod u^Q
};
// S_0..S_{n_s} on x = cos(theta/2) in symmetrized form; P, Q up to n_pq on
// x = cos(theta), theta the circle angles of m.
IntervalGramReport interval_gram(const ReflectionSequence& a,
                                 const std::vector<MonicCirclePolynomial>& phis,
                                 const DiscretePointMeasure& m, int n_s,
                                 int n_pq);

// k -> 1 displays, base q = exp(-2w).
double aw_u_display(int n, double q);
double aw_b_display(int n, double q);
// h(x; -q^{1/2})/h(x; q^{1/2}) as an infinite product.
double aw_weight(double x, double q);

struct AskeyWilsonReport {
  double max_u_error = 0.0;  // display vs k = 1 reflections, n <= n_max
  double max_b_error = 0.0;
  double ratio_constant = 0.0;   // expected 1/sqrt(k')
  double max_ratio_spread = 0.0;  // max |ratio - 1/sqrt(k')| over the grid
};
// Grid theta_i = i pi/(2 (m_grid - 1)), x = cos(2 theta_i); dn modulus from
// nome sqrt(q).
AskeyWilsonReport askey_wilson_limit_check(double q, int n_max, int m_grid);

}  // namespace ellipuc
