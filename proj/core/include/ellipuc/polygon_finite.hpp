#pragma once

// The degenerate step w = KM/N: a_{2N-1} = -1 and the cn family becomes a
// finite system orthogonal on the 2N-th roots of -1.

#include <vector>

#include "ellipuc/circle_polys.hpp"
#include "ellipuc/elliptic_kernel.hpp"

namespace ellipuc {

struct PolygonCase {
  explicit PolygonCase(const EllipticContext& c) : ctx(c) {}

  int N = 0;
  int M = 1;
  double w = 0.0;
  EllipticContext ctx;
  bool experimental = false;  // M != 1: weights from the direct sum only

  ReflectionSequence a;                     // a_0..a_{2N-1}, a_{2N-1} = -1
  std::vector<MonicCirclePolynomial> polys;  // Phi_0..Phi_{2N}
  std::vector<int> j;                        // -N+1..N
  std::vector<double> angles;                // pi (j - 1/2)/N reduced
  std::vector<double> weights;               // rho_j
};

// M must be odd, positive and co-prime with N.
PolygonCase build_polygon_case(int N, const EllipticContext& ctx, int M = 1);

struct RamanujanRoutes {
  double direct;
  double product;
  double dn_form;
  double poisson;
  double max_spread() const;
};

// F(alpha; q) = sum_n 1/(q^{n+alpha} + q^{-n-alpha}) by four routes.
RamanujanRoutes ramanujan_F(double alpha, double q);

struct SWeightRoutes {
  double direct;
  double product;
  double dn_form;
  double max_spread() const;
};

// S(j;N) for -N+1 <= j <= N by the bilateral sum, the product form and the
// dn form with Landen-transformed parameters.
SWeightRoutes S_weights(int j, int N, const EllipticContext& ctx);

// The dn form evaluated at an arbitrary half-integer offset x, i.e.
// (K~/pi) dn(x K~'/N; k~'). x = j - 1/2 reproduces S(j;N).
double S_dn_form_at(double x, int N, const EllipticContext& ctx);

// |sum_j rho_j z_j^n - cn(KMn/N)|
double finite_moment_check(const PolygonCase& pc, int n);

struct FiniteGramReport {
  std::vector<std::vector<double>> gram;  // n, m <= 2N-1
  double max_off_diagonal = 0.0;
  double max_diagonal_error = 0.0;  // vs prod (1 - a_s^2)
  std::vector<double> residue_weights;
  double max_weight_diff = 0.0;  // residue vs stored weights
  double max_residue_imag = 0.0;
};
FiniteGramReport finite_gram_check(const PolygonCase& pc);

}  // namespace ellipuc
