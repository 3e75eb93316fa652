#pragma once

#include <complex>
#include <string>
#include <vector>

#include "ellipuc/elliptic_kernel.hpp"

namespace ellipuc {

struct EbcParams {
  double w;
  EllipticContext ctx;
};

// Validates w against the lattice of rational multiples of K: w/(4K) must not
// equal a fraction with denominator <= max_denominator to working precision.
// Throws DegeneracyError (index = offending denominator) when it does.
EbcParams make_ebc_params(double w, const EllipticContext& ctx,
                          long max_denominator = 1000000);

// Elliptic binomial coefficient; 0 outside 0 <= j <= n. Computed on
// min(j, n - j) so that E^n_j and E^n_{n-j} are bit-identical.
double ebc(long n, long j, const EbcParams& p);

// e_n = sn(wn)/sn(w) = E^n_1.
double elliptic_number(long n, const EbcParams& p);

struct IdentityResidual {
  std::string name;
  double max_residual;
};

// Max residual of each of the six EBC recurrences over 1 <= j <= n <= n_max.
std::vector<IdentityResidual> verify_ebc_recurrences(int n_max,
                                                     const EbcParams& p);

// k -> 0: prod sin(w(n-s))/sin(w(s+1)).
double ebc_k0_limit(long n, long j, double w);
// Same limit through the Gauss polynomial, q = exp(-2iw).
std::complex<double> ebc_k0_qbinomial(long n, long j, double w);
// k -> 1: q-shifted-factorial ratio with q = exp(-2w).
double ebc_k1_limit(long n, long j, double w);

}  // namespace ellipuc
