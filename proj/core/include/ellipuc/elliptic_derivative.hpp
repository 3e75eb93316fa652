#pragma once

#include <string>
#include <vector>

#include "ellipuc/circle_polys.hpp"
#include "ellipuc/ebc.hpp"

namespace ellipuc {

// The operators below act on plain coefficient vectors (lowest degree first)
// since their output is not monic.
using Coeffs = std::vector<double>;

// z^n -> e_n z^{n-1}
Coeffs apply_E(const Coeffs& p, const EbcParams& params);

// z^n -> sin(n j theta) z^{n-1}
Coeffs apply_W_j(const Coeffs& p, int j, double theta);

struct SeriesResult {
  Coeffs value;
  double tail_bound;
};
// sum_{j <= J} beta_j W_{2j-1} p with theta = pi w/(2K).
SeriesResult E_via_W_expansion(const Coeffs& p, const EbcParams& params, int J);

// beta_j of the expansion above.
double beta_j(int j, const EbcParams& params);

struct IntertwiningReport {
  double cn_to_dn = 0.0;    // e_n Phi^D_{n-1} - E Phi^C_n
  double dn_to_cn = 0.0;    // e_n Phi^C_{n-1} - E Phi^D_n
  double square_cn = 0.0;   // E^2 Phi^C_n - e_n e_{n-1} Phi^C_{n-2}
  double square_dn = 0.0;
};
IntertwiningReport verify_intertwining(int n_max, const EbcParams& params);

}  // namespace ellipuc
