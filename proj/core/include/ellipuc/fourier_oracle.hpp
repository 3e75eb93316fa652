#pragma once

// Truncated Fourier series for sn, cn and dn. These are the independent
// cross-check for the AGM kernel and are linked only by tests and tools
// that verify it; nothing in ellipuc_core calls them.

#include "ellipuc/elliptic_kernel.hpp"

namespace ellipuc::oracle {

struct SeriesValue {
  double value;
  double tail_bound;  // bound on the omitted terms
};

// cn: bilateral sum over s = -S+1 .. S of the half-integer harmonics.
SeriesValue fourier_cn(double u, const EllipticContext& ctx, int S);
// dn: bilateral sum over |s| <= S.
SeriesValue fourier_dn(double u, const EllipticContext& ctx, int S);
// sn: odd harmonics j = 1 .. S.
SeriesValue fourier_sn(double u, const EllipticContext& ctx, int S);

}  // namespace ellipuc::oracle
