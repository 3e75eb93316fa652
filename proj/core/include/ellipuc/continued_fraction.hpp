#pragma once

// Regular continued fractions of a real number given as a decimal string,
// and the ordered best approximations |w n - m| with bounded denominator.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ellipuc/errors.hpp"

namespace ellipuc {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// The convergent denominators do not reach past the requested bound; more
// partial quotients (or more input digits) are needed.
class InsufficientDepthError : public Error {
 public:
  using Error::Error;
};

// Smallest d <= max_den with x == p/d (p != 0) to working precision, or 0.
// Double-precision screen used for lattice and resonance checks.
long rational_denominator(double x, long max_den);

// Parses "0.618...", "3", "-1.5e-3" or "p/q" into an exact rational.
// digits receives the number of significant decimal digits, or -1 for an
// exact "p/q" input.
BigRational parse_decimal(const std::string& text, int* digits = nullptr);

struct Convergent {
  BigInt p;
  BigInt q;
};

struct ContinuedFractionData {
  BigRational value;  // the number actually expanded
  int digits = -1;    // significant digits of the input, -1 when exact
  std::vector<BigInt> quotients;
  std::vector<Convergent> convergents;
  bool terminated = false;         // exact rational, expansion ended
  bool precision_limited = false;  // next quotient not trustworthy at the input precision
  bool depth_limited = false;      // stopped by the depth argument

  // Largest convergent denominator <= n, or 0 if none.
  BigInt largest_denominator_upto(std::int64_t n) const;
};

// Gauss map on the exact rational value; depth <= 40 partial quotients after
// q_0. A finite decimal is treated as an approximation of an irrational:
// quotients whose convergent denominator exceeds sqrt(10^digits / 10) are
// dropped and precision_limited is set.
ContinuedFractionData continued_fraction(const std::string& w, int depth);
ContinuedFractionData continued_fraction(const BigRational& w, int digits,
                                         int depth);

struct BestApproximation {
  std::int64_t n;
  std::int64_t m;
  double y;  // |w n - m| rounded for display; ordering is exact
};

// For every denominator 1..n the nearest numerator, sorted by strictly
// increasing |w n_i - m_i|. Requires the expansion to reach a denominator
// above n (or to have terminated); otherwise InsufficientDepthError.
std::vector<BestApproximation> best_approximations(
    const ContinuedFractionData& cf, std::int64_t n);

}  // namespace ellipuc
