#pragma once

// Moments c_n = f(wn) from an even periodic profile f with nonnegative
// Fourier coefficients, the associated point measure, and the Magnus
// example f(x) = 1 - 2|x| (2-periodic).

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ellipuc/circle_polys.hpp"
#include "ellipuc/continued_fraction.hpp"
#include "ellipuc/elliptic_kernel.hpp"
#include "ellipuc/measures.hpp"

namespace ellipuc {

// f(x) = sum_n A_n exp(2 pi i n x / T), A_{-n} = A_n >= 0, sum A_n = 1.
class PeriodicProfile {
 public:
  using CoefficientFn = std::function<double(long)>;
  using EvalFn = std::function<double(double)>;
  using TailFn = std::function<double(long)>;

  PeriodicProfile(std::string tag, double period, CoefficientFn coefficient,
                  EvalFn eval, TailFn tail, long support);

  // T = 4K, odd harmonics only.
  static PeriodicProfile cn(const EllipticContext& ctx);
  // T = 2K.
  static PeriodicProfile dn(const EllipticContext& ctx);
  // T = 2, A_n = 4/(pi^2 n^2) for odd n.
  static PeriodicProfile magnus();
  // Finite list of (n, A_n), n >= 0; the negative side is implied.
  static PeriodicProfile from_coefficients(
      double period, const std::vector<std::pair<long, double>>& coeffs);
  // {"period": T, "coefficients": [[n, A_n], ...]} or
  // {"tag": "cn"|"dn", "k": k} or {"tag": "magnus"}.
  static PeriodicProfile from_json(const std::string& text);
  static PeriodicProfile from_json_file(const std::string& path);

  const std::string& tag() const noexcept { return tag_; }
  double period() const noexcept { return period_; }
  double coefficient(long n) const { return coefficient_(n < 0 ? -n : n); }
  // sum_{|n| > S} A_n (an upper bound for the built-ins).
  double tail(long S) const { return tail_(S); }
  // Largest |n| with A_n possibly nonzero, or -1 for infinite support.
  long support() const noexcept { return support_; }
  double operator()(double x) const { return eval_(x); }
  // sum_{|n| <= S} A_n cos(2 pi n x / T), evaluated from the top down.
  double fourier_sum(double x, long S) const;

 private:
  std::string tag_;
  double period_;
  CoefficientFn coefficient_;
  EvalFn eval_;
  TailFn tail_;
  long support_;
};

struct SchemeMoments {
  MomentSequence c;
  // w/T matched a fraction with denominator <= the search bound; the
  // measure is then finitely supported and positivity can break.
  bool resonant = false;
  long resonance_denominator = 0;
};
SchemeMoments scheme_moments(const PeriodicProfile& profile, double w,
                             int n_max, long max_denominator = 1000000);

// Points exp(2 pi i w s/T) with weight A_s for |s| <= S, A_s > 0.
DiscretePointMeasure scheme_measure(const PeriodicProfile& profile, double w,
                                    long S);

inline PeriodicProfile magnus_profile() { return PeriodicProfile::magnus(); }

// f(x) for the Magnus profile evaluated in extended precision.
Extended magnus_value(const Extended& x);

struct SchemeReport {
  std::vector<double> delta;  // Delta_1..Delta_{n_max}
  std::vector<double> a;      // a_0..a_{n_max-1}
  bool delta_positive = false;
  bool a_inside = false;
  bool resonant = false;
  std::string failure;        // empty when both checks hold
};
// Toeplitz determinants and Levinson reflections for c_n = f(wn).
SchemeReport scheme_pipeline(const PeriodicProfile& profile, double w,
                             int n_max);

struct SparsityRow {
  int n = 0;
  std::vector<int> offsets;    // n - j for |coefficient j| > threshold
  std::vector<int> predicted;  // {0, n_1, n_2}
  double largest_other = 0.0;  // largest coefficient outside predicted offsets
  bool ok = false;
  bool inconclusive = false;
};

struct MagnusSparsityReport {
  std::vector<SparsityRow> rows;
  std::vector<int> nonzero_a;  // n with |a_n| > threshold
  bool nonzero_a_predicted = true;
  double min_h = 0.0;
  int violations = 0;
  int inconclusive = 0;
  bool passed() const { return violations == 0 && inconclusive == 0; }
};

// Builds Phi_1..Phi_{n_max} by extended-precision Levinson on the Magnus
// moments of w (a decimal string) and compares the surviving exponents with
// the two best approximations of w for each degree.
MagnusSparsityReport magnus_sparsity_check(const std::string& w, int n_max,
                                           double threshold = 1e-8);

}  // namespace ellipuc
