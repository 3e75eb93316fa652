#pragma once

// q-shifted factorials (a; q)_n for real a and 0 < q < 1.

#include <vector>

namespace ellipuc {

// (a; q)_n = (1 - a)(1 - a q)...(1 - a q^{n-1}); (a; q)_0 = 1.
double q_pochhammer(double a, double q, long n);

// (a; q)_inf, truncated once the factor differs from 1 by < 1e-17.
double q_pochhammer_inf(double a, double q);

// Table of (x; q)_0 .. (x; q)_{n_max}, built once and read-only afterwards.
class QPochhammerCache {
 public:
  QPochhammerCache(double x, double q, long n_max);

  double base() const noexcept { return q_; }
  double x() const noexcept { return x_; }
  long n_max() const noexcept { return static_cast<long>(values_.size()) - 1; }
  double operator()(long n) const;

 private:
  double x_;
  double q_;
  std::vector<double> values_;
};

}  // namespace ellipuc
