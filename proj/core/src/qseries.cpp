#include "ellipuc/qseries.hpp"

#include <cmath>
#include <string>

#include "ellipuc/errors.hpp"

namespace ellipuc {

namespace {

void require_base(double q) {
  if (!(q > 0.0) || !(q < 1.0)) {
    throw DomainError("q-series base must lie in (0, 1)");
  }
}

}  // namespace

double q_pochhammer(double a, double q, long n) {
  if (n < 0) throw DomainError("q_pochhammer: negative length");
  double result = 1.0;
  double aq = a;
  for (long i = 0; i < n; ++i) {
    result *= 1.0 - aq;
    aq *= q;
  }
  return result;
}

double q_pochhammer_inf(double a, double q) {
  require_base(q);
  double result = 1.0;
  double aq = a;
  for (int i = 0; i < 100000; ++i) {
    if (std::abs(aq) < 1e-17) break;
    result *= 1.0 - aq;
    aq *= q;
  }
  return result;
}

QPochhammerCache::QPochhammerCache(double x, double q, long n_max)
    : x_(x), q_(q) {
  require_base(q);
  if (n_max < 0) throw DomainError("QPochhammerCache: negative n_max");
  values_.reserve(static_cast<size_t>(n_max) + 1);
  values_.push_back(1.0);
  double xq = x;
  for (long i = 0; i < n_max; ++i) {
    values_.push_back(values_.back() * (1.0 - xq));
    xq *= q;
  }
}

double QPochhammerCache::operator()(long n) const {
  if (n < 0 || n > n_max()) {
    throw DomainError("QPochhammerCache: index " + std::to_string(n) +
                      " outside cached range");
  }
  return values_[static_cast<size_t>(n)];
}

}  // namespace ellipuc
