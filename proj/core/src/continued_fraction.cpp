#include "ellipuc/continued_fraction.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

namespace ellipuc {

namespace {

BigInt floor_of(const BigRational& x) {
  BigInt n = boost::multiprecision::numerator(x);
  const BigInt d = boost::multiprecision::denominator(x);
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

BigInt pow10(int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

BigInt parse_integer(const std::string& s) {
  if (s.empty()) throw DomainError("empty integer");
  BigInt r = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw DomainError("not a digit: '" + std::string(1, c) + "'");
    }
    r = r * 10 + (c - '0');
  }
  return r;
}

}  // namespace

BigRational parse_decimal(const std::string& text, int* digits) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw DomainError("empty number");
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  BigRational value;
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const BigInt num = parse_integer(s.substr(0, slash));
    const BigInt den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in '" + text + "'");
    value = BigRational(num, den);
    if (digits) *digits = -1;
  } else {
    int exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string::npos) {
      try {
        exponent = std::stoi(s.substr(e + 1));
      } catch (const std::exception&) {
        throw DomainError("bad exponent in '" + text + "'");
      }
      s = s.substr(0, e);
    }
    std::string mantissa;
    int frac_len = 0;
    bool seen_point = false;
    for (char c : s) {
      if (c == '.') {
        if (seen_point) throw DomainError("two decimal points in '" + text + "'");
        seen_point = true;
        continue;
      }
      mantissa.push_back(c);
      if (seen_point) ++frac_len;
    }
    const BigInt m = parse_integer(mantissa);
    const int scale = exponent - frac_len;
    value = scale >= 0 ? BigRational(m * pow10(scale))
                       : BigRational(m, pow10(-scale));
    if (digits) {
      const auto first = mantissa.find_first_not_of('0');
      *digits = first == std::string::npos
                    ? 1
                    : static_cast<int>(mantissa.size() - first);
    }
  }
  return negative ? BigRational(-value) : value;
}

long rational_denominator(double x, long max_den) {
  const double tol = 16.0 * std::numeric_limits<double>::epsilon() *
                     std::max(1.0, std::abs(x));
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = x;
  for (int depth = 0; depth < 64; ++depth) {
    const double a = std::floor(r);
    if (std::abs(a) > 1e15) break;
    const long ai = static_cast<long>(a);
    const long p2 = ai * p1 + p0;
    const long q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    // p = 0 means x itself is ~0, not a rational point.
    if (p2 != 0 && std::abs(x - static_cast<double>(p2) / q2) <= tol) {
      return q2;
    }
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double frac = r - a;
    if (frac <= 0.0) break;
    r = 1.0 / frac;
  }
  return 0;
}

BigInt ContinuedFractionData::largest_denominator_upto(std::int64_t n) const {
  BigInt best = 0;
  for (const auto& c : convergents) {
    if (c.q <= n && c.q > best) best = c.q;
  }
  return best;
}

ContinuedFractionData continued_fraction(const std::string& w, int depth) {
  int digits = -1;
  const BigRational v = parse_decimal(w, &digits);
  return continued_fraction(v, digits, depth);
}

ContinuedFractionData continued_fraction(const BigRational& w, int digits,
                                         int depth) {
  if (depth < 0 || depth > 40) {
    throw DomainError("continued fraction depth must lie in [0, 40]");
  }
  ContinuedFractionData cf;
  cf.value = w;
  cf.digits = digits;
  // Denominators above this are beyond what the decimal rendering pins down:
  // |w - P/Q| ~ 1/Q^2 must dominate the input error 10^{-digits}.
  BigInt q_limit = 0;
  if (digits > 0) {
    q_limit = boost::multiprecision::sqrt(pow10(std::max(digits - 1, 0)));
  }
  BigInt p0 = 1, q0 = 0;  // P_{-1}, Q_{-1}
  BigInt p1 = 0, q1 = 1;  // P_{-2}, Q_{-2}
  BigRational r = w;
  for (int i = 0; i <= depth; ++i) {
    const BigInt a = floor_of(r);
    const BigInt p = a * p0 + p1;
    const BigInt q = a * q0 + q1;
    if (digits > 0 && i > 0 && q > q_limit) {
      cf.precision_limited = true;
      return cf;
    }
    cf.quotients.push_back(a);
    cf.convergents.push_back({p, q});
    p1 = p0;
    q1 = q0;
    p0 = p;
    q0 = q;
    const BigRational frac = r - a;
    if (frac == 0) {
      cf.terminated = true;
      return cf;
    }
    r = 1 / frac;
  }
  cf.depth_limited = true;
  return cf;
}

std::vector<BestApproximation> best_approximations(
    const ContinuedFractionData& cf, std::int64_t n) {
  if (n < 1) throw DomainError("best_approximations: n must be >= 1");
  if (cf.convergents.empty()) {
    throw InsufficientDepthError("empty continued fraction");
  }
  if (!cf.terminated && cf.convergents.back().q <= n) {
    throw InsufficientDepthError(
        "continued fraction stops at denominator " +
        cf.convergents.back().q.str() + " <= " + std::to_string(n) +
        "; extend the depth or supply more digits of w");
  }
  struct Entry {
    std::int64_t n;
    std::int64_t m;
    BigRational y;
  };
  std::vector<Entry> entries;
  entries.reserve(static_cast<size_t>(n));
  for (std::int64_t d = 1; d <= n; ++d) {
    const BigRational wd = cf.value * d;
    BigInt m = floor_of(wd);
    BigRational y = wd - m;
    if (y * 2 > 1) {
      m += 1;
      y = 1 - y;
    }
    entries.push_back({d, static_cast<std::int64_t>(m), y});
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.y < b.y; });
  std::vector<BestApproximation> out;
  out.reserve(entries.size());
  for (const auto& e : entries) {
    out.push_back({e.n, e.m, static_cast<double>(e.y)});
  }
  return out;
}

}  // namespace ellipuc
