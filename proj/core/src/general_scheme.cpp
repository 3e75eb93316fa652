#include "ellipuc/general_scheme.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "ellipuc/errors.hpp"

namespace ellipuc {

namespace {

constexpr double kPi = std::numbers::pi;

// 2 sum_{odd n > S} 4/(pi^2 n^2).
double magnus_tail(long S) {
  if (S < 2) return 2.0 * (4.0 / (kPi * kPi)) * (kPi * kPi / 8.0 - 1.0);
  return 4.0 / (kPi * kPi * static_cast<double>(S - 1));
}

double magnus_eval(double x) {
  double r = std::fmod(std::abs(x), 2.0);
  if (r > 1.0) r = 2.0 - r;
  return 1.0 - 2.0 * r;
}

}  // namespace

PeriodicProfile::PeriodicProfile(std::string tag, double period,
                                 CoefficientFn coefficient, EvalFn eval,
                                 TailFn tail, long support)
    : tag_(std::move(tag)),
      period_(period),
      coefficient_(std::move(coefficient)),
      eval_(std::move(eval)),
      tail_(std::move(tail)),
      support_(support) {
  if (!(period_ > 0.0) || !std::isfinite(period_)) {
    throw DomainError("profile period must be positive");
  }
}

PeriodicProfile PeriodicProfile::cn(const EllipticContext& ctx) {
  const double K = ctx.big_K();
  const double q = ctx.nome_q();
  const double pref = kPi / (ctx.k() * K);
  auto coeff = [=](long n) {
    if (n % 2 == 0) return 0.0;
    const double t = std::pow(q, 0.5 * static_cast<double>(n));
    return pref * t / (1.0 + t * t);
  };
  auto eval = [ctx](double x) { return ctx.sncndn(x).cn; };
  auto tail = [=](long S) {
    return 2.0 * pref * std::pow(q, 0.5 * static_cast<double>(S + 1)) / (1.0 - q);
  };
  return PeriodicProfile("cn", 4.0 * K, coeff, eval, tail, -1);
}

PeriodicProfile PeriodicProfile::dn(const EllipticContext& ctx) {
  const double K = ctx.big_K();
  const double q = ctx.nome_q();
  auto coeff = [=](long n) {
    if (n == 0) return kPi / (2.0 * K);
    const double t = std::pow(q, static_cast<double>(n));
    return (kPi / K) * t / (1.0 + t * t);
  };
  auto eval = [ctx](double x) { return ctx.sncndn(x).dn; };
  auto tail = [=](long S) {
    return 2.0 * (kPi / K) * std::pow(q, static_cast<double>(S + 1)) / (1.0 - q);
  };
  return PeriodicProfile("dn", 2.0 * K, coeff, eval, tail, -1);
}

PeriodicProfile PeriodicProfile::magnus() {
  auto coeff = [](long n) {
    if (n % 2 == 0) return 0.0;
    const double d = static_cast<double>(n);
    return 4.0 / (kPi * kPi * d * d);
  };
  return PeriodicProfile("magnus", 2.0, coeff, magnus_eval, magnus_tail, -1);
}

PeriodicProfile PeriodicProfile::from_coefficients(
    double period, const std::vector<std::pair<long, double>>& coeffs) {
  long top = 0;
  for (const auto& [n, A] : coeffs) {
    if (n < 0) throw DomainError("profile harmonics must be listed for n >= 0");
    if (!(A >= 0.0) || !std::isfinite(A)) {
      throw DomainError("Fourier coefficient A_" + std::to_string(n) +
                        " must be nonnegative");
    }
    top = std::max(top, n);
  }
  std::vector<double> table(static_cast<size_t>(top) + 1, 0.0);
  for (const auto& [n, A] : coeffs) table[static_cast<size_t>(n)] += A;
  double total = table[0];
  for (size_t n = 1; n < table.size(); ++n) total += 2.0 * table[n];
  if (std::abs(total - 1.0) > 1e-12) {
    throw DomainError("profile is not normalized: sum A_n = " +
                      std::to_string(total) + " (need f(0) = 1)");
  }
  auto coeff = [table](long n) {
    return n < static_cast<long>(table.size()) ? table[static_cast<size_t>(n)] : 0.0;
  };
  auto eval = [table, period](double x) {
    double acc = 0.0;
    for (size_t n = table.size(); n-- > 1;) {
      acc += 2.0 * table[n] * std::cos(2.0 * kPi * static_cast<double>(n) * x / period);
    }
    return acc + table[0];
  };
  auto tail = [](long) { return 0.0; };
  return PeriodicProfile("custom", period, coeff, eval, tail, top);
}

PeriodicProfile PeriodicProfile::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("profile JSON: ") + e.what());
  }
  try {
    if (j.contains("tag")) {
      const auto tag = j.at("tag").get<std::string>();
      if (tag == "magnus") return magnus();
      if (tag == "cn" || tag == "dn") {
        const auto ctx = make_context(j.at("k").get<double>());
        return tag == "cn" ? cn(ctx) : dn(ctx);
      }
      throw DomainError("unknown profile tag '" + tag + "'");
    }
    std::vector<std::pair<long, double>> coeffs;
    for (const auto& row : j.at("coefficients")) {
      coeffs.emplace_back(row.at(0).get<long>(), row.at(1).get<double>());
    }
    return from_coefficients(j.at("period").get<double>(), coeffs);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("profile JSON: ") + e.what());
  }
}

PeriodicProfile PeriodicProfile::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open profile file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

double PeriodicProfile::fourier_sum(double x, long S) const {
  double acc = 0.0;
  for (long n = S; n >= 1; --n) {
    const double A = coefficient(n);
    if (A != 0.0) {
      acc += 2.0 * A * std::cos(2.0 * kPi * static_cast<double>(n) * x / period_);
    }
  }
  return acc + coefficient(0);
}

SchemeMoments scheme_moments(const PeriodicProfile& profile, double w,
                             int n_max, long max_denominator) {
  if (!(w > 0.0) || !std::isfinite(w)) {
    throw DomainError("scheme_moments: w must be positive");
  }
  if (n_max < 0) throw DomainError("scheme_moments: n_max must be >= 0");
  SchemeMoments out;
  out.resonance_denominator =
      rational_denominator(w / profile.period(), max_denominator);
  out.resonant = out.resonance_denominator != 0;
  out.c.values.reserve(static_cast<size_t>(n_max) + 1);
  out.c.values.push_back(1.0);
  for (int n = 1; n <= n_max; ++n) out.c.values.push_back(profile(w * n));
  return out;
}

DiscretePointMeasure scheme_measure(const PeriodicProfile& profile, double w,
                                    long S) {
  if (S < 1) throw DomainError("measure truncation S must be >= 1");
  DiscretePointMeasure m;
  m.trunc = static_cast<int>(S);
  for (long s = -S; s <= S; ++s) {
    const double A = profile.coefficient(s);
    if (!(A > 0.0)) continue;
    m.index.push_back(s);
    m.angles.push_back(reduce_angle(2.0 * kPi * w * static_cast<double>(s) /
                                    profile.period()));
    m.weights.push_back(A);
  }
  m.tail_bound = profile.tail(S);
  return m;
}

Extended magnus_value(const Extended& x) {
  using boost::multiprecision::abs;
  using boost::multiprecision::floor;
  Extended r = abs(x);
  r -= 2 * floor(r / 2);
  if (r > 1) r = 2 - r;
  return 1 - 2 * r;
}

SchemeReport scheme_pipeline(const PeriodicProfile& profile, double w,
                             int n_max) {
  SchemeReport rep;
  const auto sm = scheme_moments(profile, w, n_max);
  rep.resonant = sm.resonant;
  try {
    const auto lev = levinson<double>(sm.c.values, n_max);
    rep.a = lev.a;
    double delta = 1.0;
    for (int n = 0; n < n_max; ++n) {
      delta *= lev.h[n];
      rep.delta.push_back(delta);
    }
  } catch (const PositivityError& e) {
    rep.failure = e.what();
    return rep;
  }
  rep.delta_positive = std::all_of(rep.delta.begin(), rep.delta.end(),
                                   [](double d) { return d > 0.0; });
  rep.a_inside = std::all_of(rep.a.begin(), rep.a.end(),
                             [](double a) { return std::abs(a) < 1.0; });
  if (!rep.delta_positive) rep.failure = "nonpositive Toeplitz determinant";
  return rep;
}

MagnusSparsityReport magnus_sparsity_check(const std::string& w, int n_max,
                                           double threshold) {
  if (n_max < 1) throw DomainError("magnus_sparsity_check: n_max must be >= 1");
  if (!(threshold > 0.0)) throw DomainError("threshold must be positive");
  const auto cf = continued_fraction(w, 40);
  const Extended we(w);
  std::vector<Extended> c;
  for (int n = 0; n <= n_max; ++n) c.push_back(magnus_value(we * n));
  const auto lev = levinson<Extended>(c, n_max);

  MagnusSparsityReport rep;
  rep.min_h = static_cast<double>(lev.h.back());
  for (int n = 1; n <= n_max; ++n) {
    const auto best = best_approximations(cf, n);
    SparsityRow row;
    row.n = n;
    row.predicted.push_back(0);
    row.predicted.push_back(static_cast<int>(best[0].n));
    if (best.size() > 1) row.predicted.push_back(static_cast<int>(best[1].n));
    const auto& phi = lev.phi[n];
    for (int j = n; j >= 0; --j) {
      const double v = std::abs(static_cast<double>(phi[j]));
      const int offset = n - j;
      const bool predicted = std::find(row.predicted.begin(), row.predicted.end(),
                                       offset) != row.predicted.end();
      if (v > threshold) row.offsets.push_back(offset);
      if (!predicted) row.largest_other = std::max(row.largest_other, v);
    }
    row.ok = row.offsets.size() <= 3 && row.largest_other <= threshold;
    // A stray coefficient just under the threshold is not clearly noise.
    row.inconclusive = row.ok && row.largest_other > threshold / 10.0;
    if (!row.ok) ++rep.violations;
    if (row.inconclusive) ++rep.inconclusive;
    rep.rows.push_back(std::move(row));
  }
  for (int n = 0; n < n_max; ++n) {
    if (std::abs(static_cast<double>(lev.a[n])) > threshold) {
      rep.nonzero_a.push_back(n);
      // a_n = -Phi_{n+1}(0): the constant term sits at offset n + 1.
      const auto& pred = rep.rows[n].predicted;
      if (std::find(pred.begin(), pred.end(), n + 1) == pred.end()) {
        rep.nonzero_a_predicted = false;
      }
    }
  }
  for (const auto& h : lev.h) rep.min_h = std::min(rep.min_h, static_cast<double>(h));
  return rep;
}

}  // namespace ellipuc
