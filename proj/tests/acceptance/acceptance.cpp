// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all
// pass. argv[1] is the path of the ellipuc executable (criterion 11).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ellipuc/circle_polys.hpp"
#include "ellipuc/continued_fraction.hpp"
#include "ellipuc/ebc.hpp"
#include "ellipuc/elliptic_derivative.hpp"
#include "ellipuc/elliptic_kernel.hpp"
#include "ellipuc/fourier_oracle.hpp"
#include "ellipuc/general_scheme.hpp"
#include "ellipuc/hyperbolic_limit.hpp"
#include "ellipuc/interval_polys.hpp"
#include "ellipuc/measures.hpp"
#include "ellipuc/polygon_finite.hpp"

using namespace ellipuc;

namespace {

constexpr double kK = 0.6;
constexpr double kW = 0.31;
constexpr const char* kWText = "0.31";
constexpr const char* kGolden =
    "0.6180339887498948482045868343656381177203091798057628621354486227052605";

// Collects named measurements against limits; the criterion passes iff every
// one of them is within its limit.
class Criterion {
 public:
  void check(const std::string& what, double value, double limit) {
    const bool ok = value <= limit;  // NaN fails
    if (!ok) ok_ = false;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s=%.3g%s%.0e", what.c_str(), value,
                  ok ? "<=" : ">", limit);
    if (!detail_.empty()) detail_ += "; ";
    detail_ += buf;
  }
  void require(const std::string& what, bool cond) {
    if (!cond) ok_ = false;
    if (!detail_.empty()) detail_ += "; ";
    detail_ += what + (cond ? " ok" : " FAILED");
  }
  void fail(const std::string& why) {
    ok_ = false;
    if (!detail_.empty()) detail_ += "; ";
    detail_ += why;
  }
  bool ok() const { return ok_; }
  const std::string& detail() const { return detail_; }

 private:
  bool ok_ = true;
  std::string detail_;
};

double binomial(int n, int j) {
  double b = 1.0;
  for (int i = 0; i < j; ++i) b = b * (n - i) / (i + 1);
  return b;
}

void criterion1(Criterion& c) {
  double grid = 0.0;
  for (int ik = 0; ik < 20; ++ik) {
    const auto ctx = make_context(0.05 + 0.9 * ik / 19.0);
    for (int iu = 0; iu < 20; ++iu) {
      const double u = -2.0 * ctx.big_K() + 4.0 * ctx.big_K() * iu / 19.0 + 0.01;
      const auto t = ctx.sncndn(u);
      grid = std::max(grid, std::abs(t.sn - oracle::fourier_sn(u, ctx, 80).value));
      grid = std::max(grid, std::abs(t.cn - oracle::fourier_cn(u, ctx, 80).value));
      grid = std::max(grid, std::abs(t.dn - oracle::fourier_dn(u, ctx, 80).value));
    }
  }
  c.check("agm_vs_fourier", grid, 1e-12);

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> du(-50.0, 50.0), dk(0.001, 0.999);
  double pyth = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto ctx = make_context(dk(rng));
    const auto t = ctx.sncndn(du(rng));
    pyth = std::max(pyth, std::abs(t.sn * t.sn + t.cn * t.cn - 1.0));
    pyth = std::max(pyth, std::abs(t.dn * t.dn + ctx.k() * ctx.k() * t.sn * t.sn - 1.0));
  }
  c.check("pythagorean", pyth, 1e-13);
}

void criterion2(Criterion& c) {
  const auto p = make_ebc_params(kW, make_context(kK));
  double rec = 0.0;
  for (const auto& r : verify_ebc_recurrences(40, p)) rec = std::max(rec, r.max_residual);
  c.check("six_recurrences", rec, 1e-11);

  const auto tiny = make_ebc_params(1e-8, make_context(kK));
  double lim0 = 0.0;
  for (int n = 0; n <= 20; ++n) {
    for (int j = 0; j <= n; ++j) {
      lim0 = std::max(lim0, std::abs(ebc(n, j, tiny) / binomial(n, j) - 1.0));
    }
  }
  c.check("w_to_0_binomial_rel", lim0, 1e-5);

  const auto small_k = make_ebc_params(kW, make_context(0.001));
  const auto big_k = make_ebc_params(kW, make_context(0.999999));
  double l0 = 0.0, l1 = 0.0;
  for (int n = 0; n <= 12; ++n) {
    for (int j = 0; j <= n; ++j) {
      const double e0 = ebc_k0_limit(n, j, kW);
      const double e1 = ebc_k1_limit(n, j, kW);
      l0 = std::max(l0, std::abs(ebc(n, j, small_k) - e0) / std::max(1.0, std::abs(e0)));
      l1 = std::max(l1, std::abs(ebc(n, j, big_k) - e1) / std::max(1.0, std::abs(e1)));
    }
  }
  c.check("k_to_0_limit", l0, 1e-3);
  c.check("k_to_1_limit", l1, 1e-3);
}

void criterion3(Criterion& c) {
  const auto ctx = make_context(kK);
  const auto ectx = ExtendedEllipticContext::from_modulus(Extended("0.6"));
  const auto p = make_ebc_params(kW, ctx);
  for (Family f : {Family::cn, Family::dn}) {
    const auto a = reflection(f, 21, kW, ctx);
    const auto sz = szego_build_all(a, 20);
    const auto cext = moments_extended(f, 21, Extended(kWText), ectx);
    const auto lev = levinson<Extended>(cext, 20);
    double d_expl = 0.0, d_det = 0.0, d_lev = 0.0;
    for (int n = 0; n <= 20; ++n) {
      d_expl = std::max(d_expl, max_coeff_diff(sz[n], explicit_poly(f, n, p)));
      std::vector<double> coeffs;
      for (const auto& x : lev.phi[n]) coeffs.push_back(static_cast<double>(x));
      d_lev = std::max(d_lev, max_coeff_diff(sz[n], MonicCirclePolynomial(coeffs)));
      if (n >= 1 && n <= 10) {
        d_det = std::max(d_det, max_coeff_diff(sz[n], determinant_poly_extended(cext, n)));
      }
    }
    const std::string tag = family_name(f);
    c.check(tag + "_explicit", d_expl, 1e-9);
    c.check(tag + "_determinant", d_det, 1e-9);
    c.check(tag + "_levinson", d_lev, 1e-9);
  }
}

void criterion4(Criterion& c) {
  const auto ctx = make_context(kK);
  for (Family f : {Family::cn, Family::dn}) {
    const auto a = reflection(f, 21, kW, ctx);
    const auto polys = szego_build_all(a, 20);
    const auto mom = moments(f, 40, kW, ctx);
    double worst = 0.0;
    for (int n = 1; n <= 20; ++n) {
      for (int m = 0; m < n; ++m) {
        worst = std::max(worst, std::abs(functional_orthogonality(polys[n], mom, m)));
      }
    }
    c.check(std::string(family_name(f)) + "_orthogonality", worst, 1e-10);
  }
}

void criterion5(Criterion& c) {
  const auto ctx = make_context(kK);
  for (Family f : {Family::cn, Family::dn}) {
    const std::string tag = family_name(f);
    const auto m = family_measure(f, kW, ctx, 200);
    const auto mom = moments(f, 24, kW, ctx);
    double recon = 0.0;
    for (long n = -24; n <= 24; ++n) {
      recon = std::max(recon, std::abs(moment_from_measure(m, n) - mom(n)));
    }
    c.check(tag + "_moments", recon, 1e-11);

    const auto a = reflection(f, 17, kW, ctx);
    const auto polys = szego_build_all(a, 16);
    const auto g = gram_check(m, polys);
    c.check(tag + "_gram_off", g.max_off_diagonal(), 1e-9);
    const auto lev = levinson_reflections(moments(f, 17, kW, ctx), 16);
    const auto mom_all = moments(f, 40, kW, ctx);
    double diag = 0.0;
    double prod = 1.0;
    for (int n = 0; n <= 16; ++n) {
      if (n > 0) prod *= 1.0 - a.values[n - 1] * a.values[n - 1];
      const double gd = g.g[n][n];
      diag = std::max(diag, std::abs(gd - prod));
      diag = std::max(diag, std::abs(gd - h_closed_form(f, n, kW, ctx)));
      diag = std::max(diag, std::abs(gd - functional_orthogonality(polys[n], mom_all, n)));
      diag = std::max(diag, std::abs(gd - lev.h[n]));
    }
    c.check(tag + "_gram_diag_vs_h", diag, 1e-9);
  }
}

void criterion6(Criterion& c) {
  const auto p = make_ebc_params(kW, make_context(kK));
  const auto r = verify_intertwining(20, p);
  c.check("intertwining",
          std::max({r.cn_to_dn, r.dn_to_cn, r.square_cn, r.square_dn}), 1e-11);
  const auto ctx = make_context(kK);
  double series = 0.0;
  for (int n = 1; n <= 12; ++n) {
    for (Family f : {Family::cn, Family::dn}) {
      const auto poly = explicit_poly(f, n, p);
      const Coeffs coeffs(poly.coeffs().begin(), poly.coeffs().end());
      const auto exact = apply_E(coeffs, p);
      const auto approx = E_via_W_expansion(coeffs, p, 40);
      for (size_t i = 0; i < exact.size(); ++i) {
        series = std::max(series, std::abs(exact[i] - approx.value[i]));
      }
    }
  }
  (void)ctx;
  c.check("operator_series_J40", series, 1e-12);
}

void criterion7(Criterion& c) {
  const double w = 0.4;
  const auto a = hyp_reflections(17, w);
  const auto sz = szego_build_all(a, 16);
  double d = 0.0;
  for (int n = 0; n <= 16; ++n) d = std::max(d, max_coeff_diff(sz[n], hyp_poly(n, w)));
  c.check("2phi1_vs_szego", d, 1e-11);

  const HyperbolicWeight weight(w);
  double quad = 0.0;
  for (int n = 0; n <= 12; ++n) {
    quad = std::max(quad, std::abs(weight.cosine_moment(n) - 1.0 / std::cosh(w * n)));
  }
  c.check("dn_weight_quadrature", quad, 1e-8);

  // Deviation from the k = 1 objects is O((1 - k) e^{2wn}); compared on the
  // same degree range as the quadrature moments.
  auto deviation = [&](double one_minus_k) {
    const auto ctx = EllipticContext::from_complement(
        std::sqrt(one_minus_k * (2.0 - one_minus_k)));
    const auto an = reflection_cn(12, w, ctx);
    const auto ah = hyp_reflections(12, w);
    const auto pn = szego_build_all(an, 12);
    double dev = 0.0;
    for (int n = 0; n < 12; ++n) dev = std::max(dev, std::abs(an.values[n] - ah.values[n]));
    for (int n = 0; n <= 12; ++n) dev = std::max(dev, max_coeff_diff(pn[n], hyp_poly(n, w)));
    for (int n = 0; n <= 12; ++n) {
      dev = std::max(dev, std::abs(ctx.sncndn(w * n).cn - 1.0 / std::cosh(w * n)));
    }
    return dev;
  };
  const double d6 = deviation(1e-6);
  c.check("k_continuity", d6, 1e-4);
  const double rate = deviation(1e-4) / d6;
  c.require("linear_rate_in_1_minus_k", rate > 50.0 && rate < 200.0);
}

void criterion8(Criterion& c) {
  const auto ctx = make_context(kK);
  const auto pc = build_polygon_case(5, ctx);
  const auto& top = pc.polys.at(10);
  double interior = 0.0;
  for (int j = 1; j < 10; ++j) interior = std::max(interior, std::abs(top[j]));
  c.check("phi10_interior", interior, 1e-10);

  double spread = 0.0;
  for (double alpha : {0.0, 0.1, 0.25, 0.5, 0.73}) {
    spread = std::max(spread, ramanujan_F(alpha, ctx.nome_q()).max_spread());
  }
  c.check("ramanujan_routes", spread, 1e-10);

  const auto g = finite_gram_check(pc);
  c.check("residue_vs_split_weights", g.max_weight_diff, 1e-9);
  c.check("finite_gram_off", g.max_off_diagonal, 1e-9);
}

void criterion9(Criterion& c) {
  const auto ctx = make_context(kK);
  double rec = 0.0, split = 0.0, gram = 0.0;
  for (Family f : {Family::cn, Family::dn}) {
    const auto a = reflection(f, 40, kW, ctx);
    const auto phis = szego_build_all(a, 33);
    std::vector<SymmetricIntervalPolynomial> S;
    for (int n = 0; n <= 16; ++n) S.push_back(dgt(phis[n], n ? a.values[n - 1] : -1.0));
    const auto pq = split_polys(phis, a);
    const auto routes = split_PQ_recurrences(a);
    rec = std::max({rec, symmetric_recurrence_residual(S, v_coeffs(a)),
                    split_recurrence_residual(pq.P, routes.direct.P),
                    split_recurrence_residual(pq.Q, routes.direct.Q)});
    for (int n = 0; n <= 8; ++n) {
      for (int i = 0; i <= 40; ++i) {
        const double x = -1.0 + i / 20.0;
        const double y = 2.0 * x * x - 1.0;
        split = std::max(split, std::abs(S[2 * n](x) - std::ldexp(eval_poly(pq.P[n], y), -n)));
        if (2 * n + 1 <= 16) {
          split = std::max(split, std::abs(S[2 * n + 1](x) -
                                           std::ldexp(x * eval_poly(pq.Q[n], y), -n)));
        }
      }
    }
    const auto m = family_measure(f, kW, ctx, truncation_for_tail(1e-15, ctx));
    const auto ig = interval_gram(a, phis, m, 16, 8);
    gram = std::max({gram, ig.s_off, ig.s_diag, ig.p_off, ig.p_diag, ig.q_off, ig.q_diag});
  }
  c.check("recurrences", rec, 1e-11);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> da(-0.999, 0.999);
  double routes = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    ReflectionSequence a;
    for (int n = 0; n < 30; ++n) a.values.push_back(da(rng));
    routes = std::max(routes, split_PQ_recurrences(a).max_disagreement);
  }
  c.check("ub_a_vs_via_v", routes, 1e-12);
  c.check("quadratic_split", split, 1e-10);
  c.check("interval_gram", gram, 1e-9);

  const auto aw = askey_wilson_limit_check(0.45, 10, 17);
  c.check("aw_weight_vs_dn", aw.max_ratio_spread, 1e-8);
  c.check("aw_limit_coefficients", std::max(aw.max_u_error, aw.max_b_error), 1e-10);
}

void criterion10(Criterion& c) {
  const auto ctx = make_context(kK);
  const double golden = std::stod(kGolden);
  const std::vector<std::pair<PeriodicProfile, double>> profiles = {
      {PeriodicProfile::cn(ctx), kW},
      {PeriodicProfile::dn(ctx), kW},
      {magnus_profile(), golden}};
  for (const auto& [profile, w] : profiles) {
    const auto r = scheme_pipeline(profile, w, 12);
    c.require(profile.tag() + "_toeplitz_positive",
              r.failure.empty() && r.delta_positive && r.a_inside);
  }

  const auto rep = magnus_sparsity_check(kGolden, 50);
  double other = 0.0;
  size_t most_terms = 0;
  for (const auto& row : rep.rows) {
    other = std::max(other, row.largest_other);
    most_terms = std::max(most_terms, row.offsets.size());
  }
  c.check("magnus_unpredicted_coeff", other, 1e-8);
  c.require("magnus_at_most_3_terms", most_terms <= 3);
  c.require("magnus_conclusive", rep.inconclusive == 0 && rep.violations == 0);
  c.require("magnus_nonzero_a_predicted", rep.nonzero_a_predicted);

  const auto cf = continued_fraction(kGolden, 40);
  const BigRational w = cf.value;
  int mismatches = 0;
  for (int n = 1; n <= 200; ++n) {
    const auto best = best_approximations(cf, n);
    // Brute force: for each denominator the best numerator over the whole
    // admissible range, then an exact sort by error.
    std::vector<std::pair<BigRational, int>> brute;
    for (int y = 1; y <= n; ++y) {
      BigRational err = -1;
      const BigRational wy = w * y;
      for (int x = 0; x <= static_cast<int>(static_cast<double>(wy)) + 1; ++x) {
        BigRational e = wy - x;
        if (e < 0) e = -e;
        if (err < 0 || e < err) err = e;
      }
      brute.emplace_back(err, y);
    }
    std::sort(brute.begin(), brute.end());
    for (int i = 0; i < n; ++i) {
      if (brute[i].second != best[i].n) ++mismatches;
      if (i > 0 && !(brute[i - 1].first < brute[i].first)) ++mismatches;
    }
    if (BigInt(best[0].n) != cf.largest_denominator_upto(n)) ++mismatches;
  }
  c.check("best_approx_mismatches", mismatches, 0);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_cli(const std::string& exe, const std::string& args) {
  const std::string cmd = "\"" + exe + "\" " + args;
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void criterion11(Criterion& c, const std::string& exe) {
  if (exe.empty()) {
    c.fail("no CLI path given");
    return;
  }
  const auto dir = std::filesystem::temp_directory_path() /
                   ("ellipuc_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::vector<std::string> configs = {
      "table --family cn --nmax 10",
      "table --family dn --nmax 12 --format json",
      "verify --family cn --seed 11",
      "measure --family cn --trunc 50",
      "dgt --family dn --nmax 8",
      "polygon --polygon-N 5",
      "verify --family magnus --nmax 30",
  };
  int differing = 0;
  int nonzero = 0;
  for (size_t i = 0; i < configs.size(); ++i) {
    std::string outs[2];
    for (int rep = 0; rep < 2; ++rep) {
      const auto out = dir / ("run" + std::to_string(i) + "_" + std::to_string(rep));
      if (run_cli(exe, configs[i] + " --out \"" + out.string() + "\"") != 0) ++nonzero;
      outs[rep] = slurp(out);
    }
    if (outs[0].empty() || outs[0] != outs[1]) ++differing;
  }
  c.check("non_identical_outputs", differing, 0);
  c.check("clean_runs_nonzero_exit", nonzero, 0);

  const auto err = dir / "fault.err";
  const int code = run_cli(exe, "verify --family cn --inject-fault a1 --out \"" +
                                    (dir / "fault.json").string() + "\" 2> \"" +
                                    err.string() + "\"");
  c.require("fault_injection_nonzero_exit", code != 0);
  c.require("fault_names_three_term_check",
            slurp(err).find("three_term_check") != std::string::npos);
  std::filesystem::remove_all(dir);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string exe = argc > 1 ? argv[1] : "";
  const std::vector<std::function<void(Criterion&)>> criteria = {
      criterion1, criterion2, criterion3, criterion4,  criterion5, criterion6,
      criterion7, criterion8, criterion9, criterion10,
      [&](Criterion& c) { criterion11(c, exe); }};
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i](c);
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!c.ok()) ++failed;
    std::printf("criterion %2zu: %s (%.2fs) %s\n", i + 1, c.ok() ? "PASS" : "FAIL",
                secs, c.detail().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
