#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <random>
#include <stdexcept>

#include <CLI11.hpp>

#include "ellipuc/circle_polys.hpp"
#include "ellipuc/continued_fraction.hpp"
#include "ellipuc/ebc.hpp"
#include "ellipuc/elliptic_derivative.hpp"
#include "ellipuc/elliptic_kernel.hpp"
#include "ellipuc/errors.hpp"
#include "ellipuc/general_scheme.hpp"
#include "ellipuc/hyperbolic_limit.hpp"
#include "ellipuc/interval_polys.hpp"
#include "ellipuc/measures.hpp"
#include "ellipuc/polygon_finite.hpp"
#include "ellipuc/table_io.hpp"

namespace ellipuc::cli {

namespace {

constexpr const char* kGolden =
    "0.6180339887498948482045868343656381177203091798057628621354486227052605";

bool is_elliptic(const RunConfig& cfg) {
  return cfg.family == "cn" || cfg.family == "dn";
}

Family family_of(const RunConfig& cfg) {
  return cfg.family == "dn" ? Family::dn : Family::cn;
}

std::string fmt(double x) { return format_double(x); }

void emit(const RunConfig& cfg, const Table& t, const std::string& kind) {
  write_text(cfg.out, cfg.format == "json" ? to_json(t, kind) : to_csv(t));
}

PeriodicProfile scheme_profile(const RunConfig& cfg) {
  if (cfg.family == "magnus") return magnus_profile();
  return PeriodicProfile::from_json_file(cfg.profile_path);
}

// Reflection parameters a_0..a_{N-1} and moments c_0..c_{n_c} of any family.
struct FamilyData {
  ReflectionSequence a;
  MomentSequence c;
};

FamilyData family_data(const RunConfig& cfg, int N, int n_c) {
  FamilyData d;
  if (is_elliptic(cfg)) {
    const auto ctx = make_context(cfg.k);
    d.a = reflection(family_of(cfg), N, cfg.w, ctx);
    d.c = moments(family_of(cfg), n_c, cfg.w, ctx);
  } else if (cfg.family == "hyperbolic") {
    d.a = hyp_reflections(N, cfg.w);
    d.c = hyp_moments(n_c, cfg.w);
  } else {
    const auto profile = scheme_profile(cfg);
    d.c = scheme_moments(profile, cfg.w, std::max(N, n_c)).c;
    d.a = levinson_reflections(d.c, N).a;
    d.c.values.resize(static_cast<size_t>(n_c) + 1);
  }
  return d;
}

std::vector<double> h_from_a(const ReflectionSequence& a, double c0) {
  std::vector<double> h{c0};
  for (double x : a.values) h.push_back(h.back() * (1.0 - x * x));
  return h;
}

void config_fields(const RunConfig& cfg, Report& r) {
  r.config = {{"family", cfg.family},
              {"k", is_elliptic(cfg) ? fmt(cfg.k) : std::string("n/a")},
              {"w", cfg.w_text},
              {"nmax", std::to_string(cfg.nmax)},
              {"tol", fmt(cfg.tol)},
              {"seed", std::to_string(cfg.seed)},
              {"precision", cfg.extended ? "extended" : "double"}};
  if (!cfg.inject_fault.empty()) r.config.emplace_back("fault", cfg.inject_fault);
}

double levinson_residual(const RunConfig& cfg, const ReflectionSequence& a,
                         int n) {
  double worst = 0.0;
  if (cfg.extended && is_elliptic(cfg)) {
    const auto ectx = ExtendedEllipticContext::from_modulus(Extended(cfg.k));
    const auto c = moments_extended(family_of(cfg), n, Extended(cfg.w_text), ectx);
    const auto lev = levinson<Extended>(c, n);
    for (int i = 0; i < n; ++i) {
      worst = std::max(worst, std::abs(static_cast<double>(lev.a[i]) - a.values[i]));
    }
  } else {
    const auto c = is_elliptic(cfg)
                       ? moments(family_of(cfg), n, cfg.w, make_context(cfg.k))
                       : hyp_moments(n, cfg.w);
    const auto lev = levinson_reflections(c, n);
    for (int i = 0; i < n; ++i) {
      worst = std::max(worst, std::abs(lev.a.values[i] - a.values[i]));
    }
  }
  return worst;
}

void verify_circle_common(const RunConfig& cfg, Report& r) {
  const int n = cfg.nmax;
  auto data = family_data(cfg, n + 1, 2 * n + 2);
  const auto polys = szego_build_all(data.a, n);
  auto a_checked = data.a;
  if (cfg.inject_fault == "a1" && a_checked.values.size() > 1) {
    a_checked.values[1] += 1e-3;
  }
  r.add("three_term_check", three_term_check(a_checked, polys).max_residual,
        cfg.tol);
  if (is_elliptic(cfg) || cfg.family == "hyperbolic") {
    r.add("levinson_vs_closed_form", levinson_residual(cfg, data.a, n), cfg.tol);
  }

  double orth = 0.0;
  const auto h = h_from_a(data.a, 1.0);
  for (int d = 1; d <= n; ++d) {
    for (int m = 0; m < d; ++m) {
      orth = std::max(orth, std::abs(functional_orthogonality(polys[d], data.c, m)));
    }
    orth = std::max(orth, std::abs(functional_orthogonality(polys[d], data.c, d) - h[d]));
  }
  r.add("functional_orthogonality", orth, cfg.tol);
}

void verify_elliptic(const RunConfig& cfg, Report& r) {
  const auto ctx = make_context(cfg.k);
  const Family f = family_of(cfg);
  const int n = cfg.nmax;

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> du(-20.0, 20.0);
  std::uniform_real_distribution<double> dk(0.02, 0.98);
  double pyth = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto c = make_context(dk(rng));
    const auto t = c.sncndn(du(rng));
    pyth = std::max(pyth, std::abs(t.sn * t.sn + t.cn * t.cn - 1.0));
    pyth = std::max(pyth, std::abs(t.dn * t.dn + c.k() * c.k() * t.sn * t.sn - 1.0));
  }
  r.add("pythagorean_identities", pyth, cfg.tol);

  const auto params = make_ebc_params(cfg.w, ctx);
  double rec = 0.0;
  for (const auto& res : verify_ebc_recurrences(40, params)) {
    rec = std::max(rec, res.max_residual);
  }
  r.add("ebc_recurrences", rec, cfg.tol);

  verify_circle_common(cfg, r);

  const auto a = reflection(f, 2 * n + 2, cfg.w, ctx);
  const auto polys = szego_build_all(a, 2 * n + 1);
  double expl = 0.0;
  for (int d = 0; d <= n; ++d) {
    expl = std::max(expl, max_coeff_diff(polys[d], explicit_poly(f, d, params)));
  }
  r.add("szego_vs_explicit", expl, cfg.tol);

  const int S = cfg.trunc > 0 ? cfg.trunc : truncation_for_tail(cfg.tail, ctx);
  const auto m = family_measure(f, cfg.w, ctx, S);
  const auto c = moments(f, 24, cfg.w, ctx);
  double recon = 0.0;
  for (long i = -24; i <= 24; ++i) {
    recon = std::max(recon, std::abs(moment_from_measure(m, i) - c(i)));
  }
  r.add("moment_reconstruction", recon, cfg.tol);

  const int n_gram = std::min(n, 16);
  const std::vector<MonicCirclePolynomial> head(polys.begin(),
                                                polys.begin() + n_gram + 1);
  const auto g = gram_check(m, head);
  r.add("gram_off_diagonal", g.max_off_diagonal(), cfg.tol);
  double diag = 0.0;
  const auto h = h_from_a(a, 1.0);
  for (int d = 0; d <= n_gram; ++d) {
    diag = std::max(diag, std::abs(g.g[d][d] - h[d]));
    diag = std::max(diag, std::abs(h_closed_form(f, d, cfg.w, ctx) - h[d]));
  }
  r.add("gram_diagonal_vs_h", diag, cfg.tol);

  const auto inter = verify_intertwining(std::min(n, 20), params);
  r.add("intertwining",
        std::max({inter.cn_to_dn, inter.dn_to_cn, inter.square_cn, inter.square_dn}),
        cfg.tol);

  const int n_s = std::min(n, 16);
  std::vector<SymmetricIntervalPolynomial> s;
  for (int d = 0; d <= n_s; ++d) s.push_back(dgt(polys[d], d ? a.values[d - 1] : -1.0));
  r.add("dgt_recurrence", symmetric_recurrence_residual(s, v_coeffs(a)), cfg.tol);
  r.add("split_routes", split_PQ_recurrences(a).max_disagreement, cfg.tol);
  const auto ig = interval_gram(a, polys, m, n_s, std::min(n / 2, 8));
  r.add("interval_gram",
        std::max({ig.s_off, ig.s_diag, ig.p_off, ig.p_diag, ig.q_off, ig.q_diag}),
        cfg.tol);
}

void verify_hyperbolic(const RunConfig& cfg, Report& r) {
  verify_circle_common(cfg, r);
  const int n = std::min(cfg.nmax, 16);
  const auto a = hyp_reflections(n + 1, cfg.w);
  const auto polys = szego_build_all(a, n);
  double diff = 0.0;
  for (int d = 0; d <= n; ++d) diff = std::max(diff, max_coeff_diff(polys[d], hyp_poly(d, cfg.w)));
  r.add("hyp_2phi1_vs_szego", diff, cfg.tol);
  const HyperbolicWeight weight(cfg.w);
  double quad = 0.0;
  for (int d = 0; d <= std::min(cfg.nmax, 12); ++d) {
    quad = std::max(quad, std::abs(weight.cosine_moment(d) - 1.0 / std::cosh(cfg.w * d)));
  }
  r.add("hyp_weight_quadrature", quad, cfg.tol);
}

void verify_scheme(const RunConfig& cfg, Report& r) {
  const auto profile = scheme_profile(cfg);
  const int n12 = std::min(cfg.nmax, 12);
  const auto pipe = scheme_pipeline(profile, cfg.w, n12);
  r.add("scheme_positivity",
        (pipe.delta_positive && pipe.a_inside) ? 0.0 : 1.0, 0.0,
        pipe.failure.empty() ? std::string() : pipe.failure);
  if (!pipe.failure.empty()) return;
  verify_circle_common(cfg, r);

  const long S = cfg.trunc > 0 ? cfg.trunc : 2000;
  const auto m = scheme_measure(profile, cfg.w, S);
  const auto c = scheme_moments(profile, cfg.w, 20).c;
  double recon = 0.0;
  for (long i = -20; i <= 20; ++i) {
    recon = std::max(recon, std::abs(moment_from_measure(m, i) - c(i)));
  }
  r.add("measure_reconstruction", recon, m.tail_bound + cfg.tol,
        "tolerance includes the Fourier tail bound");

  if (cfg.family == "magnus") {
    const auto rep = magnus_sparsity_check(cfg.w_text, std::min(cfg.nmax, 50));
    double worst = 0.0;
    double count = 0.0;
    for (const auto& row : rep.rows) {
      worst = std::max(worst, row.largest_other);
      if (row.offsets.size() > 3) count += 1.0;
    }
    r.add("magnus_sparsity", worst, 1e-9,
          "largest coefficient outside offsets {0, n_1, n_2}");
    r.add("magnus_term_count", count, 0.0, "degrees with more than 3 terms");
    r.add("magnus_nonzero_a_predicted", rep.nonzero_a_predicted ? 0.0 : 1.0, 0.0);
  }
}

}  // namespace

void validate(RunConfig& cfg) {
  static const std::vector<std::string> families = {"cn", "dn", "hyperbolic",
                                                    "magnus", "custom"};
  if (std::find(families.begin(), families.end(), cfg.family) == families.end()) {
    throw std::invalid_argument("--family: unknown family '" + cfg.family + "'");
  }
  if (is_elliptic(cfg) && !(cfg.k > 0.0 && cfg.k < 1.0)) {
    throw std::invalid_argument("--k: modulus must lie in (0, 1)");
  }
  if (cfg.family == "custom" && cfg.profile_path.empty()) {
    throw std::invalid_argument("--profile: required for family 'custom'");
  }
  if (cfg.w_text.empty()) cfg.w_text = cfg.family == "magnus" ? kGolden : "0.31";
  try {
    const auto v = parse_decimal(cfg.w_text);
    if (!(v > 0)) throw std::invalid_argument("--w: must be positive");
  } catch (const DomainError& e) {
    throw std::invalid_argument(std::string("--w: ") + e.what());
  }
  cfg.w = std::strtod(cfg.w_text.c_str(), nullptr);
  if (cfg.w_text.find('/') != std::string::npos) {
    cfg.w = static_cast<double>(parse_decimal(cfg.w_text));
  }
  if (cfg.nmax < 1 || cfg.nmax > 200) {
    throw std::invalid_argument("--nmax: must lie in [1, 200]");
  }
  if (cfg.trunc < 0) throw std::invalid_argument("--trunc: must be >= 1");
  if (!(cfg.tail > 0.0)) throw std::invalid_argument("--tail: must be positive");
  if (!(cfg.tol > 0.0)) throw std::invalid_argument("--tol: must be positive");
  if (!cfg.format.empty() && cfg.format != "csv" && cfg.format != "json") {
    throw std::invalid_argument("--format: expected csv or json");
  }
  if (cfg.polygon_N < 1 || cfg.polygon_N > 64) {
    throw std::invalid_argument("--polygon-N: must lie in [1, 64]");
  }
  if (!cfg.inject_fault.empty() && cfg.inject_fault != "a1") {
    throw std::invalid_argument("--inject-fault: only 'a1' is supported");
  }
  if (const char* p = std::getenv("ELLIPUC_PRECISION")) {
    const std::string mode = p;
    if (mode != "double" && mode != "extended") {
      throw std::invalid_argument("ELLIPUC_PRECISION: expected double or extended");
    }
    cfg.extended = mode == "extended";
  }
}

int cmd_table(const RunConfig& cfg) {
  const int n = cfg.nmax;
  const auto d = family_data(cfg, n + 1, n);
  const auto h = h_from_a(d.a, d.c(0));
  Table t;
  t.columns = {"n", "a_n", "c_n", "h_n", "Delta_n"};
  double delta = 1.0;
  for (int i = 0; i <= n; ++i) {
    t.add_row({static_cast<long long>(i), d.a.values[i], d.c(i), h[i], delta});
    delta *= h[i];
  }
  emit(cfg, t, "table");
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  Report r;
  r.command = "verify";
  config_fields(cfg, r);
  if (is_elliptic(cfg)) {
    verify_elliptic(cfg, r);
  } else if (cfg.family == "hyperbolic") {
    verify_hyperbolic(cfg, r);
  } else {
    verify_scheme(cfg, r);
  }
  write_text(cfg.out, cfg.format == "csv" ? to_csv(r) : to_json(r));
  if (!r.passed()) {
    std::cerr << "verify failed:";
    for (const auto& name : r.failed_names()) std::cerr << ' ' << name;
    std::cerr << '\n';
    return kCheckFailed;
  }
  return kOk;
}

int cmd_measure(const RunConfig& cfg) {
  DiscretePointMeasure m;
  if (is_elliptic(cfg)) {
    const auto ctx = make_context(cfg.k);
    const int S = cfg.trunc > 0 ? cfg.trunc : truncation_for_tail(cfg.tail, ctx);
    m = family_measure(family_of(cfg), cfg.w, ctx, S);
  } else if (cfg.family == "hyperbolic") {
    throw std::invalid_argument(
        "--family: the hyperbolic weight is continuous; no point measure to export");
  } else {
    m = scheme_measure(scheme_profile(cfg), cfg.w, cfg.trunc > 0 ? cfg.trunc : 2000);
  }
  Table t;
  t.columns = {"s", "angle", "weight"};
  for (size_t i = 0; i < m.size(); ++i) {
    t.add_row({static_cast<long long>(m.index[i]), m.angles[i], m.weights[i]});
  }
  emit(cfg, t, "measure");
  return kOk;
}

int cmd_dgt(const RunConfig& cfg) {
  const int n = cfg.nmax;
  const auto d = family_data(cfg, 2 * n + 2, 0);
  const auto v = v_coeffs(d.a);
  const auto kappa = kappa_from_v(v);
  const auto rec = split_PQ_direct(d.a);
  Table t;
  t.columns = {"n", "v_n", "u_n", "b_n", "kappa_n", "H_n"};
  double H = 1.0;
  for (int i = 0; i <= n; ++i) {
    Cell u;
    if (i >= 1) {
      u = rec.P.u[i];
      H *= rec.P.u[i];
    }
    t.add_row({static_cast<long long>(i), v.v[i], u, rec.P.b[i], kappa[i], H});
  }
  emit(cfg, t, "dgt");
  return kOk;
}

int cmd_polygon(const RunConfig& cfg) {
  const auto pc = build_polygon_case(cfg.polygon_N, make_context(cfg.k));
  Table t;
  t.columns = {"j", "angle", "weight"};
  for (size_t i = 0; i < pc.j.size(); ++i) {
    t.add_row({static_cast<long long>(pc.j[i]), pc.angles[i], pc.weights[i]});
  }
  emit(cfg, t, "polygon");
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Elliptic polynomials on the unit circle: tables, checks, exports"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "cn | dn | hyperbolic | magnus | custom");
    sub->add_option("--k", cfg.k, "elliptic modulus in (0, 1)");
    sub->add_option("--w", cfg.w_text, "step parameter as a decimal string or p/q");
    sub->add_option("--nmax", cfg.nmax, "largest degree");
    auto* tr = sub->add_option("--trunc", cfg.trunc, "measure truncation S");
    sub->add_option("--tail", cfg.tail, "target measure tail (used when --trunc is absent)")
        ->excludes(tr);
    sub->add_option("--tol", cfg.tol, "residual tolerance");
    sub->add_option("--out", cfg.out, "output path, - for stdout");
    sub->add_option("--format", cfg.format, "csv | json");
    sub->add_option("--seed", cfg.seed, "seed for randomized suites");
    sub->add_option("--polygon-N", cfg.polygon_N, "polygon order N");
    sub->add_option("--profile", cfg.profile_path, "profile JSON for family custom");
    sub->add_option("--inject-fault", cfg.inject_fault)->group("");
  };

  struct Entry {
    const char* name;
    const char* help;
    int (*fn)(const RunConfig&);
  };
  const Entry entries[] = {
      {"table", "n, a_n, c_n, h_n, Delta_n", cmd_table},
      {"verify", "run the identity suites; nonzero exit on any failure", cmd_verify},
      {"measure", "export the point measure (s, angle, weight)", cmd_measure},
      {"dgt", "interval recurrence data (n, v_n, u_n, b_n, kappa_n, H_n)", cmd_dgt},
      {"polygon", "finite polygon measure (j, angle, weight)", cmd_polygon},
  };
  int (*chosen)(const RunConfig&) = nullptr;
  for (const auto& e : entries) {
    auto* sub = app.add_subcommand(e.name, e.help);
    add_common(sub);
    sub->callback([&chosen, fn = e.fn] { chosen = fn; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadConfig;
  }
  try {
    validate(cfg);
    return chosen(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace ellipuc::cli
