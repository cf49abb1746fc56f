#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "fixtures.hpp"
#include "ggf/ggf.hpp"
#include "ggf/hypergeom.hpp"
#include "ggf/verify.hpp"

using namespace ggf;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

double rel_err(double got, double want) {
  return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}

// small grids/supplements so the unit suite stays quick; the acceptance
// binary runs the full-size versions
CheckOptions quick_options() {
  CheckOptions opts;
  opts.random_points = 40;
  return opts;
}
}  // namespace

TEST_CASE("oracle: closed forms and fixture strings") {
  // lambda = 0 closed form: cos(2.5 pi / 3) = -sqrt(3)/2
  std::string s = oracle_eval({0.0, 2.5, Side::Right}, AnglePoint(kPi / 3.0), 30);
  double parsed = std::strtod(s.c_str(), nullptr);
  CHECK(rel_err(parsed, -std::sqrt(3.0) / 2.0) < 1e-15);

  // nu = 0 is identically 1
  s = oracle_eval({1.7, 0.0, Side::Right}, AnglePoint(1.0), 30);
  CHECK(rel_err(std::strtod(s.c_str(), nullptr), 1.0) < 1e-15);

  // committed 50-digit strings: compare significand digits (the oracle may
  // print scientific notation)
  s = oracle_eval({0.7, 20.3, Side::Right}, AnglePoint(1.0), 50);
  auto digits_of = [](const std::string& str) {
    std::string d;
    for (char c : str) {
      if (c >= '0' && c <= '9') d += c;
      if (c == 'e' || c == 'E') break;
    }
    while (!d.empty() && d.front() == '0') d.erase(d.begin());
    return d;
  };
  CHECK(digits_of(s).substr(0, 40) ==
        digits_of(fixtures::kOracleStr_l07_n203_t10).substr(0, 40));

  CHECK_THROWS_AS(oracle_eval({0.7, 20.3, Side::Right}, AnglePoint(1.0), 20),
                  std::domain_error);
}

TEST_CASE("oracle handles the left-side reflection and its chain rule") {
  AnglePoint pt(1.1);
  for (double nu : {1.7, 2.3}) {
    GgfParams p{0.8, nu, Side::Left};
    CHECK(rel_err(oracle_eval_double(p, pt), eval(p, pt)) < 1e-13);
    CHECK(rel_err(oracle_derivative(p, pt, 1), derivative(p, pt, 1)) < 1e-12);
  }
}

TEST_CASE("oracle derivative is an independent route") {
  double got = oracle_derivative({1.2, 5.5, Side::Right}, AnglePoint(1.1), 2);
  CHECK(rel_err(got, fixtures::kD2G_l12_n55_t11) < 1e-13);
  got = oracle_derivative({0.8, 7.3, Side::Right}, AnglePoint(0.9), 1);
  CHECK(rel_err(got, fixtures::kD1G_l08_n73_t09) < 1e-13);
}

TEST_CASE("oracle agreement: eval within 1e-12 relative at 50 sampled points") {
  std::mt19937_64 rng(424242);
  int checked = 0;
  while (checked < 50) {
    double lam = -0.3 + 3.4 * ((rng() >> 11) * 0x1p-53);
    double fr = lam - std::floor(lam);
    if (std::fabs(fr - 0.5) < 1e-3) continue;
    double nu = 21.0 * ((rng() >> 11) * 0x1p-53);
    double th = 0.05 + 2.45 * ((rng() >> 11) * 0x1p-53);
    GgfParams p{lam, nu, Side::Right};
    double want = oracle_eval_double(p, AnglePoint(th));
    double got = eval(p, AnglePoint(th));
    CHECK(std::fabs(got - want) <= 1e-12 * std::max(std::fabs(want), 1e-3));
    ++checked;
  }
}

TEST_CASE("envelope constants match the high-precision references") {
  CHECK(rel_err(envelope_rho(0.3, 20.3), fixtures::kRhoEnv_l03_n203) < 1e-13);
  CHECK(rel_err(envelope_kappa(2.5, 20.3), fixtures::kKappaEnv_l25_n203) < 1e-13);
  CHECK_THROWS_AS(envelope_rho(1.2, 3.0), std::domain_error);
  CHECK_THROWS_AS(envelope_kappa(0.7, 3.0), std::domain_error);
}

TEST_CASE("envelope structure: even integer degree collapses the sine part") {
  // sin(pi nu / 2) = 0 at even integers, so only the first term remains
  double lam = 0.3;
  double rho = envelope_rho(lam, 4.0);
  double first = std::exp(ln_gamma(lam + 0.5)) / std::sqrt(kPi) *
                 std::exp(ln_gamma(2.5) - ln_gamma(2.5 + lam));
  CHECK(rel_err(rho, first) < 1e-13);
}

TEST_CASE("sweep grid theta expansion") {
  SweepGrid g;
  g.theta_count = 11;
  auto th = g.theta_values();
  CHECK(th.size() == 13);
  CHECK(th.front() == 1e-4);
  CHECK(th.back() == kPi - 1e-4);
  CHECK(th[6] == doctest::Approx(kPi * 6.0 / 12.0));
}

TEST_CASE("bound checks pass on the four-panel parameter set") {
  SweepGrid g;
  g.lambdas = {0.7, 1.6, 2.3, 3.1};
  g.nus = {20.3};
  g.theta_count = 101;
  CheckOptions opts = quick_options();
  SweepReport rep = check_residual_bound(g, opts);
  CHECK(rep.passed);
  CHECK(rep.worst_margin > 0.0);
  CHECK(rep.points_tested > 4 * 101);
  rep = check_theta_free_bound(g, 1.0, opts);
  CHECK(rep.passed);
  CHECK(rep.worst_margin > 0.0);
  rep = check_weighted(g, opts);
  CHECK(rep.passed);
  CHECK(rep.worst_margin >= 0.0);
}

TEST_CASE("kernel checks pass with strictly positive margins") {
  SweepGrid g;
  g.lambdas = {0.5, 1.0, 2.0, 3.1};
  for (int k = 0; k < 15; ++k) g.thetas.push_back(0.2 + k * (kPi - 0.4) / 14.0);
  g.ts = {0.01, 0.1, 0.5, 1.0, 2.0, 5.0};
  CheckOptions opts = quick_options();
  SweepReport rep = check_kernel_bound(g, opts);
  CHECK(rep.passed);
  // lambda = 1 rows have |f| = bound = 0 (equality); everywhere else strict
  CHECK(rep.worst_margin >= 0.0);
  for (const SweepRow& row : rep.rows)
    if (row.lambda != 1.0) CHECK(row.margin > 0.0);
  rep = check_hyperbolic_bounds(g, opts);
  CHECK(rep.passed);
  CHECK(rep.worst_margin > 0.0);
}

TEST_CASE("identity suite passes and reports normalized margins") {
  CheckOptions opts = quick_options();
  opts.random_points = 0;  // fixed grids only here
  SweepReport rep = check_identities(SweepGrid{}, opts);
  CHECK(rep.passed);
  CHECK(rep.worst_margin > 0.0);
  CHECK(rep.worst_margin <= 1.0);  // normalized (tol - err)/tol
}

TEST_CASE("identity suite honors a forced tolerance override") {
  CheckOptions opts = quick_options();
  opts.random_points = 0;
  opts.tolerance_scale = 1e-30;
  opts.tolerance_overridden = true;
  SweepGrid g;
  g.lambdas = {0.7};
  g.nus = {2.5};
  SweepReport rep = check_identities(g, opts);
  CHECK_FALSE(rep.passed);
  CHECK(rep.worst_margin < 0.0);
}

TEST_CASE("max-norm envelopes hold") {
  SweepGrid g;
  g.lambdas = {0.3, 0.7, 1.0, 2.5};
  g.nus = {0.5, 3.7, 20.3};
  g.theta_count = 301;
  CheckOptions opts = quick_options();
  SweepReport rep = check_max_norm_envelopes(g, opts);
  CHECK(rep.passed);
  // at lambda = 1 the envelope equals the sup exactly, so the worst margin
  // can graze zero from either side within rounding
  CHECK(rep.worst_margin > -1e-12);
}

TEST_CASE("reports serialize deterministically") {
  SweepGrid g;
  g.lambdas = {0.7, 2.3};
  g.nus = {20.3};
  g.theta_count = 25;
  CheckOptions opts = quick_options();
  SweepReport a = check_residual_bound(g, opts);
  SweepReport b = check_residual_bound(g, opts);
  CHECK(report_to_csv(a) == report_to_csv(b));
  CHECK(report_to_json(a) == report_to_json(b));
  std::string csv = report_to_csv(a);
  CHECK(csv.rfind("lambda,nu,theta,lhs,rhs,margin\n", 0) == 0);
  CHECK(csv.find("\r") == std::string::npos);
  CHECK(csv.find(',') != std::string::npos);
  // a different seed moves the random supplement
  opts.seed = 77;
  SweepReport c = check_residual_bound(g, opts);
  CHECK(report_to_csv(a) != report_to_csv(c));
  CHECK(c.rng_seed == 77);
}

TEST_CASE("format_double is locale-independent with 17 significant digits") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-2.5e-300) == "-2.5e-300");
}
