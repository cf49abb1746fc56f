#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "ggf/ggf.hpp"
#include "ggf/hypergeom.hpp"
#include "ggf/quadrature.hpp"

using namespace ggf;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

double rel_err(double got, double want) {
  return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}
}  // namespace

TEST_CASE("tanh-sinh: inverse square-root endpoint singularity") {
  // distance-aware form reaches full precision at the singular end
  EndpointIntegrand f = [](double, double, double db) { return 1.0 / std::sqrt(db); };
  QuadResult q = integrate_endpoint_singular(f, 0.0, 1.0, -0.5);
  CHECK(q.converged);
  CHECK(rel_err(q.value, 2.0) < 1e-12);

  // the plain-abscissa form floors out near 1e-8 but must say so honestly
  Integrand fp = [](double u) { return 1.0 / std::sqrt(1.0 - u); };
  q = integrate_endpoint_singular(fp, 0.0, 1.0, -0.5);
  CHECK(std::fabs(q.value - 2.0) <= 10.0 * q.error_estimate);
}

TEST_CASE("tanh-sinh: two-sided algebraic singularities give a Beta value") {
  EndpointIntegrand f = [](double, double da, double db) {
    return std::pow(da, 0.3) * std::pow(db, -0.4);
  };
  QuadResult q = integrate_endpoint_singular(f, 0.0, 1.0, -0.4);
  CHECK(q.converged);
  CHECK(rel_err(q.value, fixtures::kBeta13_06) < 1e-11);
}

TEST_CASE("tanh-sinh: degenerate interval rejected") {
  Integrand f = [](double) { return 1.0; };
  CHECK_THROWS_AS(integrate_endpoint_singular(f, 0.5, 0.5, -0.5), std::domain_error);
  CHECK_THROWS_AS(integrate_endpoint_singular(f, 0.0, 1.0, -1.0), std::domain_error);
}

TEST_CASE("semi-infinite: Gamma-integral calibration") {
  // t^2 e^{-3t} integrates to Gamma(3)/27 = 2/27
  auto f1 = [](double t) { return t * t * std::exp(-3.0 * t); };
  QuadResult q = integrate_semiinfinite_expdecay(f1, 3.0, 2.0);
  CHECK(q.converged);
  CHECK(rel_err(q.value, 2.0 / 27.0) < 1e-11);

  auto f2 = [](double t) { return std::pow(t, 0.7) * std::exp(-21.0 * t); };
  q = integrate_semiinfinite_expdecay(f2, 21.0, 0.7);
  CHECK(q.converged);
  CHECK(rel_err(q.value, fixtures::kGamma17_rate21) < 1e-10);

  auto zero = [](double) { return 0.0; };
  q = integrate_semiinfinite_expdecay(zero, 1.0, 0.0);
  CHECK(q.converged);
  CHECK(q.value == 0.0);
}

TEST_CASE("semi-infinite: full calibration grid at 1e-10 relative") {
  for (double z : {0.3, 1.0, 2.6}) {
    for (double a : {1.0, 5.0, 21.0}) {
      auto f = [&](double t) { return std::pow(t, z) * std::exp(-a * t); };
      QuadResult q = integrate_semiinfinite_expdecay(f, a, z);
      double want = std::exp(ln_gamma(z + 1.0) - (z + 1.0) * std::log(a));
      CHECK(q.converged);
      CHECK(rel_err(q.value, want) < 1e-10);
      // error estimates must be honest within a factor 10
      CHECK(std::fabs(q.value - want) <= 10.0 * q.error_estimate);
    }
  }
}

TEST_CASE("fractional integral of (1-y)^eta has the closed form") {
  // eta = 0, s = 1/2, x = 0: Gamma(1)/Gamma(3/2) * (1-x)^{1/2}
  auto one = [](double) { return 1.0; };
  QuadResult q = rl_fractional_integral_right(one, 0.5, 0.0);
  CHECK(q.converged);
  CHECK(rel_err(q.value, 1.0 / std::exp(ln_gamma(1.5))) < 1e-10);

  // generic eta
  double eta = 0.7, s = 0.4, x = -0.2;
  auto u = [&](double y) { return std::pow(1.0 - y, eta); };
  q = rl_fractional_integral_right(u, s, x);
  double want = std::exp(ln_gamma(eta + 1.0) - ln_gamma(eta + s + 1.0)) *
                std::pow(1.0 - x, eta + s);
  CHECK(q.converged);
  CHECK(rel_err(q.value, want) < 1e-10);

  // s = 1 reduces to the plain integral
  auto smooth = [](double y) { return std::cos(y); };
  q = rl_fractional_integral_right(smooth, 1.0, 0.25);
  CHECK(rel_err(q.value, std::sin(1.0) - std::sin(0.25)) < 1e-11);

  CHECK_THROWS_AS(rl_fractional_integral_right(one, 0.0, 0.3), std::domain_error);
}

TEST_CASE("fractional-integral transform at the worked example") {
  double lam = 0.4, nu = 2.7, s = 0.5, x = 0.3;
  auto u = [&](double y) {
    return std::pow(1.0 - y * y, lam - 0.5) *
           eval({lam, nu, Side::Right}, AnglePoint::from_x(y));
  };
  QuadResult q = rl_fractional_integral_right(u, s, x);
  CHECK(q.converged);
  CHECK(rel_err(q.value, fixtures::kFci_lhs_l04_n27_s05_x03) < 1e-8);
  CHECK(rel_err(fixtures::kFci_lhs_l04_n27_s05_x03, fixtures::kFci_rhs_l04_n27_s05_x03) <
        1e-15);
}

TEST_CASE("weighted integral representation: lambda = 1 has no singularity") {
  double nu = 3.7, phi = 0.9;
  QuadResult q = mehler_integral(1.0, nu, phi);
  CHECK(q.converged);
  double want = std::sin(phi) * eval({1.0, nu, Side::Right}, AnglePoint(phi));
  CHECK(rel_err(q.value, want) < 1e-10);
}

TEST_CASE("weighted integral representation: Legendre case reproduces the Dirichlet-Mehler formula") {
  // lambda = 1/2 at integer degree: P_n(cos t) = (sqrt(2)/pi) int_0^t ...
  for (int n : {2, 7}) {
    for (double phi : {0.7, 2.1}) {
      QuadResult q = mehler_integral(0.5, static_cast<double>(n), phi);
      CHECK(q.converged);
      double want = gegenbauer_integer(n, 0.5, std::cos(phi));
      CHECK(rel_err(q.value, want) < 1e-8);
    }
  }
}

TEST_CASE("weighted integral representation agrees with the series across the grid") {
  for (double lam : {0.6, 1.5, 3.0}) {
    for (double nu : {3.7, 12.4}) {
      for (double phi : {0.3, kPi / 2.0, 2.8}) {
        QuadResult q = mehler_integral(lam, nu, phi);
        CHECK(q.converged);
        double want = std::pow(std::sin(phi), 2.0 * lam - 1.0) *
                      eval({lam, nu, Side::Right}, AnglePoint(phi));
        CHECK(rel_err(q.value, want) < 1e-6);
      }
    }
  }
}

TEST_CASE("weighted integral representation rejects bad parameters") {
  CHECK_THROWS_AS(mehler_integral(0.0, 2.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(mehler_integral(-0.2, 2.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(mehler_integral(1.0, 2.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(mehler_integral(1.0, 2.0, kPi), std::domain_error);
}
