#include "ggf/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ggf/ggf.hpp"
#include "ggf/hypergeom.hpp"

namespace ggf {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrtPi = 1.772453850905516027298167483341145183;

bool case_one(double lambda) { return lambda > 0.0 && lambda <= 2.0; }

void require_case_preconditions(double lambda, double nu) {
  if (!(lambda > 0.0)) throw std::domain_error("bound: requires lambda > 0");
  if (!(nu > 0.0)) throw std::domain_error("bound: requires nu > 0");
  if (case_one(lambda)) {
    if (!(nu + lambda > 1.0))
      throw std::domain_error("bound (case 0 < lambda <= 2): requires nu + lambda > 1");
  } else {
    if (!(nu > lambda - 3.0))
      throw std::domain_error("bound (case lambda > 2): requires nu > lambda - 3");
  }
}

double cot_abs(double theta) { return std::fabs(std::cos(theta) / std::sin(theta)); }

// limit of the weighted bound (sin)^{w-lambda} S as theta -> 0 or pi
double weighted_bound_limit(double lambda, double nu) {
  if (case_one(lambda)) {
    return lambda * std::fabs(lambda - 1.0) * std::pow(2.0, lambda) *
           std::exp(ln_gamma(lambda + 0.5)) /
           (kSqrtPi * std::pow(nu + lambda - 1.0, lambda + 1.0));
  }
  return std::exp((2.0 + lambda / 2.0) * std::log(2.0) + ln_gamma(lambda + 0.5) +
                  ln_gamma(2.0 * lambda - 1.0) - ln_gamma(lambda - 1.0) -
                  (2.0 * lambda - 1.0) * std::log(nu - lambda + 3.0)) /
         kSqrtPi;
}

// limit of the weighted residual as theta -> pi: 0 below lambda = 2,
// 2^{2 lambda - 1} Q above (Q the power-divergence coefficient at x = -1).
double weighted_residual_pi_limit(double lambda, double nu) {
  if (lambda < 2.0) return 0.0;
  EndpointBehavior eb = endpoint_minus_one(lambda, nu);
  double q = eb.kind == EndpointBehavior::Kind::PowerDivergent ? eb.value : 0.0;
  return std::pow(2.0, 2.0 * lambda - 1.0) * q;
}

}  // namespace

double leading_term(double lambda, double nu, const AnglePoint& theta) {
  if (!(lambda > 0.0)) throw std::domain_error("leading_term: requires lambda > 0");
  if (!(nu + lambda > 0.0)) throw std::domain_error("leading_term: requires nu + lambda > 0");
  double amp = std::exp(lambda * std::log(2.0) + ln_gamma(lambda + 0.5) -
                        lambda * std::log(nu + lambda)) /
               kSqrtPi;
  return amp * std::cos((nu + lambda) * theta.theta() - lambda * kPi / 2.0);
}

double residual_direct(double lambda, double nu, const AnglePoint& theta,
                       const SeriesPolicy& policy) {
  if (!(lambda > 0.0)) throw std::domain_error("residual_direct: requires lambda > 0");
  if (!(nu > 0.0)) throw std::domain_error("residual_direct: requires nu > 0");
  double t = theta.theta();
  if (!(t > 0.0 && t < kPi))
    throw std::domain_error("residual_direct: theta must lie in (0, pi)");
  double g = eval({lambda, nu, Side::Right}, theta, policy);
  double w = std::pow(std::sin(t), lambda);
  return w * g - leading_term(lambda, nu, theta);
}

BoundS bound_S(double lambda, double nu, const AnglePoint& theta) {
  require_case_preconditions(lambda, nu);
  double t = theta.theta();
  if (!(t > 0.0 && t < kPi))
    throw std::domain_error("bound_S: theta must lie in (0, pi)");
  double cot = cot_abs(t);
  BoundS out;
  if (case_one(lambda)) {
    out.case_tag = CaseTag::CaseI;
    double pre = lambda * std::fabs(lambda - 1.0) * std::pow(2.0, lambda) *
                 std::exp(ln_gamma(lambda + 0.5)) /
                 (kSqrtPi * std::pow(nu + lambda - 1.0, lambda + 1.0));
    out.value = pre * (cot + (2.0 / 3.0) * (lambda + 1.0) / (nu + lambda - 1.0));
    return out;
  }
  out.case_tag = CaseTag::CaseII;
  double pre = lambda * (lambda - 1.0) * std::pow(2.0, 1.5 * lambda) *
               std::exp(ln_gamma(lambda + 0.5)) /
               (kSqrtPi * std::pow(nu + 1.0, lambda + 1.0));
  double tail_coeff = std::exp((2.0 - lambda) * std::log(2.0) + ln_gamma(2.0 * lambda - 1.0) -
                               ln_gamma(lambda + 1.0) +
                               (lambda + 1.0) * std::log(nu + 1.0) -
                               (2.0 * lambda - 1.0) * std::log(nu - lambda + 3.0));
  out.value = pre * (cot + (2.0 / 3.0) * (lambda + 1.0) / (nu + 1.0) +
                     tail_coeff * std::pow(cot, lambda - 2.0) *
                         (cot + (2.0 / 3.0) * (2.0 * lambda - 1.0) / (nu - lambda + 3.0)));
  return out;
}

BoundB bound_B(double lambda, double nu, double c) {
  require_case_preconditions(lambda, nu);
  if (!(c > 0.0)) throw std::domain_error("bound_B: requires c > 0");
  BoundB out;
  if (case_one(lambda)) {
    out.case_tag = CaseTag::CaseI;
    out.value = lambda * std::fabs(lambda - 1.0) * std::pow(2.0, lambda) *
                std::exp(ln_gamma(lambda + 0.5)) / kSqrtPi *
                (3.0 * nu + 5.0 * lambda - 1.0) / (3.0 * (nu + lambda - 1.0)) *
                std::exp((1.0 - lambda * lambda) / (nu + lambda - 1.0));
    out.theta_min = 0.0;
    out.theta_max = kPi;
    return out;
  }
  out.case_tag = CaseTag::CaseII;
  double head = (3.0 * nu + 2.0 * lambda + 5.0) / (nu + 1.0);
  double tail = std::pow(c * kPi, lambda - 2.0) *
                std::exp(ln_gamma(2.0 * lambda - 1.0) - ln_gamma(lambda + 1.0)) *
                (3.0 * nu + lambda + 7.0) / (nu - lambda + 3.0) *
                std::exp((2.0 * lambda - 5.0) * (lambda + 1.0) / (nu - lambda + 3.0));
  out.value = lambda * (lambda - 1.0) * std::pow(2.0, 1.5 * lambda) *
              std::exp(ln_gamma(lambda + 0.5)) / (3.0 * kSqrtPi) * (head + tail);
  out.theta_min = c / nu;
  out.theta_max = kPi - c / nu;
  return out;
}

AsymptoticDecomposition weighted_pair(double lambda, double nu,
                                      const AnglePoint& theta,
                                      const SeriesPolicy& policy) {
  require_case_preconditions(lambda, nu);
  AsymptoticDecomposition out;
  out.case_tag = case_one(lambda) ? CaseTag::CaseI : CaseTag::CaseII;
  out.weight_exponent = out.case_tag == CaseTag::CaseI ? lambda + 1.0 : 2.0 * lambda - 1.0;
  double t = theta.theta();
  out.leading = leading_term(lambda, nu, theta);
  if (t == 0.0 || t >= kPi) {
    out.residual = std::numeric_limits<double>::quiet_NaN();
    out.bound_S = std::numeric_limits<double>::infinity();
    out.weighted_bound = weighted_bound_limit(lambda, nu);
    out.weighted_residual = t == 0.0 ? 0.0 : weighted_residual_pi_limit(lambda, nu);
    return out;
  }
  out.residual = residual_direct(lambda, nu, theta, policy);
  out.bound_S = bound_S(lambda, nu, theta).value;
  double w = std::pow(std::sin(t), out.weight_exponent - lambda);
  out.weighted_residual = w * out.residual;
  out.weighted_bound = w * out.bound_S;
  return out;
}

std::complex<double> kernel_g(double theta, double t) {
  if (!(theta > 0.0 && theta < kPi))
    throw std::domain_error("kernel_g: theta must lie in (0, pi)");
  if (!(t >= 0.0)) throw std::domain_error("kernel_g: requires t >= 0");
  if (t == 0.0) return {0.0, std::sin(theta)};
  double sh = std::sinh(0.5 * t);
  return {std::cos(theta) * 2.0 * sh * sh / t, std::sin(theta) * std::sinh(t) / t};
}

std::complex<double> kernel_g_dt(double theta, double t) {
  if (t < 1e-4) {
    // Taylor forms of (t sinh t - cosh t + 1)/t^2 and (t cosh t - sinh t)/t^2
    double t2 = t * t;
    double re = std::cos(theta) * (0.5 + t2 / 8.0 + t2 * t2 / 144.0);
    double im = std::sin(theta) * (t / 3.0 + t * t2 / 30.0);
    return {re, im};
  }
  double ch = std::cosh(t), sh = std::sinh(t);
  return {std::cos(theta) * (t * sh - ch + 1.0) / (t * t),
          std::sin(theta) * (t * ch - sh) / (t * t)};
}

std::complex<double> kernel_f(double lambda, double theta, double t) {
  if (!(lambda > 0.0)) throw std::domain_error("kernel_f: requires lambda > 0");
  if (!(theta > 0.0 && theta < kPi))
    throw std::domain_error("kernel_f: theta must lie in (0, pi)");
  if (!(t >= 0.0)) throw std::domain_error("kernel_f: requires t >= 0");
  std::complex<double> g0(0.0, std::sin(theta));
  if (t < 1e-4) {
    // f = d/dt g^{lambda-1} at 0 plus the t-linear correction:
    //   (lambda-1) g0^{lambda-2} [cos/2 + i t sin/6]
    //   + t (lambda-1)(lambda-2)/2 g0^{lambda-3} (cos/2)^2
    double half_cos = 0.5 * std::cos(theta);
    std::complex<double> lead = (lambda - 1.0) * std::pow(g0, lambda - 2.0) *
                                std::complex<double>(half_cos, t * std::sin(theta) / 6.0);
    std::complex<double> corr = t * 0.5 * (lambda - 1.0) * (lambda - 2.0) *
                                std::pow(g0, lambda - 3.0) * half_cos * half_cos;
    return lead + corr;
  }
  std::complex<double> g = kernel_g(theta, t);
  return (std::pow(g, lambda - 1.0) - std::pow(g0, lambda - 1.0)) / t;
}

KernelValue kernel_at(double lambda, double theta, double t) {
  KernelValue out;
  out.g = kernel_g(theta, t);
  out.f = kernel_f(lambda, theta, t);
  out.t = t;
  out.theta = theta;
  return out;
}

double f_bound(double lambda, double theta, double t) {
  if (!(lambda > 0.0)) throw std::domain_error("f_bound: requires lambda > 0");
  if (!(theta > 0.0 && theta < kPi))
    throw std::domain_error("f_bound: theta must lie in (0, pi)");
  if (!(t > 0.0)) throw std::domain_error("f_bound: requires t > 0");
  double s = std::sin(theta);
  double cot = cot_abs(theta);
  double common = std::pow(s, lambda - 1.0) * (cot + 2.0 * t / 3.0);
  if (lambda <= 2.0) return std::fabs(lambda - 1.0) * common * std::exp(t);
  return std::pow(2.0, lambda / 2.0) * (lambda - 1.0) * common *
         (1.0 + std::pow(cot / 2.0, lambda - 2.0) * std::pow(t, lambda - 2.0) *
                    std::exp((lambda - 2.0) * t)) *
         std::exp((lambda - 1.0) * t);
}

double g_sandwich_lower(double theta, double t) {
  double c2 = std::cos(theta) * std::cos(theta), s2 = std::sin(theta) * std::sin(theta);
  return 0.25 * t * t * c2 * std::pow(std::cosh(0.5 * t), 4.0 / 3.0) +
         s2 * std::pow(std::cosh(t), 2.0 / 3.0);
}

double g_sandwich_upper(double theta, double t) {
  double c2 = std::cos(theta) * std::cos(theta), s2 = std::sin(theta) * std::sin(theta);
  double ch = std::cosh(0.5 * t);
  return 0.25 * t * t * c2 * ch * ch * ch * ch + s2 * std::cosh(t) * std::cosh(t);
}

double g_dt_bound(double theta, double t) {
  return (t / 3.0 * std::sin(theta) + 0.5 * std::fabs(std::cos(theta))) * std::cosh(t);
}

double residual_integral(double lambda, double nu, const AnglePoint& theta,
                         const QuadSpec& spec) {
  if (!(lambda > 0.0)) throw std::domain_error("residual_integral: requires lambda > 0");
  if (!(nu > 0.0)) throw std::domain_error("residual_integral: requires nu > 0");
  double th = theta.theta();
  if (!(th > 0.0 && th < kPi))
    throw std::domain_error("residual_integral: theta must lie in (0, pi)");
  if (lambda == 1.0) return 0.0;  // f vanishes identically
  double rate = lambda <= 2.0 ? nu + lambda - 1.0 : nu - lambda + 3.0;
  if (!(rate > 0.0))
    throw std::domain_error("residual_integral: integrand decay rate not positive");
  double freq = nu + lambda;
  std::complex<double> phase =
      std::complex<double>(0.0, 1.0) * std::exp(std::complex<double>(0.0, -freq * th));
  auto integrand = [&](double t) {
    if (t <= 0.0) return 0.0;
    double re = (phase * kernel_f(lambda, th, t)).real();
    return re * std::pow(t, lambda) * std::exp(-freq * t);
  };
  double hint = lambda <= 2.0 ? lambda + 1.0 : 2.0 * lambda - 1.0;
  QuadResult q = integrate_semiinfinite_expdecay(integrand, rate, hint, spec);
  if (!q.converged)
    throw ConvergenceError("residual_integral: quadrature error estimate " +
                           std::to_string(q.error_estimate));
  double pref = std::exp(lambda * std::log(2.0) + ln_gamma(lambda + 0.5) -
                         ln_gamma(lambda)) /
                kSqrtPi * std::pow(std::sin(th), 1.0 - lambda);
  return pref * q.value;
}

double szego_leading(int n, double lambda, const AnglePoint& theta) {
  if (n < 1) throw std::domain_error("szego_leading: requires n >= 1");
  if (!(lambda > 0.0)) throw std::domain_error("szego_leading: requires lambda > 0");
  double t = theta.theta();
  if (!(t > 0.0 && t < kPi))
    throw std::domain_error("szego_leading: theta must lie in (0, pi)");
  double nd = static_cast<double>(n);
  double amp = std::exp(lambda * std::log(2.0) + ln_gamma(nd + lambda + 0.5) -
                        ln_gamma(nd + 1.0) - lambda * std::log(nd + lambda)) /
               kSqrtPi;
  return amp * std::cos((nd + lambda) * t - lambda * kPi / 2.0);
}

}  // namespace ggf
