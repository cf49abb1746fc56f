#include "ggf/ggf.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ggf/hypergeom.hpp"

namespace ggf {

namespace detail {
EndpointBehavior endpoint_minus_one_behavior(double lambda, double nu);
}

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

bool is_integral(double x) { return x == std::floor(x); }

double require_converged(const SeriesResult& r, const char* who) {
  if (!r.converged) throw ConvergenceError(std::string(who) + ": series did not converge");
  return r.value;
}

}  // namespace

double eval(const GgfParams& params, const AnglePoint& theta,
            const SeriesPolicy& policy) {
  if (!params.valid()) throw std::domain_error("eval: invalid parameters");
  const double nu = params.nu;
  double sign = 1.0;
  double t = theta.theta();
  if (params.side == Side::Left) {
    t = kPi - t;
    if (static_cast<long long>(std::floor(nu)) % 2 != 0) sign = -1.0;
  }
  if (t >= kPi && params.lambda >= 0.5 && !is_integral(nu))
    throw EndpointDivergence("eval: divergent at x = -1",
                             detail::endpoint_minus_one_behavior(params.lambda, nu));

  if (params.lambda == 0.0) return sign * std::cos(nu * t);
  if (params.lambda == 1.0) {
    double s = std::sin(t);
    if (t == 0.0) return sign;
    if (t >= kPi || s == 0.0) return sign * -cos_pi(nu + 1.0);  // integer nu only here
    return sign * std::sin((nu + 1.0) * t) / ((nu + 1.0) * s);
  }
  if (is_integral(nu))
    return sign * gegenbauer_integer(static_cast<int>(nu), params.lambda, std::cos(t));

  GgfParams right{params.lambda, nu, Side::Right};
  SeriesResult r = ggf_series(right, AnglePoint(t), policy);
  return sign * require_converged(r, "eval");
}

double derivative(const GgfParams& params, const AnglePoint& theta, int k,
                  const SeriesPolicy& policy) {
  if (k < 1) throw std::domain_error("derivative: k must be >= 1");
  if (params.nu < k) throw std::domain_error("derivative: requires nu >= k");
  double factor = pochhammer(-params.nu, k) *
                  pochhammer(params.nu + 2.0 * params.lambda, k) /
                  (std::pow(2.0, k) * pochhammer(params.lambda + 0.5, k));
  if (k % 2 != 0) factor = -factor;
  GgfParams shifted{params.lambda + k, params.nu - k, Side::Right};
  if (params.side == Side::Right) return factor * eval(shifted, theta, policy);
  // reflection chain rule: d^k/dx^k G_left(x) = (-1)^floor(nu)+k (d^k G_right)(-x)
  double sign = (static_cast<long long>(std::floor(params.nu)) % 2 != 0) ? -1.0 : 1.0;
  if (k % 2 != 0) sign = -sign;
  return sign * factor * eval(shifted, AnglePoint(kPi - theta.theta()), policy);
}

double recurrence_nu_step(double lambda, double nu, double x, double g_nu,
                          double g_nu_minus_1) {
  if (nu < 1.0) throw std::domain_error("recurrence_nu_step: requires nu >= 1");
  double denom = nu + 2.0 * lambda;
  if (denom == 0.0)
    throw std::domain_error("recurrence_nu_step: degenerate coefficient nu + 2 lambda = 0");
  return (2.0 * (nu + lambda) * x * g_nu - nu * g_nu_minus_1) / denom;
}

double recurrence_lambda_mix(double lambda, double nu, const AnglePoint& theta,
                             const SeriesPolicy& policy) {
  if (nu < 2.0) throw std::domain_error("recurrence_lambda_mix: requires nu >= 2");
  double x = theta.x();
  double one_minus_x2 = 4.0 * theta.half_angle_sin_sq() * theta.half_angle_cos_sq();
  double lhs = eval({lambda, nu, Side::Right}, theta, policy);
  double a = eval({lambda + 1.0, nu - 1.0, Side::Right}, theta, policy);
  double b = eval({lambda + 2.0, nu - 2.0, Side::Right}, theta, policy);
  double coeff = (nu - 1.0) * (nu + 2.0 * lambda + 1.0) /
                 (4.0 * (lambda + 0.5) * (lambda + 1.5));
  return lhs - (x * a - coeff * one_minus_x2 * b);
}

SeriesResult series_representation_p43(const GgfParams& params,
                                       const AnglePoint& theta, int max_k) {
  if (!params.valid())
    throw std::domain_error("series_representation_p43: invalid parameters");
  if (max_k < 1) throw std::domain_error("series_representation_p43: max_k must be >= 1");
  double t = params.side == Side::Right ? theta.theta() : kPi - theta.theta();
  if (!(t > 0.0 && t < kPi))
    throw std::domain_error("series_representation_p43: theta must lie in (0, pi)");
  double sign = 1.0;
  if (params.side == Side::Left &&
      static_cast<long long>(std::floor(params.nu)) % 2 != 0)
    sign = -1.0;

  const double lambda = params.lambda, nu = params.nu;
  AnglePoint pt(t);
  double one_minus_x = 2.0 * pt.half_angle_sin_sq();
  double one_plus_x = 2.0 * pt.half_angle_cos_sq();
  double tail_ratio = one_minus_x / one_plus_x;

  double log_pref = ln_gamma(lambda + 0.5) + ln_gamma(nu + 1.0) -
                    nu * std::log(2.0) - ln_gamma(nu + lambda + 0.5);
  double log_top = ln_gamma(nu + lambda + 0.5);

  SeriesResult res;
  double sum = 0.0;
  double last_abs = 0.0;
  int consecutive_small = 0;
  bool terminated = false;
  for (int k = 0; k < max_k; ++k) {
    double arg1 = nu - k + 1.0;           // Gamma(nu-k+1), negative for k > nu
    double arg2 = nu - k + lambda + 0.5;  // can also go negative for large k
    if ((arg1 <= 0.0 && is_integral(arg1)) || (arg2 <= 0.0 && is_integral(arg2))) {
      terminated = true;  // 1/Gamma at a pole: binomial is exactly zero
      break;
    }
    SignedLogGamma s1 = ln_gamma_signed(arg1);
    SignedLogGamma s2 = ln_gamma_signed(arg2);
    double log_mag = log_pref + (log_top - ln_gamma(k + lambda + 0.5) - s1.log_abs) +
                     (log_top - s2.log_abs - ln_gamma(k + 1.0)) +
                     k * std::log(one_minus_x) + (nu - k) * std::log(one_plus_x);
    double term = s1.sign * s2.sign * std::exp(log_mag);
    if (k % 2 != 0) term = -term;  // (x-1)^k = (-1)^k (1-x)^k
    sum += term;
    last_abs = std::fabs(term);
    ++res.terms_used;
    if (last_abs <= 1e-16 * std::fabs(sum)) {
      if (++consecutive_small >= 3) break;
    } else {
      consecutive_small = 0;
    }
  }
  res.value = sign * sum;
  if (terminated || consecutive_small >= 3) {
    res.tail_bound = terminated ? 0.0 : last_abs * tail_ratio;
    res.converged = true;
  } else {
    // ran out of terms; the tail is geometric with ratio (1-x)/(1+x)
    res.tail_bound = tail_ratio < 1.0 ? last_abs * tail_ratio / (1.0 - tail_ratio)
                                      : last_abs;
    res.converged = tail_ratio < 1.0 && res.tail_bound <= 1e-12 * std::fabs(sum);
  }
  return res;
}

EndpointBehavior endpoint_minus_one(double lambda, double nu) {
  if (!(lambda > -0.5) || !(nu >= 0.0))
    throw std::domain_error("endpoint_minus_one: invalid parameters");
  return detail::endpoint_minus_one_behavior(lambda, nu);
}

double sturm_liouville_residual(const GgfParams& params, const AnglePoint& theta,
                                const SeriesPolicy& policy) {
  if (params.nu < 2.0) throw std::domain_error("sturm_liouville_residual: requires nu >= 2");
  if (!(theta.theta() > 0.0 && theta.theta() < kPi))
    throw std::domain_error("sturm_liouville_residual: theta must lie in (0, pi)");
  double x = theta.x();
  double one_minus_x2 = 4.0 * theta.half_angle_sin_sq() * theta.half_angle_cos_sq();
  double g = eval(params, theta, policy);
  double g1 = derivative(params, theta, 1, policy);
  double g2 = derivative(params, theta, 2, policy);
  double lam = params.lambda, nu = params.nu;
  double residual =
      one_minus_x2 * g2 - (2.0 * lam + 1.0) * x * g1 + nu * (nu + 2.0 * lam) * g;
  return residual / (nu * (nu + 2.0 * lam) * std::max(std::fabs(g), 1.0));
}

double gegenbauer_integer(int n, double lambda, double x) {
  if (n < 0) throw std::domain_error("gegenbauer_integer: n must be non-negative");
  if (!(lambda > -0.5)) throw std::domain_error("gegenbauer_integer: lambda must exceed -1/2");
  if (n == 0) return 1.0;
  if (n == 1) return x;
  double gm1 = 1.0, g = x;
  for (int k = 1; k < n; ++k) {
    double nu = static_cast<double>(k);
    double next = (2.0 * (nu + lambda) * x * g - nu * gm1) / (nu + 2.0 * lambda);
    gm1 = g;
    g = next;
  }
  return g;
}

}  // namespace ggf
