#ifndef GGF_QUADRATURE_HPP
#define GGF_QUADRATURE_HPP

#include <functional>

#include "ggf/types.hpp"

namespace ggf {

/// Tolerances and refinement limits for the integration engines.
struct QuadSpec {
  enum class Method { TanhSinh, AdaptiveGauss, TruncatedAdaptive };

  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_refinements = 12;
  Method method = Method::TanhSinh;

  bool valid() const { return abs_tol > 0.0 && rel_tol > 0.0 && max_refinements >= 1; }
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
};

using Integrand = std::function<double(double)>;

/// Integrand that also receives its exact distances to both interval ends.
/// Near an endpoint singularity the abscissa b - delta rounds away the low
/// bits of delta, flooring plain f(x) accuracy around 1e-8 for inverse
/// square-root singularities; forming the singular factor from the distance
/// restores full precision.
using EndpointIntegrand = std::function<double(double x, double dist_a, double dist_b)>;

/// Integral over (a, b) of an integrand with an integrable algebraic
/// singularity (exponent > -1) at either endpoint, by the tanh-sinh
/// (double-exponential) transform.  The plain-integrand overload carries an
/// abscissa-rounding bias near singular endpoints which is folded into
/// error_estimate; use the distance-aware overload when full accuracy at the
/// singularity matters.
QuadResult integrate_endpoint_singular(const Integrand& f, double a, double b,
                                       double singular_exponent_at_b,
                                       const QuadSpec& spec = {});
QuadResult integrate_endpoint_singular(const EndpointIntegrand& f, double a, double b,
                                       double singular_exponent_at_b,
                                       const QuadSpec& spec = {});

/// The weighted integral representation
///   (sin phi)^{2 lambda - 1} G(cos phi)
///     = 2^lambda Gamma(lambda+1/2) / (sqrt(pi) Gamma(lambda))
///       * int_0^phi cos((nu+lambda) t) / (cos t - cos phi)^{1-lambda} dt.
/// The substitution t = phi (1 - u^2) moves the algebraic endpoint
/// singularity to u = 0 where tanh-sinh absorbs it; the kernel is formed
/// from the product-of-sines identity so no cancellation occurs near the
/// singular end.  Returns prefactor * integral, i.e. the left-hand side.
QuadResult mehler_integral(double lambda, double nu, double phi,
                           const QuadSpec& spec = {});

/// Semi-infinite integral of f with |f(t)| <= C t^p e^{-rate t} eventually.
/// Truncates where the envelope falls below abs_tol/10 and integrates the
/// remaining finite range by adaptive Gauss-Kronrod panels graded toward 0.
QuadResult integrate_semiinfinite_expdecay(const Integrand& f, double decay_rate,
                                           double poly_degree_hint,
                                           const QuadSpec& spec = {});

/// Right-sided Riemann-Liouville fractional integral of order s > 0:
///   (1/Gamma(s)) int_x^1 u(y) (y-x)^{s-1} dy.
/// The substitution y = x + (1-x) v^2 regularizes the kernel at y = x; an
/// integrand singular at y = 1 itself is sampled through the distance-aware
/// machinery (u receives y and the exact 1 - y).
QuadResult rl_fractional_integral_right(const Integrand& u, double s, double x,
                                        const QuadSpec& spec = {});
QuadResult rl_fractional_integral_right(
    const std::function<double(double y, double one_minus_y)>& u, double s, double x,
    const QuadSpec& spec = {});

}  // namespace ggf

#endif  // GGF_QUADRATURE_HPP
