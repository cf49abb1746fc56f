#ifndef GGF_ASYMPTOTICS_HPP
#define GGF_ASYMPTOTICS_HPP

#include <complex>

#include "ggf/quadrature.hpp"
#include "ggf/types.hpp"

namespace ggf {

enum class CaseTag { CaseI, CaseII };  // CaseI: 0 < lambda <= 2, CaseII: lambda > 2

/// Leading term, residual and bound envelopes of the decomposition
///   (sin theta)^lambda G(cos theta) = leading + residual,  |residual| <= S.
/// The weighted pair multiplies by (sin theta)^(weight_exponent - lambda):
/// sin theta for case I (total weight lambda+1) and (sin theta)^(lambda-1)
/// for case II (total weight 2 lambda - 1), which stays bounded on [0, pi].
/// At theta = 0 or pi exactly, residual is NaN and bound_S is +infinity
/// while the weighted fields carry the analytic limit values.
struct AsymptoticDecomposition {
  double leading = 0.0;
  double residual = 0.0;
  double bound_S = 0.0;
  double weighted_residual = 0.0;
  double weighted_bound = 0.0;
  CaseTag case_tag = CaseTag::CaseI;
  double weight_exponent = 0.0;
};

/// Contour kernel values at one (theta, t) point.
struct KernelValue {
  std::complex<double> g;
  std::complex<double> f;
  double t = 0.0;
  double theta = 0.0;
};

/// Both kernels at once.
KernelValue kernel_at(double lambda, double theta, double t);

/// 2^lambda Gamma(lambda+1/2) / (sqrt(pi) (nu+lambda)^lambda)
///   * cos((nu+lambda) theta - lambda pi/2).   Requires lambda > 0, nu+lambda > 0.
double leading_term(double lambda, double nu, const AnglePoint& theta);

/// residual = (sin theta)^lambda G(cos theta) - leading_term.
double residual_direct(double lambda, double nu, const AnglePoint& theta,
                       const SeriesPolicy& policy = {});

struct BoundS {
  double value = 0.0;
  CaseTag case_tag = CaseTag::CaseI;
};

/// Closed-form envelope S with |residual| <= S on (0, pi).
///  case I  (0 < lambda <= 2, nu+lambda > 1, nu > 0):
///    lambda |lambda-1| 2^lambda Gamma(lambda+1/2) / (sqrt(pi)(nu+lambda-1)^{lambda+1})
///      * (|cot| + (2/3)(lambda+1)/(nu+lambda-1))
///  case II (lambda > 2, nu > lambda-3, nu > 0): the longer two-part form with
///    the extra |cot|^{lambda-2} tail.
BoundS bound_S(double lambda, double nu, const AnglePoint& theta);

struct BoundB {
  double value = 0.0;
  CaseTag case_tag = CaseTag::CaseI;
  double theta_min = 0.0;  // validity interval for |R| <= B / (nu^{lambda+1} sin)
  double theta_max = 0.0;
};

/// Theta-free constant B with |residual| * nu^{lambda+1} * sin(theta) <= B,
/// valid on all of (0, pi) in case I and on [c/nu, pi - c/nu] in case II.
BoundB bound_B(double lambda, double nu, double c = 1.0);

/// Full decomposition incl. the weighted residual/bound, with the analytic
/// endpoint limits at theta in {0, pi}.
AsymptoticDecomposition weighted_pair(double lambda, double nu,
                                      const AnglePoint& theta,
                                      const SeriesPolicy& policy = {});

/// g(theta, t) = (cos(theta - i t) - cos(theta)) / t, via the cancellation-free
/// hyperbolic form; t = 0 returns the limit i sin(theta).
std::complex<double> kernel_g(double theta, double t);

/// Closed-form t-derivative of g (used by the hyperbolic inequality checks).
std::complex<double> kernel_g_dt(double theta, double t);

/// f(theta, t) = (g^{lambda-1}(theta,t) - g^{lambda-1}(theta,0)) / t on the
/// principal branch (Im g > 0 on the domain).  For t below 1e-4 the
/// difference quotient is replaced by its Taylor form.
std::complex<double> kernel_f(double lambda, double theta, double t);

/// Closed-form envelope with |kernel_f| <= f_bound for theta in (0,pi), t > 0.
double f_bound(double lambda, double theta, double t);

/// Strict two-sided envelope of |g|^2 (hyperbolic sandwich) and the
/// derivative bound |dg/dt| <= (t/3 sin + |cos|/2) cosh t.
double g_sandwich_lower(double theta, double t);
double g_sandwich_upper(double theta, double t);
double g_dt_bound(double theta, double t);

/// Independent route to the residual: the semi-infinite contour integral
///   2^lambda Gamma(lambda+1/2)/(sqrt(pi) Gamma(lambda)) (sin)^{1-lambda}
///     * int_0^inf Re{i e^{-i(nu+lambda)theta} f(theta,t)} t^lambda e^{-(nu+lambda)t} dt.
double residual_integral(double lambda, double nu, const AnglePoint& theta,
                         const QuadSpec& spec = {});

/// Exact-prefactor leading term for integer degree in Jacobi normalization:
///   2^lambda Gamma(n+lambda+1/2) / (sqrt(pi) n! (n+lambda)^lambda)
///     * cos((n+lambda) theta - lambda pi/2).
double szego_leading(int n, double lambda, const AnglePoint& theta);

}  // namespace ggf

#endif  // GGF_ASYMPTOTICS_HPP
