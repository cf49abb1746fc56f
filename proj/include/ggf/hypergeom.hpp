#ifndef GGF_HYPERGEOM_HPP
#define GGF_HYPERGEOM_HPP

#include "ggf/types.hpp"

namespace ggf {

/// log Gamma(x) for x > 0 (Lanczos approximation, relative error well below
/// 1e-14 for x in [0.5, 1e6]).  Throws std::domain_error for x <= 0.
double ln_gamma(double x);

/// log |Gamma(x)| together with the sign of Gamma(x), valid for any real x
/// that is not a pole (x in {0, -1, -2, ...} throws).  Negative arguments go
/// through the reflection formula Gamma(1-x)Gamma(x) = pi / sin(pi x).
struct SignedLogGamma {
  double log_abs;
  int sign;  // +1 or -1
};
SignedLogGamma ln_gamma_signed(double x);

/// Digamma function psi(x) = Gamma'(x)/Gamma(x) for real non-pole x.
double digamma(double x);

/// sin(pi x) and cos(pi x) with exact argument reduction modulo 2.
double sin_pi(double x);
double cos_pi(double x);

/// Rising factorial (a)_j = a (a+1) ... (a+j-1), computed as an iterated
/// product so that exact zeros of (-n)_j survive.  Overflow saturates to
/// +/-infinity.
double pochhammer(double a, int j);

/// Truncated Gauss hypergeometric series 1 + sum_j (a)_j (b)_j / (c)_j z^j/j!
/// built by the ratio recurrence.  Requires |z| < 1 unless the series
/// terminates ((a)_j or (b)_j hits an exact zero).  c at a non-positive
/// integer is a pole and throws.  Accumulation follows policy.accumulation
/// with an automatic escalation to double-double when the tracked sum of
/// |term| exceeds 1e8 times the result; if even double-double leaves fewer
/// than ~8 significant digits (sum of |term| beyond 1e24 times the result)
/// the result is flagged converged = false.
SeriesResult gauss_2f1_truncated(double a, double b, double c, double z,
                                 const SeriesPolicy& policy);

/// Series evaluation of a generalized Gegenbauer function of fractional
/// degree at cos(theta):
///   right side:  2F1(-nu, nu+2*lambda; lambda+1/2; sin^2(theta/2))
///   left side:   (-1)^floor(nu) times the right function at pi - theta.
/// Close to theta = pi the direct series is useless (argument -> 1), so the
/// evaluation switches to the z <-> 1-z connection formulas, including the
/// logarithmic forms for half-integer lambda.  At theta = pi exactly the
/// value is finite only for -1/2 < lambda < 1/2 (or integer nu); otherwise
/// EndpointDivergence is thrown.
SeriesResult ggf_series(const GgfParams& params, const AnglePoint& theta,
                        const SeriesPolicy& policy);

}  // namespace ggf

#endif  // GGF_HYPERGEOM_HPP
