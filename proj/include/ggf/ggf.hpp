#ifndef GGF_GGF_HPP
#define GGF_GGF_HPP

#include "ggf/types.hpp"

namespace ggf {

/// Evaluates the generalized Gegenbauer function of fractional degree at
/// cos(theta).  Dispatch:
///   lambda = 0        -> cos(nu * theta)
///   lambda = 1        -> sin((nu+1) theta) / ((nu+1) sin theta)
///   nu integer        -> stable forward recurrence (gegenbauer_integer)
///   otherwise         -> ggf_series
/// Left-side values follow from the reflection rule.  Evaluation exactly at
/// a divergent endpoint (theta = pi on the right / theta = 0 on the left,
/// with lambda >= 1/2 and fractional nu) throws EndpointDivergence; a
/// non-convergent series throws ConvergenceError.
double eval(const GgfParams& params, const AnglePoint& theta,
            const SeriesPolicy& policy = {});

/// k-th derivative with respect to x through the degree/parameter shift
///   d^k/dx^k G = (-1)^k (-nu)_k (nu+2 lambda)_k / (2^k (lambda+1/2)_k)
///                * G[nu-k, lambda+k](x)
/// (no finite differencing).  Requires nu >= k.
double derivative(const GgfParams& params, const AnglePoint& theta, int k,
                  const SeriesPolicy& policy = {});

/// One upward step of the degree recurrence
///   (nu+2 lambda) G[nu+1] = 2 (nu+lambda) x G[nu] - nu G[nu-1],  nu >= 1.
double recurrence_nu_step(double lambda, double nu, double x, double g_nu,
                          double g_nu_minus_1);

/// Signed residual of the mixed parameter identity
///   G[nu,lambda] = x G[nu-1,lambda+1]
///                  - (nu-1)(nu+2 lambda+1)/(4 (lambda+1/2)(lambda+3/2))
///                    * (1-x^2) G[nu-2,lambda+2],  nu >= 2,
/// with every term evaluated through eval().
double recurrence_lambda_mix(double lambda, double nu, const AnglePoint& theta,
                             const SeriesPolicy& policy = {});

/// Binomial-kernel series representation
///   G = Gamma(lambda+1/2) Gamma(nu+1) / (2^nu Gamma(nu+lambda+1/2))
///       * sum_k C(nu+lambda-1/2, nu-k) C(nu+lambda-1/2, k) (x-1)^k (1+x)^{nu-k}.
/// For fractional nu the k-sum converges only for x > 0 (term ratio
/// (1-x)/(1+x)); outside that region the result is flagged converged=false.
SeriesResult series_representation_p43(const GgfParams& params,
                                       const AnglePoint& theta, int max_k);

/// Classified behavior of the right function at x = -1 together with the
/// exact coefficient (endpoint value, log coefficient, or weighted limit).
EndpointBehavior endpoint_minus_one(double lambda, double nu);

/// Sturm-Liouville residual (1-x^2) G'' - (2 lambda+1) x G' + nu(nu+2 lambda) G,
/// normalized by nu(nu+2 lambda) max(|G|, 1).  Uses the exact derivative
/// relations (nu >= 2 required so both derivatives exist).
double sturm_liouville_residual(const GgfParams& params, const AnglePoint& theta,
                                const SeriesPolicy& policy = {});

/// Integer-degree oracle: the normalized-Jacobi polynomial value by the
/// stable forward recurrence seeded with G0 = 1, G1 = x.
double gegenbauer_integer(int n, double lambda, double x);

}  // namespace ggf

#endif  // GGF_GGF_HPP
