#ifndef GGF_VERIFY_HPP
#define GGF_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ggf/quadrature.hpp"
#include "ggf/types.hpp"

namespace ggf {

/// Parameter grid for a sweep.  Either list thetas explicitly or give
/// theta_count > 0 for that many uniform interior points on (0, pi) plus the
/// near-endpoint probes 1e-4 and pi - 1e-4.
struct SweepGrid {
  std::vector<double> lambdas;
  std::vector<double> nus;
  std::vector<double> thetas;
  int theta_count = 0;
  std::vector<double> ts;  // for the kernel checks

  std::vector<double> theta_values() const;
};

/// One evaluated grid point of a check: lhs <= rhs is the claim, margin is
/// rhs - lhs (negative = violation before slack).  t is NaN except for the
/// kernel checks.
struct SweepRow {
  double lambda = 0.0;
  double nu = 0.0;
  double theta = 0.0;
  double t = 0.0;
  bool has_t = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
};

struct SweepReport {
  std::string check_name;
  long points_tested = 0;
  double worst_margin = 0.0;
  SweepRow worst_location;
  bool passed = false;
  std::optional<std::string> details_path;
  std::uint64_t rng_seed = 0;
  std::vector<SweepRow> rows;
};

/// Knobs shared by all checks.  tolerance_scale multiplies into the unified
/// violation slack  margin >= -(tolerance_scale * |rhs| + 1e-12)  and
/// replaces the identity-check tolerances when overridden.
struct CheckOptions {
  SeriesPolicy policy{};
  QuadSpec quad{};
  double tolerance_scale = 1e-9;
  bool tolerance_overridden = false;
  int random_points = 1000;
  std::uint64_t seed = 0x5eed5eed5eedULL;
};

/// |residual| <= S on (0, pi) for every (lambda, nu) meeting its case
/// preconditions (pairs that meet neither case are skipped).
SweepReport check_residual_bound(const SweepGrid& grid, const CheckOptions& opts = {});

/// |residual| nu^{lambda+1} sin(theta) <= B on the declared validity
/// interval (all of (0,pi) in case I, [c/nu, pi - c/nu] in case II).
SweepReport check_theta_free_bound(const SweepGrid& grid, double c = 1.0,
                              const CheckOptions& opts = {});

/// |weighted residual| <= weighted bound on [0, pi] including the endpoint
/// limit rows.
SweepReport check_weighted(const SweepGrid& grid, const CheckOptions& opts = {});

/// |kernel_f| <= f_bound on the (theta, t) grid for each lambda.
SweepReport check_kernel_bound(const SweepGrid& grid_with_t, const CheckOptions& opts = {});

/// Hyperbolic sandwich of |g|^2 (both sides, strict) and the derivative
/// bound |dg/dt| <= (t/3 sin + |cos|/2) cosh t.
SweepReport check_hyperbolic_bounds(const SweepGrid& grid_with_t, const CheckOptions& opts = {});

/// Cross-checks of the integral identities (fractional-integral transform,
/// weighted integral representation, residual integral) and the algebraic
/// ones (binomial series form, both recurrences, the Sturm-Liouville
/// equation, the derivative relation against the high-precision oracle).
/// Rows carry lhs = error, rhs = tolerance, margin = (rhs - lhs) normalized
/// by rhs so the families are comparable.
SweepReport check_identities(const SweepGrid& grid, const CheckOptions& opts = {});

/// Weighted max-norm envelopes: (1-x^2)^{lambda/2} |G| bounded for
/// 0 < lambda < 1 and (1-x^2)^{lambda-1/2} |G| bounded for lambda >= 1.
SweepReport check_max_norm_envelopes(const SweepGrid& grid, const CheckOptions& opts = {});

/// All of the above on their default grids, in a fixed order.
std::vector<SweepReport> run_all_checks(const CheckOptions& opts = {});
SweepReport run_check_by_name(const std::string& name, const CheckOptions& opts = {});
std::vector<std::string> check_names();

/// Brute-force oracle: the defining series summed in 160-digit arithmetic
/// with a certified tail, returned as a decimal string with the requested
/// number of significant digits (>= 30, <= 100).  Requires a point where the
/// series converges directly (z away from 1).
std::string oracle_eval(const GgfParams& params, const AnglePoint& theta, int digits);

/// Same engine, k-th derivative with respect to x by termwise
/// differentiation of the series (independent of the parameter-shift route).
double oracle_derivative(const GgfParams& params, const AnglePoint& theta, int k);

/// Plain double value of oracle_eval for convenience in sweeps.
double oracle_eval_double(const GgfParams& params, const AnglePoint& theta);

/// Max-norm envelope constants: (1-x^2)^{lambda/2} |G| <= envelope_rho for
/// 0 < lambda < 1 and (1-x^2)^{lambda-1/2} |G| <= envelope_kappa for
/// lambda >= 1, both uniform in x.
double envelope_rho(double lambda, double nu);
double envelope_kappa(double lambda, double nu);

/// Deterministic, locale-independent serialization.  CSV columns are
/// lambda,nu,theta,lhs,rhs,margin (plus a trailing t column when the check
/// carries one); floating-point fields are written with 17 significant
/// digits and LF line endings.
std::string report_to_csv(const SweepReport& report);
std::string report_to_json(const SweepReport& report);

/// 17-significant-digit, locale-independent float formatting used by every
/// emitter.
std::string format_double(double v);

}  // namespace ggf

#endif  // GGF_VERIFY_HPP
