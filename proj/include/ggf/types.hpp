#ifndef GGF_TYPES_HPP
#define GGF_TYPES_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace ggf {

/// Which of the two reflected function families is meant.  The left family
/// is the right one evaluated at -x with the sign (-1)^floor(nu).
enum class Side { Right, Left };

/// Parameter triple identifying one generalized Gegenbauer function of
/// fractional degree: lambda > -1/2, nu >= 0.
struct GgfParams {
  double lambda = 0.5;
  double nu = 0.0;
  Side side = Side::Right;

  bool valid() const { return lambda > -0.5 && nu >= 0.0; }
};

/// Evaluation location kept as an angle theta in [0, pi] with x = cos(theta).
/// Storing theta (not x) keeps both endpoints exactly representable and lets
/// series arguments be formed as sin^2(theta/2) without cancellation.
class AnglePoint {
 public:
  AnglePoint() = default;
  explicit AnglePoint(double theta) : theta_(theta) {
    if (!(theta >= 0.0 && theta <= 3.14159265358979323846 + 1e-15))
      throw std::domain_error("AnglePoint: theta must lie in [0, pi]");
  }
  static AnglePoint from_x(double x) {
    if (!(x >= -1.0 && x <= 1.0))
      throw std::domain_error("AnglePoint: x must lie in [-1, 1]");
    return AnglePoint(std::acos(x));
  }
  double theta() const { return theta_; }
  double x() const { return std::cos(theta_); }
  /// sin^2(theta/2) = (1 - x)/2, evaluated without cancellation.
  double half_angle_sin_sq() const {
    double s = std::sin(0.5 * theta_);
    return s * s;
  }
  /// cos^2(theta/2) = (1 + x)/2, evaluated without cancellation.
  double half_angle_cos_sq() const {
    double c = std::cos(0.5 * theta_);
    return c * c;
  }

 private:
  double theta_ = 0.0;
};

/// Truncation and accumulation policy for power-series evaluation.
struct SeriesPolicy {
  enum class Accumulation { Standard, Compensated, DoubleDouble };

  double rel_tol = 1e-15;
  int max_terms = 10000;
  Accumulation accumulation = Accumulation::Standard;

  bool valid() const { return rel_tol > 0.0 && max_terms >= 1; }
};

/// Outcome of a truncated series evaluation.  tail_bound is the magnitude of
/// the first omitted term.
struct SeriesResult {
  double value = 0.0;
  int terms_used = 0;
  double tail_bound = 0.0;
  bool converged = false;
};

/// Classified behavior of the right function at x = -1.  The kind depends on
/// lambda alone (integer degrees are always finite):
///   finite_value   for -1/2 < lambda < 1/2, value = cos((nu+lambda)pi)/cos(lambda pi)
///   log_divergent  for lambda = 1/2,        value = sin(nu pi)/pi (coefficient of log(1+x))
///   power_divergent for lambda > 1/2,       value = limit of ((1+x)/2)^(lambda-1/2) G
struct EndpointBehavior {
  enum class Kind { FiniteValue, LogDivergent, PowerDivergent };
  Kind kind = Kind::FiniteValue;
  double value = 0.0;
};

/// Thrown when evaluation is requested exactly at a divergent endpoint; the
/// attached behavior lets sweep drivers branch to the analytic limit instead.
class EndpointDivergence : public std::domain_error {
 public:
  EndpointDivergence(const std::string& what, EndpointBehavior behavior)
      : std::domain_error(what), behavior_(behavior) {}
  const EndpointBehavior& behavior() const { return behavior_; }

 private:
  EndpointBehavior behavior_;
};

/// Thrown when a series or quadrature fails to reach its tolerance and the
/// operation must return a bare value.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ggf

#endif  // GGF_TYPES_HPP
