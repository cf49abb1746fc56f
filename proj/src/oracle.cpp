#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <string>

#include "ggf/verify.hpp"

namespace ggf {

namespace {

// 160 decimal digits of working precision: enough for 100 requested digits
// plus tens of digits of cancellation headroom.
using BigFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<160>>;

struct BigSum {
  BigFloat value;
  BigFloat sum_abs;
  long terms = 0;
  bool certified = false;
};

// Termwise sum of the defining series (k-th x-derivative when k > 0):
//   d^k/dx^k sum_j t_j z^j = (-1/2)^k sum_{j>=k} t_j j(j-1)..(j-k+1) z^{j-k}
BigSum sum_series(const BigFloat& nu, const BigFloat& lambda, const BigFloat& z,
                  int k, const BigFloat& eps) {
  const BigFloat a = -nu, b = nu + 2 * lambda, c = lambda + BigFloat(0.5);
  BigSum out;
  BigFloat base(1);  // t_j z^j
  BigFloat term;
  int consecutive_small = 0;
  const long hard_cap = 200000;
  for (long j = 0; j < hard_cap; ++j) {
    if (j >= k) {
      term = base;
      for (int i = 0; i < k; ++i) term *= BigFloat(j - i);
      if (k > 0) term /= boost::multiprecision::pow(z, k);
      out.value += term;
      out.sum_abs += boost::multiprecision::fabs(term);
      ++out.terms;
      if (boost::multiprecision::fabs(term) <=
          eps * boost::multiprecision::fabs(out.value)) {
        if (++consecutive_small >= 3 && j > nu) {
          out.certified = true;
          return out;
        }
      } else {
        consecutive_small = 0;
      }
    }
    BigFloat na = a + j, nb = b + j;
    if (na == 0 || nb == 0) {
      out.certified = true;  // terminating series
      return out;
    }
    base *= na * nb * z / ((c + j) * BigFloat(j + 1));
  }
  return out;
}

BigSum evaluate(const GgfParams& params, const AnglePoint& theta, int k, int digits) {
  if (!params.valid()) throw std::domain_error("oracle: invalid parameters");
  BigFloat nu(params.nu), lambda(params.lambda), th(theta.theta());
  BigFloat z = (1 - boost::multiprecision::cos(th)) / 2;
  BigFloat sign(1);
  if (params.side == Side::Left) {
    z = 1 - z;
    if (static_cast<long long>(std::floor(params.nu)) % 2 != 0) sign = -1;
  }
  bool terminating = params.nu == std::floor(params.nu);
  if (!terminating && z > BigFloat(0.999))
    throw std::domain_error("oracle: series argument too close to 1");
  BigFloat eps = boost::multiprecision::pow(BigFloat(10), -(digits + 10));
  BigSum s = sum_series(nu, lambda, z, k, eps);
  if (!s.certified) throw ConvergenceError("oracle: tail bound not achieved within term cap");
  // cancellation must leave the requested digits intact
  BigFloat av = boost::multiprecision::fabs(s.value);
  if (av < BigFloat("1e-200")) av = BigFloat("1e-200");
  BigFloat cancel = s.sum_abs / av;
  if (boost::multiprecision::log10(cancel) > BigFloat(150 - digits - 5))
    throw ConvergenceError("oracle: cancellation exceeds working precision");
  s.value *= sign;
  if (k % 2 != 0) s.value = -s.value;  // chain rule (-1/2)^k, halves applied below
  for (int i = 0; i < k; ++i) s.value /= 2;
  if (params.side == Side::Left && k % 2 != 0) s.value = -s.value;  // d/dx of G(-x)
  return s;
}

}  // namespace

std::string oracle_eval(const GgfParams& params, const AnglePoint& theta, int digits) {
  if (digits < 30 || digits > 100)
    throw std::domain_error("oracle_eval: digits must lie in [30, 100]");
  BigSum s = evaluate(params, theta, 0, digits);
  return s.value.str(digits);
}

double oracle_derivative(const GgfParams& params, const AnglePoint& theta, int k) {
  if (k < 0) throw std::domain_error("oracle_derivative: k must be non-negative");
  BigSum s = evaluate(params, theta, k, 40);
  return static_cast<double>(s.value);
}

double oracle_eval_double(const GgfParams& params, const AnglePoint& theta) {
  BigSum s = evaluate(params, theta, 0, 30);
  return static_cast<double>(s.value);
}

}  // namespace ggf
