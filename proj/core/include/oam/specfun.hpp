#pragma once

#include <vector>

namespace oam {

// A real number stored as a sign and the natural log of its magnitude.
// Lets factorial-heavy expressions be multiplied and divided without
// overflowing the double range; zero is representable as sign == 0.
struct SignedLogValue {
  int sign = 0;             // -1, 0 or +1
  double log_magnitude = 0; // ln|x|; ignored when sign == 0

  static SignedLogValue from_value(double x);
  static SignedLogValue from_log(int sign, double log_magnitude);

  // sign * exp(log_magnitude); overflows to +-inf, underflows to +-0.
  double value() const;

  SignedLogValue operator*(const SignedLogValue& rhs) const;
  // rhs must be nonzero; throws std::domain_error otherwise.
  SignedLogValue operator/(const SignedLogValue& rhs) const;
};

// ln(n!) for n >= 0; exact table for small n, lgamma beyond.
// Throws std::domain_error for n < 0.
double log_factorial(int n);

// Generalized Laguerre polynomial L_p^alpha(x) evaluated by the upward
// three-term recurrence, which keeps full precision where the alternating
// power series cancels; the value at x = 0 is the exact binomial
// coefficient binom(p + alpha, p).
// Requires p >= 0 and alpha >= 0; x may be any finite real.
double assoc_laguerre(int p, int alpha, double x);

// Monomial coefficients c_k with L_p^alpha(x) = sum_k c_k x^k,
// c_k = (-1)^k binom(p + alpha, p - k) / k!, k = 0..p.
std::vector<double> laguerre_coefficients(int p, int alpha);

} // namespace oam
