#include "carleson/special.hpp"

#include <cmath>

namespace carleson {

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("log_gamma: argument must be positive");
#if defined(__GLIBC__) || defined(__APPLE__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

double beta_value(double m, double n) {
  if (!(m > 0.0) || !(n > 0.0))
    throw std::invalid_argument("beta_value: arguments must be positive");
  return std::exp(log_gamma(m) + log_gamma(n) - log_gamma(m + n));
}

OracleValue oracle_line_integral(double alpha, double y) {
  if (!(y > 0.0)) throw std::invalid_argument("oracle_line_integral: y must be positive");
  if (!(alpha > 1.0)) return {0.0, true};
  return {beta_value(0.5, (alpha - 1.0) / 2.0) * std::pow(y, 1.0 - alpha), false};
}

OracleValue oracle_vertical_integral(double alpha, double beta, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("oracle_vertical_integral: t must be positive");
  if (!(alpha > -1.0) || !(beta > alpha + 1.0)) return {0.0, true};
  return {beta_value(1.0 + alpha, beta - alpha - 1.0) * std::pow(t, alpha + 1.0 - beta), false};
}

OracleValue oracle_halfplane_power_integral(double alpha, double m, double y) {
  // int_0^inf J_m(v+y) v^alpha dv with J_m from the line oracle.
  OracleValue line = oracle_line_integral(m, 1.0);
  if (line.divergent) return {0.0, true};
  OracleValue vert = oracle_vertical_integral(alpha, m - 1.0, y);
  if (vert.divergent) return {0.0, true};
  return {beta_value(0.5, (m - 1.0) / 2.0) * vert.value, false};
}

}  // namespace carleson
