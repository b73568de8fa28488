#pragma once

#include <stdexcept>

namespace carleson {

// Thread-safe log-Gamma for x > 0.
double log_gamma(double x);

// Beta function B(m,n) = Gamma(m)Gamma(n)/Gamma(m+n), m,n > 0.
double beta_value(double m, double n);

// Closed-form value of an improper integral together with its convergence
// status.  A divergent integral carries no value.
struct OracleValue {
  double value = 0.0;
  bool divergent = false;
};

// J_alpha(y) = int_R dx / |x+iy|^alpha = B(1/2,(alpha-1)/2) y^{1-alpha},
// convergent iff alpha > 1.
OracleValue oracle_line_integral(double alpha, double y);

// I(t) = int_0^inf y^alpha / (t+y)^beta dy = B(1+alpha,beta-alpha-1) t^{alpha+1-beta},
// convergent iff alpha > -1 and beta > alpha+1.
OracleValue oracle_vertical_integral(double alpha, double beta, double t);

// int_{C+} |w - conj(z)|^{-m} dV_alpha(w) for z = x+iy, composed from the two
// oracles above.  Convergent iff m > 1 and m > alpha + 2.
OracleValue oracle_halfplane_power_integral(double alpha, double m, double y);

}  // namespace carleson
