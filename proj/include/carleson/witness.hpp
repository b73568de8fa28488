#pragma once

#include <complex>

#include "carleson/expression.hpp"
#include "carleson/growth.hpp"
#include "carleson/orlicz.hpp"

namespace carleson {

// rho = 1 when Phi is convex (lower index >= 1), a_Phi when Phi is concave-type.
double select_rho(const GrowthFunction& phi);

// C_alpha = B(1+alpha, 2+alpha) B(1/2, (3+2alpha)/2).
double bergman_c_alpha(double alpha);

// Unit-ball test function anchored at z: the Hardy kind evaluates
// Phi^{-1}(1/(pi y)) y^{2/rho} / (w - conj z)^{2/rho}, the Bergman kind
// Phi^{-1}(1/(C_alpha y^{2+alpha})) y^{(4+2alpha)/rho} / (w - conj z)^{(4+2alpha)/rho}.
class Witness {
 public:
  enum class Kind { hardy, bergman };

  static Witness hardy_test(std::complex<double> z, const GrowthFunction& phi);
  static Witness bergman_test(std::complex<double> z, const GrowthFunction& phi,
                              double alpha);

  // |F_z(w)| for w = x+iy in C+.  Fractional powers are principal-branch;
  // only the modulus is exposed, so the branch never shows.
  double modulus(double x, double y) const;
  double modulus(std::complex<double> w) const;

  // Exact power-decay description: modulus == amplitude |w - conj z|^{-decay}.
  PlaneFunction as_plane_function() const;

  Kind kind() const { return kind_; }
  std::complex<double> anchor() const { return z_; }
  double rho() const { return rho_; }
  double alpha() const { return alpha_; }
  double prefactor() const { return prefactor_; }
  double decay_exponent() const { return exponent_; }

 private:
  Kind kind_ = Kind::hardy;
  std::complex<double> z_;
  double alpha_ = 0;
  double rho_ = 1;
  double prefactor_ = 0;
  double exponent_ = 0;
};

struct UnitBallCheck {
  double modular = 0;          // sup over lines (hardy) or the area modular (bergman)
  double tolerance = 0;        // slack granted to the quadrature
  bool pass = false;
  bool quadrature_ok = true;
  std::vector<std::pair<double, double>> per_line;  // (y, line modular), hardy only
};

UnitBallCheck verify_hardy_modular(const PlaneFunction& F, const GrowthFunction& phi,
                                   const std::vector<double>& y_grid,
                                   const QuadratureConfig& cfg = {});
UnitBallCheck verify_bergman_modular(const PlaneFunction& F, const GrowthFunction& phi,
                                     double alpha, const QuadratureConfig& cfg = {});
// Dispatch on the witness kind; hardy uses a log y-grid on [1e-3, 1e3].
UnitBallCheck verify_unit_ball(const Witness& w, const GrowthFunction& phi,
                               const QuadratureConfig& cfg = {});

// Poisson integral U_f(x+iy) of boundary data f(t), with |f| <= f_sup and
// compact-ish support radius for the tail control.
IntegrationResult poisson_integral(const std::function<double(double)>& f, double x,
                                   double y, double f_sup, double support_radius,
                                   const QuadratureConfig& cfg = {});

// U_f wrapped as a half-plane function; mass_bound >= int |f|.
PlaneFunction poisson_plane(std::function<double(double)> f, double f_sup,
                            double support_center, double support_radius,
                            double mass_bound, const QuadratureConfig& cfg = {});

struct PointwiseBoundCheck {
  double max_ratio = 0;   // |F(z)| / (constant * Phi^{-1}(...) * norm_bound)
  double constant = 1;    // 1 for the Hardy bound, (4 C'_alpha/pi)^{1/rho} for Bergman
  double argmax_x = 0, argmax_y = 0;
  bool pass = false;
};

// |F(x+iy)| <= Phi^{-1}(2/(pi y)) ||F||; ratios over the grid against the
// stated constant, norm_bound standing in for the Luxemburg norm.
PointwiseBoundCheck pointwise_bound_check_hardy(
    const PlaneFunction& F, const GrowthFunction& phi, double norm_bound,
    const std::vector<std::pair<double, double>>& z_grid);

// |F(x+iy)| <= C Phi^{-1}(1/y^{2+alpha}) ||F|| with C = (4 C'_alpha/pi)^{1/rho}.
PointwiseBoundCheck pointwise_bound_check_bergman(
    const PlaneFunction& F, const GrowthFunction& phi, double alpha, double norm_bound,
    const std::vector<std::pair<double, double>>& z_grid);

}  // namespace carleson
