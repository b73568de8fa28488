#include "carleson/witness.hpp"

#include <algorithm>
#include <cmath>

#include "carleson/special.hpp"

namespace carleson {

double select_rho(const GrowthFunction& phi) {
  const auto idx = estimate_indices(phi);
  return idx.lower >= 1.0 - 1e-12 ? 1.0 : idx.lower;
}

double bergman_c_alpha(double alpha) {
  if (!(alpha > -1.0)) throw std::invalid_argument("bergman_c_alpha: alpha must exceed -1");
  return beta_value(1.0 + alpha, 2.0 + alpha) * beta_value(0.5, (3.0 + 2.0 * alpha) / 2.0);
}

Witness Witness::hardy_test(std::complex<double> z, const GrowthFunction& phi) {
  if (!(z.imag() > 0)) throw std::domain_error("hardy_test: anchor must lie in C+");
  Witness w;
  w.kind_ = Kind::hardy;
  w.z_ = z;
  w.rho_ = select_rho(phi);
  w.prefactor_ = phi.invert(1.0 / (M_PI * z.imag()));
  w.exponent_ = 2.0 / w.rho_;
  return w;
}

Witness Witness::bergman_test(std::complex<double> z, const GrowthFunction& phi,
                              double alpha) {
  if (!(z.imag() > 0)) throw std::domain_error("bergman_test: anchor must lie in C+");
  Witness w;
  w.kind_ = Kind::bergman;
  w.z_ = z;
  w.alpha_ = alpha;
  w.rho_ = select_rho(phi);
  w.prefactor_ = phi.invert(1.0 / (bergman_c_alpha(alpha) * std::pow(z.imag(), 2.0 + alpha)));
  w.exponent_ = (4.0 + 2.0 * alpha) / w.rho_;
  return w;
}

double Witness::modulus(double x, double y) const {
  if (!(y > 0)) throw std::domain_error("witness modulus: point must lie in C+");
  const double dx = x - z_.real();
  const double dy = y + z_.imag();
  const double r = std::hypot(dx, dy);
  return prefactor_ * std::pow(z_.imag() / r, exponent_);
}

double Witness::modulus(std::complex<double> w) const { return modulus(w.real(), w.imag()); }

PlaneFunction Witness::as_plane_function() const {
  PlaneFunction f;
  const Witness w = *this;
  f.eval = [w](double x, double y) { return w.modulus(x, y); };
  f.envelope.amplitude = prefactor_ * std::pow(z_.imag(), exponent_);
  f.envelope.decay = exponent_;
  f.envelope.center_x = z_.real();
  f.envelope.offset_y = z_.imag();
  f.envelope.valid_radius = 0;  // the bound is an identity
  f.feature_scale = z_.imag();
  return f;
}

UnitBallCheck verify_hardy_modular(const PlaneFunction& F, const GrowthFunction& phi,
                                   const std::vector<double>& y_grid,
                                   const QuadratureConfig& cfg) {
  UnitBallCheck chk;
  std::vector<double> ys = y_grid;
  std::sort(ys.begin(), ys.end());
  chk.per_line.resize(ys.size());
  double worst_err = 0;
#pragma omp parallel for schedule(dynamic)
  for (size_t i = 0; i < ys.size(); ++i) {
    const auto m = modular_line(line_restriction(F, ys[i]), phi, cfg);
    chk.per_line[i] = {ys[i], m.value};
#pragma omp critical
    {
      chk.quadrature_ok = chk.quadrature_ok && m.ok();
      worst_err = std::max(worst_err, m.error_estimate);
    }
  }
  for (const auto& [y, m] : chk.per_line) chk.modular = std::max(chk.modular, m);
  chk.tolerance = std::max(1e-9, 10.0 * worst_err);
  chk.pass = chk.quadrature_ok && chk.modular <= 1.0 + chk.tolerance;
  return chk;
}

UnitBallCheck verify_bergman_modular(const PlaneFunction& F, const GrowthFunction& phi,
                                     double alpha, const QuadratureConfig& cfg) {
  UnitBallCheck chk;
  const auto m = modular_plane(F, phi, Measure::lebesgue_alpha(alpha), cfg);
  chk.modular = m.value;
  chk.quadrature_ok = m.ok();
  chk.tolerance = std::max(1e-9, 10.0 * m.error_estimate);
  chk.pass = chk.quadrature_ok && chk.modular <= 1.0 + chk.tolerance;
  return chk;
}

UnitBallCheck verify_unit_ball(const Witness& w, const GrowthFunction& phi,
                               const QuadratureConfig& cfg) {
  if (w.kind() == Witness::Kind::bergman)
    return verify_bergman_modular(w.as_plane_function(), phi, w.alpha(), cfg);
  std::vector<double> ys;
  for (int e = -3; e <= 3; ++e) ys.push_back(std::pow(10.0, e));
  return verify_hardy_modular(w.as_plane_function(), phi, ys, cfg);
}

IntegrationResult poisson_integral(const std::function<double(double)>& f, double x,
                                   double y, double f_sup, double support_radius,
                                   const QuadratureConfig& cfg) {
  if (!(y > 0)) throw std::domain_error("poisson_integral: evaluation point must lie in C+");
  LineFunction g;
  g.eval = [f, x, y](double t) {
    const double d = x - t;
    return (1.0 / M_PI) * y * f(t) / (d * d + y * y);
  };
  g.env_amplitude = f_sup * y / M_PI;
  g.env_center = x;
  g.env_offset = y;
  g.env_decay = 2.0;
  g.feature_scale = std::max(y, support_radius);
  g.anchors = {x - support_radius, x + support_radius};
  QuadratureConfig c = cfg;
  if (c.rel_tol > 1e-9) c.rel_tol = 1e-9;
  return integrate_line(g, c);
}

PlaneFunction poisson_plane(std::function<double(double)> f, double f_sup,
                            double support_center, double support_radius,
                            double mass_bound, const QuadratureConfig& cfg) {
  PlaneFunction F;
  F.eval = [f, f_sup, support_radius, cfg](double x, double y) {
    return std::fabs(poisson_integral(f, x, y, f_sup, support_radius, cfg).value);
  };
  F.envelope.amplitude = 4.0 * mass_bound / M_PI;
  F.envelope.decay = 1.0;
  F.envelope.center_x = support_center;
  F.envelope.offset_y = 0.0;
  F.envelope.valid_radius = 2.0 * std::max(support_radius, 1e-6);
  F.feature_scale = std::max(support_radius, 1e-3);
  return F;
}

PointwiseBoundCheck pointwise_bound_check_hardy(
    const PlaneFunction& F, const GrowthFunction& phi, double norm_bound,
    const std::vector<std::pair<double, double>>& z_grid) {
  PointwiseBoundCheck chk;
  chk.constant = 1.0;
  for (const auto& [x, y] : z_grid) {
    const double bound = phi.invert(2.0 / (M_PI * y)) * norm_bound;
    const double ratio = F.eval(x, y) / bound;
    if (ratio > chk.max_ratio) {
      chk.max_ratio = ratio;
      chk.argmax_x = x;
      chk.argmax_y = y;
    }
  }
  chk.pass = chk.max_ratio <= 1.0 + 1e-9;
  return chk;
}

PointwiseBoundCheck pointwise_bound_check_bergman(
    const PlaneFunction& F, const GrowthFunction& phi, double alpha, double norm_bound,
    const std::vector<std::pair<double, double>>& z_grid) {
  PointwiseBoundCheck chk;
  const double rho = select_rho(phi);
  const double c_prime = std::max(std::pow(2.0, alpha), std::pow(2.0 / 3.0, alpha));
  chk.constant = std::pow(4.0 * c_prime / M_PI, 1.0 / rho);
  for (const auto& [x, y] : z_grid) {
    const double bound = chk.constant * phi.invert(std::pow(y, -(2.0 + alpha))) * norm_bound;
    const double ratio = F.eval(x, y) / bound;
    if (ratio > chk.max_ratio) {
      chk.max_ratio = ratio;
      chk.argmax_x = x;
      chk.argmax_y = y;
    }
  }
  chk.pass = chk.max_ratio <= 1.0 + 1e-9;
  return chk;
}

}  // namespace carleson
