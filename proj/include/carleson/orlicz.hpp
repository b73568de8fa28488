#pragma once

#include <functional>

#include "carleson/growth.hpp"
#include "carleson/quadrature.hpp"

namespace carleson {

struct LuxemburgResult {
  enum class Status { ok, zero, not_in_space };
  Status status = Status::ok;
  double norm = 0;
  double modular_at_norm = 0;
  int iterations = 0;
  double bracket_lo = 0, bracket_hi = 0;
  bool quadrature_ok = true;

  bool ok() const { return status != Status::not_in_space && quadrature_ok; }
};

// int Phi(|f|) dmu over the half-plane; the composed integrand inherits a
// decay envelope derived from f's envelope and the lower index of Phi.
IntegrationResult modular_plane(const PlaneFunction& f, const GrowthFunction& phi,
                                const Measure& mu, const QuadratureConfig& cfg = {});

// int Phi(|f|) dx over the line.
IntegrationResult modular_line(const LineFunction& f, const GrowthFunction& phi,
                               const QuadratureConfig& cfg = {});

// Luxemburg gauge inf{lambda > 0 : modular(f/lambda) <= 1} by bisection on a
// bracket seeded from the modular and the lower index.
LuxemburgResult luxemburg_norm_plane(const PlaneFunction& f, const GrowthFunction& phi,
                                     const Measure& mu, const QuadratureConfig& cfg = {},
                                     double tol = 1e-9);
LuxemburgResult luxemburg_norm_line(const LineFunction& f, const GrowthFunction& phi,
                                    const QuadratureConfig& cfg = {}, double tol = 1e-9);

// Generic driver: modular_of(lambda) must be non-increasing in lambda.
LuxemburgResult luxemburg_from_modular(
    const std::function<IntegrationResult(double)>& modular_of, double lower_index,
    double tol);

struct NormModularCheck {
  bool pass = false;
  double modular = 0;
  double norm = 0;
  double upper_constant = 0;  // modular <= C max(norm^a, norm^b)
  double lower_constant = 0;  // norm <= C max(modular^{1/a}, modular^{1/b})
};

NormModularCheck norm_modular_bounds_check(double modular, double norm,
                                           const GrowthIndices& idx);

struct LineProfilePoint {
  double y = 0;
  LuxemburgResult norm;
};

struct LineProfile {
  std::vector<LineProfilePoint> points;
  bool non_increasing = false;     // within 2*tol, smallest y first
  double hardy_norm_estimate = 0;  // profile value at the smallest grid y
  bool extrapolation_flag = true;  // the sup over y>0 is only estimated
};

// Per-line Luxemburg norms of y -> F(.+iy); the Hardy-Orlicz norm estimate is
// the value at the smallest grid height.
LineProfile line_norm_profile(const PlaneFunction& F, const GrowthFunction& phi,
                              const std::vector<double>& y_grid,
                              const QuadratureConfig& cfg = {}, double tol = 1e-9);

// Restriction of a half-plane function to the horizontal line at height y,
// with the induced envelope.
LineFunction line_restriction(const PlaneFunction& F, double y);

// Envelope of Phi(|f|) given the envelope of f; lower_index is a_Phi.
DecayEnvelope compose_envelope(const DecayEnvelope& env, const GrowthFunction& phi,
                               double lower_index);

}  // namespace carleson
