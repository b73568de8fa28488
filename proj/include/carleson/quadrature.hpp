#pragma once

#include <functional>
#include <string>

#include "carleson/measure.hpp"

namespace carleson {

// Power-decay bound |f(x+iy)| <= amplitude * ((x-center_x)^2 + (y+offset_y)^2)^{-decay/2},
// guaranteed for sqrt((x-center_x)^2+(y+offset_y)^2) >= valid_radius.  The
// tail of every improper integral in this project is controlled through one
// of these.
struct DecayEnvelope {
  double amplitude = 0;
  double center_x = 0;
  double offset_y = 0;
  double decay = 0;
  double valid_radius = 0;
  bool declared() const { return amplitude > 0 && decay > 0; }
};

// Nonnegative evaluable function on the upper half-plane.
struct PlaneFunction {
  std::function<double(double, double)> eval;  // (x, y), y > 0
  DecayEnvelope envelope;
  double feature_scale = 1.0;  // geometric size of the interesting region
};

// Nonnegative evaluable function on the line, |f(x)| <= amplitude*((x-center)^2+offset^2)^{-decay/2}.
struct LineFunction {
  std::function<double(double)> eval;
  double env_amplitude = 0;
  double env_center = 0;
  double env_offset = 1.0;
  double env_decay = 0;
  double feature_scale = 1.0;
  std::vector<double> anchors;  // jump/feature abscissae, used by mesh searches
  bool envelope_declared() const { return env_amplitude > 0 && env_decay > 0; }
};

struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-7;
  // Truncation box; zero means "derive from the envelope".
  double x_half_width = 0;
  double y_min = 0;
  double y_max = 0;
  int max_cells = 40000;
};

struct IntegrationResult {
  double value = 0;
  double error_estimate = 0;  // quadrature error plus tail bound
  double tail_bound = 0;
  bool converged = true;       // quadrature tolerance reached
  bool tail_divergent = false; // envelope cannot bound the tail (or none declared)
  int cells = 0;
  std::string note;

  bool ok() const { return converged && !tail_divergent; }
};

// Adaptive tensor-Gauss quadrature of f against mu over a truncation box,
// plus the envelope tail bound.  Atomic measures are summed directly.
// Deterministic for fixed inputs regardless of thread count.
IntegrationResult integrate(const Measure& mu, const PlaneFunction& f,
                            const QuadratureConfig& cfg);

// mu(Q_I): closed form for V_alpha, 1-D quadrature for x-independent
// densities, 2-D quadrature otherwise, direct sum for atomic measures.
IntegrationResult measure_of_square(const Measure& mu, const CarlesonSquare& Q,
                                    const QuadratureConfig& cfg = {});

// Adaptive 1-D integral of f over the line (or [a,b] when finite bounds are
// given), with the envelope tail bound outside the truncation window.
IntegrationResult integrate_line(const LineFunction& f, const QuadratureConfig& cfg);
IntegrationResult integrate_segment(const std::function<double(double)>& f, double a,
                                    double b, double abs_tol, double rel_tol);

// Adaptive quadrature of g over an axis-aligned box, with geometric initial
// tiling toward y0 (integrable boundary behavior refines there).
IntegrationResult integrate_over_box(const std::function<double(double, double)>& g,
                                     double x0, double x1, double y0, double y1,
                                     double abs_tol, double rel_tol, int max_cells = 20000);

// Serial reference implementations, kept for testing and benchmarking the
// production kernels.  Plain recursive adaptive Simpson; no OpenMP, no
// batching, no envelope machinery.
namespace reference {
double integrate_box(const std::function<double(double, double)>& g, double x0, double x1,
                     double y0, double y1, double tol, int max_depth = 28);
double integrate_interval(const std::function<double(double)>& g, double a, double b,
                          double tol, int max_depth = 40);
}  // namespace reference

}  // namespace carleson
