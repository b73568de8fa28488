#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "carleson/common.hpp"

namespace carleson {

enum class EvalMode { value, derivative, slope_ratio };

// A growth function: a continuous increasing bijection of [0,inf) with an
// evaluable derivative and inverse.  Instances are immutable and cheap to
// copy; all operations on them are pure.
class GrowthFunction {
 public:
  // t^p, p > 0.
  static GrowthFunction power(double p);
  // t^p * ln(e+t)^a, p > 0.
  static GrowthFunction power_log(double p, double a);
  // Continuous piecewise power: exponent exponents[i] on the i-th segment
  // delimited by the increasing positive breakpoints; exponents.size() must
  // be breakpoints.size()+1.  Normalized so the first segment is plain t^p0.
  static GrowthFunction piecewise_power(std::vector<double> breakpoints,
                                        std::vector<double> exponents);
  // Monotone table (t_i, phi_i), both strictly increasing and positive;
  // evaluated by monotone linear interpolation, extended by the boundary
  // power laws outside the table.
  static GrowthFunction tabulated(std::vector<double> t, std::vector<double> phi);

  // outer o inner^{-1}.  Symbolic for power/power, numeric wrapper otherwise.
  static GrowthFunction compose_inverse(const GrowthFunction& outer,
                                        const GrowthFunction& inner);
  // t -> Phi(t^s), s > 0.
  GrowthFunction power_subst(double s) const;
  // t -> 1 / Phi(1/t), extended by 0 at 0.
  GrowthFunction reciprocal() const;
  // Phi^{-1} wrapped as a growth function.
  GrowthFunction inverse_as_growth() const;

  double value(double t) const;
  double derivative(double t) const;       // t > 0
  double slope_ratio(double t) const;      // t Phi'(t) / Phi(t), t > 0
  double evaluate(double t, EvalMode mode) const;

  // Solve Phi(t) = y.  Closed form where the family has one, otherwise
  // bracketed bisection; |Phi(t)-y| <= tol*max(1,y) on return.
  double invert(double y, double tol = 1e-12) const;
  bool has_closed_inverse() const;

  const std::string& description() const;
  double domain_floor() const;  // smallest t used in numeric scans

  struct Impl;

 private:
  explicit GrowthFunction(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

struct GrowthIndices {
  double lower = 0;  // grid-certified inf of the slope ratio
  double upper = 0;  // grid-certified sup
  ScanGrid grid;
};

// Grid min/max of t Phi'(t)/Phi(t); exact (p,p) for the power family.
GrowthIndices estimate_indices(const GrowthFunction& phi, const ScanGrid& grid = {});

struct DiniResult {
  double constant = 0;        // grid-sup of t/Phi1(t) * int_0^t Phi2(s)/s^2 ds
  bool unbounded = false;     // ratio grows monotonically across the top decades
  bool divergent_at_zero = false;  // the integral itself diverges near 0
  double argmax_t = 0;
};

// Dini condition int_0^t Phi2(s)/s^2 ds <= C Phi1(t)/t, the exact side of
// the maximal-operator boundedness equivalence.
DiniResult dini_constant(const GrowthFunction& phi1, const GrowthFunction& phi2,
                         const ScanGrid& grid = {});

struct TwoVarBound {
  bool holds = false;      // no unbounded trend detected on the scan
  double constant = 0;     // grid-sup of the defining ratio
  double argmax_s = 0, argmax_t = 0;
};

struct ClassReport {
  std::optional<double> upper_type_q;   // set when in U (value b_Phi)
  std::optional<double> lower_type_p;   // set when in L (value a_Phi)
  GrowthIndices indices;
  bool delta2 = false;
  double delta2_constant = 0;
  bool nabla2 = false;                  // via the Dini ratio
  double nabla2_constant = 0;
  bool nabla2_divergent = false;
  TwoVarBound submultiplicative;        // Phi(st) <= C1 Phi(s)Phi(t)
  TwoVarBound quotient_upper;           // Phi(s/t) <= C2 Phi(s)/t^q, s,t >= 1
  TwoVarBound quotient_lower;           // Phi(s/t) <= C2 s^p/Phi(t), s,t >= 1
  bool in_tilde_class = false;          // member of the tilde variant of its class
  std::vector<std::string> notes;

  bool in_U() const { return upper_type_q.has_value(); }
  bool in_L() const { return lower_type_p.has_value(); }
};

ClassReport classify(const GrowthFunction& phi, const ScanGrid& grid = {});

// Is t -> Phi2(t)/Phi1(t) non-decreasing on the scan grid (within rel_tol)?
bool quotient_monotone(const GrowthFunction& phi1, const GrowthFunction& phi2,
                       const ScanGrid& grid = {}, double rel_tol = 1e-9);

// Grid-sup of Phi(s/t) Phi(t) / Phi(s) over a 2-D log grid; finite for
// members of the tilde classes.
TwoVarBound quotient_bound_check(const GrowthFunction& phi, const ScanGrid& grid = {});

// int_0^t f(s)/s^2 ds via geometric panels toward 0 with a tail estimate.
struct PanelIntegral {
  double value = 0;
  double tail_estimate = 0;
  bool divergent = false;
};
PanelIntegral integrate_growth_over_s2(const GrowthFunction& phi, double t);

}  // namespace carleson
