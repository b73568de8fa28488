#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "carleson/common.hpp"
#include "carleson/expression.hpp"

namespace carleson {

// A bounded interval given by center and positive length.
struct Interval {
  double center = 0;
  double length = 1;

  double lo() const { return center - 0.5 * length; }
  double hi() const { return center + 0.5 * length; }
  static Interval from_endpoints(double a, double b) { return {0.5 * (a + b), b - a}; }
};

// Carleson square over I: x in I, 0 < y < |I|.
struct CarlesonSquare {
  Interval base;
  bool contains(double x, double y) const {
    return x >= base.lo() && x <= base.hi() && y > 0 && y < base.length;
  }
};

// |Q_I|_alpha = |I|^{2+alpha} / (1+alpha), alpha > -1.
double box_volume(const Interval& I, double alpha);

struct AtomicPoint {
  double x = 0, y = 0, mass = 0;
};

// Positive Borel measure on the upper half-plane.
class Measure {
 public:
  enum class Kind { lebesgue_alpha, density, atomic };

  static Measure lebesgue_alpha(double alpha);
  // General density w(x,y); the optional bound "w(x,y) <= bound_amplitude *
  // y^{bound_y_power} for y >= 1" feeds the analytic tail estimates.
  static Measure density(std::function<double(double, double)> w, std::string description);
  static Measure density_expression(const Expression& expr);
  // x-independent density; Carleson-square masses reduce to 1-D integrals.
  static Measure density_of_y(std::function<double(double)> w, std::string description);
  static Measure atomic(std::vector<AtomicPoint> points);

  Kind kind() const { return kind_; }
  double alpha() const;                         // lebesgue_alpha only
  double density_at(double x, double y) const;  // density only
  bool density_is_y_only() const { return y_only_; }
  const std::vector<AtomicPoint>& points() const { return points_; }
  const std::string& description() const { return description_; }

  // Declared polynomial growth bound of the density for y -> infinity; used
  // by tail estimates.  Defaults to the exact weight for lebesgue_alpha.
  void declare_growth_bound(double amplitude, double y_power);
  std::optional<std::pair<double, double>> growth_bound() const;

 private:
  Measure() = default;
  Kind kind_ = Kind::lebesgue_alpha;
  double alpha_ = 0;
  bool y_only_ = false;
  std::function<double(double, double)> density_;
  std::vector<AtomicPoint> points_;
  std::string description_;
  std::optional<std::pair<double, double>> growth_bound_;
};

}  // namespace carleson
