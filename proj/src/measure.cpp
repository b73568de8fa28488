#include "carleson/measure.hpp"

#include <cmath>

namespace carleson {

double box_volume(const Interval& I, double alpha) {
  if (!(alpha > -1.0)) throw std::invalid_argument("box_volume: alpha must exceed -1");
  if (!(I.length > 0.0)) throw std::invalid_argument("box_volume: interval length must be positive");
  return std::pow(I.length, 2.0 + alpha) / (1.0 + alpha);
}

Measure Measure::lebesgue_alpha(double alpha) {
  if (!(alpha > -1.0)) throw std::invalid_argument("Measure: alpha must exceed -1");
  Measure m;
  m.kind_ = Kind::lebesgue_alpha;
  m.alpha_ = alpha;
  m.description_ = "V_alpha(" + std::to_string(alpha) + ")";
  m.growth_bound_ = {1.0, alpha};
  return m;
}

Measure Measure::density(std::function<double(double, double)> w, std::string description) {
  Measure m;
  m.kind_ = Kind::density;
  m.density_ = std::move(w);
  m.description_ = std::move(description);
  return m;
}

Measure Measure::density_expression(const Expression& expr) {
  Measure m;
  m.kind_ = Kind::density;
  m.density_ = [expr](double x, double y) { return expr.eval2(x, y); };
  m.description_ = "density{" + expr.source() + "}";
  return m;
}

Measure Measure::density_of_y(std::function<double(double)> w, std::string description) {
  Measure m;
  m.kind_ = Kind::density;
  m.y_only_ = true;
  m.density_ = [w = std::move(w)](double, double y) { return w(y); };
  m.description_ = std::move(description);
  return m;
}

Measure Measure::atomic(std::vector<AtomicPoint> points) {
  for (const auto& p : points) {
    if (!(p.y > 0.0)) throw std::invalid_argument("Measure: atomic points must lie in C+");
    if (!(p.mass > 0.0)) throw std::invalid_argument("Measure: atomic masses must be positive");
  }
  Measure m;
  m.kind_ = Kind::atomic;
  m.points_ = std::move(points);
  m.description_ = "atomic(" + std::to_string(m.points_.size()) + " points)";
  return m;
}

double Measure::alpha() const {
  if (kind_ != Kind::lebesgue_alpha) throw std::logic_error("Measure: not a V_alpha measure");
  return alpha_;
}

double Measure::density_at(double x, double y) const {
  if (kind_ == Kind::lebesgue_alpha) return std::pow(y, alpha_);
  if (kind_ != Kind::density) throw std::logic_error("Measure: not a density measure");
  return density_(x, y);
}

void Measure::declare_growth_bound(double amplitude, double y_power) {
  growth_bound_ = {amplitude, y_power};
}

std::optional<std::pair<double, double>> Measure::growth_bound() const { return growth_bound_; }

}  // namespace carleson
