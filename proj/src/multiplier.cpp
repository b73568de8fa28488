#include "carleson/multiplier.hpp"

#include <algorithm>
#include <cmath>

namespace carleson {

double OmegaWindow::eval(double t) const {
  if (!(t > 0)) throw std::domain_error("omega: t must be positive");
  return phi2.invert(std::pow(t, -target_exp)) / phi1.invert(std::pow(t, -source_exp));
}

OmegaWindow omega_hardy_to_bergman(const GrowthFunction& phi1, const GrowthFunction& phi2,
                                   double alpha) {
  if (!(alpha > -1.0)) throw std::invalid_argument("omega: alpha must exceed -1");
  return {phi1, phi2, 1.0, 2.0 + alpha};
}

OmegaWindow omega_bergman_to_bergman(const GrowthFunction& phi1, const GrowthFunction& phi2,
                                     double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > -1.0))
    throw std::invalid_argument("omega: weights must exceed -1");
  return {phi1, phi2, 2.0 + alpha, 2.0 + beta};
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::h_omega_infinity: return "H_omega_infinity";
    case Regime::h_infinity: return "H_infinity";
    case Regime::zero_only: return "zero_only";
    case Regime::indeterminate: return "indeterminate";
  }
  return "?";
}

RegimeReport regime_classify(const GrowthFunction& phi1, const GrowthFunction& phi2,
                             const OmegaWindow& window, const ScanGrid& grid,
                             double comparable_band, double vanish_factor) {
  if (!quotient_monotone(phi1, phi2))
    throw precondition_error("quotient_monotone(Phi1,Phi2) fails: Phi2/Phi1 decreases");
  RegimeReport rep;
  const auto ts = grid.make();
  rep.omega_samples.reserve(ts.size());
  for (double t : ts) rep.omega_samples.emplace_back(t, window.eval(t));

  rep.omega_min = INFINITY;
  rep.omega_max = 0;
  for (const auto& [t, w] : rep.omega_samples) {
    rep.omega_min = std::min(rep.omega_min, w);
    rep.omega_max = std::max(rep.omega_max, w);
  }
  rep.comparable_to_one =
      rep.omega_min >= comparable_band && rep.omega_max <= 1.0 / comparable_band;

  // Vanishing-at-zero proxy: non-decreasing in t over the lower half of the
  // grid plus decisive decay of omega(t_min) against the grid midpoint.
  const size_t mid = rep.omega_samples.size() / 2;
  bool monotone = true;
  for (size_t i = 0; i + 1 <= mid; ++i)
    if (rep.omega_samples[i + 1].second < rep.omega_samples[i].second * (1.0 - 1e-9))
      monotone = false;
  const double w_min = rep.omega_samples.front().second;
  const double w_mid = rep.omega_samples[mid].second;
  rep.vanish_ratio = w_min / w_mid;
  rep.strict_vanish_flag = monotone && rep.vanish_ratio < 1e-3;
  rep.vanishes_at_zero = monotone && rep.vanish_ratio < vanish_factor;

  const auto idx1 = estimate_indices(phi1);
  const auto idx2 = estimate_indices(phi2);
  rep.b1 = idx1.upper;
  rep.a2 = idx2.lower;
  rep.index_gap = idx1.upper < idx2.lower - 1e-9;

  const auto cls2 = classify(phi2);
  rep.phi2_tilde = cls2.in_tilde_class;
  if (!rep.phi2_tilde)
    rep.notes.push_back("Phi2 tilde-class scan failed; regime theorems assume it");

  if (rep.comparable_to_one)
    rep.regime = Regime::h_infinity;
  else if (rep.vanishes_at_zero)
    rep.regime = Regime::zero_only;
  else if (rep.index_gap)
    rep.regime = Regime::h_omega_infinity;
  else
    rep.regime = Regime::indeterminate;
  rep.notes.push_back("limits are proxied by grid decay; reports stay grid-certified");
  return rep;
}

double h_omega_norm(const PlaneFunction& F, const OmegaWindow& window, const PointGrid& grid) {
  double sup = 0;
  for (double y : grid.ys) {
    const double w = window.eval(y);
    for (double x : grid.xs) sup = std::max(sup, F.eval(x, y) / w);
  }
  return sup;
}

ProductTest multiplier_product_test(const PlaneFunction& G, double g_sup,
                                    const GrowthFunction& phi1, const GrowthFunction& phi2,
                                    const OmegaWindow& window, double target_alpha,
                                    const std::vector<double>& witness_ys,
                                    const QuadratureConfig& cfg) {
  ProductTest out;
  const bool hardy_source = window.source_exp == 1.0;
  const double source_alpha = window.source_exp - 2.0;
  std::vector<double> ys = witness_ys;
  std::sort(ys.begin(), ys.end());

  out.entries.resize(ys.size());
  const Measure target = Measure::lebesgue_alpha(target_alpha);
#pragma omp parallel for schedule(dynamic)
  for (size_t i = 0; i < ys.size(); ++i) {
    const std::complex<double> z{0.0, ys[i]};
    const Witness w = hardy_source ? Witness::hardy_test(z, phi1)
                                   : Witness::bergman_test(z, phi1, source_alpha);
    const PlaneFunction Fw = w.as_plane_function();
    PlaneFunction product;
    product.eval = [G, Fw](double x, double y) { return G.eval(x, y) * Fw.eval(x, y); };
    product.envelope = Fw.envelope;
    product.envelope.amplitude *= g_sup;
    product.feature_scale = Fw.feature_scale;
    out.entries[i] = {ys[i], luxemburg_norm_plane(product, phi2, target, cfg, 1e-6)};
  }

  for (const auto& e : out.entries) {
    if (e.norm.status == LuxemburgResult::Status::not_in_space || !e.norm.quadrature_ok)
      out.any_not_in_space = true;
    else
      out.max_norm = std::max(out.max_norm, e.norm.norm);
  }
  // Trend toward y -> 0 over the witness family (entries sorted by y).
  bool monotone_down = true;
  size_t usable = 0;
  for (const auto& e : out.entries)
    if (e.norm.status == LuxemburgResult::Status::ok) ++usable;
  if (usable >= 3) {
    std::vector<double> vals;
    for (const auto& e : out.entries)
      if (e.norm.status == LuxemburgResult::Status::ok) vals.push_back(e.norm.norm);
    for (size_t i = 0; i + 1 < vals.size(); ++i)
      if (vals[i] < vals[i + 1] * (1.0 - 1e-9)) monotone_down = false;
    out.trend_unbounded = monotone_down && vals.front() >= 2.0 * vals.back();
  }
  out.multiplier_flag = !out.any_not_in_space && !out.trend_unbounded;
  out.h_omega_constant = h_omega_norm(G, window);
  return out;
}

}  // namespace carleson
