#include "carleson/orlicz.hpp"

#include <algorithm>
#include <cmath>

namespace carleson {

DecayEnvelope compose_envelope(const DecayEnvelope& env, const GrowthFunction& phi,
                               double lower_index) {
  DecayEnvelope out;
  if (!env.declared() || !(lower_index > 0)) return out;
  // Valid power bound only where the argument stays below u1; anchor the
  // radius so u1 <= 1 and shave the index against grid error.
  const double a = lower_index * (1.0 - 1e-6);
  const double r1 = std::max({env.valid_radius, std::pow(env.amplitude, 1.0 / env.decay),
                              1e-8});
  const double u1 = env.amplitude * std::pow(r1, -env.decay);
  out.amplitude = 1.05 * phi.value(u1) * std::pow(r1, env.decay * a);
  out.decay = env.decay * a;
  out.center_x = env.center_x;
  out.offset_y = env.offset_y;
  out.valid_radius = r1;
  return out;
}

IntegrationResult modular_plane(const PlaneFunction& f, const GrowthFunction& phi,
                                const Measure& mu, const QuadratureConfig& cfg) {
  const double a = estimate_indices(phi).lower;
  PlaneFunction g;
  g.eval = [f, phi](double x, double y) { return phi.value(std::fabs(f.eval(x, y))); };
  g.envelope = compose_envelope(f.envelope, phi, a);
  g.feature_scale = f.feature_scale;
  return integrate(mu, g, cfg);
}

namespace {

LineFunction compose_line(const LineFunction& f, const GrowthFunction& phi, double a) {
  LineFunction g;
  g.eval = [f, phi](double x) { return phi.value(std::fabs(f.eval(x))); };
  if (f.envelope_declared()) {
    DecayEnvelope env;
    env.amplitude = f.env_amplitude;
    env.center_x = f.env_center;
    env.offset_y = f.env_offset;
    env.decay = f.env_decay;
    env.valid_radius = std::max(f.env_offset, 1e-8);
    const auto composed = compose_envelope(env, phi, a);
    g.env_amplitude = composed.amplitude;
    g.env_center = composed.center_x;
    g.env_offset = composed.offset_y;
    g.env_decay = composed.decay;
  }
  g.feature_scale = f.feature_scale;
  g.anchors = f.anchors;
  return g;
}

LineFunction scale_line(const LineFunction& f, double lambda) {
  LineFunction g = f;
  g.eval = [f, lambda](double x) { return f.eval(x) / lambda; };
  g.env_amplitude = f.env_amplitude / lambda;
  return g;
}

PlaneFunction scale_plane(const PlaneFunction& f, double lambda) {
  PlaneFunction g = f;
  g.eval = [f, lambda](double x, double y) { return f.eval(x, y) / lambda; };
  g.envelope.amplitude = f.envelope.amplitude / lambda;
  return g;
}

}  // namespace

IntegrationResult modular_line(const LineFunction& f, const GrowthFunction& phi,
                               const QuadratureConfig& cfg) {
  const double a = estimate_indices(phi).lower;
  return integrate_line(compose_line(f, phi, a), cfg);
}

LuxemburgResult luxemburg_from_modular(
    const std::function<IntegrationResult(double)>& modular_of, double lower_index,
    double tol) {
  LuxemburgResult res;
  const auto base = modular_of(1.0);
  if (base.value == 0.0 && base.converged) {
    res.status = LuxemburgResult::Status::zero;
    return res;
  }
  if (base.tail_divergent) {
    // Composed tail decay does not depend on lambda, so no rescaling helps.
    res.status = LuxemburgResult::Status::not_in_space;
    return res;
  }
  double hi = std::pow(std::max(base.value, 1e-300), 1.0 / std::max(lower_index, 1e-3)) + 1.0;
  double lo = hi * 1e-16;
  int guard = 0;
  while (modular_of(hi).value > 1.0 && guard++ < 80) hi *= 4.0;
  if (guard >= 80) {
    res.status = LuxemburgResult::Status::not_in_space;
    return res;
  }
  guard = 0;
  while (modular_of(lo).value <= 1.0 && guard++ < 80) {
    hi = lo;
    lo *= 0.0625;
    if (modular_of(lo).value == 0.0 && lo < 1e-280) {
      res.status = LuxemburgResult::Status::zero;
      return res;
    }
  }
  res.bracket_lo = lo;
  res.bracket_hi = hi;
  while (hi - lo > tol * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    ++res.iterations;
    (modular_of(mid).value > 1.0 ? lo : hi) = mid;
  }
  res.norm = hi;
  const auto at = modular_of(hi);
  res.modular_at_norm = at.value;
  res.quadrature_ok = at.ok();
  return res;
}

LuxemburgResult luxemburg_norm_plane(const PlaneFunction& f, const GrowthFunction& phi,
                                     const Measure& mu, const QuadratureConfig& cfg,
                                     double tol) {
  const double a = estimate_indices(phi).lower;
  return luxemburg_from_modular(
      [&](double lambda) { return modular_plane(scale_plane(f, lambda), phi, mu, cfg); }, a,
      tol);
}

LuxemburgResult luxemburg_norm_line(const LineFunction& f, const GrowthFunction& phi,
                                    const QuadratureConfig& cfg, double tol) {
  const double a = estimate_indices(phi).lower;
  return luxemburg_from_modular(
      [&](double lambda) { return modular_line(scale_line(f, lambda), phi, cfg); }, a, tol);
}

NormModularCheck norm_modular_bounds_check(double modular, double norm,
                                           const GrowthIndices& idx) {
  NormModularCheck chk;
  chk.modular = modular;
  chk.norm = norm;
  if (modular == 0.0 && norm == 0.0) {
    chk.pass = true;
    chk.upper_constant = chk.lower_constant = 1.0;
    return chk;
  }
  const double a = idx.lower, b = idx.upper;
  const double up = std::max(std::pow(norm, a), std::pow(norm, b));
  const double dn = std::max(std::pow(modular, 1.0 / a), std::pow(modular, 1.0 / b));
  chk.upper_constant = up > 0 ? std::max(1.0, modular / up) : INFINITY;
  chk.lower_constant = dn > 0 ? std::max(1.0, norm / dn) : INFINITY;
  chk.pass = std::isfinite(chk.upper_constant) && std::isfinite(chk.lower_constant);
  return chk;
}

LineFunction line_restriction(const PlaneFunction& F, double y) {
  LineFunction f;
  f.eval = [F, y](double x) { return std::fabs(F.eval(x, y)); };
  if (F.envelope.declared()) {
    f.env_amplitude = F.envelope.amplitude;
    f.env_center = F.envelope.center_x;
    f.env_offset = F.envelope.offset_y + y;
    f.env_decay = F.envelope.decay;
  }
  f.feature_scale = F.feature_scale;
  return f;
}

LineProfile line_norm_profile(const PlaneFunction& F, const GrowthFunction& phi,
                              const std::vector<double>& y_grid,
                              const QuadratureConfig& cfg, double tol) {
  std::vector<double> ys = y_grid;
  std::sort(ys.begin(), ys.end());
  LineProfile prof;
  prof.points.resize(ys.size());
#pragma omp parallel for schedule(dynamic)
  for (size_t i = 0; i < ys.size(); ++i) {
    prof.points[i].y = ys[i];
    prof.points[i].norm = luxemburg_norm_line(line_restriction(F, ys[i]), phi, cfg, tol);
  }
  prof.non_increasing = true;
  for (size_t i = 0; i + 1 < prof.points.size(); ++i) {
    const auto& a = prof.points[i].norm;
    const auto& b = prof.points[i + 1].norm;
    if (!a.ok() || !b.ok()) {
      prof.non_increasing = false;
      break;
    }
    if (b.norm > a.norm * (1.0 + 2.0 * tol) + 2.0 * tol) prof.non_increasing = false;
  }
  if (!prof.points.empty() && prof.points.front().norm.ok())
    prof.hardy_norm_estimate = prof.points.front().norm.norm;
  return prof;
}

}  // namespace carleson
