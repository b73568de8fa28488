#include "carleson/certify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace carleson {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::bounded: return "bounded";
    case Verdict::unbounded_trend: return "unbounded-trend";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

const char* condition_name(Condition c) {
  switch (c) {
    case Condition::box: return "box(i)";
    case Condition::berezin: return "berezin(ii)";
    case Condition::witness_modular: return "witness_modular(iii)";
    case Condition::witness_weak: return "witness_weak(iv)";
  }
  return "?";
}

Verdict classify_trend(std::vector<std::pair<double, double>> pv) {
  std::sort(pv.begin(), pv.end());
  if (pv.size() < 3) return Verdict::inconclusive;
  // Merge duplicate parameters by their max value.
  std::vector<std::pair<double, double>> m;
  for (const auto& [p, v] : pv) {
    if (!m.empty() && m.back().first == p)
      m.back().second = std::max(m.back().second, v);
    else
      m.emplace_back(p, v);
  }
  if (m.size() < 3) return Verdict::inconclusive;

  bool growing = false;   // monotone growth by >= 1.1 toward an end
  bool doubling = false;  // monotone growth by >= 2 across the outer two decades
  auto examine = [&](bool small_end) {
    std::vector<double> vals;  // ordered moving outward
    const double cut = small_end ? m.front().first * 100.0 : m.back().first / 100.0;
    for (const auto& [p, v] : m)
      if ((small_end && p <= cut) || (!small_end && p >= cut)) vals.push_back(v);
    if (small_end) std::reverse(vals.begin(), vals.end());
    if (vals.size() < 3) {
      // Grid spacing coarser than a decade: fall back to the outermost
      // three samples so the rule stays usable.
      vals.clear();
      for (const auto& [p, v] : m) vals.push_back(v);
      if (small_end)
        vals = {vals[2], vals[1], vals[0]};
      else
        vals = {vals[vals.size() - 3], vals[vals.size() - 2], vals.back()};
    }
    bool monotone = true;
    for (size_t i = 0; i + 1 < vals.size(); ++i)
      if (vals[i + 1] < vals[i] * (1.0 - 1e-9)) monotone = false;
    if (!monotone || !(vals.front() > 0)) return;
    const double factor = vals.back() / vals.front();
    if (factor >= 2.0) doubling = true;
    if (factor >= 1.1) growing = true;
  };
  examine(true);
  examine(false);
  if (doubling) return Verdict::unbounded_trend;
  if (growing) return Verdict::inconclusive;
  return Verdict::bounded;
}

ProbeFamily ProbeFamily::defaults() {
  ProbeFamily f;
  for (int e = -20; e <= 10; ++e) f.lengths.push_back(std::exp2(double(e)));
  f.centers = {0.0, 1.0, -1.0, 10.0, -10.0};
  return f;
}

PointGrid PointGrid::defaults() {
  PointGrid g;
  for (int e = -15; e <= 15; ++e) g.ys.push_back(std::exp2(double(e)));
  g.xs = {0.0, 5.0, -5.0};
  return g;
}

PointGrid PointGrid::coarse() {
  PointGrid g;
  for (int e = -15; e <= 15; e += 5) g.ys.push_back(std::exp2(double(e)));
  g.xs = {0.0, 5.0};
  return g;
}

CertificationReport box_condition(const Measure& mu, const GrowthFunction& phi, double s,
                                  const ProbeFamily& probes, const QuadratureConfig& cfg) {
  if (!(s > 0)) throw precondition_error("box_condition: s must be positive");
  CertificationReport rep;
  rep.condition = Condition::box;
  rep.s = s;
  rep.phi1 = phi.description();
  rep.hypotheses.push_back("s > 0");
  rep.notes.push_back("grid-certified: sup taken over the probe family only");

  struct Job {
    Interval I;
    std::string id;
  };
  std::vector<Job> jobs;
  for (double len : probes.lengths)
    for (double c : probes.centers) {
      std::ostringstream id;
      id << "len=" << len << ";center=" << c;
      jobs.push_back({{c, len}, id.str()});
    }
  rep.probes.resize(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (size_t i = 0; i < jobs.size(); ++i) {
    Probe p;
    p.id = jobs[i].id;
    p.param = jobs[i].I.length;
    const auto m = measure_of_square(mu, {jobs[i].I}, cfg);
    p.ok = m.ok();
    p.value = m.value * phi.value(std::pow(jobs[i].I.length, -s));
    if (!p.ok) p.note = m.note;
    rep.probes[i] = p;
  }

  std::vector<std::pair<double, double>> pv;
  bool excluded = false;
  for (const auto& p : rep.probes) {
    if (!p.ok) {
      excluded = true;
      continue;
    }
    rep.sup_estimate = std::max(rep.sup_estimate, p.value);
    pv.emplace_back(p.param, p.value);
  }
  rep.verdict = classify_trend(std::move(pv));
  if (excluded) rep.notes.push_back("some probes excluded for quadrature failure");
  return rep;
}

namespace {

void check_class_membership(const GrowthIndices& idx, const char* which,
                            std::vector<std::string>& hyp) {
  const bool in_L = idx.upper <= 1.0 + 1e-12;
  const bool in_U = idx.lower >= 1.0 - 1e-12;
  if (!in_L && !in_U)
    throw precondition_error(std::string(which) +
                             " must belong to L or U: indices straddle 1 (" +
                             std::to_string(idx.lower) + ", " + std::to_string(idx.upper) + ")");
  hyp.push_back(std::string(which) + (in_U ? " in U" : " in L"));
}

}  // namespace

CertificationReport berezin_condition(const Measure& mu, const GrowthFunction& phi1,
                                      const GrowthFunction& phi2, double s, BerezinPath path,
                                      const PointGrid& grid, const QuadratureConfig& cfg) {
  if (!(s > 0)) throw precondition_error("berezin_condition: s must be positive");
  CertificationReport rep;
  rep.condition = Condition::berezin;
  rep.s = s;
  rep.phi1 = phi1.description();
  rep.phi2 = phi2.description();

  const auto idx1 = estimate_indices(phi1);
  const auto idx2 = estimate_indices(phi2);

  // Hypothesis policy: the general-s equivalence asks Phi2 in L u U and Phi1
  // convex or in L; the specialized Hardy/Bergman paths additionally ask both
  // functions in L u U with a non-decreasing quotient.
  check_class_membership(idx2, "Phi2", rep.hypotheses);
  const bool phi1_convex = idx1.lower >= 1.0 - 1e-12;
  const bool phi1_in_L = idx1.upper <= 1.0 + 1e-12;
  if (!phi1_convex && !phi1_in_L)
    throw precondition_error("Phi1 must be convex or belong to L: indices (" +
                             std::to_string(idx1.lower) + ", " + std::to_string(idx1.upper) + ")");
  rep.hypotheses.push_back(phi1_convex ? "Phi1 convex" : "Phi1 in L");
  if (path != BerezinPath::general) {
    check_class_membership(idx1, "Phi1", rep.hypotheses);
    if (!quotient_monotone(phi1, phi2))
      throw precondition_error("quotient_monotone(Phi1,Phi2) fails: Phi2/Phi1 decreases");
    rep.hypotheses.push_back("t -> Phi2(t)/Phi1(t) non-decreasing (grid)");
    rep.hypotheses.push_back(path == BerezinPath::hardy ? "specialized path: hardy (s=1)"
                                                        : "specialized path: bergman (s=2+alpha)");
    if (path == BerezinPath::bergman) rep.alpha = s - 2.0;
  } else {
    rep.hypotheses.push_back("general-s path");
  }

  const double rho = phi1_convex ? 1.0 : idx1.lower;
  rep.rho = rho;
  const double expo = 2.0 * s / rho;

  struct Job {
    double x, y;
  };
  std::vector<Job> jobs;
  for (double y : grid.ys)
    for (double x : grid.xs) jobs.push_back({x, y});
  rep.probes.resize(jobs.size());

  const double a2 = idx2.lower;
#pragma omp parallel for schedule(dynamic)
  for (size_t i = 0; i < jobs.size(); ++i) {
    const double xz = jobs[i].x, yz = jobs[i].y;
    const double pref = phi1.invert(std::pow(yz, -s));
    PlaneFunction f;
    f.eval = [&phi2, pref, expo, xz, yz](double x, double y) {
      const double r = std::hypot(x - xz, y + yz);
      return phi2.value(pref * std::pow(yz / r, expo));
    };
    DecayEnvelope inner;
    inner.amplitude = pref * std::pow(yz, expo);
    inner.decay = expo;
    inner.center_x = xz;
    inner.offset_y = yz;
    inner.valid_radius = 0;
    f.envelope = compose_envelope(inner, phi2, a2);
    f.feature_scale = yz;
    const auto r = integrate(mu, f, cfg);
    Probe p;
    std::ostringstream id;
    id << "z=(" << xz << "," << yz << ")";
    p.id = id.str();
    p.param = yz;
    p.value = r.value;
    p.ok = r.ok();
    if (r.tail_divergent) p.note = "tail divergent: " + r.note;
    else if (!r.converged) p.note = r.note;
    rep.probes[i] = p;
  }

  bool any_divergent = false;
  std::vector<std::pair<double, double>> pv;
  for (const auto& p : rep.probes) {
    if (!p.ok) {
      if (p.note.rfind("tail divergent", 0) == 0) any_divergent = true;
      continue;
    }
    rep.sup_estimate = std::max(rep.sup_estimate, p.value);
    pv.emplace_back(p.param, p.value);
  }
  if (any_divergent) {
    rep.verdict = Verdict::unbounded_trend;
    rep.notes.push_back("integral certified divergent at some z (envelope decay too slow)");
  } else {
    rep.verdict = classify_trend(std::move(pv));
  }
  rep.notes.push_back("grid-certified: sup taken over the z grid only");
  return rep;
}

EmbeddingResult embedding_criterion(const GrowthFunction& phi1, const GrowthFunction& phi2,
                                    double s, double alpha_target, const ScanGrid& t_grid) {
  if (!(s > 0)) throw precondition_error("embedding_criterion: s must be positive");
  if (!(alpha_target > -1.0))
    throw precondition_error("embedding_criterion: target alpha must exceed -1");
  EmbeddingResult out;
  const auto ts = t_grid.make();
  std::vector<std::pair<double, double>> pv;
  pv.reserve(ts.size());
  for (double t : ts) {
    const double ratio =
        phi2.value(phi1.invert(std::pow(t, s))) / std::pow(t, 2.0 + alpha_target);
    pv.emplace_back(t, ratio);
    if (ratio > out.constant) {
      out.constant = ratio;
      out.argmax_t = t;
    }
  }
  out.verdict = classify_trend(std::move(pv));
  out.pass = out.verdict == Verdict::bounded;
  return out;
}

Measure canonical_measure(const GrowthFunction& phi, double s) {
  if (!(s >= 1.0)) throw precondition_error("canonical_measure: s must be at least 1");
  const auto rep = classify(phi);
  if (!rep.in_U())
    throw precondition_error("canonical_measure: Phi must belong to U (lower index " +
                             std::to_string(rep.indices.lower) + " < 1)");
  if (!rep.nabla2)
    throw precondition_error(
        "canonical_measure: Phi fails the Dini bound (not in nabla_2)" +
        std::string(rep.nabla2_divergent ? "; integral diverges near 0" : ""));
  auto w = [phi, s](double y) {
    return 1.0 / (y * y * phi.value(std::pow(y, -s)));
  };
  Measure m = Measure::density_of_y(w, "dxdy / (y^2 " + phi.description() + "(1/y^" +
                                           std::to_string(s) + "))");
  // Grid-certified power bound w(y) <= A y^{s b - 2} for the tail estimates.
  const double P = s * rep.indices.upper - 2.0;
  double A = 0;
  for (int e = -24; e <= 24; ++e) {
    const double y = std::exp2(double(e));
    A = std::max(A, w(y) / std::pow(y, P));
  }
  m.declare_growth_bound(1.25 * A, P);
  return m;
}

double witness_superlevel_measure(const Measure& mu, const Witness& w, double threshold,
                                  const QuadratureConfig& cfg) {
  if (!(threshold > 0)) throw std::invalid_argument("witness_superlevel_measure: threshold > 0");
  // {|F_z| > t} is the open disk of radius r around conj(z), cut by y > 0.
  const double yz = w.anchor().imag(), xz = w.anchor().real();
  if (threshold >= w.prefactor()) return 0.0;  // modulus never exceeds the prefactor
  const double r = yz * std::pow(w.prefactor() / threshold, 1.0 / w.decay_exponent());
  if (!(r > yz)) return 0.0;
  const double top = r - yz;  // slice heights t in (0, top)
  switch (mu.kind()) {
    case Measure::Kind::atomic: {
      double m = 0;
      for (const auto& p : mu.points())
        if (std::hypot(p.x - xz, p.y + yz) < r) m += p.mass;
      return m;
    }
    case Measure::Kind::lebesgue_alpha: {
      const double alpha = mu.alpha();
      const auto res = integrate_segment(
          [&](double t) {
            const double h = r * r - (t + yz) * (t + yz);
            return 2.0 * std::sqrt(std::max(h, 0.0)) * std::pow(t, alpha);
          },
          0.0, top, cfg.abs_tol, std::max(cfg.rel_tol, 1e-9));
      return res.value;
    }
    case Measure::Kind::density: {
      if (mu.density_is_y_only()) {
        const auto res = integrate_segment(
            [&](double t) {
              const double h = r * r - (t + yz) * (t + yz);
              return 2.0 * std::sqrt(std::max(h, 0.0)) * mu.density_at(0.0, t);
            },
            0.0, top, cfg.abs_tol, std::max(cfg.rel_tol, 1e-9));
        return res.value;
      }
      const auto res = integrate_segment(
          [&](double t) {
            const double h = r * r - (t + yz) * (t + yz);
            const double hw = std::sqrt(std::max(h, 0.0));
            if (!(hw > 0)) return 0.0;
            return integrate_segment([&](double x) { return mu.density_at(x, t); }, xz - hw,
                                     xz + hw, cfg.abs_tol, 1e-7)
                .value;
          },
          0.0, top, cfg.abs_tol, std::max(cfg.rel_tol, 1e-7));
      return res.value;
    }
  }
  return 0.0;
}

namespace {

double cell_measure(const Measure& mu, double x0, double x1, double y0, double y1) {
  if (mu.kind() == Measure::Kind::lebesgue_alpha) {
    const double a = mu.alpha();
    return (x1 - x0) * (std::pow(y1, 1.0 + a) - std::pow(y0, 1.0 + a)) / (1.0 + a);
  }
  // One Gauss panel per cell; boundary cells are slack-reported anyway.
  const auto r = integrate_over_box([&](double x, double y) { return mu.density_at(x, y); },
                                    x0, x1, y0, y1, 1e-14, 1e-6, 64);
  return r.value;
}

void superlevel_rec(const Measure& mu, const std::function<double(double, double)>& f,
                    double thr, double x0, double x1, double y0, double y1, int depth,
                    double& inside, double& slack) {
  const double xs[3] = {x0, 0.5 * (x0 + x1), x1};
  const double ys[3] = {std::max(y0, 1e-300), 0.5 * (y0 + y1), y1};
  bool any_in = false, any_out = false;
  for (double x : xs)
    for (double y : ys) {
      if (f(x, y) > thr)
        any_in = true;
      else
        any_out = true;
    }
  if (any_in && !any_out) {  // sampled uniformly inside
    inside += cell_measure(mu, x0, x1, y0, y1);
    return;
  }
  if (!any_in) return;  // sampled uniformly outside
  if (depth <= 0) {     // undecided boundary cell at max depth
    const double m = cell_measure(mu, x0, x1, y0, y1);
    inside += 0.5 * m;
    slack += 0.5 * m;
    return;
  }
  const double xm = 0.5 * (x0 + x1), ym = 0.5 * (y0 + y1);
  superlevel_rec(mu, f, thr, x0, xm, y0, ym, depth - 1, inside, slack);
  superlevel_rec(mu, f, thr, xm, x1, y0, ym, depth - 1, inside, slack);
  superlevel_rec(mu, f, thr, x0, xm, ym, y1, depth - 1, inside, slack);
  superlevel_rec(mu, f, thr, xm, x1, ym, y1, depth - 1, inside, slack);
}

}  // namespace

double superlevel_measure_by_cells(const Measure& mu,
                                   const std::function<double(double, double)>& f,
                                   double threshold, double x0, double x1, double y0,
                                   double y1, int max_depth, double* slack) {
  double inside = 0, sl = 0;
  superlevel_rec(mu, f, threshold, x0, x1, y0, y1, max_depth, inside, sl);
  if (slack) *slack = sl;
  return inside;
}

WitnessInjectionReport witness_injection_test(const Measure& mu, const GrowthFunction& phi1,
                                              const GrowthFunction& phi2, WitnessContext ctx,
                                              const PointGrid& grid,
                                              const QuadratureConfig& cfg,
                                              const std::vector<double>& lambda_grid) {
  const auto idx1 = estimate_indices(phi1);
  const auto idx2 = estimate_indices(phi2);
  WitnessInjectionReport out;
  auto& mod = out.modular;
  auto& weak = out.weak;
  mod.condition = Condition::witness_modular;
  weak.condition = Condition::witness_weak;
  for (auto* r : {&mod, &weak}) {
    r->s = ctx.s();
    if (ctx.space == WitnessContext::Space::bergman) r->alpha = ctx.alpha;
    r->phi1 = phi1.description();
    r->phi2 = phi2.description();
    check_class_membership(idx1, "Phi1", r->hypotheses);
    check_class_membership(idx2, "Phi2", r->hypotheses);
    r->notes.push_back("witness-restricted: explicit unit-ball family, not the full quantifier");
    r->notes.push_back("witness norms replaced by their certified bound 1");
  }
  if (!quotient_monotone(phi1, phi2))
    throw precondition_error("quotient_monotone(Phi1,Phi2) fails: Phi2/Phi1 decreases");
  mod.hypotheses.push_back("t -> Phi2(t)/Phi1(t) non-decreasing (grid)");
  weak.hypotheses.push_back("t -> Phi2(t)/Phi1(t) non-decreasing (grid)");
  const double rho = idx1.lower >= 1.0 - 1e-12 ? 1.0 : idx1.lower;
  mod.rho = rho;
  weak.rho = rho;

  std::vector<double> lambdas = lambda_grid;
  if (lambdas.empty())
    for (int e = -10; e <= 10; ++e) lambdas.push_back(std::exp2(double(e)));

  struct Job {
    Witness w;
    double x, y;
  };
  std::vector<Job> jobs;
  for (double y : grid.ys)
    for (double x : grid.xs) {
      const std::complex<double> z{x, y};
      jobs.push_back({ctx.space == WitnessContext::Space::hardy
                          ? Witness::hardy_test(z, phi1)
                          : Witness::bergman_test(z, phi1, ctx.alpha),
                      x, y});
    }

  mod.probes.resize(jobs.size());
  weak.probes.resize(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (size_t i = 0; i < jobs.size(); ++i) {
    const auto& jb = jobs[i];
    std::ostringstream id;
    id << "z=(" << jb.x << "," << jb.y << ")";
    // (iii): the modular of the witness against mu.
    const auto m = modular_plane(jb.w.as_plane_function(), phi2, mu, cfg);
    Probe pm;
    pm.id = id.str();
    pm.param = jb.y;
    pm.value = m.value;
    pm.ok = m.ok();
    if (!pm.ok) pm.note = m.note;
    mod.probes[i] = pm;
    // (iv): sup over lambda of Phi2(lambda) mu(|F| > lambda).
    Probe pw;
    pw.id = id.str();
    pw.param = jb.y;
    double sup = 0;
    for (double l : lambdas)
      sup = std::max(sup, phi2.value(l) * witness_superlevel_measure(mu, jb.w, l, cfg));
    pw.value = sup;
    weak.probes[i] = pw;
  }

  // A couple of Poisson witnesses (closed-form indicator data) when the
  // source space admits them; they join the modular probes only.
  if (ctx.space == WitnessContext::Space::hardy && idx1.lower >= 1.0 - 1e-12) {
    struct Band {
      double a, b;
    };
    for (const Band band : {Band{-1.0, 1.0}, Band{2.0, 4.0}}) {
      PlaneFunction U;
      const double a = band.a, b = band.b;
      U.eval = [a, b](double x, double y) {
        return (std::atan((x - a) / y) - std::atan((x - b) / y)) / M_PI;
      };
      U.envelope.amplitude = 4.0 * (b - a) / M_PI;
      U.envelope.decay = 1.0;
      U.envelope.center_x = 0.5 * (a + b);
      U.envelope.offset_y = 0.0;
      U.envelope.valid_radius = (b - a) + 1.0;
      U.feature_scale = 0.5 * (b - a);
      // Normalize by the line-profile norm at the smallest grid height.
      const auto prof = line_norm_profile(U, phi1, {1e-3, 1e-2, 0.1, 1.0}, cfg, 1e-6);
      Probe p;
      std::ostringstream id;
      id << "poisson indicator [" << a << "," << b << "]";
      p.id = id.str();
      p.param = 1.0;
      if (!prof.points.empty() && prof.points.front().norm.ok() &&
          prof.points.front().norm.norm > 0) {
        const double nrm = prof.points.front().norm.norm;
        PlaneFunction scaledU = U;
        scaledU.eval = [U, nrm](double x, double y) { return U.eval(x, y) / nrm; };
        scaledU.envelope.amplitude /= nrm;
        const auto m = modular_plane(scaledU, phi2, mu, cfg);
        p.value = m.value;
        p.ok = m.ok();
        if (!p.ok) p.note = m.note;
      } else {
        p.ok = false;
        p.note = "norm estimate unavailable";
      }
      mod.probes.push_back(p);
    }
  }

  for (auto* r : {&mod, &weak}) {
    std::vector<std::pair<double, double>> pv;
    bool excluded = false;
    for (const auto& p : r->probes) {
      if (!p.ok) {
        excluded = true;
        continue;
      }
      r->sup_estimate = std::max(r->sup_estimate, p.value);
      if (p.id.rfind("poisson", 0) != 0) pv.emplace_back(p.param, p.value);
    }
    r->verdict = classify_trend(std::move(pv));
    if (excluded) r->notes.push_back("some probes excluded for quadrature failure");
  }
  return out;
}

}  // namespace carleson
