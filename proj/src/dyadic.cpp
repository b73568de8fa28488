#include "carleson/dyadic.hpp"

#include <algorithm>
#include <cmath>

#include "carleson/orlicz.hpp"

namespace carleson {

namespace {

int shift_sign(GridShift beta, int j) {
  if (beta == GridShift::none) return 0;
  return (j % 2 == 0) ? 1 : -1;
}

// Exact scale of x against the grid denominator 3*2^j.  Exact as long as
// |x| * 3 * 2^j fits the 64-bit long double mantissa, which the +-40 scale
// window guarantees for the coordinate ranges used here.
long double scaled(double x, int j) {
  return static_cast<long double>(x) * 3.0L * ::exp2l(static_cast<long double>(j));
}

// sign of (a - b * 2^g), g >= 0, computed with shifts only.
int cmp_shifted(long long a, long long b, int g) {
  const long long q = g >= 63 ? (a < 0 ? -1 : 0) : (a >> g);
  if (q != b) return q < b ? -1 : 1;
  if (g >= 63) return a == 0 && b == 0 ? 0 : (a == (b << g) ? 0 : 1);
  return a == (b << g) ? 0 : 1;
}

}  // namespace

long long DyadicInterval::left_numerator() const { return 3 * k + shift_sign(beta, j); }
long long DyadicInterval::right_numerator() const { return left_numerator() + 3; }

double DyadicInterval::lo() const {
  return double(static_cast<long double>(left_numerator()) / (3.0L * ::exp2l(j)));
}
double DyadicInterval::hi() const {
  return double(static_cast<long double>(right_numerator()) / (3.0L * ::exp2l(j)));
}
double DyadicInterval::length() const { return std::exp2(-j); }

bool DyadicInterval::contains(double x) const {
  const long double q = scaled(x, j);
  return q >= static_cast<long double>(left_numerator()) &&
         q < static_cast<long double>(right_numerator());
}

bool DyadicInterval::contains_interval(double a, double b) const {
  // Half-open containment [a,b) subset [lo,hi); b may touch the right end.
  const long double qa = scaled(a, j), qb = scaled(b, j);
  return qa >= static_cast<long double>(left_numerator()) &&
         qb <= static_cast<long double>(right_numerator());
}

bool nested_or_disjoint(const DyadicInterval& A, const DyadicInterval& B) {
  if (A.beta != B.beta) throw std::invalid_argument("nested_or_disjoint: mixed grids");
  const DyadicInterval& S = A.j >= B.j ? A : B;  // smaller (or equal) interval
  const DyadicInterval& T = A.j >= B.j ? B : A;
  const int g = S.j - T.j;
  const int lo_cmp = cmp_shifted(S.left_numerator(), T.left_numerator(), g);
  const int hi_cmp = cmp_shifted(S.right_numerator(), T.right_numerator(), g);
  const bool nested = lo_cmp >= 0 && hi_cmp <= 0;
  const bool disjoint = cmp_shifted(S.right_numerator(), T.left_numerator(), g) <= 0 ||
                        cmp_shifted(S.left_numerator(), T.right_numerator(), g) >= 0;
  return nested || disjoint;
}

DyadicInterval dyadic_cover(const Interval& I, int j_lo, int j_hi) {
  if (!(I.length > 0)) throw std::invalid_argument("dyadic_cover: empty interval");
  const double lo = I.lo(), hi = I.hi();
  // Smallest j whose grid length 2^{-j} still admits |J| <= 6|I|.
  int j = int(std::ceil(-std::log2(6.0 * I.length)));
  while (std::exp2(-j) > 6.0 * I.length) ++j;
  while (j - 1 >= j_lo && std::exp2(-(j - 1)) <= 6.0 * I.length) --j;
  for (; j <= j_hi; ++j) {
    for (GridShift beta : {GridShift::none, GridShift::third}) {
      const int sigma = shift_sign(beta, j);
      const long double q = scaled(lo, j);
      const long long k = (long long)::floorl((q - sigma) / 3.0L);
      const DyadicInterval J{beta, j, k};
      if (J.contains_interval(lo, hi)) return J;
    }
  }
  throw std::logic_error("dyadic_cover: no cover found in scale window");
}

double SimpleLineFunction::value_at(double x) const {
  double v = 0;
  for (const auto& s : steps)
    if (x >= s.lo && x < s.hi) v += s.height;
  return v;
}

double SimpleLineFunction::integral_over(double a, double b) const {
  if (!(b > a)) return 0;
  double v = 0;
  for (const auto& s : steps) {
    const double lo = std::max(a, s.lo), hi = std::min(b, s.hi);
    if (hi > lo) v += s.height * (hi - lo);
  }
  return v;
}

double SimpleLineFunction::total_mass() const {
  double v = 0;
  for (const auto& s : steps) v += s.height * (s.hi - s.lo);
  return v;
}

double SimpleLineFunction::support_lo() const {
  double v = INFINITY;
  for (const auto& s : steps) v = std::min(v, s.lo);
  return v;
}

double SimpleLineFunction::support_hi() const {
  double v = -INFINITY;
  for (const auto& s : steps) v = std::max(v, s.hi);
  return v;
}

double SimpleLineFunction::max_height() const {
  double v = 0;
  for (const auto& s : steps) v = std::max(v, s.height);
  return v;
}

SimpleLineFunction SimpleLineFunction::scaled(double factor) const {
  SimpleLineFunction g = *this;
  for (auto& s : g.steps) s.height *= factor;
  return g;
}

SimpleLineFunction SimpleLineFunction::powered(double exponent) const {
  SimpleLineFunction g = *this;
  for (auto& s : g.steps) s.height = std::pow(s.height, exponent);
  return g;
}

namespace {

// Bisection on lambda for a closed-form decreasing modular.
double closed_luxemburg(const std::function<double(double)>& modular, double tol) {
  if (modular(1.0) == 0.0) return 0.0;
  double hi = 1.0, lo = 1.0;
  int guard = 0;
  while (modular(hi) > 1.0 && guard++ < 400) hi *= 2.0;
  guard = 0;
  while (modular(lo) <= 1.0 && guard++ < 400) lo *= 0.5;
  while (hi - lo > tol * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (modular(mid) > 1.0 ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace

double SimpleLineFunction::luxemburg_norm(const GrowthFunction& phi, double tol) const {
  return closed_luxemburg(
      [&](double lambda) {
        double m = 0;
        for (const auto& s : steps)
          if (s.height > 0) m += (s.hi - s.lo) * phi.value(s.height / lambda);
        return m;
      },
      tol);
}

double SimpleBoxFunction::value_at(double x, double y) const {
  double v = 0;
  for (const auto& b : boxes)
    if (CarlesonSquare{b.base}.contains(x, y)) v += b.height;
  return v;
}

double SimpleBoxFunction::integral_valpha(const Interval& J, double alpha) const {
  double v = 0;
  for (const auto& b : boxes) {
    const double lo = std::max(J.lo(), b.base.lo());
    const double hi = std::min(J.hi(), b.base.hi());
    if (hi <= lo) continue;
    const double ymax = std::min(J.length, b.base.length);
    v += b.height * (hi - lo) * std::pow(ymax, 1.0 + alpha) / (1.0 + alpha);
  }
  return v;
}

double SimpleBoxFunction::luxemburg_norm(const GrowthFunction& phi, double alpha,
                                         double tol) const {
  // Boxes are assumed pairwise disjoint so the modular is a finite sum.
  return closed_luxemburg(
      [&](double lambda) {
        double m = 0;
        for (const auto& b : boxes)
          if (b.height > 0) m += box_volume(b.base, alpha) * phi.value(b.height / lambda);
        return m;
      },
      tol);
}

double maximal_hl(const SimpleLineFunction& f, double x) {
  std::vector<double> cand{x};
  for (const auto& s : f.steps) {
    cand.push_back(s.lo);
    cand.push_back(s.hi);
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  // Point value through closures (degenerate intervals).
  double best = 0;
  for (const auto& s : f.steps)
    if (x >= s.lo && x <= s.hi) best = std::max(best, s.height);
  for (double u : cand) {
    if (u > x) break;
    for (double v : cand) {
      if (v < x || v <= u) continue;
      best = std::max(best, f.integral_over(u, v) / (v - u));
    }
  }
  return best;
}

MeshMaximal maximal_hl_mesh(const std::function<double(double)>& f, double x,
                            const std::vector<double>& anchors, double window, int levels) {
  auto best_over = [&](int lv) {
    std::vector<double> left{x}, right{x};
    for (int l = 0; l <= lv; ++l) {
      const double off = window * std::exp2(double(-l));
      left.push_back(x - off);
      right.push_back(x + off);
    }
    for (double a : anchors) {
      if (a < x && a >= x - window) left.push_back(a);
      if (a > x && a <= x + window) right.push_back(a);
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    double best = 0;
    for (double u : left)
      for (double v : right) {
        if (!(v > u)) continue;
        const auto I = integrate_segment(f, u, v, 1e-12, 1e-8);
        best = std::max(best, I.value / (v - u));
      }
    return best;
  };
  MeshMaximal out;
  const double coarse = best_over(levels - 4);
  out.lower_bound = best_over(levels);
  out.refinement_gap = std::fabs(out.lower_bound - coarse);
  return out;
}

namespace {

DyadicInterval containing_interval(double x, GridShift beta, int j) {
  const int sigma = shift_sign(beta, j);
  const long double q = scaled(x, j);
  return {beta, j, (long long)::floorl((q - sigma) / 3.0L)};
}

}  // namespace

double maximal_hl_dyadic(const SimpleLineFunction& f, double x, GridShift beta,
                         const MaximalWindow& win) {
  double best = 0;
  for (int j = win.j_lo; j <= win.j_hi; ++j) {
    const DyadicInterval J = containing_interval(x, beta, j);
    const double mass = f.integral_over(J.lo(), J.hi());
    if (mass > 0) best = std::max(best, mass / J.length());
  }
  return best;
}

double maximal_valpha_dyadic(const SimpleBoxFunction& f, double x, double y, GridShift beta,
                             double alpha, const MaximalWindow& win) {
  if (!(y > 0)) throw std::invalid_argument("maximal_valpha_dyadic: point must be in C+");
  double best = 0;
  for (int j = win.j_lo; j <= win.j_hi; ++j) {
    const DyadicInterval J = containing_interval(x, beta, j);
    if (!(J.length() > y)) continue;  // z must lie in Q_J
    const double mass = f.integral_valpha({0.5 * (J.lo() + J.hi()), J.length()}, alpha);
    if (mass > 0)
      best = std::max(best, mass / (std::pow(J.length(), 2.0 + alpha) / (1.0 + alpha)));
  }
  return best;
}

size_t BoxAverageCache::KeyHash::operator()(const Key& k) const {
  size_t h = std::hash<long long>()(k.k);
  h ^= std::hash<int>()(k.j) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h ^= std::hash<int>()(k.beta) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h ^= std::hash<double>()(k.alpha) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

double BoxAverageCache::box_integral(const DyadicInterval& J, double alpha,
                                     const std::function<double(double, double)>& f,
                                     double rel_tol) {
  const Key key{int(J.beta), J.j, J.k, alpha};
  auto it = values_.find(key);
  if (it != values_.end()) return it->second;
  const auto r = integrate_over_box(
      [&](double x, double y) { return f(x, y) * std::pow(y, alpha); }, J.lo(), J.hi(), 0.0,
      J.length(), 1e-14, rel_tol, 8000);
  values_.emplace(key, r.value);
  return r.value;
}

double maximal_valpha_dyadic_fn(const std::function<double(double, double)>& f, double x,
                                double y, GridShift beta, double alpha,
                                const MaximalWindow& win, BoxAverageCache& cache,
                                double rel_tol) {
  if (!(y > 0)) throw std::invalid_argument("maximal_valpha_dyadic_fn: point must be in C+");
  double best = 0;
  for (int j = win.j_lo; j <= win.j_hi; ++j) {
    const DyadicInterval J = containing_interval(x, beta, j);
    if (!(J.length() > y)) continue;
    const double mass = cache.box_integral(J, alpha, f, rel_tol);
    const double volume = std::pow(J.length(), 2.0 + alpha) / (1.0 + alpha);
    best = std::max(best, mass / volume);
  }
  return best;
}

WeakTypeProfile weak_type_profile(const SimpleLineFunction& f, const GrowthFunction& phi,
                                  double gamma, const std::vector<double>& lambdas,
                                  GridShift beta, int mesh_scale, const MaximalWindow& win) {
  if (!(gamma > 0)) throw std::invalid_argument("weak_type_profile: gamma must be positive");
  const auto idx = estimate_indices(phi);
  if (gamma * idx.lower < 1.0 - 1e-9)
    throw std::invalid_argument("weak_type_profile: gamma*a_Phi = " +
                                std::to_string(gamma * idx.lower) +
                                " < 1, Phi(t^gamma) is not convex");
  WeakTypeProfile prof;
  prof.gamma = gamma;
  prof.norm = f.luxemburg_norm(phi);
  prof.mesh_width = std::exp2(double(-mesh_scale));
  const SimpleLineFunction g = f.scaled(1.0 / prof.norm).powered(1.0 / gamma);

  double lambda_min = INFINITY;
  for (double l : lambdas) lambda_min = std::min(lambda_min, l);
  const double reach = g.total_mass() / std::pow(lambda_min, 1.0 / gamma);
  const double w = prof.mesh_width;
  const double win_lo = g.support_lo() - reach - 1.0;
  const double win_hi = g.support_hi() + reach + 1.0;
  const long long n_lo = (long long)std::floor(win_lo / w);
  const long long n_hi = (long long)std::ceil(win_hi / w);
  const size_t cells = size_t(n_hi - n_lo);

  std::vector<double> level(cells);
#pragma omp parallel for schedule(static)
  for (size_t i = 0; i < cells; ++i) {
    const double x = (double(n_lo + (long long)i) + 0.5) * w;
    level[i] = std::pow(maximal_hl_dyadic(g, x, beta, win), gamma);
  }

  for (double lambda : lambdas) {
    WeakTypePoint pt;
    pt.lambda = lambda;
    size_t count = 0, transitions = 0;
    bool prev = false;
    for (size_t i = 0; i < cells; ++i) {
      const bool in = level[i] > lambda;
      count += in;
      if (i > 0 && in != prev) ++transitions;
      prev = in;
    }
    pt.level_measure = double(count) * w;
    pt.bound = 1.0 / phi.value(lambda);
    pt.mesh_slack = double(transitions + 2) * w * (count > 0 ? 1.0 : 0.0);
    pt.within_bound = pt.level_measure <= pt.bound + pt.mesh_slack + 1e-15;
    prof.points.push_back(pt);
  }
  prof.all_within = std::all_of(prof.points.begin(), prof.points.end(),
                                [](const WeakTypePoint& p) { return p.within_bound; });
  return prof;
}

WeakTypeProfile weak_type_profile_valpha(const SimpleBoxFunction& f,
                                         const GrowthFunction& phi, double gamma,
                                         const std::vector<double>& lambdas, GridShift beta,
                                         double alpha, int mesh_scale,
                                         const MaximalWindow& win) {
  if (!(gamma > 0)) throw std::invalid_argument("weak_type_profile: gamma must be positive");
  const auto idx = estimate_indices(phi);
  if (gamma * idx.lower < 1.0 - 1e-9)
    throw std::invalid_argument("weak_type_profile: gamma*a_Phi = " +
                                std::to_string(gamma * idx.lower) +
                                " < 1, Phi(t^gamma) is not convex");
  WeakTypeProfile prof;
  prof.gamma = gamma;
  prof.norm = f.luxemburg_norm(phi, alpha);
  prof.mesh_width = std::exp2(double(-mesh_scale));
  SimpleBoxFunction g = f;
  for (auto& b : g.boxes) b.height = std::pow(b.height / prof.norm, 1.0 / gamma);

  double lambda_min = INFINITY;
  for (double l : lambdas) lambda_min = std::min(lambda_min, l);
  const double thr = std::pow(lambda_min, 1.0 / gamma);
  double mass = 0, xlo = INFINITY, xhi = -INFINITY, top = 0;
  for (const auto& b : g.boxes) {
    mass += b.height * box_volume(b.base, alpha);
    xlo = std::min(xlo, b.base.lo());
    xhi = std::max(xhi, b.base.hi());
    top = std::max(top, b.base.length);
  }
  // A column of length L averages at most mass (1+alpha)/L^{2+alpha}; beyond
  // the reach below the maximal value stays under the smallest threshold.
  const double reach =
      std::pow(mass * (1.0 + alpha) / thr, 1.0 / (2.0 + alpha)) + top + 1.0;
  const double w = prof.mesh_width;
  const long long n_lo = (long long)std::floor((xlo - reach) / w);
  const long long n_hi = (long long)std::ceil((xhi + reach) / w);
  const size_t cells = size_t(n_hi - n_lo);

  // y-bands on which the admissible scale set is constant.
  struct Band {
    double lo, hi;
    int j_max;  // finest admissible scale (|J| > y on the open band)
  };
  std::vector<Band> bands;
  bands.push_back({0.0, std::exp2(double(-win.j_hi)), win.j_hi});
  for (int j = win.j_hi; j > win.j_lo; --j)
    bands.push_back({std::exp2(double(-j)), std::exp2(double(-j + 1)), j - 1});

  std::vector<double> level(cells * bands.size());
#pragma omp parallel for schedule(static)
  for (size_t i = 0; i < cells; ++i) {
    const double x = (double(n_lo + (long long)i) + 0.5) * w;
    for (size_t b = 0; b < bands.size(); ++b) {
      double best = 0;
      for (int j = win.j_lo; j <= bands[b].j_max; ++j) {
        const DyadicInterval J = containing_interval(x, beta, j);
        const double m = g.integral_valpha({0.5 * (J.lo() + J.hi()), J.length()}, alpha);
        if (m > 0)
          best = std::max(best, m * (1.0 + alpha) / std::pow(J.length(), 2.0 + alpha));
      }
      level[i * bands.size() + b] = std::pow(best, gamma);
    }
  }

  auto band_mass = [&](const Band& b) {
    return (std::pow(b.hi, 1.0 + alpha) - std::pow(b.lo, 1.0 + alpha)) / (1.0 + alpha);
  };
  for (double lambda : lambdas) {
    WeakTypePoint pt;
    pt.lambda = lambda;
    size_t transitions = 0;
    double measure = 0, slack = 0;
    for (size_t b = 0; b < bands.size(); ++b) {
      const double bm = band_mass(bands[b]);
      bool prev = false;
      size_t count = 0, trans = 0;
      for (size_t i = 0; i < cells; ++i) {
        const bool in = level[i * bands.size() + b] > lambda;
        count += in;
        if (i > 0 && in != prev) ++trans;
        prev = in;
      }
      measure += double(count) * w * bm;
      if (count > 0) slack += double(trans + 2) * w * bm;
      transitions += trans;
    }
    (void)transitions;
    pt.level_measure = measure;
    pt.bound = 1.0 / phi.value(lambda);
    pt.mesh_slack = slack;
    pt.within_bound = pt.level_measure <= pt.bound + pt.mesh_slack + 1e-15;
    prof.points.push_back(pt);
  }
  prof.all_within = std::all_of(prof.points.begin(), prof.points.end(),
                                [](const WeakTypePoint& p) { return p.within_bound; });
  return prof;
}

MaximalBoundTest maximal_bound_test(const GrowthFunction& phi1, const GrowthFunction& phi2,
                                    const std::vector<SimpleLineFunction>& witnesses,
                                    const QuadratureConfig& cfg) {
  MaximalBoundTest out;
  out.dini = dini_constant(phi1, phi2);
  out.dini_finite = !out.dini.unbounded && !out.dini.divergent_at_zero;

  out.witness_ratios.resize(witnesses.size(), INFINITY);
  for (size_t i = 0; i < witnesses.size(); ++i) {
    const auto& f = witnesses[i];
    const double nf = f.luxemburg_norm(phi1);
    if (!(nf > 0)) continue;
    LineFunction Mf;
    Mf.eval = [f](double x) { return maximal_hl(f, x); };
    const double hull_lo = f.support_lo(), hull_hi = f.support_hi();
    const double R = 0.5 * (hull_hi - hull_lo);
    Mf.env_center = 0.5 * (hull_lo + hull_hi);
    Mf.env_offset = std::max(2.0 * R, 1e-6);
    Mf.env_amplitude = 2.0 * f.total_mass();
    Mf.env_decay = 1.0;
    Mf.feature_scale = std::max(R, 1e-6);
    for (const auto& s : f.steps) {
      Mf.anchors.push_back(s.lo);
      Mf.anchors.push_back(s.hi);
    }
    const auto r = luxemburg_norm_line(Mf, phi2, cfg, 1e-6);
    if (r.status == LuxemburgResult::Status::ok && r.quadrature_ok)
      out.witness_ratios[i] = r.norm / nf;
  }

  bool all_finite = true;
  for (double r : out.witness_ratios) all_finite = all_finite && std::isfinite(r);
  bool trend = false;
  if (all_finite && out.witness_ratios.size() >= 4) {
    // Monotone doubling across either half of the family flags unboundedness.
    const auto& r = out.witness_ratios;
    const size_t n = r.size(), mid = n / 2;
    auto grows = [&](size_t from, size_t to) {
      for (size_t i = from; i + 1 < to; ++i)
        if (r[i + 1] < r[i] * (1.0 - 1e-9)) return false;
      return r[to - 1] >= 2.0 * r[from];
    };
    auto shrinks = [&](size_t from, size_t to) {  // growth toward the small end
      for (size_t i = from; i + 1 < to; ++i)
        if (r[i + 1] > r[i] * (1.0 + 1e-9)) return false;
      return r[from] >= 2.0 * r[to - 1];
    };
    trend = grows(mid, n) || shrinks(0, mid + 1);
  }
  out.ratios_bounded = all_finite && !trend;
  out.coherent = out.ratios_bounded == out.dini_finite;
  return out;
}

DominationCheck pointwise_domination_check(const PlaneFunction& F, double gamma, double alpha,
                                           const std::vector<std::pair<double, double>>& z_grid,
                                           double rel_tol) {
  if (!(gamma > 0)) throw std::invalid_argument("pointwise_domination_check: gamma > 0");
  DominationCheck out;
  out.bound_constant = (4.0 / M_PI) * std::pow(12.0, 2.0 + alpha) / (1.0 + alpha) *
                       std::max(std::pow(2.0, alpha), std::pow(2.0 / 3.0, alpha));
  auto fg = [&](double x, double y) { return std::pow(std::fabs(F.eval(x, y)), gamma); };
  BoxAverageCache cache0, cache13;
  for (const auto& [x, y] : z_grid) {
    int j_y = int(std::floor(-std::log2(y)));
    while (std::exp2(double(-j_y)) <= y) --j_y;
    MaximalWindow win{j_y - 10, j_y};
    const double m = std::max(
        maximal_valpha_dyadic_fn(fg, x, y, GridShift::none, alpha, win, cache0, rel_tol),
        maximal_valpha_dyadic_fn(fg, x, y, GridShift::third, alpha, win, cache13, rel_tol));
    if (!(m > 0)) continue;
    const double ratio = fg(x, y) / m;
    if (ratio > out.max_ratio) {
      out.max_ratio = ratio;
      out.argmax_x = x;
      out.argmax_y = y;
    }
  }
  out.pass = out.max_ratio <= out.bound_constant * (1.0 + 1e-6);
  return out;
}

}  // namespace carleson
