#include "carleson/growth.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace carleson {

namespace {

double checked_positive(double x, const char* what) {
  if (!std::isfinite(x) || x <= 0.0)
    throw std::invalid_argument(std::string(what) + " must be positive and finite");
  return x;
}

}  // namespace

struct GrowthFunction::Impl {
  virtual ~Impl() = default;
  virtual double value(double t) const = 0;
  virtual double derivative(double t) const = 0;
  // Default slope ratio from value/derivative; families with homogeneity
  // override to keep index estimates exact.
  virtual double slope_ratio(double t) const { return t * derivative(t) / value(t); }
  virtual bool has_closed_inverse() const { return false; }
  virtual double closed_inverse(double /*y*/) const { return 0; }
  virtual double floor() const { return 1e-12; }
  std::string name;
};

namespace {

using Impl = GrowthFunction::Impl;

struct PowerImpl final : Impl {
  double p;
  explicit PowerImpl(double p_) : p(p_) {
    std::ostringstream os;
    os << "power(" << p << ")";
    name = os.str();
  }
  double value(double t) const override { return std::pow(t, p); }
  double derivative(double t) const override { return p * std::pow(t, p - 1.0); }
  double slope_ratio(double) const override { return p; }
  bool has_closed_inverse() const override { return true; }
  double closed_inverse(double y) const override { return std::pow(y, 1.0 / p); }
};

struct PowerLogImpl final : Impl {
  double p, a;
  PowerLogImpl(double p_, double a_) : p(p_), a(a_) {
    std::ostringstream os;
    os << "power_log(" << p << "," << a << ")";
    name = os.str();
  }
  double value(double t) const override {
    if (t == 0.0) return 0.0;
    return std::pow(t, p) * std::pow(std::log(M_E + t), a);
  }
  double derivative(double t) const override {
    const double L = std::log(M_E + t);
    return std::pow(t, p - 1.0) * std::pow(L, a - 1.0) * (p * L + a * t / (M_E + t));
  }
  double slope_ratio(double t) const override {
    const double L = std::log(M_E + t);
    return p + a * t / ((M_E + t) * L);
  }
};

struct PiecewisePowerImpl final : Impl {
  std::vector<double> bp;     // breakpoints, increasing, positive
  std::vector<double> ex;     // exponents, one more than bp
  std::vector<double> coef;   // continuity coefficients per segment
  PiecewisePowerImpl(std::vector<double> b, std::vector<double> e)
      : bp(std::move(b)), ex(std::move(e)) {
    if (ex.size() != bp.size() + 1)
      throw std::invalid_argument("piecewise_power: need one exponent per segment");
    for (double p : ex) checked_positive(p, "piecewise_power exponent");
    for (size_t i = 0; i < bp.size(); ++i) {
      checked_positive(bp[i], "piecewise_power breakpoint");
      if (i > 0 && bp[i] <= bp[i - 1])
        throw std::invalid_argument("piecewise_power: breakpoints must increase");
    }
    coef.assign(ex.size(), 1.0);
    for (size_t i = 0; i + 1 < ex.size(); ++i)
      coef[i + 1] = coef[i] * std::pow(bp[i], ex[i] - ex[i + 1]);
    std::ostringstream os;
    os << "piecewise_power(" << bp.size() + 1 << " segments)";
    name = os.str();
  }
  size_t segment(double t) const {
    size_t i = 0;
    while (i < bp.size() && t > bp[i]) ++i;
    return i;
  }
  double value(double t) const override {
    if (t == 0.0) return 0.0;
    const size_t i = segment(t);
    return coef[i] * std::pow(t, ex[i]);
  }
  double derivative(double t) const override {
    const size_t i = segment(t);
    return coef[i] * ex[i] * std::pow(t, ex[i] - 1.0);
  }
  double slope_ratio(double t) const override { return ex[segment(t)]; }
  bool has_closed_inverse() const override { return true; }
  double closed_inverse(double y) const override {
    if (y == 0.0) return 0.0;
    size_t i = 0;
    while (i < bp.size() && y > coef[i + 1] * std::pow(bp[i], ex[i + 1])) ++i;
    return std::pow(y / coef[i], 1.0 / ex[i]);
  }
};

struct TabulatedImpl final : Impl {
  std::vector<double> ts, ys;
  double p_lo, p_hi;  // boundary power laws in log-log coordinates
  TabulatedImpl(std::vector<double> t, std::vector<double> y)
      : ts(std::move(t)), ys(std::move(y)) {
    if (ts.size() != ys.size() || ts.size() < 2)
      throw std::invalid_argument("tabulated: need two aligned samples at least");
    for (size_t i = 0; i < ts.size(); ++i) {
      checked_positive(ts[i], "tabulated abscissa");
      checked_positive(ys[i], "tabulated value");
      if (i > 0 && (ts[i] <= ts[i - 1] || ys[i] <= ys[i - 1]))
        throw std::invalid_argument("tabulated: samples must be strictly increasing");
    }
    auto slope = [&](size_t i, size_t j) {
      return (std::log(ys[j]) - std::log(ys[i])) / (std::log(ts[j]) - std::log(ts[i]));
    };
    p_lo = slope(0, 1);
    p_hi = slope(ts.size() - 2, ts.size() - 1);
    name = "tabulated(" + std::to_string(ts.size()) + " samples)";
  }
  double value(double t) const override {
    if (t == 0.0) return 0.0;
    if (t <= ts.front()) return ys.front() * std::pow(t / ts.front(), p_lo);
    if (t >= ts.back()) return ys.back() * std::pow(t / ts.back(), p_hi);
    const auto it = std::upper_bound(ts.begin(), ts.end(), t);
    const size_t i = size_t(it - ts.begin()) - 1;
    const double w = (t - ts[i]) / (ts[i + 1] - ts[i]);
    return ys[i] + w * (ys[i + 1] - ys[i]);
  }
  double derivative(double t) const override {
    if (t <= ts.front()) return value(t) * p_lo / t;
    if (t >= ts.back()) return value(t) * p_hi / t;
    // central differences on the sample grid, linearly interpolated
    const auto it = std::upper_bound(ts.begin(), ts.end(), t);
    const size_t i = size_t(it - ts.begin()) - 1;
    auto node_slope = [&](size_t k) {
      const size_t a = k == 0 ? 0 : k - 1;
      const size_t b = k + 1 >= ts.size() ? ts.size() - 1 : k + 1;
      return (ys[b] - ys[a]) / (ts[b] - ts[a]);
    };
    const double w = (t - ts[i]) / (ts[i + 1] - ts[i]);
    return node_slope(i) + w * (node_slope(i + 1) - node_slope(i));
  }
  bool has_closed_inverse() const override { return true; }
  double closed_inverse(double y) const override {
    if (y == 0.0) return 0.0;
    if (y <= ys.front()) return ts.front() * std::pow(y / ys.front(), 1.0 / p_lo);
    if (y >= ys.back()) return ts.back() * std::pow(y / ys.back(), 1.0 / p_hi);
    const auto it = std::upper_bound(ys.begin(), ys.end(), y);
    const size_t i = size_t(it - ys.begin()) - 1;
    const double w = (y - ys[i]) / (ys[i + 1] - ys[i]);
    return ts[i] + w * (ts[i + 1] - ts[i]);
  }
  double floor() const override { return ts.front() * 1e-3; }
};

// Shared machinery so transform wrappers can fall back to numeric inversion.
double numeric_invert(const Impl& f, double y, double tol);

struct ComposeInverseImpl final : Impl {
  std::shared_ptr<const Impl> outer, inner;  // t -> outer(inner^{-1}(t))
  double inv_tol;
  ComposeInverseImpl(std::shared_ptr<const Impl> o, std::shared_ptr<const Impl> i,
                     double tol)
      : outer(std::move(o)), inner(std::move(i)), inv_tol(tol) {
    name = outer->name + " o " + inner->name + "^-1";
  }
  double inner_inverse(double t) const {
    if (inner->has_closed_inverse()) return inner->closed_inverse(t);
    return numeric_invert(*inner, t, inv_tol);
  }
  double value(double t) const override {
    if (t == 0.0) return 0.0;
    return outer->value(inner_inverse(t));
  }
  double derivative(double t) const override {
    const double u = inner_inverse(t);
    return outer->derivative(u) / inner->derivative(u);
  }
  double slope_ratio(double t) const override {
    const double u = inner_inverse(t);
    return outer->slope_ratio(u) / inner->slope_ratio(u);
  }
  bool has_closed_inverse() const override { return true; }
  double closed_inverse(double y) const override {
    if (y == 0.0) return 0.0;
    const double u = outer->has_closed_inverse() ? outer->closed_inverse(y)
                                                 : numeric_invert(*outer, y, inv_tol);
    return inner->value(u);
  }
};

struct PowerSubstImpl final : Impl {
  std::shared_ptr<const Impl> base;
  double s;
  PowerSubstImpl(std::shared_ptr<const Impl> b, double s_) : base(std::move(b)), s(s_) {
    std::ostringstream os;
    os << base->name << "(t^" << s << ")";
    name = os.str();
  }
  double value(double t) const override { return base->value(std::pow(t, s)); }
  double derivative(double t) const override {
    return s * std::pow(t, s - 1.0) * base->derivative(std::pow(t, s));
  }
  double slope_ratio(double t) const override {
    return s * base->slope_ratio(std::pow(t, s));
  }
  bool has_closed_inverse() const override { return base->has_closed_inverse(); }
  double closed_inverse(double y) const override {
    return std::pow(base->closed_inverse(y), 1.0 / s);
  }
};

struct ReciprocalImpl final : Impl {
  std::shared_ptr<const Impl> base;
  explicit ReciprocalImpl(std::shared_ptr<const Impl> b) : base(std::move(b)) {
    name = "reciprocal(" + base->name + ")";
  }
  double value(double t) const override {
    if (t == 0.0) return 0.0;
    return 1.0 / base->value(1.0 / t);
  }
  double derivative(double t) const override {
    const double u = 1.0 / t;
    const double v = base->value(u);
    return base->derivative(u) / (t * t * v * v);
  }
  double slope_ratio(double t) const override { return base->slope_ratio(1.0 / t); }
  bool has_closed_inverse() const override { return base->has_closed_inverse(); }
  double closed_inverse(double y) const override {
    if (y == 0.0) return 0.0;
    return 1.0 / base->closed_inverse(1.0 / y);
  }
};

struct InverseImpl final : Impl {
  std::shared_ptr<const Impl> base;
  double inv_tol;
  InverseImpl(std::shared_ptr<const Impl> b, double tol) : base(std::move(b)), inv_tol(tol) {
    name = base->name + "^-1";
  }
  double pre(double t) const {
    if (base->has_closed_inverse()) return base->closed_inverse(t);
    return numeric_invert(*base, t, inv_tol);
  }
  double value(double t) const override {
    if (t == 0.0) return 0.0;
    return pre(t);
  }
  double derivative(double t) const override {
    const double u = pre(t);
    return 1.0 / base->derivative(u);
  }
  double slope_ratio(double t) const override { return 1.0 / base->slope_ratio(pre(t)); }
  bool has_closed_inverse() const override { return true; }
  double closed_inverse(double y) const override { return base->value(y); }
};

double numeric_invert(const Impl& f, double y, double tol) {
  if (y == 0.0) return 0.0;
  double lo = 1e-12, hi = 1e12;
  // Monotonicity makes bracket growth safe; give up after a wide sweep.
  int guard = 0;
  while (f.value(lo) > y && guard++ < 60) lo *= 0.0625;
  guard = 0;
  while (f.value(hi) < y && guard++ < 60) hi *= 16.0;
  if (f.value(lo) > y || f.value(hi) < y) {
    std::ostringstream os;
    os << "invert: bracketing failed for y=" << y << " within [" << lo << "," << hi << "]";
    throw std::range_error(os.str());
  }
  while ((hi - lo) > tol * std::max(1.0, lo)) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (f.value(mid) < y ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

GrowthFunction::GrowthFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

GrowthFunction GrowthFunction::power(double p) {
  checked_positive(p, "power exponent");
  return GrowthFunction(std::make_shared<PowerImpl>(p));
}

GrowthFunction GrowthFunction::power_log(double p, double a) {
  checked_positive(p, "power_log exponent");
  if (!std::isfinite(a)) throw std::invalid_argument("power_log: log exponent must be finite");
  return GrowthFunction(std::make_shared<PowerLogImpl>(p, a));
}

GrowthFunction GrowthFunction::piecewise_power(std::vector<double> breakpoints,
                                               std::vector<double> exponents) {
  return GrowthFunction(
      std::make_shared<PiecewisePowerImpl>(std::move(breakpoints), std::move(exponents)));
}

GrowthFunction GrowthFunction::tabulated(std::vector<double> t, std::vector<double> phi) {
  return GrowthFunction(std::make_shared<TabulatedImpl>(std::move(t), std::move(phi)));
}

GrowthFunction GrowthFunction::compose_inverse(const GrowthFunction& outer,
                                               const GrowthFunction& inner) {
  const auto* po = dynamic_cast<const PowerImpl*>(outer.impl_.get());
  const auto* pi = dynamic_cast<const PowerImpl*>(inner.impl_.get());
  if (po && pi) return power(po->p / pi->p);
  return GrowthFunction(std::make_shared<ComposeInverseImpl>(outer.impl_, inner.impl_, 1e-12));
}

GrowthFunction GrowthFunction::power_subst(double s) const {
  checked_positive(s, "power_subst exponent");
  if (const auto* p = dynamic_cast<const PowerImpl*>(impl_.get()))
    return power(p->p * s);
  return GrowthFunction(std::make_shared<PowerSubstImpl>(impl_, s));
}

GrowthFunction GrowthFunction::reciprocal() const {
  if (const auto* p = dynamic_cast<const PowerImpl*>(impl_.get()))
    return power(p->p);  // 1/((1/t)^p) = t^p
  return GrowthFunction(std::make_shared<ReciprocalImpl>(impl_));
}

GrowthFunction GrowthFunction::inverse_as_growth() const {
  if (const auto* p = dynamic_cast<const PowerImpl*>(impl_.get()))
    return power(1.0 / p->p);
  return GrowthFunction(std::make_shared<InverseImpl>(impl_, 1e-12));
}

double GrowthFunction::value(double t) const {
  if (!std::isfinite(t) || t < 0.0)
    throw std::invalid_argument("evaluate: t must be finite and nonnegative");
  return impl_->value(t);
}

double GrowthFunction::derivative(double t) const {
  if (!std::isfinite(t) || t < 0.0)
    throw std::invalid_argument("evaluate: t must be finite and nonnegative");
  if (t == 0.0) throw std::domain_error("derivative undefined at t=0");
  return impl_->derivative(t);
}

double GrowthFunction::slope_ratio(double t) const {
  if (!std::isfinite(t) || t < 0.0)
    throw std::invalid_argument("evaluate: t must be finite and nonnegative");
  if (t == 0.0) throw std::domain_error("slope ratio undefined at t=0");
  return impl_->slope_ratio(t);
}

double GrowthFunction::evaluate(double t, EvalMode mode) const {
  switch (mode) {
    case EvalMode::value: return value(t);
    case EvalMode::derivative: return derivative(t);
    case EvalMode::slope_ratio: return slope_ratio(t);
  }
  throw std::invalid_argument("evaluate: unknown mode");
}

double GrowthFunction::invert(double y, double tol) const {
  if (!std::isfinite(y) || y < 0.0)
    throw std::invalid_argument("invert: y must be finite and nonnegative");
  if (y == 0.0) return 0.0;
  if (impl_->has_closed_inverse()) return impl_->closed_inverse(y);
  return numeric_invert(*impl_, y, tol);
}

bool GrowthFunction::has_closed_inverse() const { return impl_->has_closed_inverse(); }

const std::string& GrowthFunction::description() const { return impl_->name; }

double GrowthFunction::domain_floor() const { return impl_->floor(); }

GrowthIndices estimate_indices(const GrowthFunction& phi, const ScanGrid& grid) {
  if (grid.points < 2) throw std::invalid_argument("estimate_indices: grid too small");
  const auto ts = grid.make();
  double lo = phi.slope_ratio(ts[0]), hi = lo;
#pragma omp parallel for reduction(min : lo) reduction(max : hi) schedule(static)
  for (size_t i = 1; i < ts.size(); ++i) {
    const double r = phi.slope_ratio(ts[i]);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  return {lo, hi, grid};
}

PanelIntegral integrate_growth_over_s2(const GrowthFunction& phi, double t) {
  // Geometric panels [t 2^{-k-1}, t 2^{-k}] with 8-point Gauss each.  The
  // panel sums of an integrable power-like integrand decay geometrically, so
  // a ratio estimate bounds the tail; non-decaying panels flag divergence.
  static const double gx[4] = {0.1834346424956498, 0.5255324099163290,
                               0.7966664774136267, 0.9602898564975363};
  static const double gw[4] = {0.3626837833783620, 0.3137066458778873,
                               0.2223810344533745, 0.1012285362903763};
  auto panel = [&](double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
      const double sp = c + h * gx[i], sm = c - h * gx[i];
      s += gw[i] * (phi.value(sp) / (sp * sp) + phi.value(sm) / (sm * sm));
    }
    return h * s;
  };
  PanelIntegral out;
  double hi = t, prev = -1.0;
  int non_decreasing = 0;
  for (int k = 0; k < 400; ++k) {
    const double lo = 0.5 * hi;
    const double r = panel(lo, hi);
    out.value += r;
    if (prev >= 0.0 && r >= prev * 0.999) {
      if (++non_decreasing >= 40) {
        out.divergent = true;
        return out;
      }
    } else {
      non_decreasing = 0;
    }
    if (prev > 0.0 && r < prev) {
      const double q = r / prev;
      const double tail = r * q / (1.0 - q);
      if (tail < 1e-14 * out.value) {
        out.tail_estimate = tail;
        out.value += tail;
        return out;
      }
    }
    prev = r;
    hi = lo;
  }
  out.divergent = true;  // never settled
  return out;
}

DiniResult dini_constant(const GrowthFunction& phi1, const GrowthFunction& phi2,
                         const ScanGrid& grid) {
  const auto ts = grid.make();
  DiniResult out;
  std::vector<double> ratio(ts.size(), 0.0);
  bool divergent = false;
#pragma omp parallel for schedule(dynamic, 8)
  for (size_t i = 0; i < ts.size(); ++i) {
    const auto I = integrate_growth_over_s2(phi2, ts[i]);
    if (I.divergent) {
#pragma omp critical
      divergent = true;
      continue;
    }
    ratio[i] = I.value * ts[i] / phi1.value(ts[i]);
  }
  if (divergent) {
    out.divergent_at_zero = true;
    out.unbounded = true;
    return out;
  }
  for (size_t i = 0; i < ts.size(); ++i) {
    if (ratio[i] > out.constant) {
      out.constant = ratio[i];
      out.argmax_t = ts[i];
    }
  }
  // Unbounded trend: monotone growth by a factor >= 2 across the outer two
  // decades of the scan, toward either end.
  auto grows_toward = [&](bool small_end) {
    const double cut = small_end ? grid.t_min * 100.0 : grid.t_max / 100.0;
    std::vector<double> vals;  // ordered moving outward
    for (size_t i = 0; i < ts.size(); ++i)
      if ((small_end && ts[i] <= cut) || (!small_end && ts[i] >= cut)) vals.push_back(ratio[i]);
    if (small_end) std::reverse(vals.begin(), vals.end());
    if (vals.size() < 3 || !(vals.front() > 0)) return false;
    for (size_t i = 0; i + 1 < vals.size(); ++i)
      if (vals[i + 1] < vals[i] * (1.0 - 1e-9)) return false;
    return vals.back() >= 2.0 * vals.front();
  };
  if (grows_toward(false) || grows_toward(true)) out.unbounded = true;
  return out;
}

bool quotient_monotone(const GrowthFunction& phi1, const GrowthFunction& phi2,
                       const ScanGrid& grid, double rel_tol) {
  const auto ts = grid.make();
  double prev = phi2.value(ts[0]) / phi1.value(ts[0]);
  for (size_t i = 1; i < ts.size(); ++i) {
    const double r = phi2.value(ts[i]) / phi1.value(ts[i]);
    if (r < prev * (1.0 - rel_tol)) return false;
    prev = std::max(prev, r);
  }
  return true;
}

namespace {

// Trend rule shared by the 2-D scans: sup plus a flag for monotone growth by
// a factor >= 2 across the top two decades of either variable.
TwoVarBound scan_2d(const std::vector<double>& ss, const std::vector<double>& ts,
                    const std::function<double(double, double)>& ratio) {
  TwoVarBound out;
  const size_t ns = ss.size(), nt = ts.size();
  std::vector<double> vals(ns * nt);
#pragma omp parallel for schedule(static)
  for (size_t i = 0; i < ns; ++i)
    for (size_t j = 0; j < nt; ++j) vals[i * nt + j] = ratio(ss[i], ts[j]);
  for (size_t i = 0; i < ns; ++i)
    for (size_t j = 0; j < nt; ++j)
      if (vals[i * nt + j] > out.constant) {
        out.constant = vals[i * nt + j];
        out.argmax_s = ss[i];
        out.argmax_t = ts[j];
      }
  auto trend_up = [&](bool along_s) {
    const auto& outer = along_s ? ts : ss;
    const auto& inner = along_s ? ss : ts;
    const double cut = inner.back() / 100.0;
    for (size_t o = 0; o < outer.size(); ++o) {
      double first = -1.0, last = 0.0;
      bool monotone = true;
      for (size_t i = 0; i + 1 < inner.size(); ++i) {
        if (inner[i] < cut) continue;
        const double a = along_s ? vals[i * nt + o] : vals[o * nt + i];
        const double b = along_s ? vals[(i + 1) * nt + o] : vals[o * nt + i + 1];
        if (first < 0.0) first = a;
        if (b < a * (1.0 - 1e-9)) monotone = false;
        last = b;
      }
      if (monotone && first > 0.0 && last >= 2.0 * first) return true;
    }
    return false;
  };
  out.holds = !trend_up(true) && !trend_up(false);
  return out;
}

}  // namespace

TwoVarBound quotient_bound_check(const GrowthFunction& phi, const ScanGrid& grid) {
  ScanGrid g = grid;
  g.points = std::min(g.points, 160);
  const auto ss = g.make();
  return scan_2d(ss, ss, [&](double s, double t) {
    return phi.value(s / t) * phi.value(t) / phi.value(s);
  });
}

ClassReport classify(const GrowthFunction& phi, const ScanGrid& grid) {
  ClassReport rep;
  rep.indices = estimate_indices(phi, grid);
  const double a = rep.indices.lower, b = rep.indices.upper;
  if (a >= 1.0 - 1e-12) rep.upper_type_q = b;
  if (b <= 1.0 + 1e-12) rep.lower_type_p = a;

  const auto ts = grid.make();
  rep.delta2_constant = 0.0;
  for (double t : ts) rep.delta2_constant = std::max(rep.delta2_constant, phi.value(2.0 * t) / phi.value(t));
  rep.delta2 = std::isfinite(rep.delta2_constant);

  const auto dini = dini_constant(phi, phi, grid);
  rep.nabla2_divergent = dini.divergent_at_zero;
  rep.nabla2 = !dini.unbounded && !dini.divergent_at_zero;
  rep.nabla2_constant = dini.constant;

  ScanGrid g2 = grid;
  g2.points = std::min(g2.points, 160);
  const auto ss = g2.make();
  rep.submultiplicative = scan_2d(ss, ss, [&](double s, double t) {
    return phi.value(s * t) / (phi.value(s) * phi.value(t));
  });
  std::vector<double> ge1;
  for (double s : ss)
    if (s >= 1.0) ge1.push_back(s);
  if (ge1.size() < 2) ge1 = {1.0, 10.0, 100.0};
  if (rep.in_U()) {
    const double q = *rep.upper_type_q;
    rep.quotient_upper = scan_2d(ge1, ge1, [&](double s, double t) {
      return phi.value(s / t) * std::pow(t, q) / phi.value(s);
    });
    rep.in_tilde_class = rep.submultiplicative.holds && rep.quotient_upper.holds;
  }
  if (rep.in_L()) {
    const double p = *rep.lower_type_p;
    rep.quotient_lower = scan_2d(ge1, ge1, [&](double s, double t) {
      return phi.value(s / t) * phi.value(t) / std::pow(s, p);
    });
    rep.in_tilde_class = rep.submultiplicative.holds && rep.quotient_lower.holds;
  }

  // Derivative comparability Phi'(t) ~ Phi(t)/t is assumed throughout the
  // class arguments; for tabulated data it is only a lint, the equivalence
  // constants being unspecified.
  if (phi.description().rfind("tabulated", 0) == 0) {
    double lo = 1e300, hi = 0.0;
    for (double t : ts) {
      if (t < phi.domain_floor()) continue;
      const double r = phi.slope_ratio(t);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    if (lo <= 0.05 || hi >= 20.0)
      rep.notes.push_back("slope ratio spans [" + std::to_string(lo) + "," +
                          std::to_string(hi) + "]; derivative-comparability is doubtful");
  }
  return rep;
}

}  // namespace carleson
