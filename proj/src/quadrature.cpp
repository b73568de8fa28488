#include "carleson/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <tuple>

#include "carleson/special.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace carleson {

namespace {

// 6-point Gauss-Legendre on [-1,1], stored as half rule.
constexpr double kGx[3] = {0.2386191860831969, 0.6612093864662645, 0.9324695142031521};
constexpr double kGw[3] = {0.4679139345726910, 0.3607615730481386, 0.1713244923791704};

// Gauss 7 / Kronrod 15 pairs: node, G7 weight, K15 weight.
constexpr double kGK[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529}};

struct Cell {
  double x0, x1, y0, y1;
};

double gauss_cell(const std::function<double(double, double)>& g, const Cell& c) {
  const double xc = 0.5 * (c.x0 + c.x1), xh = 0.5 * (c.x1 - c.x0);
  const double yc = 0.5 * (c.y0 + c.y1), yh = 0.5 * (c.y1 - c.y0);
  double xs[6], xw[6], ys[6], yw[6];
  for (int i = 0; i < 3; ++i) {
    xs[2 * i] = xc - xh * kGx[i];
    xs[2 * i + 1] = xc + xh * kGx[i];
    xw[2 * i] = xw[2 * i + 1] = kGw[i];
    ys[2 * i] = yc - yh * kGx[i];
    ys[2 * i + 1] = yc + yh * kGx[i];
    yw[2 * i] = yw[2 * i + 1] = kGw[i];
  }
  double sum = 0.0;
  for (int i = 0; i < 6; ++i) {
    double row = 0.0;
    for (int j = 0; j < 6; ++j) row += yw[j] * g(xs[i], ys[j]);
    sum += xw[i] * row;
  }
  return sum * xh * yh;
}

struct Region {
  Cell cell;
  long long id = 0;
  double fine = 0;  // sum of the four child-cell Gauss values
  double err = 0;   // |coarse - fine|
};

void split4(const Cell& c, Cell out[4]) {
  const double xm = 0.5 * (c.x0 + c.x1), ym = 0.5 * (c.y0 + c.y1);
  out[0] = {c.x0, xm, c.y0, ym};
  out[1] = {xm, c.x1, c.y0, ym};
  out[2] = {c.x0, xm, ym, c.y1};
  out[3] = {xm, c.x1, ym, c.y1};
}

// Geometric edge ladder covering (lo, hi] starting from scale h, factor 4.
std::vector<double> ladder(double lo, double hi, double h) {
  std::vector<double> e;
  e.push_back(lo);
  double v = std::max(h, (hi - lo) * 1e-12);
  while (lo + v < hi) {
    e.push_back(lo + v);
    v *= 4.0;
  }
  e.push_back(hi);
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return e;
}

std::vector<double> two_sided_ladder(double center, double half_width, double h) {
  std::vector<double> e;
  e.push_back(center - half_width);
  e.push_back(center + half_width);
  e.push_back(center);
  double v = std::min(h, half_width);
  while (v < half_width) {
    e.push_back(center - v);
    e.push_back(center + v);
    v *= 4.0;
  }
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return e;
}

struct AdaptiveOutcome {
  double value = 0;
  double err = 0;
  int cells = 0;
  bool converged = false;
};

// Batched largest-error-first refinement.  All floating point work happens
// in a thread-count-independent order, so results are bit-stable.
AdaptiveOutcome adaptive_box(const std::function<double(double, double)>& g,
                             const std::vector<double>& xe, const std::vector<double>& ye,
                             double abs_tol, double rel_tol, int max_cells) {
  std::vector<Region> alive;
  long long next_id = 0;

  auto build_region = [&](const Cell& c) {
    Region r;
    r.cell = c;
    Cell kids[4];
    split4(c, kids);
    const double coarse = gauss_cell(g, c);
    double fine = 0.0;
    for (int k = 0; k < 4; ++k) fine += gauss_cell(g, kids[k]);
    r.fine = fine;
    r.err = std::fabs(coarse - fine);
    return r;
  };

  std::vector<Cell> roots;
  for (size_t i = 0; i + 1 < xe.size(); ++i)
    for (size_t j = 0; j + 1 < ye.size(); ++j)
      roots.push_back({xe[i], xe[i + 1], ye[j], ye[j + 1]});

  alive.resize(roots.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (size_t i = 0; i < roots.size(); ++i) alive[i] = build_region(roots[i]);
  for (auto& r : alive) r.id = next_id++;

  using Entry = std::pair<double, long long>;  // (err, id) -> index lookup
  std::priority_queue<Entry> queue;
  std::vector<size_t> index_of;  // id -> slot in `alive` (grows monotonically)
  auto push_all = [&](size_t from) {
    for (size_t i = from; i < alive.size(); ++i) {
      index_of.resize(std::max(index_of.size(), size_t(alive[i].id) + 1));
      index_of[size_t(alive[i].id)] = i;
      queue.push({alive[i].err, alive[i].id});
    }
  };
  push_all(0);

  auto totals = [&]() {
    double v = 0, e = 0;
    for (const auto& r : alive) {
      v += r.fine;
      e += r.err;
    }
    return std::pair<double, double>(v, e);
  };

  std::vector<char> dead;  // by id
  auto is_dead = [&](long long id) {
    return size_t(id) < dead.size() && dead[size_t(id)];
  };

  double total = 0, err = 0;
  std::tie(total, err) = totals();

  const int batch = 16;
  while (int(alive.size()) < max_cells) {
    if (err <= std::max(abs_tol, rel_tol * std::fabs(total))) break;
    // Pop a deterministic batch of the worst regions.
    std::vector<size_t> popped;
    while (int(popped.size()) < batch && !queue.empty()) {
      const auto [e, id] = queue.top();
      queue.pop();
      if (is_dead(id)) continue;
      popped.push_back(index_of[size_t(id)]);
    }
    if (popped.empty()) break;
    std::vector<Cell> kids;
    kids.reserve(popped.size() * 4);
    for (size_t slot : popped) {
      Cell k4[4];
      split4(alive[slot].cell, k4);
      for (int k = 0; k < 4; ++k) kids.push_back(k4[k]);
    }
    std::vector<Region> fresh(kids.size());
#pragma omp parallel for schedule(dynamic, 2)
    for (size_t i = 0; i < kids.size(); ++i) fresh[i] = build_region(kids[i]);
    // Serial merge in batch order keeps the arithmetic deterministic.
    const size_t first_new = alive.size();
    for (size_t p = 0; p < popped.size(); ++p) {
      Region& parent = alive[popped[p]];
      dead.resize(std::max(dead.size(), size_t(parent.id) + 1));
      dead[size_t(parent.id)] = 1;
      total -= parent.fine;
      err -= parent.err;
      parent.fine = 0;
      parent.err = 0;
      for (int k = 0; k < 4; ++k) {
        Region r = fresh[p * 4 + k];
        r.id = next_id++;
        total += r.fine;
        err += r.err;
        alive.push_back(std::move(r));
      }
    }
    push_all(first_new);
  }

  // Deterministic final sum over surviving regions in id order.
  std::vector<const Region*> leaves;
  for (const auto& r : alive)
    if (!is_dead(r.id) || r.fine != 0.0) leaves.push_back(&r);
  std::sort(leaves.begin(), leaves.end(),
            [](const Region* a, const Region* b) { return a->id < b->id; });
  AdaptiveOutcome out;
  for (const Region* r : leaves) {
    if (is_dead(r->id)) continue;
    out.value += r->fine;
    out.err += r->err;
  }
  out.cells = int(alive.size());
  out.converged = out.err <= std::max(abs_tol, rel_tol * std::fabs(out.value));
  return out;
}

// Analytic tail bounds outside the truncation box, driven by the integrand
// envelope and the measure growth bound w <= A_w y^P.
struct TailBounds {
  double beyond_x = INFINITY;
  double beyond_y = INFINITY;
  bool usable = false;
};

TailBounds tail_bounds(const DecayEnvelope& env, double Aw, double P, double X, double Y) {
  TailBounds t;
  const double d = env.decay;
  if (!env.declared() || !(P > -1.0) || !(d > 1.0)) return t;
  if (X < env.valid_radius || Y < env.valid_radius) return t;
  t.beyond_x = env.amplitude * (2.0 * std::pow(X, 1.0 - d) / (d - 1.0)) * Aw *
               std::pow(Y, 1.0 + P) / (1.0 + P);
  const double oy = env.offset_y;
  if (P >= 0.0) {
    if (!(d > 2.0 + P)) return t;
    t.beyond_y = env.amplitude * beta_value(0.5, (d - 1.0) / 2.0) * Aw *
                 std::pow(Y + oy, 2.0 + P - d) / (d - 2.0 - P);
  } else {
    if (!(d > 2.0)) return t;
    t.beyond_y = env.amplitude * beta_value(0.5, (d - 1.0) / 2.0) * Aw * std::pow(Y, P) *
                 std::pow(Y + oy, 2.0 - d) / (d - 2.0);
  }
  t.usable = std::isfinite(t.beyond_x) && std::isfinite(t.beyond_y);
  return t;
}

}  // namespace

IntegrationResult integrate(const Measure& mu, const PlaneFunction& f,
                            const QuadratureConfig& cfg) {
  IntegrationResult res;
  if (mu.kind() == Measure::Kind::atomic) {
    for (const auto& p : mu.points()) res.value += p.mass * f.eval(p.x, p.y);
    res.note = "atomic sum";
    return res;
  }

  // For V_alpha with alpha < 0 the substitution v = y^{1+alpha}/(1+alpha)
  // turns the measure into plain Lebesgue and removes the boundary
  // singularity that defeats dyadic refinement.
  const bool flatten = mu.kind() == Measure::Kind::lebesgue_alpha && mu.alpha() < 0.0;
  const double ap1 = flatten ? 1.0 + mu.alpha() : 1.0;
  auto y_of_v = [ap1](double v) { return std::pow(ap1 * v, 1.0 / ap1); };
  auto v_of_y = [ap1](double y) { return std::pow(y, ap1) / ap1; };

  std::function<double(double, double)> g;
  if (flatten)
    g = [&f, y_of_v](double x, double v) { return f.eval(x, y_of_v(v)); };
  else
    g = [&](double x, double y) { return f.eval(x, y) * mu.density_at(x, y); };

  const double h = std::max(f.feature_scale, 1e-9);
  const double cx = f.envelope.declared() ? f.envelope.center_x : 0.0;
  const double oy = f.envelope.offset_y;

  double Aw = 1.0, P = 0.0;
  bool have_growth = false;
  if (auto gb = mu.growth_bound()) {
    Aw = gb->first;
    P = gb->second;
    have_growth = true;
  }

  double X = cfg.x_half_width, Y = cfg.y_max;
  const bool explicit_box = X > 0 && Y > 0;
  double tail = 0.0;

  if (explicit_box) {
    const auto t = tail_bounds(f.envelope, Aw, P, X, Y);
    if (t.usable && have_growth) {
      tail = t.beyond_x + t.beyond_y;
    } else {
      res.tail_divergent = true;
      res.note = "explicit truncation box; tail not bounded";
    }
  } else {
    if (!f.envelope.declared() || !have_growth) {
      res.tail_divergent = true;
      res.note = "no decay envelope declared; integrating over default box only";
      X = std::max(1e4 * h, 1e4);
      Y = X;
    } else {
      // First pass on a modest box for the value scale, then grow the box
      // until the analytic tail is below a tenth of the tolerance budget.
      double X0 = std::max({64.0 * h, 64.0 * (oy + h), f.envelope.valid_radius, 1.0});
      double Y0 = X0;
      auto ye0 = ladder(std::max(cfg.y_min, 0.0), Y0, h / 4.0);
      if (flatten)
        for (double& e : ye0) e = v_of_y(e);
      auto coarse =
          adaptive_box(g, two_sided_ladder(cx, X0, h), ye0, cfg.abs_tol, 1e-3, 2000);
      const double eps = std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(coarse.value)) / 10.0;
      X = X0;
      Y = Y0;
      bool ok = false;
      for (int i = 0; i < 60; ++i) {
        const auto t = tail_bounds(f.envelope, Aw, P, X, Y);
        if (!t.usable) break;
        if (t.beyond_y > eps / 2.0) {
          Y *= 2.0;
          continue;
        }
        if (t.beyond_x > eps / 2.0) {
          X *= 2.0;
          continue;
        }
        tail = t.beyond_x + t.beyond_y;
        ok = true;
        break;
      }
      if (!ok) {
        res.tail_divergent = true;
        res.note = "envelope decay too slow to bound the tail";
      }
    }
  }

  const auto xe = two_sided_ladder(cx, X, h);
  auto ye = ladder(std::max(cfg.y_min, 0.0), Y, h / 4.0);
  if (flatten)
    for (double& e : ye) e = v_of_y(e);
  const auto out = adaptive_box(g, xe, ye, cfg.abs_tol, cfg.rel_tol, cfg.max_cells);
  res.value = out.value;
  res.cells = out.cells;
  res.converged = out.converged;
  res.tail_bound = tail;
  res.error_estimate = out.err + (res.tail_divergent ? 0.0 : tail);
  if (!out.converged && res.note.empty()) res.note = "cell budget exhausted";
  return res;
}

IntegrationResult measure_of_square(const Measure& mu, const CarlesonSquare& Q,
                                    const QuadratureConfig& cfg) {
  IntegrationResult res;
  const Interval& I = Q.base;
  switch (mu.kind()) {
    case Measure::Kind::lebesgue_alpha:
      res.value = box_volume(I, mu.alpha());
      res.note = "closed form";
      return res;
    case Measure::Kind::atomic:
      for (const auto& p : mu.points())
        if (Q.contains(p.x, p.y)) res.value += p.mass;
      res.note = "atomic sum";
      return res;
    case Measure::Kind::density:
      break;
  }
  if (mu.density_is_y_only()) {
    // mu(Q_I) = |I| * int_0^{|I|} w(y) dy on geometric panels toward 0.
    auto w = [&](double y) { return mu.density_at(0.0, y); };
    double value = 0.0, err = 0.0;
    double hi = I.length, prev = -1.0;
    bool settled = false;
    for (int k = 0; k < 400; ++k) {
      const double lo = 0.5 * hi;
      const auto part = integrate_segment(w, lo, hi, cfg.abs_tol, cfg.rel_tol * 0.1);
      value += part.value;
      err += part.error_estimate;
      if (prev > 0.0 && part.value < prev) {
        const double q = part.value / prev;
        const double tail_est = part.value * q / (1.0 - q);
        if (tail_est < std::max(cfg.abs_tol, cfg.rel_tol * value) * 0.05) {
          value += tail_est;
          err += tail_est;
          settled = true;
          break;
        }
      }
      prev = part.value;
      hi = lo;
    }
    res.value = I.length * value;
    res.error_estimate = I.length * err;
    res.converged = settled;
    if (!settled) res.note = "panel sum did not settle near y=0";
    return res;
  }
  const auto xe = ladder(I.lo(), I.hi(), I.length / 8.0);
  const auto ye = ladder(0.0, I.length, I.length / 64.0);
  const auto out = adaptive_box([&](double x, double y) { return mu.density_at(x, y); }, xe,
                                ye, cfg.abs_tol, cfg.rel_tol, cfg.max_cells);
  res.value = out.value;
  res.error_estimate = out.err;
  res.cells = out.cells;
  res.converged = out.converged;
  return res;
}

IntegrationResult integrate_over_box(const std::function<double(double, double)>& g,
                                     double x0, double x1, double y0, double y1,
                                     double abs_tol, double rel_tol, int max_cells) {
  IntegrationResult res;
  if (!(x1 > x0) || !(y1 > y0)) return res;
  const auto xe = ladder(x0, x1, (x1 - x0) / 8.0);
  const auto ye = ladder(y0, y1, (y1 - y0) / 64.0);
  const auto out = adaptive_box(g, xe, ye, abs_tol, rel_tol, max_cells);
  res.value = out.value;
  res.error_estimate = out.err;
  res.cells = out.cells;
  res.converged = out.converged;
  return res;
}

namespace {

struct Panel {
  double a, b, value, err;
  long long id;
};

void gk_panel(const std::function<double(double)>& f, double a, double b, double& value,
              double& err) {
  const double c = 0.5 * (a + b), m = 0.5 * (b - a);
  const double y0 = f(c);
  double g7 = kGK[0][1] * y0;
  double k15 = kGK[0][2] * y0;
  for (int i = 1; i < 8; ++i) {
    const double dx = m * kGK[i][0];
    const double yi = f(c + dx) + f(c - dx);
    g7 += kGK[i][1] * yi;
    k15 += kGK[i][2] * yi;
  }
  value = k15 * m;
  err = std::fabs(k15 - g7) * m;
}

double adaptive_line(const std::function<double(double)>& f, std::vector<double> edges,
                     double abs_tol, double rel_tol, double& err_out, bool& converged,
                     int max_panels = 4000) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<Panel> panels;
  long long next_id = 0;
  auto make_panel = [&](double a, double b) {
    Panel p{a, b, 0, 0, next_id++};
    gk_panel(f, a, b, p.value, p.err);
    return p;
  };
  for (size_t i = 0; i + 1 < edges.size(); ++i)
    panels.push_back(make_panel(edges[i], edges[i + 1]));
  auto cmp = [](const Panel& x, const Panel& y) {
    if (x.err != y.err) return x.err < y.err;
    return x.id < y.id;
  };
  std::make_heap(panels.begin(), panels.end(), cmp);
  auto totals = [&]() {
    double v = 0, e = 0;
    for (const auto& p : panels) {
      v += p.value;
      e += p.err;
    }
    return std::pair<double, double>(v, e);
  };
  auto [total, err] = totals();
  while (int(panels.size()) < max_panels &&
         err > std::max(abs_tol, rel_tol * std::fabs(total))) {
    std::pop_heap(panels.begin(), panels.end(), cmp);
    const Panel worst = panels.back();
    panels.pop_back();
    total -= worst.value;
    err -= worst.err;
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid == worst.a || mid == worst.b) {  // cannot split further
      Panel degenerate = worst;
      degenerate.err = 0;
      total += degenerate.value;
      panels.push_back(degenerate);
      std::push_heap(panels.begin(), panels.end(), cmp);
      continue;
    }
    for (const Panel& half : {make_panel(worst.a, mid), make_panel(mid, worst.b)}) {
      total += half.value;
      err += half.err;
      panels.push_back(half);
      std::push_heap(panels.begin(), panels.end(), cmp);
    }
  }
  std::sort(panels.begin(), panels.end(),
            [](const Panel& a, const Panel& b) { return a.id < b.id; });
  double value = 0;
  err = 0;
  for (const auto& p : panels) {
    value += p.value;
    err += p.err;
  }
  err_out = err;
  converged = err <= std::max(abs_tol, rel_tol * std::fabs(value));
  return value;
}

}  // namespace

IntegrationResult integrate_segment(const std::function<double(double)>& f, double a,
                                    double b, double abs_tol, double rel_tol) {
  IntegrationResult res;
  if (!(b > a)) return res;
  res.value = adaptive_line(f, {a, 0.5 * (a + b), b}, abs_tol, rel_tol, res.error_estimate,
                            res.converged);
  return res;
}

IntegrationResult integrate_line(const LineFunction& f, const QuadratureConfig& cfg) {
  IntegrationResult res;
  const double h = std::max(f.feature_scale, 1e-9);
  double X = cfg.x_half_width;
  double tail = 0.0;
  if (!f.envelope_declared()) {
    res.tail_divergent = true;
    res.note = "no decay envelope declared; integrating over default window only";
    if (X <= 0) X = std::max(1e6 * h, 1e6);
  } else if (!(f.env_decay > 1.0)) {
    res.tail_divergent = true;
    res.note = "envelope decay too slow to bound the tail";
    if (X <= 0) X = std::max(1e6 * h, 1e6);
  } else {
    if (X <= 0) {
      X = std::max({16.0 * h, 16.0 * f.env_offset, 1.0});
      // A cheap pass for the value scale, then grow the window.
      double coarse_err = 0;
      bool conv = false;
      const double coarse = adaptive_line(
          f.eval, two_sided_ladder(f.env_center, X, h), cfg.abs_tol, 1e-3, coarse_err, conv, 600);
      const double eps = std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(coarse)) / 10.0;
      for (int i = 0; i < 80; ++i) {
        tail = 2.0 * f.env_amplitude * std::pow(X, 1.0 - f.env_decay) / (f.env_decay - 1.0);
        if (tail <= eps) break;
        X *= 2.0;
      }
    } else {
      tail = 2.0 * f.env_amplitude * std::pow(X, 1.0 - f.env_decay) / (f.env_decay - 1.0);
    }
  }
  auto edges = two_sided_ladder(f.env_center, X, h);
  for (double a : f.anchors)
    if (a > f.env_center - X && a < f.env_center + X) edges.push_back(a);
  res.value = adaptive_line(f.eval, std::move(edges), cfg.abs_tol, cfg.rel_tol,
                            res.error_estimate, res.converged);
  res.tail_bound = tail;
  if (!res.tail_divergent) res.error_estimate += tail;
  if (!res.converged && res.note.empty()) res.note = "panel budget exhausted";
  return res;
}

namespace reference {

namespace {

double simpson_box(const std::function<double(double, double)>& g, double x0, double x1,
                   double y0, double y1) {
  const double xs[3] = {x0, 0.5 * (x0 + x1), x1};
  const double ys[3] = {y0, 0.5 * (y0 + y1), y1};
  const double w[3] = {1.0, 4.0, 1.0};
  double sum = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) sum += w[i] * w[j] * g(xs[i], ys[j]);
  return sum * (x1 - x0) * (y1 - y0) / 36.0;
}

double rec_box(const std::function<double(double, double)>& g, double x0, double x1,
               double y0, double y1, double whole, double tol, int depth) {
  const double xm = 0.5 * (x0 + x1), ym = 0.5 * (y0 + y1);
  const double q[4] = {simpson_box(g, x0, xm, y0, ym), simpson_box(g, xm, x1, y0, ym),
                       simpson_box(g, x0, xm, ym, y1), simpson_box(g, xm, x1, ym, y1)};
  const double sum = q[0] + q[1] + q[2] + q[3];
  if (depth <= 0 || std::fabs(sum - whole) <= 15.0 * tol) return sum;
  const double t = tol / 4.0;
  return rec_box(g, x0, xm, y0, ym, q[0], t, depth - 1) +
         rec_box(g, xm, x1, y0, ym, q[1], t, depth - 1) +
         rec_box(g, x0, xm, ym, y1, q[2], t, depth - 1) +
         rec_box(g, xm, x1, ym, y1, q[3], t, depth - 1);
}

double simpson_seg(const std::function<double(double)>& g, double a, double b) {
  return (g(a) + 4.0 * g(0.5 * (a + b)) + g(b)) * (b - a) / 6.0;
}

double rec_seg(const std::function<double(double)>& g, double a, double b, double whole,
               double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double left = simpson_seg(g, a, m), right = simpson_seg(g, m, b);
  if (depth <= 0 || std::fabs(left + right - whole) <= 15.0 * tol) return left + right;
  return rec_seg(g, a, m, left, tol / 2.0, depth - 1) +
         rec_seg(g, m, b, right, tol / 2.0, depth - 1);
}

}  // namespace

double integrate_box(const std::function<double(double, double)>& g, double x0, double x1,
                     double y0, double y1, double tol, int max_depth) {
  return rec_box(g, x0, x1, y0, y1, simpson_box(g, x0, x1, y0, y1), tol, max_depth);
}

double integrate_interval(const std::function<double(double)>& g, double a, double b,
                          double tol, int max_depth) {
  return rec_seg(g, a, b, simpson_seg(g, a, b), tol, max_depth);
}

}  // namespace reference

}  // namespace carleson
