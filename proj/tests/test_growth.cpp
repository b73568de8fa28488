#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "carleson/growth.hpp"

using namespace carleson;

namespace {

// Independent closed form for the slope ratio of t^p ln(e+t)^a.
double power_log_slope(double p, double a, double t) {
  const double L = std::log(M_E + t);
  return p + a * t / ((M_E + t) * L);
}

}  // namespace

TEST_CASE("evaluate modes") {
  const auto p2 = GrowthFunction::power(2.0);
  CHECK(p2.evaluate(3.0, EvalMode::value) == 9.0);
  CHECK(GrowthFunction::power(3.0).evaluate(2.0, EvalMode::derivative) == 12.0);
  CHECK(GrowthFunction::power(2.5).evaluate(7.0, EvalMode::slope_ratio) == 2.5);

  CHECK(p2.value(0.0) == 0.0);
  CHECK_THROWS_AS(p2.derivative(0.0), std::domain_error);
  CHECK_THROWS_AS(p2.slope_ratio(0.0), std::domain_error);
  CHECK_THROWS_AS(p2.value(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(GrowthFunction::power(NAN), std::invalid_argument);
  CHECK_THROWS_AS(GrowthFunction::power_log(2.0, NAN), std::invalid_argument);
}

TEST_CASE("inversion") {
  CHECK(GrowthFunction::power(2.0).invert(9.0) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(GrowthFunction::power(1.0).invert(5.0) == doctest::Approx(5.0).epsilon(1e-14));

  const auto pl = GrowthFunction::power_log(2.0, 1.0);
  // Forward-evaluate, then the numeric inverse must come back.
  const double y = 4.0 * std::log(M_E + 2.0);
  CHECK(pl.value(2.0) == doctest::Approx(y).epsilon(1e-15));
  CHECK(pl.invert(y) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(pl.invert(0.0) == 0.0);
  CHECK_THROWS_AS(pl.invert(-1.0), std::invalid_argument);
}

TEST_CASE("invert round-trip on a log grid") {
  const ScanGrid grid{1e-6, 1e6, 97};
  for (const auto& phi :
       {GrowthFunction::power(2.0), GrowthFunction::power(0.5),
        GrowthFunction::piecewise_power({1.0, 10.0}, {0.5, 2.0, 3.0}),
        GrowthFunction::power_log(2.0, 1.0), GrowthFunction::power_log(1.0, -0.5)}) {
    for (double t : grid.make()) {
      const double tol = phi.has_closed_inverse() ? 1e-9 : 1e-10 * 10;
      CHECK(phi.invert(phi.value(t)) == doctest::Approx(t).epsilon(tol));
    }
  }
}

TEST_CASE("tabulated family") {
  std::vector<double> ts, ys;
  for (int i = 0; i <= 40; ++i) {
    const double t = std::pow(10.0, -2.0 + 0.1 * i);
    ts.push_back(t);
    ys.push_back(t * t);
  }
  const auto tab = GrowthFunction::tabulated(ts, ys);
  for (double t : {0.02, 0.3, 1.7, 42.0}) {
    CHECK(tab.invert(tab.value(t)) == doctest::Approx(t).epsilon(1e-9));
  }
  // Boundary power-law extension keeps the bijection going.
  CHECK(tab.value(1e-4) == doctest::Approx(1e-8).epsilon(1e-6));
  CHECK(tab.value(1e4) == doctest::Approx(1e8).epsilon(1e-6));
  const auto idx = estimate_indices(tab, {0.05, 50.0, 301});
  CHECK(idx.lower == doctest::Approx(2.0).epsilon(0.02));
  CHECK(idx.upper == doctest::Approx(2.0).epsilon(0.02));

  CHECK_THROWS_AS(GrowthFunction::tabulated({1.0, 2.0}, {3.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(GrowthFunction::tabulated({1.0}, {1.0}), std::invalid_argument);
}

TEST_CASE("index estimates") {
  const auto i2 = estimate_indices(GrowthFunction::power(2.0));
  CHECK(i2.lower == 2.0);  // exact, not approximate
  CHECK(i2.upper == 2.0);

  const auto iq = estimate_indices(GrowthFunction::power(4.0).inverse_as_growth());
  CHECK(iq.lower == 0.25);
  CHECK(iq.upper == 0.25);

  const auto pl = GrowthFunction::power_log(2.0, 1.0);
  const auto ipl = estimate_indices(pl, {1e-6, 1e6, 2001});
  CHECK(ipl.lower == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(ipl.upper > 2.0);
  // Oracle: dense scan of the closed-form slope expression.
  double oracle_upper = 0;
  for (int i = 0; i <= 20000; ++i) {
    const double t = std::pow(10.0, -6.0 + 12.0 * i / 20000.0);
    oracle_upper = std::max(oracle_upper, power_log_slope(2.0, 1.0, t));
  }
  CHECK(ipl.upper == doctest::Approx(oracle_upper).epsilon(1e-5));
}

TEST_CASE("classification") {
  const auto c2 = classify(GrowthFunction::power(2.0));
  REQUIRE(c2.in_U());
  CHECK(*c2.upper_type_q == doctest::Approx(2.0));
  CHECK_FALSE(c2.in_L());
  CHECK(c2.nabla2);
  CHECK(c2.nabla2_constant == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(c2.delta2);
  CHECK(c2.delta2_constant == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(c2.submultiplicative.holds);
  CHECK(c2.submultiplicative.constant == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(c2.in_tilde_class);

  const auto c1 = classify(GrowthFunction::power(1.0));
  CHECK(c1.in_U());
  CHECK(c1.in_L());  // the one family in both classes
  CHECK_FALSE(c1.nabla2);
  CHECK(c1.nabla2_divergent);

  const auto ch = classify(GrowthFunction::power(0.5));
  REQUIRE(ch.in_L());
  CHECK(*ch.lower_type_p == doctest::Approx(0.5));
  CHECK_FALSE(ch.in_U());
  CHECK(ch.submultiplicative.constant == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(ch.in_tilde_class);

  const auto cpl = classify(GrowthFunction::power_log(2.0, 1.0));
  CHECK(cpl.in_U());
  CHECK(cpl.nabla2);
}

TEST_CASE("transforms") {
  const auto comp = GrowthFunction::compose_inverse(GrowthFunction::power(4.0),
                                                    GrowthFunction::power(2.0));
  const auto ic = estimate_indices(comp);
  CHECK(ic.lower == 2.0);
  CHECK(ic.upper == 2.0);
  CHECK(comp.value(3.0) == doctest::Approx(9.0).epsilon(1e-14));

  const auto sub = GrowthFunction::power(3.0).power_subst(2.0);
  const auto is = estimate_indices(sub);
  CHECK(is.lower == 6.0);
  CHECK(is.upper == 6.0);

  const auto rec = GrowthFunction::power(1.5).reciprocal();
  CHECK(rec.value(2.0) == doctest::Approx(std::pow(2.0, 1.5)).epsilon(1e-14));
  CHECK(estimate_indices(rec).lower == 1.5);
}

TEST_CASE("power substitution respects the index bracket") {
  // With the substituted scan grid mapped through t^{1/s}, the slope ratios
  // coincide pointwise with s times the base ratios.
  const auto pl = GrowthFunction::power_log(2.0, 1.0);
  const auto base = estimate_indices(pl, {1e-6, 1e6, 801});
  for (double s : {0.5, 2.0, 3.0}) {
    const auto sub = pl.power_subst(s);
    const ScanGrid mapped{std::pow(1e-6, 1.0 / s), std::pow(1e6, 1.0 / s), 801};
    const auto idx = estimate_indices(sub, mapped);
    CHECK(idx.lower >= s * base.lower - 1e-6);
    CHECK(idx.upper <= s * base.upper + 1e-6);
  }
}

TEST_CASE("inverse index relation") {
  for (const auto& phi : {GrowthFunction::power(2.0), GrowthFunction::power(0.5),
                          GrowthFunction::power_log(2.0, 1.0),
                          GrowthFunction::power_log(3.0, -0.5)}) {
    const ScanGrid grid{1e-6, 1e6, 1501};
    const auto base = estimate_indices(phi, grid);
    // Image grid: the inverse scanned where the direct scan pushed values.
    const ScanGrid image{phi.value(grid.t_min), phi.value(grid.t_max), 1501};
    const auto inv = estimate_indices(phi.inverse_as_growth(), image);
    CHECK(inv.lower == doctest::Approx(1.0 / base.upper).epsilon(1e-6));
    CHECK(inv.upper == doctest::Approx(1.0 / base.lower).epsilon(1e-6));
  }
}

TEST_CASE("reciprocal transform preserves class membership") {
  for (const auto& phi : {GrowthFunction::power(0.5), GrowthFunction::power(3.0),
                          GrowthFunction::power_log(2.0, 1.0)}) {
    const auto direct = classify(phi);
    const auto recip = classify(phi.reciprocal());
    CHECK(direct.in_U() == recip.in_U());
    CHECK(direct.in_L() == recip.in_L());
  }
}

TEST_CASE("quotient monotonicity") {
  CHECK(quotient_monotone(GrowthFunction::power(2.0), GrowthFunction::power(4.0)));
  CHECK_FALSE(quotient_monotone(GrowthFunction::power(4.0), GrowthFunction::power(2.0)));
  CHECK(quotient_monotone(GrowthFunction::power(1.0), GrowthFunction::power_log(1.0, 1.0)));
}

TEST_CASE("quotient monotonicity bounds composed upper index") {
  struct Pair {
    GrowthFunction phi1, phi2;
  };
  const Pair pairs[] = {
      {GrowthFunction::power(2.0), GrowthFunction::power(4.0)},
      {GrowthFunction::power(1.0), GrowthFunction::power_log(2.0, 1.0)},
      {GrowthFunction::power(2.0), GrowthFunction::power_log(2.0, 1.0)},
  };
  for (const auto& [phi1, phi2] : pairs) {
    REQUIRE(quotient_monotone(phi1, phi2));
    const auto comp = GrowthFunction::compose_inverse(phi2, phi1);
    const auto ci = estimate_indices(comp);
    const auto i1 = estimate_indices(phi1);
    const auto i2 = estimate_indices(phi2);
    CHECK(ci.upper <= i2.upper / i1.lower + 1e-6);
  }
}

TEST_CASE("dini constants") {
  const auto d22 = dini_constant(GrowthFunction::power(2.0), GrowthFunction::power(2.0));
  CHECK_FALSE(d22.unbounded);
  CHECK(d22.constant == doctest::Approx(1.0).epsilon(1e-9));

  // phi2 outpacing phi1 makes the ratio grow like t.
  const auto d21 = dini_constant(GrowthFunction::power(1.0), GrowthFunction::power(2.0));
  CHECK(d21.unbounded);

  const auto d15 = dini_constant(GrowthFunction::power(1.5), GrowthFunction::power(1.5));
  CHECK_FALSE(d15.unbounded);
  CHECK(d15.constant == doctest::Approx(2.0).epsilon(1e-9));

  const auto d11 = dini_constant(GrowthFunction::power(1.0), GrowthFunction::power(1.0));
  CHECK(d11.divergent_at_zero);
  CHECK(d11.unbounded);
}

TEST_CASE("quotient bound over the 2-D grid") {
  const auto b2 = quotient_bound_check(GrowthFunction::power(2.0));
  CHECK(b2.holds);
  CHECK(b2.constant == doctest::Approx(1.0).epsilon(1e-9));

  const auto bh = quotient_bound_check(GrowthFunction::power(0.5));
  CHECK(bh.holds);
  CHECK(bh.constant == doctest::Approx(1.0).epsilon(1e-9));

  // Grid-sup and its location are reported even when the scan flags growth;
  // for t^2 ln(e+t) the ratio grows like ln(s/t)ln(t)/ln(s), so the sup over
  // all s,t is infinite and the trend flag must say so.
  const auto bpl = quotient_bound_check(GrowthFunction::power_log(2.0, 1.0));
  CHECK_FALSE(bpl.holds);
  CHECK(bpl.constant > 1.0);
  CHECK(std::isfinite(bpl.constant));
  CHECK(bpl.argmax_s > 0);
}

TEST_CASE("piecewise power family") {
  const auto pw = GrowthFunction::piecewise_power({1.0, 10.0}, {0.5, 2.0, 3.0});
  CHECK(pw.value(1.0) == doctest::Approx(1.0));
  // Continuity at the breakpoints.
  CHECK(pw.value(std::nextafter(1.0, 2.0)) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(pw.value(std::nextafter(10.0, 11.0)) ==
        doctest::Approx(pw.value(10.0)).epsilon(1e-9));
  const auto idx = estimate_indices(pw);
  CHECK(idx.lower == 0.5);
  CHECK(idx.upper == 3.0);
  CHECK_THROWS_AS(GrowthFunction::piecewise_power({2.0, 1.0}, {1.0, 1.0, 1.0}),
                  std::invalid_argument);
}
