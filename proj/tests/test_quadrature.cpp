#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "carleson/quadrature.hpp"
#include "carleson/special.hpp"

using namespace carleson;

namespace {

PlaneFunction power_kernel(double m, double yz, double xz = 0.0) {
  PlaneFunction f;
  f.eval = [m, yz, xz](double x, double y) {
    return std::pow(std::hypot(x - xz, y + yz), -m);
  };
  f.envelope = {1.0, xz, yz, m, 0.0};
  f.feature_scale = yz;
  return f;
}

}  // namespace

TEST_CASE("box volume closed form") {
  CHECK(box_volume({0.0, 2.0}, 0.0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(box_volume({5.0, 1.0}, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(box_volume({0.0, 4.0}, -0.5) == doctest::Approx(16.0).epsilon(1e-15));
  CHECK_THROWS_AS(box_volume({0.0, 1.0}, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(box_volume({0.0, -1.0}, 0.0), std::invalid_argument);
}

TEST_CASE("integrate reproduces the oracle compositions") {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-8;
  struct Row {
    double alpha, m, y;
  };
  const Row rows[] = {{0.0, 4.0, 1.0},  {0.0, 6.0, 0.5},  {0.5, 4.0, 2.0},
                      {1.0, 6.0, 1.0},  {-0.5, 3.0, 1.0}, {2.0, 8.0, 0.25},
                      {0.0, 4.0, 8.0},  {1.5, 6.5, 1.0},  {-0.9, 2.5, 4.0},
                      {0.0, 10.0, 1.0}};
  for (const auto& r : rows) {
    const auto exact = oracle_halfplane_power_integral(r.alpha, r.m, r.y);
    REQUIRE_FALSE(exact.divergent);
    const auto got = integrate(Measure::lebesgue_alpha(r.alpha), power_kernel(r.m, r.y), cfg);
    CHECK(got.ok());
    CHECK(got.value == doctest::Approx(exact.value).epsilon(1e-6));
    CHECK(std::fabs(got.value - exact.value) <= got.error_estimate);
  }
}

TEST_CASE("integrate agrees with the serial reference") {
  // Same integrand, independently computed on a truncated box.
  const auto f = power_kernel(6.0, 1.0);
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-9;
  const auto fast = integrate(Measure::lebesgue_alpha(0.0), f, cfg);
  const double X = 60.0;
  const double ref = reference::integrate_box(
      [&](double x, double y) { return f.eval(x, y); }, -X, X, 0.0, X, 1e-11);
  // The reference drops the tail beyond the box; compare to that accuracy.
  CHECK(fast.value == doctest::Approx(ref).epsilon(1e-6));
}

TEST_CASE("atomic measures integrate by direct summation") {
  const auto mu = Measure::atomic({{0.0, 1.0, 2.0}, {3.0, 0.5, 1.5}});
  PlaneFunction one;
  one.eval = [](double, double) { return 1.0; };
  const auto r = integrate(mu, one, {});
  CHECK(r.value == doctest::Approx(3.5).epsilon(1e-15));
  CHECK(r.ok());
}

TEST_CASE("indicator of a Carleson square against Lebesgue") {
  // Consistency with box_volume: |Q_{[-1,1]}|_0 = 4.
  PlaneFunction ind;
  ind.eval = [](double x, double y) { return (x >= -1 && x <= 1 && y < 2.0) ? 1.0 : 0.0; };
  ind.feature_scale = 1.0;
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-6;
  cfg.x_half_width = 4.0;
  cfg.y_max = 4.0;
  const auto r = integrate(Measure::lebesgue_alpha(0.0), ind, cfg);
  CHECK(r.value == doctest::Approx(4.0).epsilon(1e-5));
}

TEST_CASE("measure_of_square") {
  SUBCASE("lebesgue closed form is exact") {
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> uc(-10.0, 10.0), ul(-4.0, 2.0), ua(-0.9, 3.0);
    for (int i = 0; i < 50; ++i) {
      const Interval I{uc(rng), std::pow(10.0, ul(rng))};
      const double alpha = ua(rng);
      const auto m = measure_of_square(Measure::lebesgue_alpha(alpha), {I});
      const double expect = std::pow(I.length, 2.0 + alpha) / (1.0 + alpha);
      CHECK(m.value == doctest::Approx(expect).epsilon(1e-14));
    }
  }
  SUBCASE("atomic counts points strictly inside") {
    const auto mu = Measure::atomic({{0.1, 0.1, 3.0}});
    CHECK(measure_of_square(mu, {Interval::from_endpoints(0.0, 1.0)}).value == 3.0);
    // Height is open: the square over [0,0.1] has top y = 0.1, excluded.
    CHECK(measure_of_square(mu, {Interval::from_endpoints(0.0, 0.1)}).value == 0.0);
  }
  SUBCASE("y-density reduces to a line integral") {
    const auto mu = Measure::density_of_y([](double y) { return y; }, "y dxdy");
    const auto m = measure_of_square(mu, {Interval::from_endpoints(0.0, 1.0)});
    CHECK(m.converged);
    CHECK(m.value == doctest::Approx(0.5).epsilon(1e-10));
  }
  SUBCASE("general density by 2-D quadrature") {
    const auto e = Expression::parse("y*(1+x*x/100)", {"x", "y"});
    const auto mu = Measure::density_expression(e);
    const auto m = measure_of_square(mu, {Interval::from_endpoints(0.0, 1.0)});
    // int_0^1 int_0^1 y(1+x^2/100) = 1/2 * (1 + 1/300)
    CHECK(m.value == doctest::Approx(0.5 * (1.0 + 1.0 / 300.0)).epsilon(1e-8));
  }
  SUBCASE("integrable singular density near y=0") {
    const auto mu = Measure::density_of_y([](double y) { return std::pow(y, -0.5); },
                                          "y^{-1/2} dxdy");
    const auto m = measure_of_square(mu, {Interval::from_endpoints(0.0, 1.0)});
    CHECK(m.value == doctest::Approx(2.0).epsilon(1e-8));
  }
  SUBCASE("non-integrable density is flagged, not silently summed") {
    const auto mu = Measure::density_of_y([](double y) { return 1.0 / y; }, "dxdy/y");
    const auto m = measure_of_square(mu, {Interval::from_endpoints(0.0, 1.0)});
    CHECK_FALSE(m.converged);
    CHECK_FALSE(m.note.empty());
  }
}

TEST_CASE("measure_of_square is monotone in the interval") {
  const auto mu = Measure::density_expression(Expression::parse("y*exp(-x*x)", {"x", "y"}));
  double prev = 0.0;
  for (double len : {0.5, 1.0, 2.0, 4.0}) {
    const auto m = measure_of_square(mu, {Interval{0.25, len}});
    CHECK(m.value >= prev - 1e-12);
    prev = m.value;
  }
}

TEST_CASE("integrate is deterministic") {
  const auto f = power_kernel(5.0, 0.5, 1.0);
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-7;
  const auto a = integrate(Measure::lebesgue_alpha(0.5), f, cfg);
  const auto b = integrate(Measure::lebesgue_alpha(0.5), f, cfg);
  CHECK(a.value == b.value);  // bit-identical
  CHECK(a.error_estimate == b.error_estimate);
  CHECK(a.cells == b.cells);
}

TEST_CASE("tail divergence is certified, not guessed") {
  // Envelope decay 2 equals the V_0 critical rate: the tail cannot be bounded.
  const auto f = power_kernel(2.0, 1.0);
  const auto r = integrate(Measure::lebesgue_alpha(0.0), f, {});
  CHECK(r.tail_divergent);

  // Missing envelope: integration proceeds on a default box with the flag up.
  PlaneFunction g;
  g.eval = [](double x, double y) { return std::exp(-x * x - y * y); };
  const auto s = integrate(Measure::lebesgue_alpha(0.0), g, {});
  CHECK(s.tail_divergent);
  CHECK(s.value == doctest::Approx(0.5 * M_PI).epsilon(1e-3));
}

TEST_CASE("line integrals with envelope tails") {
  LineFunction f;
  f.eval = [](double x) { return 1.0 / (1.0 + x * x); };
  f.env_amplitude = 1.0;
  f.env_center = 0.0;
  f.env_offset = 1.0;
  f.env_decay = 2.0;
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-9;
  const auto r = integrate_line(f, cfg);
  CHECK(r.ok());
  CHECK(r.value == doctest::Approx(M_PI).epsilon(1e-8));
  CHECK(std::fabs(r.value - M_PI) <= r.error_estimate);
}

TEST_CASE("segment quadrature") {
  const auto r = integrate_segment([](double x) { return std::sin(x); }, 0.0, M_PI, 1e-12, 1e-10);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-10));
  const auto s = integrate_segment([](double x) { return std::pow(x, -0.5); }, 0.0, 1.0,
                                   1e-12, 1e-8);
  CHECK(s.value == doctest::Approx(2.0).epsilon(1e-6));
}
