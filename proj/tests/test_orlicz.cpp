#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "carleson/orlicz.hpp"

using namespace carleson;

namespace {

// c * chi_{[-L/2, L/2]} with a generous compact-support envelope.
LineFunction indicator(double c, double L) {
  LineFunction f;
  const double R = 0.5 * L;
  f.eval = [c, R](double x) { return std::fabs(x) <= R ? c : 0.0; };
  f.env_amplitude = c * std::pow(2.0 * R, 6.0);
  f.env_center = 0.0;
  f.env_offset = R;
  f.env_decay = 6.0;
  f.feature_scale = R;
  f.anchors = {-R, R};
  return f;
}

}  // namespace

TEST_CASE("modular of an indicator") {
  const auto phi = GrowthFunction::power(2.0);
  const auto m = modular_line(indicator(2.0, 1.0), phi);
  CHECK(m.ok());
  CHECK(m.value == doctest::Approx(4.0).epsilon(1e-8));

  const auto z = modular_line(indicator(0.0, 1.0), phi);
  CHECK(z.value == doctest::Approx(0.0));
}

TEST_CASE("line modular of the Hardy witness profile") {
  // |F(x)| = (1/sqrt(pi)) / |x + i(1+v)|^2 has power-2 modular (1/2)(1+v)^{-3}.
  for (double v : {0.0, 0.5, 2.0}) {
    LineFunction f;
    const double b = 1.0 + v;
    f.eval = [b](double x) { return (1.0 / std::sqrt(M_PI)) / (x * x + b * b); };
    f.env_amplitude = 1.0 / std::sqrt(M_PI);
    f.env_offset = b;
    f.env_decay = 2.0;
    f.feature_scale = b;
    const auto m = modular_line(f, GrowthFunction::power(2.0));
    CHECK(m.ok());
    CHECK(m.value == doctest::Approx(0.5 * std::pow(b, -3.0)).epsilon(1e-8));
  }
}

TEST_CASE("luxemburg norm of indicators") {
  const auto phi = GrowthFunction::power(2.0);
  // norm = c / Phi^{-1}(1/|E|)
  const auto a = luxemburg_norm_line(indicator(2.0, 1.0), phi, {}, 1e-10);
  CHECK(a.status == LuxemburgResult::Status::ok);
  CHECK(a.norm == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(a.modular_at_norm <= 1.0 + 1e-9);
  CHECK(a.bracket_lo <= a.norm);
  CHECK(a.norm <= a.bracket_hi);

  const auto b = luxemburg_norm_line(indicator(2.0, 4.0), phi, {}, 1e-10);
  CHECK(b.norm == doctest::Approx(4.0).epsilon(1e-8));

  const auto z = luxemburg_norm_line(indicator(0.0, 1.0), phi, {}, 1e-10);
  CHECK(z.status == LuxemburgResult::Status::zero);
  CHECK(z.norm == 0.0);
}

TEST_CASE("luxemburg gauge is homogeneous") {
  for (const auto& phi : {GrowthFunction::power(2.0), GrowthFunction::power(0.5),
                          GrowthFunction::power_log(2.0, 1.0)}) {
    const double tol = 1e-8;
    const auto base = luxemburg_norm_line(indicator(1.0, 2.0), phi, {}, tol);
    for (double c : {0.125, 3.0, 40.0}) {
      const auto scaled = luxemburg_norm_line(indicator(c, 2.0), phi, {}, tol);
      CHECK(scaled.norm ==
            doctest::Approx(c * base.norm).epsilon(2 * tol + 1e-7));
    }
  }
}

TEST_CASE("bisection iteration budget") {
  const auto phi = GrowthFunction::power(2.0);
  const double tol = 1e-9;
  const auto r = luxemburg_norm_line(indicator(5.0, 3.0), phi, {}, tol);
  REQUIRE(r.status == LuxemburgResult::Status::ok);
  const double width0 = r.bracket_hi - r.bracket_lo;
  CHECK(r.iterations <= int(std::ceil(std::log2(width0 / (tol * r.norm)))) + 2);
}

TEST_CASE("norm brackets the gauge from both sides") {
  // modular(f/norm) <= 1 and modular(f/(norm(1-tol))) >= 1.
  const double tol = 1e-8;
  for (const auto& phi : {GrowthFunction::power(2.0), GrowthFunction::power_log(2.0, 1.0)}) {
    const auto f = indicator(3.0, 2.0);
    const auto r = luxemburg_norm_line(f, phi, {}, tol);
    REQUIRE(r.status == LuxemburgResult::Status::ok);
    CHECK(r.modular_at_norm <= 1.0 + 1e-9);
    LineFunction tight = f;
    const double lambda = r.norm * (1.0 - 4.0 * tol);
    tight.eval = [f, lambda](double x) { return f.eval(x) / lambda; };
    tight.env_amplitude = f.env_amplitude / lambda;
    CHECK(modular_line(tight, phi).value >= 1.0 - 1e-9);
  }
}

TEST_CASE("not in the space") {
  LineFunction one;
  one.eval = [](double) { return 1.0; };  // no envelope declared
  const auto r = luxemburg_norm_line(one, GrowthFunction::power(2.0), {}, 1e-8);
  CHECK(r.status == LuxemburgResult::Status::not_in_space);
}

TEST_CASE("norm-modular inequalities") {
  const auto phi = GrowthFunction::power(2.0);
  const auto idx = estimate_indices(phi);
  SUBCASE("power family has constants 1") {
    for (double L : {0.5, 1.0, 8.0}) {
      const auto m = modular_line(indicator(3.0, L), phi);
      const auto n = luxemburg_norm_line(indicator(3.0, L), phi, {}, 1e-10);
      const auto chk = norm_modular_bounds_check(m.value, n.norm, idx);
      CHECK(chk.pass);
      CHECK(chk.upper_constant == doctest::Approx(1.0).epsilon(1e-6));
      CHECK(chk.lower_constant == doctest::Approx(1.0).epsilon(1e-6));
    }
  }
  SUBCASE("indicator family across scales") {
    const auto pl = GrowthFunction::power_log(2.0, 1.0);
    const auto idx_pl = estimate_indices(pl);
    for (double L : {1e-3, 1e-1, 1.0, 1e1, 1e3}) {
      const auto m = modular_line(indicator(1.0, L), pl);
      const auto n = luxemburg_norm_line(indicator(1.0, L), pl, {}, 1e-9);
      const auto chk = norm_modular_bounds_check(m.value, n.norm, idx_pl);
      CHECK(chk.pass);
      CHECK(chk.upper_constant >= 1.0);
      CHECK(chk.lower_constant >= 1.0);
    }
  }
  SUBCASE("zero function") {
    const auto chk = norm_modular_bounds_check(0.0, 0.0, idx);
    CHECK(chk.pass);
  }
}

TEST_CASE("line norm profile of 1/(z+i)") {
  PlaneFunction F;
  F.eval = [](double x, double y) { return 1.0 / std::hypot(x, y + 1.0); };
  F.envelope = {1.0, 0.0, 1.0, 1.0, 0.0};
  F.feature_scale = 1.0;
  const auto phi = GrowthFunction::power(2.0);
  const std::vector<double> ys = {1e-3, 1e-2, 0.1, 1.0, 10.0};
  const auto prof = line_norm_profile(F, phi, ys, {}, 1e-8);
  REQUIRE(prof.points.size() == ys.size());
  for (const auto& p : prof.points) {
    // int dx/(x^2+(1+y)^2) = pi/(1+y), so the norm is sqrt(pi/(1+y)).
    CHECK(p.norm.status == LuxemburgResult::Status::ok);
    CHECK(p.norm.norm == doctest::Approx(std::sqrt(M_PI / (1.0 + p.y))).epsilon(1e-6));
  }
  CHECK(prof.non_increasing);
  CHECK(prof.hardy_norm_estimate ==
        doctest::Approx(std::sqrt(M_PI / (1.0 + 1e-3))).epsilon(1e-6));
  CHECK(prof.extrapolation_flag);
}

TEST_CASE("witness profile is non-increasing through the numeric inverse") {
  const auto phi = GrowthFunction::power_log(2.0, 1.0);
  // Hardy witness modulus for this phi: prefactor through the numeric inverse.
  const double pref = phi.invert(1.0 / M_PI);
  PlaneFunction F;
  F.eval = [pref](double x, double y) {
    const double r2 = x * x + (y + 1.0) * (y + 1.0);
    return pref / r2;
  };
  F.envelope = {pref, 0.0, 1.0, 2.0, 0.0};
  F.feature_scale = 1.0;
  const auto prof = line_norm_profile(F, phi, {1e-3, 1e-2, 0.1, 1.0, 10.0}, {}, 1e-7);
  CHECK(prof.non_increasing);
  for (const auto& p : prof.points) CHECK(p.norm.status == LuxemburgResult::Status::ok);
  CHECK(prof.hardy_norm_estimate <= 1.0 + 1e-6);  // unit-ball witness
}

TEST_CASE("constant function is in no Hardy-Orlicz line") {
  PlaneFunction F;
  F.eval = [](double, double) { return 1.0; };
  const auto prof = line_norm_profile(F, GrowthFunction::power(2.0), {0.5, 1.0}, {}, 1e-6);
  for (const auto& p : prof.points)
    CHECK(p.norm.status == LuxemburgResult::Status::not_in_space);
}

TEST_CASE("plane modular against a closed form") {
  // f = |w+i|^{-2} with power-2 modular against V_0: int |w+i|^{-4} dV_0 = pi/4.
  PlaneFunction f;
  f.eval = [](double x, double y) { return std::pow(std::hypot(x, y + 1.0), -2.0); };
  f.envelope = {1.0, 0.0, 1.0, 2.0, 0.0};
  f.feature_scale = 1.0;
  const auto m = modular_plane(f, GrowthFunction::power(2.0), Measure::lebesgue_alpha(0.0));
  CHECK(m.ok());
  CHECK(m.value == doctest::Approx(M_PI / 4.0).epsilon(1e-6));
}
