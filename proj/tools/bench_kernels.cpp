// Timing comparison of the OpenMP quadrature/probe kernels against the serial
// reference implementations, on representative integrands from the test
// suites.  Values are printed alongside timings so disagreements are visible.

#include <chrono>
#include <cmath>
#include <cstdio>

#include "carleson/certify.hpp"
#include "carleson/quadrature.hpp"
#include "carleson/special.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace carleson;

namespace {

double now() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
#endif
}

struct Timed {
  double seconds;
  double value;
};

template <class F>
Timed timed(F&& f, int reps) {
  double v = 0;
  const double t0 = now();
  for (int i = 0; i < reps; ++i) v = f();
  return {(now() - t0) / reps, v};
}

void bench_plane_integral() {
  // int_{C+} |w + i|^{-6} dV_1, exact value from the Beta oracles.
  const double exact = oracle_halfplane_power_integral(1.0, 6.0, 1.0).value;
  PlaneFunction f;
  f.eval = [](double x, double y) { return std::pow(std::hypot(x, y + 1.0), -6.0); };
  f.envelope = {1.0, 0.0, 1.0, 6.0, 0.0};
  f.feature_scale = 1.0;
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-8;
  const Measure mu = Measure::lebesgue_alpha(1.0);

  const auto adaptive = timed([&] { return integrate(mu, f, cfg).value; }, 5);
  const auto serial = timed(
      [&] {
        // Fixed truncation box; the tail it drops is far below the printed digits.
        const double X = 100, Y = 100;
        double v = reference::integrate_box(
            [&](double x, double y) {
              return std::pow(std::hypot(x, y + 1.0), -6.0) * y;
            },
            -X, X, 0, Y, 1e-10);
        return v;
      },
      1);
  std::printf("plane integral  adaptive[omp] %.3fs -> %.12g (exact %.12g)\n",
              adaptive.seconds, adaptive.value, exact);
  std::printf("                reference      %.3fs -> %.12g\n", serial.seconds,
              serial.value);
}

void bench_box_probes() {
  // Carleson box certification of the canonical Lebesgue measure.
  const auto phi = GrowthFunction::power(2.0);
  const auto mu = canonical_measure(phi, 1.0);
  const auto run = [&] {
    return box_condition(mu, phi, 1.0).sup_estimate;
  };
  const auto t = timed(run, 3);
  std::printf("box probes      %.3fs -> sup %.12g\n", t.seconds, t.value);
}

void bench_berezin() {
  const auto phi1 = GrowthFunction::power(2.0);
  const auto phi2 = GrowthFunction::power(4.0);
  const Measure mu = Measure::lebesgue_alpha(0.0);
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-6;
  const auto t = timed(
      [&] {
        return berezin_condition(mu, phi1, phi2, 1.0, BerezinPath::hardy,
                                 PointGrid::coarse(), cfg)
            .sup_estimate;
      },
      1);
  std::printf("berezin grid    %.3fs -> sup %.12g (expected 5pi/96 = %.12g)\n", t.seconds,
              t.value, 5.0 * M_PI / 96.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: disabled\n");
#endif
  bench_plane_integral();
  bench_box_probes();
  bench_berezin();
  return 0;
}
