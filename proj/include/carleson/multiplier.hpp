#pragma once

#include "carleson/certify.hpp"
#include "carleson/growth.hpp"
#include "carleson/orlicz.hpp"
#include "carleson/witness.hpp"

namespace carleson {

// Multiplier window omega(t) = Phi2^{-1}(1/t^{target}) / Phi1^{-1}(1/t^{source}).
struct OmegaWindow {
  GrowthFunction phi1, phi2;
  double source_exp = 1;  // 1 for a Hardy source, 2+alpha for a Bergman source
  double target_exp = 2;  // 2+alpha (or 2+beta)

  double eval(double t) const;
};

OmegaWindow omega_hardy_to_bergman(const GrowthFunction& phi1, const GrowthFunction& phi2,
                                   double alpha);
OmegaWindow omega_bergman_to_bergman(const GrowthFunction& phi1, const GrowthFunction& phi2,
                                     double alpha, double beta);

enum class Regime { h_omega_infinity, h_infinity, zero_only, indeterminate };
const char* regime_name(Regime r);

struct RegimeReport {
  Regime regime = Regime::indeterminate;
  std::vector<std::pair<double, double>> omega_samples;
  // Diagnostics feeding the decision, all grid-certified.
  double omega_min = 0, omega_max = 0;
  bool comparable_to_one = false;   // omega within [band, 1/band] on the grid
  bool vanishes_at_zero = false;    // monotone toward 0 with decisive decay
  double vanish_ratio = 0;          // omega(t_min)/omega(t_mid)
  bool strict_vanish_flag = false;  // the literal 1e-3 threshold
  bool index_gap = false;           // b_{Phi1} < a_{Phi2}
  double b1 = 0, a2 = 0;
  bool phi2_tilde = false;          // Phi2 in the tilde class (scan verdict)
  std::vector<std::string> notes;
};

// Regime per the window diagnostics; requires a non-decreasing quotient.
RegimeReport regime_classify(const GrowthFunction& phi1, const GrowthFunction& phi2,
                             const OmegaWindow& window, const ScanGrid& grid = {1e-8, 1e8, 257},
                             double comparable_band = 0.5, double vanish_factor = 0.5);

// Grid-sup of |F(z)| / omega(Im z); a lower bound of the true sup.
double h_omega_norm(const PlaneFunction& F, const OmegaWindow& window,
                    const PointGrid& grid = PointGrid::defaults());

struct ProductTestEntry {
  double witness_y = 0;
  LuxemburgResult norm;  // target-space norm of G * F_z
};

struct ProductTest {
  std::vector<ProductTestEntry> entries;
  double max_norm = 0;
  bool any_not_in_space = false;
  bool trend_unbounded = false;       // norms double monotonically as y -> 0
  bool multiplier_flag = false;       // no growth detected over the family
  double h_omega_constant = 0;        // sup |G|/omega on the grid
};

// Target-space norms of G*F over the unit-ball witness family; g_sup is a
// uniform bound of |G| used for the product envelope.
ProductTest multiplier_product_test(const PlaneFunction& G, double g_sup,
                                    const GrowthFunction& phi1, const GrowthFunction& phi2,
                                    const OmegaWindow& window, double target_alpha,
                                    const std::vector<double>& witness_ys,
                                    const QuadratureConfig& cfg = {});

}  // namespace carleson
