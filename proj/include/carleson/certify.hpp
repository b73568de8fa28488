#pragma once

#include <optional>

#include "carleson/growth.hpp"
#include "carleson/orlicz.hpp"
#include "carleson/witness.hpp"

namespace carleson {

enum class Verdict { bounded, unbounded_trend, inconclusive };
const char* verdict_name(Verdict v);

enum class Condition { box, berezin, witness_modular, witness_weak };
const char* condition_name(Condition c);

struct Probe {
  std::string id;
  double param = 0;   // probe scale: |I| for boxes, Im z for points
  double value = 0;
  bool ok = true;
  std::string note;
};

struct CertificationReport {
  Condition condition = Condition::box;
  std::vector<Probe> probes;
  double sup_estimate = 0;
  Verdict verdict = Verdict::inconclusive;
  double s = 1;
  std::optional<double> alpha;
  std::string phi1, phi2;
  std::optional<double> rho;
  std::vector<std::string> hypotheses;  // checks performed, human-readable
  std::vector<std::string> notes;
};

// Sup over the family plus the honest trichotomy: a grid can flag a monotone
// doubling trend toward either end, never prove unboundedness.
Verdict classify_trend(std::vector<std::pair<double, double>> param_value);

struct ProbeFamily {
  std::vector<double> lengths;  // interval lengths
  std::vector<double> centers;
  static ProbeFamily defaults();  // lengths 2^-20..2^10, centers {0,+-1,+-10}
};

struct PointGrid {
  std::vector<double> ys;
  std::vector<double> xs;
  static PointGrid defaults();          // y 2^-15..2^15, x {0,+-5}
  static PointGrid coarse();            // y 2^-15..2^15 by 2^5, x {0,5}
};

// mu(Q_I) Phi(1/|I|^s) over the probe family.
CertificationReport box_condition(const Measure& mu, const GrowthFunction& phi, double s,
                                  const ProbeFamily& probes = ProbeFamily::defaults(),
                                  const QuadratureConfig& cfg = {});

// Which theorem hypothesis set applies to the Berezin-type test.
enum class BerezinPath { general, hardy, bergman };

// sup_z of int Phi2(Phi1^{-1}(1/y^s) y^{2s/rho} / |w - conj z|^{2s/rho}) dmu(w).
CertificationReport berezin_condition(const Measure& mu, const GrowthFunction& phi1,
                                      const GrowthFunction& phi2, double s,
                                      BerezinPath path = BerezinPath::general,
                                      const PointGrid& grid = PointGrid::defaults(),
                                      const QuadratureConfig& cfg = {});

struct EmbeddingResult {
  Verdict verdict = Verdict::inconclusive;
  bool pass = false;       // verdict == bounded
  double constant = 0;     // grid-sup of Phi2(Phi1^{-1}(t^s)) / t^{2+alpha}
  double argmax_t = 0;
};

// Phi1^{-1}(t^s) <= Phi2^{-1}(C t^{2+alpha}) over the t-grid.
EmbeddingResult embedding_criterion(const GrowthFunction& phi1, const GrowthFunction& phi2,
                                    double s, double alpha_target,
                                    const ScanGrid& t_grid = {});

// dmu = dxdy / (y^2 Phi(1/y^s)); requires Phi in U with the Dini bound.
Measure canonical_measure(const GrowthFunction& phi, double s);

struct WitnessContext {
  enum class Space { hardy, bergman } space = Space::hardy;
  double alpha = 0;  // bergman target weight
  double s() const { return space == Space::hardy ? 1.0 : 2.0 + alpha; }
};

struct WitnessInjectionReport {
  CertificationReport modular;  // condition (iii), witness-restricted
  CertificationReport weak;     // condition (iv), witness-restricted
};

// Conditions (iii)/(iv) over the explicit witness family {F_z} or {G_z} plus
// Poisson integrals of indicator data; never the full quantifier.
WitnessInjectionReport witness_injection_test(const Measure& mu, const GrowthFunction& phi1,
                                              const GrowthFunction& phi2, WitnessContext ctx,
                                              const PointGrid& grid = PointGrid::coarse(),
                                              const QuadratureConfig& cfg = {},
                                              const std::vector<double>& lambda_grid = {});

// mu({ |F| > threshold }) for a witness with disk level sets, by slicing.
double witness_superlevel_measure(const Measure& mu, const Witness& w, double threshold,
                                  const QuadratureConfig& cfg = {});

// Generic superlevel measure by quadtree cell counting; *slack accumulates
// the measure of undecided boundary cells.
double superlevel_measure_by_cells(const Measure& mu,
                                   const std::function<double(double, double)>& f,
                                   double threshold, double x0, double x1, double y0,
                                   double y1, int max_depth, double* slack);

}  // namespace carleson
