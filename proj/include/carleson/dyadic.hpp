#pragma once

#include <functional>
#include <optional>
#include <unordered_map>

#include "carleson/growth.hpp"
#include "carleson/measure.hpp"
#include "carleson/quadrature.hpp"

namespace carleson {

enum class GridShift { none, third };  // beta = 0 or 1/3

// One interval of the shifted dyadic grid D^beta: 2^{-j}([0,1) + k + (-1)^j beta).
// Endpoints are the exact rationals (3k + sigma)/(3 2^j) and that plus
// 3/(3 2^j); sigma = +-1 for beta = 1/3 with the sign (-1)^j, 0 otherwise.
struct DyadicInterval {
  GridShift beta = GridShift::none;
  int j = 0;
  long long k = 0;

  long long left_numerator() const;   // over denominator 3*2^j
  long long right_numerator() const;  // left + 3
  double lo() const;
  double hi() const;
  double length() const;  // 2^{-j}

  // Exact containment of a point, resolved in integer/long-double arithmetic.
  bool contains(double x) const;
  // Exact half-open containment: [a,b) inside [lo,hi).
  bool contains_interval(double a, double b) const;
};

// Exact nesting predicate for two intervals of the same grid:
// their intersection is empty or equals the smaller one.
bool nested_or_disjoint(const DyadicInterval& A, const DyadicInterval& B);

// Lemma: every interval I sits inside some dyadic J with |J| <= 6|I|.
// Scans scales from the largest admissible length downward, beta = 0 first.
DyadicInterval dyadic_cover(const Interval& I, int j_lo = -60, int j_hi = 60);

// Piecewise-constant nonnegative function given by disjoint steps.
struct Step {
  double lo = 0, hi = 0, height = 0;
};

struct SimpleLineFunction {
  std::vector<Step> steps;

  double value_at(double x) const;
  double integral_over(double a, double b) const;
  double total_mass() const;
  double support_lo() const;
  double support_hi() const;
  double max_height() const;
  SimpleLineFunction scaled(double factor) const;           // pointwise multiply
  SimpleLineFunction powered(double exponent) const;        // heights^exponent
  // Exact Luxemburg norm via the closed-form modular sum.
  double luxemburg_norm(const GrowthFunction& phi, double tol = 1e-12) const;
};

// Sum of weighted Carleson-square indicators on the half-plane.
struct BoxMass {
  Interval base;
  double height = 0;
};

struct SimpleBoxFunction {
  std::vector<BoxMass> boxes;
  double value_at(double x, double y) const;
  // int over Q_J of f dV_alpha, closed form.
  double integral_valpha(const Interval& J, double alpha) const;
  double luxemburg_norm(const GrowthFunction& phi, double alpha, double tol = 1e-12) const;
};

struct MaximalWindow {
  int j_lo = -40;  // largest intervals: length 2^{40}
  int j_hi = 40;   // smallest: length 2^{-40}
};

// Hardy-Littlewood maximal function of a simple function, exact: the sup over
// intervals containing x is attained on candidate endpoints (jumps and x).
double maximal_hl(const SimpleLineFunction& f, double x);

// Lower bound of the HL sup for a generic integrand: intervals with endpoints
// on a geometric mesh around x, enriched by the declared anchors.  Returns
// the best average found and a mesh-refinement gap estimate.
struct MeshMaximal {
  double lower_bound = 0;
  double refinement_gap = 0;
};
MeshMaximal maximal_hl_mesh(const std::function<double(double)>& f, double x,
                            const std::vector<double>& anchors, double window,
                            int levels = 24);

// Exact dyadic maximal value at x: for each scale there is one candidate.
double maximal_hl_dyadic(const SimpleLineFunction& f, double x, GridShift beta,
                         const MaximalWindow& win = {});

// Dyadic Bergman maximal operator at z = x+iy: averages of f over Carleson
// squares Q_J with J in the grid, x in J, |J| > y.
double maximal_valpha_dyadic(const SimpleBoxFunction& f, double x, double y,
                             GridShift beta, double alpha, const MaximalWindow& win = {});

// Same with a quadrature-evaluated integrand; box integrals are cached by
// (beta, j, k, alpha) across calls through the supplied cache.  A cache must
// not be shared between different integrands.
class BoxAverageCache;
double maximal_valpha_dyadic_fn(const std::function<double(double, double)>& f, double x,
                                double y, GridShift beta, double alpha,
                                const MaximalWindow& win, BoxAverageCache& cache,
                                double rel_tol = 1e-6);

class BoxAverageCache {
 public:
  double box_integral(const DyadicInterval& J, double alpha,
                      const std::function<double(double, double)>& f, double rel_tol);

 private:
  struct Key {
    int beta;
    int j;
    long long k;
    double alpha;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    size_t operator()(const Key& k) const;
  };
  std::unordered_map<Key, double, KeyHash> values_;
};

struct WeakTypePoint {
  double lambda = 0;
  double level_measure = 0;  // |{ (M^D g)^gamma > lambda }| by cell counting
  double bound = 0;          // 1 / Phi(lambda)
  double mesh_slack = 0;     // absolute counting error bound
  bool within_bound = false;
};

struct WeakTypeProfile {
  std::vector<WeakTypePoint> points;
  double norm = 0;    // Luxemburg norm used for the normalization
  double gamma = 0;
  double mesh_width = 0;
  bool all_within = false;
};

// Weak-type profile for the normalized input (|f|/||f||)^{1/gamma}
// under the dyadic HL maximal operator.  Requires gamma * a_Phi >= 1 so that
// Phi(t^gamma) is convex.
WeakTypeProfile weak_type_profile(const SimpleLineFunction& f, const GrowthFunction& phi,
                                  double gamma, const std::vector<double>& lambdas,
                                  GridShift beta, int mesh_scale = 12,
                                  const MaximalWindow& win = {});

// Bergman-side variant: level sets of the dyadic V_alpha maximal operator,
// measured against V_alpha on an x-mesh times the dyadic y-bands on which the
// maximal value is constant.
WeakTypeProfile weak_type_profile_valpha(const SimpleBoxFunction& f,
                                         const GrowthFunction& phi, double gamma,
                                         const std::vector<double>& lambdas, GridShift beta,
                                         double alpha, int mesh_scale = 8,
                                         const MaximalWindow& win = {});

struct MaximalBoundTest {
  bool dini_finite = false;
  DiniResult dini;
  std::vector<double> witness_ratios;  // ||M f||_{Phi2} / ||f||_{Phi1}
  bool ratios_bounded = false;
  bool coherent = false;  // both sides point the same way
};

// Theorem-level coherence test: the Dini constant decides boundedness of the
// maximal operator; empirical norm ratios over the witness family corroborate.
MaximalBoundTest maximal_bound_test(const GrowthFunction& phi1, const GrowthFunction& phi2,
                                    const std::vector<SimpleLineFunction>& witnesses,
                                    const QuadratureConfig& cfg = {});

struct DominationCheck {
  double max_ratio = 0;      // |F(z)|^gamma / M^{D}_{V_alpha}(|F|^gamma)(z)
  double bound_constant = 0; // (4/pi) 12^{2+alpha}/(1+alpha) max{2^alpha,(2/3)^alpha}
  double argmax_x = 0, argmax_y = 0;
  bool pass = false;
};

DominationCheck pointwise_domination_check(const PlaneFunction& F, double gamma,
                                           double alpha,
                                           const std::vector<std::pair<double, double>>& z_grid,
                                           double rel_tol = 1e-5);

}  // namespace carleson
