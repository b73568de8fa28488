#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace carleson {

// Thrown when a documented theorem hypothesis fails before any computation
// starts (exit status 2 at the CLI).
class precondition_error : public std::runtime_error {
 public:
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a numeric routine cannot reach its tolerance and no partial
// result makes sense (exit status 3 at the CLI).
class accuracy_error : public std::runtime_error {
 public:
  explicit accuracy_error(const std::string& what) : std::runtime_error(what) {}
};

// Log-spaced scan grid on [t_min, t_max].
struct ScanGrid {
  double t_min = 1e-6;
  double t_max = 1e6;
  int points = 512;

  std::vector<double> make() const {
    std::vector<double> t(points);
    const double l0 = std::log(t_min), l1 = std::log(t_max);
    for (int i = 0; i < points; ++i)
      t[i] = std::exp(l0 + (l1 - l0) * i / double(points - 1));
    t.front() = t_min;
    t.back() = t_max;
    return t;
  }
};

inline bool finite(double x) { return std::isfinite(x); }

}  // namespace carleson
