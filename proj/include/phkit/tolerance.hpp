#pragma once

#include <algorithm>
#include <cmath>

namespace phkit {

// Mixed absolute/relative zero band: |x| <= atol + rtol * scale.
struct Tolerance {
  double atol = 1e-12;
  double rtol = 1e-10;

  double band(double scale) const { return atol + rtol * std::abs(scale); }
  bool is_zero(double x, double scale) const { return std::abs(x) <= band(scale); }
  bool equal(double x, double y, double scale) const { return is_zero(x - y, scale); }
};

inline int sign_with_band(double x, double band) {
  if (x > band) return 1;
  if (x < -band) return -1;
  return 0;
}

}  // namespace phkit
