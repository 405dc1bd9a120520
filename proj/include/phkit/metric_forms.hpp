#pragma once

#include <string_view>

#include "phkit/pauli_core.hpp"

namespace phkit {

// Zero pattern of gR = (a, b, c). ScalarG is gR = 0.
enum class MetricCell { G1, G2, G3, G4, G5, G6, G7, ScalarG };

std::string_view to_string(MetricCell cell);
int cell_index(MetricCell cell);  // 1..7, 0 for ScalarG

/// Hermitian G = d sigma_0 + gR . sigma, with its cell and singularity computed
/// at construction.
struct HermitianMetric {
  double d = 0.0;
  Vec3 gR = Vec3::Zero();
  MetricCell cell = MetricCell::ScalarG;
  bool singular = true;

  static HermitianMetric make(double d, const Vec3& gR, const Tolerance& tol = {});

  double a() const { return gR[0]; }
  double b() const { return gR[1]; }
  double c() const { return gR[2]; }
  double det() const { return d * d - gR.squaredNorm(); }
  double scale() const { return std::max(std::abs(d), gR.cwiseAbs().maxCoeff()); }
  PauliForm pauli() const { return {d, 0.0, gR, Vec3::Zero()}; }
  Complex2x2 matrix() const { return compose(pauli()); }
};

MetricCell detect_cell(const Vec3& gR, const Tolerance& tol = {});

/// Throws Error(NotHermitian) when ||M - M^+|| exceeds the tolerance band.
HermitianMetric from_matrix(const Complex2x2& m, const Tolerance& tol = {});

struct MetricClass {
  int det_sign = 0;  // -1, 0, +1
  bool trace_zero = false;
};

MetricClass det_trace_class(const HermitianMetric& g, const Tolerance& tol = {});

}  // namespace phkit
