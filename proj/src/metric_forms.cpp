#include "phkit/metric_forms.hpp"

#include "phkit/errors.hpp"

namespace phkit {

std::string_view to_string(MetricCell cell) {
  switch (cell) {
    case MetricCell::G1: return "G1";
    case MetricCell::G2: return "G2";
    case MetricCell::G3: return "G3";
    case MetricCell::G4: return "G4";
    case MetricCell::G5: return "G5";
    case MetricCell::G6: return "G6";
    case MetricCell::G7: return "G7";
    case MetricCell::ScalarG: return "ScalarG";
  }
  return "?";
}

int cell_index(MetricCell cell) {
  return cell == MetricCell::ScalarG ? 0 : static_cast<int>(cell) + 1;
}

MetricCell detect_cell(const Vec3& gR, const Tolerance& tol) {
  const double s = gR.cwiseAbs().maxCoeff();
  if (s <= tol.atol) return MetricCell::ScalarG;
  const bool za = tol.is_zero(gR[0], s);
  const bool zb = tol.is_zero(gR[1], s);
  const bool zc = tol.is_zero(gR[2], s);
  if (!za && !zb && !zc) return MetricCell::G1;
  if (za && !zb && !zc) return MetricCell::G2;
  if (!za && zb && !zc) return MetricCell::G3;
  if (!za && !zb && zc) return MetricCell::G4;
  if (!za && zb && zc) return MetricCell::G5;
  if (za && !zb && zc) return MetricCell::G6;
  return MetricCell::G7;
}

HermitianMetric HermitianMetric::make(double d, const Vec3& gR, const Tolerance& tol) {
  if (!std::isfinite(d) || !gR.allFinite())
    throw Error(ErrorKind::InvalidInput, "metric has a non-finite component");
  HermitianMetric g;
  g.d = d;
  g.gR = gR;
  g.cell = detect_cell(gR, tol);
  g.singular = det_trace_class(g, tol).det_sign == 0;
  return g;
}

HermitianMetric from_matrix(const Complex2x2& m, const Tolerance& tol) {
  if (!m.allFinite()) throw Error(ErrorKind::InvalidInput, "matrix has a non-finite entry");
  const double skew = (m - m.adjoint()).norm();
  if (skew > tol.band(m.norm())) throw Error(ErrorKind::NotHermitian, "matrix is not Hermitian");
  const PauliForm p = decompose(m);
  return HermitianMetric::make(p.h0_re, p.hR, tol);
}

MetricClass det_trace_class(const HermitianMetric& g, const Tolerance& tol) {
  const double d2 = g.d * g.d;
  const double g2 = g.gR.squaredNorm();
  MetricClass mc;
  mc.det_sign = sign_with_band(d2 - g2, tol.band(d2 + g2));
  mc.trace_zero = tol.is_zero(g.d, g.scale());
  return mc;
}

}  // namespace phkit
