#include "phkit/quadric_surface.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace phkit {

SymmetricEigen symmetric_eigen(const Mat3& a_in) {
  Mat3 a = a_in;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < i; ++j) a(i, j) = a(j, i);
  Mat3 v = Mat3::Identity();
  const double norm = a.norm();
  for (int sweep = 0; sweep < 64 && norm > 0.0; ++sweep) {
    const double off = std::sqrt(2.0 * (a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2)));
    if (off <= 1e-14 * norm) break;
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double cs = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * cs;
        Mat3 j = Mat3::Identity();
        j(p, p) = cs;
        j(q, q) = cs;
        j(p, q) = sn;
        j(q, p) = -sn;
        a = j.transpose() * a * j;
        v = v * j;
        a(p, q) = a(q, p) = 0.0;
      }
    }
  }
  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });
  SymmetricEigen out;
  for (int k = 0; k < 3; ++k) {
    out.values[k] = a(order[k], order[k]);
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

double QuadraticSurface::scale() const {
  return std::max({A.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff(), std::abs(c)});
}

std::string_view to_string(QuadricClass cls) {
  switch (cls) {
    case QuadricClass::Ellipsoid: return "Ellipsoid";
    case QuadricClass::Hyperboloid1Sheet: return "Hyperboloid1Sheet";
    case QuadricClass::Hyperboloid2Sheets: return "Hyperboloid2Sheets";
    case QuadricClass::QuadricCone: return "QuadricCone";
    case QuadricClass::EllipticParaboloid: return "EllipticParaboloid";
    case QuadricClass::HyperbolicParaboloid: return "HyperbolicParaboloid";
    case QuadricClass::Cylinder: return "Cylinder";
    case QuadricClass::HyperbolicCylinder: return "HyperbolicCylinder";
    case QuadricClass::ParabolicCylinder: return "ParabolicCylinder";
    case QuadricClass::TwoIntersectingPlanes: return "TwoIntersectingPlanes";
    case QuadricClass::TwoParallelPlanes: return "TwoParallelPlanes";
    case QuadricClass::SinglePlane: return "SinglePlane";
    case QuadricClass::Line: return "Line";
    case QuadricClass::Point: return "Point";
    case QuadricClass::Empty: return "Empty";
    case QuadricClass::WholeSpace: return "WholeSpace";
  }
  return "?";
}

QuadricAnalysis classify_quadric(const QuadraticSurface& s, const Tolerance& tol) {
  const SymmetricEigen eig = symmetric_eigen(s.A);
  const Vec3 bp = eig.vectors.transpose() * s.b;
  const double scale = s.scale();

  QuadricAnalysis out;
  out.eigenvalues = eig.values;

  int positive = 0, negative = 0;
  double linear_sq = 0.0;
  double shift = 0.0;
  double shift_scale = 0.0;
  std::array<double, 3> nonzero{};
  for (int k = 0; k < 3; ++k) {
    const double lam = eig.values[k];
    if (tol.is_zero(lam, scale)) {
      linear_sq += bp[k] * bp[k];
      continue;
    }
    nonzero[static_cast<std::size_t>(positive + negative)] = lam;
    (lam > 0 ? positive : negative) += 1;
    const double term = bp[k] * bp[k] / (4.0 * lam);
    shift += term;
    shift_scale = std::max(shift_scale, std::abs(term));
  }
  const int r = positive + negative;
  out.rank3 = r;
  out.delta = s.c - shift;

  using QC = QuadricClass;
  if (!tol.is_zero(std::sqrt(linear_sq), scale)) {
    out.rank4 = r + 2;
    if (r == 2) out.cls = (positive == 2 || negative == 2) ? QC::EllipticParaboloid : QC::HyperbolicParaboloid;
    else if (r == 1) out.cls = QC::ParabolicCylinder;
    else out.cls = QC::SinglePlane;
    return out;
  }

  const bool same_sign = positive == 0 || negative == 0;
  if (tol.is_zero(out.delta, std::max(scale, shift_scale))) {
    out.rank4 = r;
    switch (r) {
      case 3: out.cls = same_sign ? QC::Point : QC::QuadricCone; break;
      case 2: out.cls = same_sign ? QC::Line : QC::TwoIntersectingPlanes; break;
      case 1: out.cls = QC::SinglePlane; break;
      default: out.cls = QC::WholeSpace; break;
    }
    return out;
  }

  out.rank4 = r + 1;
  // Normal form sum lambda_k u_k^2 = k; p counts the squares that share the sign of k.
  const double k = -out.delta;
  int p = 0;
  for (int i = 0; i < r; ++i)
    if ((nonzero[static_cast<std::size_t>(i)] > 0) == (k > 0)) ++p;
  switch (r) {
    case 3: {
      constexpr std::array<QC, 4> by_p{QC::Empty, QC::Hyperboloid2Sheets, QC::Hyperboloid1Sheet, QC::Ellipsoid};
      out.cls = by_p[static_cast<std::size_t>(p)];
      break;
    }
    case 2: {
      constexpr std::array<QC, 3> by_p{QC::Empty, QC::HyperbolicCylinder, QC::Cylinder};
      out.cls = by_p[static_cast<std::size_t>(p)];
      break;
    }
    case 1: out.cls = p == 1 ? QC::TwoParallelPlanes : QC::Empty; break;
    default: out.cls = QC::Empty; break;
  }
  return out;
}

}  // namespace phkit
