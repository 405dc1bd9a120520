#pragma once

#include <string_view>

#include "phkit/pauli_core.hpp"

namespace phkit {

/// Eigen-decomposition of a real symmetric 3x3 matrix. Values ascend; the
/// columns of `vectors` are the matching unit eigenvectors.
struct SymmetricEigen {
  Vec3 values = Vec3::Zero();
  Mat3 vectors = Mat3::Identity();
};

/// Cyclic Jacobi rotations until the off-diagonal mass is below 1e-14 of the
/// Frobenius norm. Only the upper triangle of `a` is read.
SymmetricEigen symmetric_eigen(const Mat3& a);

/// The surface v^T A v + b^T v + c = 0. `index` tags which of a family it is (0 if none).
struct QuadraticSurface {
  Mat3 A = Mat3::Zero();
  Vec3 b = Vec3::Zero();
  double c = 0.0;
  int index = 0;

  double evaluate(const Vec3& v) const { return v.dot(A * v) + b.dot(v) + c; }
  Vec3 gradient(const Vec3& v) const { return 2.0 * A * v + b; }
  double scale() const;
};

enum class QuadricClass {
  Ellipsoid,
  Hyperboloid1Sheet,
  Hyperboloid2Sheets,
  QuadricCone,
  EllipticParaboloid,
  HyperbolicParaboloid,
  Cylinder,
  HyperbolicCylinder,
  ParabolicCylinder,
  TwoIntersectingPlanes,
  TwoParallelPlanes,
  SinglePlane,
  Line,
  Point,
  Empty,
  WholeSpace,
};

std::string_view to_string(QuadricClass cls);

struct QuadricAnalysis {
  QuadricClass cls = QuadricClass::Empty;
  int rank3 = 0;  // rank of A
  int rank4 = 0;  // rank of [[A, b/2], [b^T/2, c]]
  Vec3 eigenvalues = Vec3::Zero();
  // Constant left after completing squares along the nonzero eigen-directions.
  double delta = 0.0;
};

/// Euclidean normal form by eigen-decomposition of A and completing squares.
/// Eigenvalues, the residual linear part and the constant are compared against
/// the tolerance band at the surface scale.
QuadricAnalysis classify_quadric(const QuadraticSurface& s, const Tolerance& tol = {});

}  // namespace phkit
