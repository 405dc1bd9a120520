#include <doctest.h>

#include "generators.hpp"
#include "phkit/quadric_surface.hpp"

using namespace phkit;

namespace {

QuadraticSurface surface(const Mat3& A, const Vec3& b = Vec3::Zero(), double c = 0.0) {
  QuadraticSurface s;
  s.A = A;
  s.b = b;
  s.c = c;
  return s;
}

QuadraticSurface diag(double l1, double l2, double l3, const Vec3& b = Vec3::Zero(), double c = 0.0) {
  return surface(Vec3(l1, l2, l3).asDiagonal().toDenseMatrix(), b, c);
}

Mat3 random_rotation(gen::Rng& r) {
  Eigen::Quaterniond q(r.uniform(-1, 1), r.uniform(-1, 1), r.uniform(-1, 1), r.uniform(-1, 1));
  return q.normalized().toRotationMatrix();
}

// Rigid motion v = R w + t applied to the surface.
QuadraticSurface moved(const QuadraticSurface& s, const Mat3& R, const Vec3& t) {
  // f(R^T (v - t)) in v.
  QuadraticSurface out;
  out.A = R * s.A * R.transpose();
  out.b = R * s.b - 2.0 * out.A * t;
  out.c = t.dot(out.A * t) - s.b.dot(R.transpose() * t) + s.c;
  return out;
}

}  // namespace

TEST_CASE("jacobi eigen-decomposition") {
  gen::Rng r(51);
  for (int n = 0; n < 2000; ++n) {
    Mat3 a;
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) a(i, j) = a(j, i) = r.uniform(-3, 3);
    if (n % 5 == 0) a = Vec3(1, 1, r.uniform(-1, 1)).asDiagonal();
    const SymmetricEigen e = symmetric_eigen(a);
    CHECK(e.values[0] <= e.values[1]);
    CHECK(e.values[1] <= e.values[2]);
    CHECK((e.vectors.transpose() * e.vectors - Mat3::Identity()).norm() <= 1e-13);
    CHECK((e.vectors * e.values.asDiagonal() * e.vectors.transpose() - a).norm() <= 1e-13 * std::max(1.0, a.norm()));
    const Eigen::SelfAdjointEigenSolver<Mat3> ref(a);
    CHECK((ref.eigenvalues() - e.values).norm() <= 1e-12 * std::max(1.0, a.norm()));
  }
}

TEST_CASE("named classes from normal forms") {
  using QC = QuadricClass;
  CHECK(classify_quadric(diag(1, 2, 3, Vec3::Zero(), -1)).cls == QC::Ellipsoid);
  CHECK(classify_quadric(diag(1, 2, -3, Vec3::Zero(), -1)).cls == QC::Hyperboloid1Sheet);
  CHECK(classify_quadric(diag(1, -2, -3, Vec3::Zero(), -1)).cls == QC::Hyperboloid2Sheets);
  CHECK(classify_quadric(diag(1, 2, -3)).cls == QC::QuadricCone);
  CHECK(classify_quadric(diag(1, 2, 0, Vec3(0, 0, -1))).cls == QC::EllipticParaboloid);
  CHECK(classify_quadric(diag(1, -2, 0, Vec3(0, 0, -1))).cls == QC::HyperbolicParaboloid);
  CHECK(classify_quadric(diag(1, 2, 0, Vec3::Zero(), -1)).cls == QC::Cylinder);
  CHECK(classify_quadric(diag(1, -2, 0, Vec3::Zero(), -1)).cls == QC::HyperbolicCylinder);
  CHECK(classify_quadric(diag(1, 0, 0, Vec3(0, 1, 0))).cls == QC::ParabolicCylinder);
  CHECK(classify_quadric(diag(1, -2, 0)).cls == QC::TwoIntersectingPlanes);
  CHECK(classify_quadric(diag(1, 0, 0, Vec3::Zero(), -1)).cls == QC::TwoParallelPlanes);
  CHECK(classify_quadric(diag(1, 0, 0)).cls == QC::SinglePlane);
  CHECK(classify_quadric(diag(0, 0, 0, Vec3(1, 2, 3), 4)).cls == QC::SinglePlane);
  CHECK(classify_quadric(diag(1, 2, 0)).cls == QC::Line);
  CHECK(classify_quadric(diag(1, 2, 3)).cls == QC::Point);
  CHECK(classify_quadric(diag(1, 2, 3, Vec3::Zero(), 1)).cls == QC::Empty);
  CHECK(classify_quadric(diag(1, 2, 0, Vec3::Zero(), 1)).cls == QC::Empty);
  CHECK(classify_quadric(diag(1, 0, 0, Vec3::Zero(), 1)).cls == QC::Empty);
  CHECK(classify_quadric(diag(0, 0, 0, Vec3::Zero(), 1)).cls == QC::Empty);
  CHECK(classify_quadric(diag(0, 0, 0)).cls == QC::WholeSpace);
}

TEST_CASE("ranks and the bordered matrix") {
  gen::Rng r(52);
  const std::vector<QuadraticSurface> cases{
      diag(1, 2, 3, Vec3::Zero(), -1), diag(1, 2, -3), diag(1, -2, 0, Vec3(0, 0, -1)),
      diag(1, -2, 0, Vec3::Zero(), -1), diag(1, 0, 0), diag(1, 0, 0, Vec3(0, 1, 0)),
      diag(0, 0, 0, Vec3(1, 0, 0), 1)};
  for (const QuadraticSurface& s : cases) {
    Eigen::Matrix4d bordered = Eigen::Matrix4d::Zero();
    bordered.topLeftCorner<3, 3>() = s.A;
    bordered.topRightCorner<3, 1>() = s.b / 2;
    bordered.bottomLeftCorner<1, 3>() = s.b.transpose() / 2;
    bordered(3, 3) = s.c;
    const QuadricAnalysis q = classify_quadric(s);
    CHECK(q.rank3 == Eigen::FullPivLU<Mat3>(s.A).rank());
    CHECK(q.rank4 == Eigen::FullPivLU<Eigen::Matrix4d>(bordered).rank());
  }
}

TEST_CASE("class is invariant under rigid motion and scaling") {
  gen::Rng r(53);
  const std::vector<QuadraticSurface> cases{
      diag(1, 2, 3, Vec3::Zero(), -1), diag(1, 2, -3, Vec3::Zero(), -1), diag(1, -2, -3, Vec3::Zero(), -1),
      diag(1, 2, -3),  diag(1, 2, 0, Vec3(0, 0, -1)), diag(1, -2, 0, Vec3(0, 0, -1)),
      diag(1, 2, 0, Vec3::Zero(), -1), diag(1, -2, 0, Vec3::Zero(), -1), diag(1, 0, 0, Vec3(0, 1, 0)),
      diag(1, -2, 0), diag(1, 0, 0, Vec3::Zero(), -1), diag(1, 0, 0), diag(1, 2, 0), diag(1, 2, 3),
      diag(1, 2, 3, Vec3::Zero(), 1)};
  for (const QuadraticSurface& s : cases) {
    const QuadricClass expect = classify_quadric(s).cls;
    for (int n = 0; n < 200; ++n) {
      QuadraticSurface m = moved(s, random_rotation(r), r.vec(-2, 2));
      const double k = r.sign() * std::pow(10.0, r.uniform(-3, 3));
      m.A *= k;
      m.b *= k;
      m.c *= k;
      CHECK(classify_quadric(m).cls == expect);
    }
  }
}

TEST_CASE("evaluate and gradient") {
  const QuadraticSurface s = surface((Mat3() << 1, 2, 0, 2, -1, 0, 0, 0, 3).finished(), Vec3(1, -1, 2), 5);
  const Vec3 v(0.5, -2, 1);
  CHECK(s.evaluate(v) == doctest::Approx(v.dot(s.A * v) + s.b.dot(v) + 5));
  const double h = 1e-6;
  for (int k = 0; k < 3; ++k) {
    Vec3 e = Vec3::Zero();
    e[k] = h;
    CHECK(s.gradient(v)[k] == doctest::Approx((s.evaluate(v + e) - s.evaluate(v - e)) / (2 * h)).epsilon(1e-6));
  }
}
