#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "phkit/errors.hpp"
#include "phkit/quadric_forms.hpp"

using namespace phkit;

namespace {

HermitianMetric metric(double d, Vec3 g) { return HermitianMetric::make(d, g); }

DetForm form_of(const HermitianMetric& g) {
  EnsembleOptions opt;
  opt.pt_only = true;
  return det_form(solve_ensemble(g, opt));
}

DetForm closed_form_of(const HermitianMetric& g) {
  EnsembleBasis eb = closed_form_basis(g);
  return det_form(eb.singular_pt_constraint ? pt_restrict(eb) : eb);
}

// det of the traceless member with parameters v, from the explicit matrix.
double direct_det(const EnsembleBasis& eb, const Vec3& v) {
  Vec6 x = Vec6::Zero();
  for (int i = 0; i < 3; ++i) x += v[i] * eb.basis[static_cast<std::size_t>(i)];
  const oracle::M2 h = oracle::traceless(x);
  return (h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0)).real();
}

}  // namespace

TEST_CASE("G4 positive metric form") {
  Mat3 expect;
  expect << -1.25, 0, -0.75, 0, -4, 0, -0.75, 0, -1.25;
  const DetForm f = form_of(metric(3, Vec3(1, 2, 0)));
  CHECK((f.A - expect).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK(f.param_names == std::vector<std::string>{"k1", "k2", "k3"});
  CHECK(f.source_cell == MetricCell::G4);
  CHECK((closed_form_A(metric(3, Vec3(1, 2, 0))) - expect).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK(classify_level_set(f, -1) == QuadricClass::Ellipsoid);
  CHECK(classify_level_set(f, 0) == QuadricClass::Point);
  CHECK(classify_level_set(f, 1) == QuadricClass::Empty);
}

TEST_CASE("G6 indefinite metric form") {
  const DetForm f = form_of(metric(0.5, Vec3(0, 1, 0)));
  CHECK((f.A - Vec3(-1, 0.75, 0.75).asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK(classify_level_set(f, -1) == QuadricClass::Hyperboloid2Sheets);
  CHECK(classify_level_set(f, 0) == QuadricClass::QuadricCone);
  CHECK(classify_level_set(f, 1) == QuadricClass::Hyperboloid1Sheet);
}

TEST_CASE("G7 traceless form") {
  const DetForm f = form_of(metric(0, Vec3(0, 0, 1)));
  CHECK((f.A - Vec3(-1, 1, 1).asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("G5 closed form") {
  const double a = 1.3, d = 0.4;
  const double r = (a * a - d * d) / (a * a);
  CHECK((closed_form_A(metric(d, Vec3(a, 0, 0))) - Vec3(-1, r, r).asDiagonal().toDenseMatrix()).norm() <= 1e-15);
}

TEST_CASE("singular G4 form is a perfect square") {
  const DetForm f = form_of(metric(std::sqrt(5.0), Vec3(1, 2, 0)));
  const Vec3 q = Vec3(std::sqrt(5.0), 0, 1) / 2;
  CHECK((f.A + q * q.transpose()).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK((closed_form_A(metric(std::sqrt(5.0), Vec3(1, 2, 0))) - f.A).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK(classify_level_set(f, -1) == QuadricClass::TwoParallelPlanes);
  CHECK(classify_level_set(f, 0) == QuadricClass::SinglePlane);
  CHECK(classify_level_set(f, 1) == QuadricClass::Empty);
}

TEST_CASE("singular G6 form") {
  const DetForm f = form_of(metric(1, Vec3(0, 1, 0)));
  CHECK((f.A - Vec3(-1, 0, 0).asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK(classify_level_set(f, 0) == QuadricClass::SinglePlane);
  CHECK(classify_level_set(f, -1) == QuadricClass::TwoParallelPlanes);
}

TEST_CASE("singular G3 square uses -a") {
  const double a = 0.6, c = 1.4, d = std::hypot(a, c);
  const Vec3 q = Vec3(d, -a, 0) / c;
  CHECK((closed_form_of(metric(d, Vec3(a, 0, c))).A + q * q.transpose()).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("det_form needs three directions") {
  const EnsembleBasis eb = closed_form_basis(metric(1, Vec3(1, 0, 0)));
  CHECK(eb.dimension() == 4);
  try {
    det_form(eb);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("polarization reproduces the determinant") {
  gen::Rng r(61);
  for (int n = 0; n < 1000; ++n) {
    const HermitianMetric g = gen::metric(r, gen::kCells[static_cast<std::size_t>(n % 7)],
                                          gen::kRegimes[static_cast<std::size_t>(n % 4)]);
    const DetForm f = form_of(g);
    const Vec3 v = r.vec(-2, 2);
    const double scale = std::max(1.0, f.A.cwiseAbs().maxCoeff()) * v.squaredNorm();
    CHECK(std::abs(direct_det(f.basis, v) - f.evaluate(v)) <= 1e-10 * scale);
    CHECK(f.A.isApprox(f.A.transpose(), 0.0));
  }
}

TEST_CASE("closed-form matrices agree with polarization") {
  gen::Rng r(62);
  for (auto cell : gen::kCells) {
    for (auto regime : gen::kRegimes) {
      for (int n = 0; n < 1000; ++n) {
        const HermitianMetric g = gen::metric(r, cell, regime);
        const DetForm f = closed_form_of(g);
        const Mat3 A = closed_form_A(g);
        CHECK((A - f.A).cwiseAbs().maxCoeff() <= 1e-10 * std::max(1.0, f.A.cwiseAbs().maxCoeff()));
      }
    }
  }
}

TEST_CASE("eigenvalue signs follow the determinant of G") {
  gen::Rng r(63);
  for (int n = 0; n < 10000; ++n) {
    const auto cell = gen::kCells[static_cast<std::size_t>(n % 7)];
    const bool positive = n % 2 == 0;
    const HermitianMetric g = positive ? gen::metric(r, cell, gen::Regime::PositiveDet) : gen::indefinite_metric(r);
    const DetForm f = form_of(g);
    const double band = 1e-10 * f.A.cwiseAbs().maxCoeff();
    int neg = 0, pos = 0;
    for (int k = 0; k < 3; ++k) {
      if (f.eigenvalues[k] < -band) ++neg;
      if (f.eigenvalues[k] > band) ++pos;
    }
    if (positive) {
      CHECK(neg == 3);
    } else {
      CHECK(neg == 1);
      CHECK(pos == 2);
    }
  }
}

TEST_CASE("G1 determinant of A") {
  gen::Rng r(64);
  for (int n = 0; n < 1000; ++n) {
    const HermitianMetric g = gen::metric(r, MetricCell::G1, gen::kRegimes[static_cast<std::size_t>(n % 3)]);
    const Mat3 A = closed_form_A(g);
    const double expect = -g.det() * g.det() / (g.a() * g.a() * g.c() * g.c());
    CHECK(std::abs(A.determinant() - expect) <= 1e-10 * std::abs(expect));
  }
}

TEST_CASE("singular forms are rank one and negative semidefinite") {
  gen::Rng r(65);
  for (int n = 0; n < 1000; ++n) {
    const HermitianMetric g = gen::metric(r, gen::kCells[static_cast<std::size_t>(n % 7)], gen::Regime::Singular);
    const DetForm f = form_of(g);
    const double s = f.A.cwiseAbs().maxCoeff();
    CHECK(f.eigenvalues[0] < -1e-10 * s);
    CHECK(std::abs(f.eigenvalues[1]) <= 1e-10 * s);
    CHECK(f.eigenvalues[2] <= 1e-10 * s);
  }
}

TEST_CASE("symmetry on sampled level sets") {
  const DetForm definite = form_of(metric(3, Vec3(1, 2, 0)));
  const SymmetryStats e = symmetry_report(definite, -1, 300, 7);
  CHECK(e.level_set == QuadricClass::Ellipsoid);
  CHECK(e.fraction() == 1.0);
  CHECK(e.unbroken == 300);
  CHECK(e.max_level_residual <= 1e-12);

  const DetForm indefinite = form_of(metric(0.5, Vec3(0, 1, 0)));
  const SymmetryStats h1 = symmetry_report(indefinite, 1, 300, 7);
  CHECK(h1.predicted == Symmetry::Broken);
  CHECK(h1.broken == 300);
  const SymmetryStats h2 = symmetry_report(indefinite, -1, 300, 7);
  CHECK(h2.unbroken == 300);
  const SymmetryStats cone = symmetry_report(indefinite, 0, 300, 7);
  CHECK(cone.level_set == QuadricClass::QuadricCone);
  CHECK(cone.unbroken == 300);
  CHECK(cone.degenerate == 300);

  const DetForm singular = form_of(metric(1, Vec3(0, 1, 0)));
  CHECK(symmetry_report(singular, -1, 200, 3).fraction() == 1.0);
  CHECK(symmetry_report(singular, 0, 200, 3).fraction() == 1.0);
}

TEST_CASE("sampling is reproducible and rejects empty level sets") {
  const DetForm f = form_of(metric(0.5, Vec3(0, 1, 0)));
  const SymmetryStats a = symmetry_report(f, 1, 50, 99);
  const SymmetryStats b = symmetry_report(f, 1, 50, 99);
  CHECK(a.max_level_residual == b.max_level_residual);
  CHECK(a.seed == 99);
  const DetForm pos = form_of(metric(3, Vec3(1, 2, 0)));
  try {
    symmetry_report(pos, 1, 10, 1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyLevelSet);
  }
}
