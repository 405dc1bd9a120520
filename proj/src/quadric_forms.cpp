#include "phkit/quadric_forms.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "phkit/errors.hpp"

namespace phkit {

namespace {

double member_det(const EnsembleBasis& basis, const Vec3& v) {
  const std::array<double, 4> params{0.0, v[0], v[1], v[2]};
  return generate_H(basis, params).det().real();
}

}  // namespace

DetForm det_form(const EnsembleBasis& basis) {
  if (basis.dimension() != 3)
    throw Error(ErrorKind::DimensionMismatch,
                "determinant form needs 3 free parameters, basis has " +
                    std::to_string(basis.dimension()));
  DetForm f;
  const Mat3 e = Mat3::Identity();
  for (int i = 0; i < 3; ++i) f.A(i, i) = member_det(basis, e.col(i));
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      f.A(i, j) = 0.5 * (member_det(basis, e.col(i) + e.col(j)) - f.A(i, i) - f.A(j, j));
      f.A(j, i) = f.A(i, j);
    }
  }
  const SymmetricEigen eig = symmetric_eigen(f.A);
  f.eigenvalues = eig.values;
  f.eigenvectors = eig.vectors;
  f.param_names = basis.free_params;
  f.source_cell = basis.metric.cell;
  f.regime = basis.regime;
  f.basis = basis;
  return f;
}

Mat3 closed_form_A(const HermitianMetric& g, const Tolerance& tol) {
  if (g.cell == MetricCell::ScalarG)
    throw Error(ErrorKind::CellMismatch, "no closed form for a scalar metric");
  const double a = g.a(), b = g.b(), c = g.c(), d = g.d;
  const double a2 = a * a, b2 = b * b, c2 = c * c, d2 = d * d;
  Mat3 A = Mat3::Zero();

  if (regime_of(g, tol) == MetricRegime::Singular) {
    Vec3 q;
    switch (g.cell) {
      case MetricCell::G1: q = Vec3(d, b, -a) / c; break;
      case MetricCell::G2: q = Vec3(d, b, 0) / c; break;
      case MetricCell::G3: q = Vec3(d, -a, 0) / c; break;
      case MetricCell::G4: q = Vec3(d, 0, a) / b; break;
      default: q = Vec3(1, 0, 0); break;
    }
    return -q * q.transpose();
  }

  switch (g.cell) {
    case MetricCell::G1:
      A(0, 0) = -(a2 + b2 + c2) / c2;
      A(0, 1) = (a2 + b2) * d / (a * c2);
      A(0, 2) = b * d / (a * c);
      A(1, 1) = (a2 + b2) * (c2 - d2) / (a2 * c2);
      A(1, 2) = b * (c2 - d2) / (a2 * c);
      A(2, 2) = (a2 + c2 - d2) / a2;
      break;
    case MetricCell::G2:
      A(0, 0) = -(b2 + c2) / c2;
      A(0, 1) = -b * d / c2;
      A(1, 1) = (c2 - d2) / c2;
      A(2, 2) = (b2 + c2 - d2) / b2;
      break;
    case MetricCell::G3:
      A(0, 0) = -(a2 + c2) / c2;
      A(0, 1) = a * d / c2;
      A(1, 1) = (c2 - d2) / c2;
      A(2, 2) = (a2 + c2 - d2) / a2;
      break;
    case MetricCell::G4:
      A(0, 0) = -(a2 + b2) / b2;
      A(0, 2) = -a * d / b2;
      A(1, 1) = (a2 + b2 - d2) / a2;
      A(2, 2) = (b2 - d2) / b2;
      break;
    case MetricCell::G5:
      A = Vec3(-1, (a2 - d2) / a2, (a2 - d2) / a2).asDiagonal();
      break;
    case MetricCell::G6:
      A = Vec3(-1, (b2 - d2) / b2, (b2 - d2) / b2).asDiagonal();
      break;
    case MetricCell::G7:
      A = Vec3(-1, (c2 - d2) / c2, (c2 - d2) / c2).asDiagonal();
      break;
    case MetricCell::ScalarG:
      break;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < i; ++j) A(i, j) = A(j, i);
  return A;
}

QuadricClass classify_level_set(const DetForm& f, double level, const Tolerance& tol) {
  QuadraticSurface s;
  s.A = f.A;
  s.c = -level;
  return classify_quadric(s, tol).cls;
}

SymmetryStats symmetry_report(const DetForm& f, double level, std::size_t samples,
                              std::uint64_t seed, const Tolerance& tol) {
  using QC = QuadricClass;
  SymmetryStats st;
  st.level_set = classify_level_set(f, level, tol);
  st.seed = seed;
  if (st.level_set == QC::Empty)
    throw Error(ErrorKind::EmptyLevelSet, "level set " + std::to_string(level) + " is empty");
  st.predicted = st.level_set == QC::Hyperboloid1Sheet ? Symmetry::Broken : Symmetry::Unbroken;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> hyper(-2.0, 2.0);
  std::uniform_real_distribution<double> free_coord(-3.0, 3.0);
  const double two_pi = 2.0 * std::numbers::pi;
  const Vec3& lam = f.eigenvalues;
  const double L = std::abs(level);
  auto sign = [&] { return unit(rng) < 0.5 ? -1.0 : 1.0; };

  for (std::size_t n = 0; n < samples; ++n) {
    Vec3 u = Vec3::Zero();
    const double phi = two_pi * unit(rng);
    switch (st.level_set) {
      case QC::Ellipsoid: {
        const double cz = 2.0 * unit(rng) - 1.0;
        const double sz = std::sqrt(1.0 - cz * cz);
        const Vec3 dir(sz * std::cos(phi), sz * std::sin(phi), cz);
        for (int k = 0; k < 3; ++k) u[k] = std::sqrt(level / lam[k]) * dir[k];
        break;
      }
      case QC::Hyperboloid1Sheet: {
        const double s = hyper(rng);
        u[0] = std::sqrt(L / -lam[0]) * std::sinh(s);
        u[1] = std::sqrt(L / lam[1]) * std::cosh(s) * std::cos(phi);
        u[2] = std::sqrt(L / lam[2]) * std::cosh(s) * std::sin(phi);
        break;
      }
      case QC::Hyperboloid2Sheets: {
        const double s = hyper(rng);
        u[0] = sign() * std::sqrt(L / -lam[0]) * std::cosh(s);
        u[1] = std::sqrt(L / lam[1]) * std::sinh(s) * std::cos(phi);
        u[2] = std::sqrt(L / lam[2]) * std::sinh(s) * std::sin(phi);
        break;
      }
      case QC::QuadricCone: {
        const double r = 2.0 * unit(rng) + 1e-3;
        u[0] = sign() * r / std::sqrt(-lam[0]);
        u[1] = r * std::cos(phi) / std::sqrt(lam[1]);
        u[2] = r * std::sin(phi) / std::sqrt(lam[2]);
        break;
      }
      case QC::Point:
        break;
      case QC::TwoParallelPlanes:
        u[0] = sign() * std::sqrt(level / lam[0]);
        u[1] = free_coord(rng);
        u[2] = free_coord(rng);
        break;
      case QC::SinglePlane:
        u[1] = free_coord(rng);
        u[2] = free_coord(rng);
        break;
      default:
        throw Error(ErrorKind::DomainError,
                    "no sampler for level set " + std::string(to_string(st.level_set)));
    }
    const Vec3 v = f.eigenvectors * u;
    const std::array<double, 4> params{0.0, v[0], v[1], v[2]};
    const PauliForm h = generate_H(f.basis, params);
    st.max_level_residual = std::max(st.max_level_residual, std::abs(h.det().real() - level));

    const PTCell cell = classify(h, tol);
    ++st.samples;
    if (cell.symmetry == Symmetry::Broken) ++st.broken;
    if (cell.symmetry == Symmetry::Unbroken) ++st.unbroken;
    if (cell.spectrum == Spectrum::RealDegenerate) ++st.degenerate;
    if (cell.symmetry == st.predicted) ++st.matched;
  }
  return st;
}

}  // namespace phkit
