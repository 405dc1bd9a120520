#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "phkit/classifier.hpp"
#include "phkit/ensemble_solver.hpp"
#include "phkit/quadric_surface.hpp"

namespace phkit {

/// det(H(v)) = v^T A v over the three free parameters of a traceless ensemble.
struct DetForm {
  Mat3 A = Mat3::Zero();
  std::vector<std::string> param_names;
  Vec3 eigenvalues = Vec3::Zero();  // ascending
  Mat3 eigenvectors = Mat3::Identity();
  MetricCell source_cell = MetricCell::ScalarG;
  MetricRegime regime = MetricRegime::InvertibleTraced;
  EnsembleBasis basis;

  double evaluate(const Vec3& v) const { return v.dot(A * v); }
};

/// A by polarization: A_ii = det H(e_i), A_ij = (det H(e_i + e_j) - A_ii - A_jj) / 2.
/// Throws Error(DimensionMismatch) unless the basis has exactly three directions.
DetForm det_form(const EnsembleBasis& basis);

/// The same matrix written out in (a, b, c, d). Singular metrics give -q q^T in
/// the PT-restricted parameters. Throws Error(CellMismatch) for a scalar metric.
Mat3 closed_form_A(const HermitianMetric& g, const Tolerance& tol = {});

/// Class of { v : v^T A v = level }.
QuadricClass classify_level_set(const DetForm& f, double level, const Tolerance& tol = {});

struct SymmetryStats {
  QuadricClass level_set = QuadricClass::Empty;
  Symmetry predicted = Symmetry::Unbroken;
  std::size_t samples = 0;
  std::size_t matched = 0;
  std::size_t broken = 0;
  std::size_t unbroken = 0;
  std::size_t degenerate = 0;  // members with a double eigenvalue
  double max_level_residual = 0.0;
  std::uint64_t seed = 0;

  double fraction() const { return samples == 0 ? 0.0 : double(matched) / double(samples); }
};

/// Samples the level set through the eigenbasis parametrization of its class,
/// builds each member and checks the predicted symmetry: Broken on a one-sheet
/// hyperboloid, Unbroken everywhere else. Throws Error(EmptyLevelSet).
SymmetryStats symmetry_report(const DetForm& f, double level, std::size_t samples,
                              std::uint64_t seed, const Tolerance& tol = {});

}  // namespace phkit
