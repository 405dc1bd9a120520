#pragma once

#include <array>
#include <span>
#include <vector>

#include "phkit/metric_forms.hpp"
#include "phkit/quadric_surface.hpp"

namespace phkit {

using Vec6 = Eigen::Matrix<double, 6, 1>;

/// The six surfaces in v = gR whose common zero set is { gR : H^+ G = G H } for
/// G = d sigma_0 + gR . sigma. Only the traceless part of p enters.
/// Throws Error(NotPTSymmetric).
std::array<QuadraticSurface, 6> build_six_quadrics(const PauliForm& p, double d,
                                                   const Tolerance& tol = {});

/// Affine family gR = particular + sum_k t_k directions[k] of metrics with half-trace d.
struct GSolutionSet {
  bool feasible = false;
  int dimension = 0;
  double d = 0.0;
  Vec3 particular = Vec3::Zero();  // minimum-norm solution
  std::vector<Vec3> directions;    // orthonormal
  // Parameters t along a one-dimensional family where |gR| = |d|, and the metrics there.
  std::vector<double> singular_params;
  std::vector<HermitianMetric> singular_metrics;

  Vec3 point(std::span<const double> t) const;
  HermitianMetric member(std::span<const double> t, const Tolerance& tol = {}) const;
};

/// Solves the 8 real equations of H^+ G - G H = 0 for gR with d fixed. An
/// inconsistent system is returned with feasible = false.
/// Throws Error(NotPTSymmetric), and Error(NoSolution) if d = 0 yields only G = 0.
GSolutionSet solve_metrics(const PauliForm& p, double d, const Tolerance& tol = {});

/// Values of the six surfaces at g.gR with half-trace d.
Vec6 surface_residuals(const PauliForm& p, double d, const HermitianMetric& g);

}  // namespace phkit
