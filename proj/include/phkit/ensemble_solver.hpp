#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phkit/metric_forms.hpp"
#include "phkit/pauli_core.hpp"

namespace phkit {

using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;

/// Coefficients of the homogeneous system M X = 0 with X = (hR, hI), built from
/// the blocks M1, M2, M3 = -M2, M4 as polynomials in (a, b, c, d).
struct ConstraintMatrix {
  Mat6 M = Mat6::Zero();

  Mat3 m1() const { return M.topLeftCorner<3, 3>(); }
  Mat3 m2() const { return M.topRightCorner<3, 3>(); }
  Mat3 m3() const { return M.bottomLeftCorner<3, 3>(); }
  Mat3 m4() const { return M.bottomRightCorner<3, 3>(); }
};

/// Throws Error(ScalarGUnsupported) for gR = 0.
ConstraintMatrix build_constraint_matrix(const HermitianMetric& g);

inline constexpr double kRankCutoff = 1e-10;

/// Orthonormal basis (as columns) of ker(a) from the SVD; singular values at or
/// below rel_cutoff * sigma_max are treated as zero.
Eigen::MatrixXd nullspace(const Eigen::MatrixXd& a, double rel_cutoff = kRankCutoff);
std::vector<Vec6> nullspace(const ConstraintMatrix& m, double rel_cutoff = kRankCutoff);

enum class MetricRegime { InvertibleTraced, InvertibleTraceless, Singular, Scalar };
enum class BasisSource { ClosedForm, Numeric };

std::string_view to_string(MetricRegime regime);
std::string_view to_string(BasisSource source);

MetricRegime regime_of(const HermitianMetric& g, const Tolerance& tol = {});

/// Linear functional sum_i weights[i] * param[i] = 0 over the free parameters
/// (trace parameter excluded). Holding it makes a singular-metric member PT-symmetric.
/// `target` is the parameter it is solved for when folded into the basis.
struct PTConstraint {
  std::vector<double> weights;
  std::size_t target = 0;
};

/// All traceless H with H^+ G = G H, as a span of 6-vectors (hR, hI), plus the
/// trace direction sigma_0 carried as the separate parameter k0 / m0.
struct EnsembleBasis {
  HermitianMetric metric;
  MetricRegime regime = MetricRegime::InvertibleTraced;
  BasisSource source = BasisSource::ClosedForm;
  std::vector<Vec6> basis;
  std::vector<PauliForm> basis_matrices;
  std::vector<std::string> free_params;
  // Pauli component each free parameter equals ("h3_R", ...); empty for numeric bases.
  std::vector<std::string> param_components;
  std::string trace_param = "k0";
  bool includes_trace_param = true;
  std::optional<PTConstraint> singular_pt_constraint;
  bool pt_restricted = false;

  std::size_t dimension() const { return basis.size(); }
  // Expected length of the parameter vector passed to generate_H.
  std::size_t parameter_count() const { return basis.size() + (includes_trace_param ? 1 : 0); }
};

/// The closed-form particular solutions for the cell of g: alpha/beta/gamma for
/// invertible G (d = 0 is the same formulas at d = 0) and alpha'/beta'/gamma'/theta'
/// for singular G. A scalar metric yields the Hermitian generators sigma_1..3.
EnsembleBasis closed_form_basis(const HermitianMetric& g, const Tolerance& tol = {});

/// As above, but throws Error(CellMismatch) unless g lies in `requested`.
EnsembleBasis closed_form_basis(const HermitianMetric& g, MetricCell requested,
                                const Tolerance& tol = {});

/// Orthonormal nullspace basis of M; with pt_only the singular-metric constraint
/// hI . gR = 0 is stacked onto M.
EnsembleBasis numeric_basis(const HermitianMetric& g, bool pt_only = false,
                            const Tolerance& tol = {});

/// Folds the PT constraint of a singular basis into the basis (4 -> 3 directions).
/// Bases without a constraint are returned unchanged.
EnsembleBasis pt_restrict(const EnsembleBasis& basis);

struct EnsembleOptions {
  bool pt_only = false;
  bool force_numeric = false;
  // Closed forms divide by a, b or c; if the smallest nonzero one is below
  // switchover * |gR|_max the numeric nullspace is used instead.
  double switchover = 1e-6;
};

EnsembleBasis solve_ensemble(const HermitianMetric& g, const EnsembleOptions& options = {},
                             const Tolerance& tol = {});

/// H = param[0] sigma_0 + sum_i param[i+1] basis_i. For an unrestricted singular
/// basis Im h0 is set from d Im h0 = -hI . gR. Throws Error(DimensionMismatch).
PauliForm generate_H(const EnsembleBasis& basis, std::span<const double> params);

/// Largest ||B^+ G - G B||_F over the basis matrices.
double basis_residual(const EnsembleBasis& basis);

/// Principal angle residual between two spans: max over both directions of
/// ||(I - P_other) v|| for orthonormalized v.
double subspace_distance(const std::vector<Vec6>& lhs, const std::vector<Vec6>& rhs);

bool proportional(const HermitianMetric& g, const HermitianMetric& f, const Tolerance& tol = {});

/// The traceless PT-symmetric H pseudo-Hermitian with respect to both g and f:
/// hR = f.d gR - g.d fR, hI = gR x fR. Throws Error(ProportionalMetrics).
PauliForm common_pseudo_H(const HermitianMetric& g, const HermitianMetric& f,
                          const Tolerance& tol = {});

}  // namespace phkit
