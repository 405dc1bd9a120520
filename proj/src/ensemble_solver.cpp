#include "phkit/ensemble_solver.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <cmath>
#include <utility>

#include "phkit/errors.hpp"

namespace phkit {

namespace {

constexpr std::array<const char*, 6> kComponentNames = {"h1_R", "h2_R", "h3_R",
                                                        "h1_I", "h2_I", "h3_I"};

Vec6 vec6(double x0, double x1, double x2, double x3, double x4, double x5) {
  Vec6 v;
  v << x0, x1, x2, x3, x4, x5;
  return v;
}

struct Direction {
  Vec6 v;
  int component;  // index of the Pauli coefficient the free parameter equals
};

// Im h0 forced by d Im h0 = -hI . gR on a singular metric.
double singular_h0_im(const HermitianMetric& g, const Vec6& x) {
  return -x.tail<3>().dot(g.gR) / g.d;
}

PauliForm to_pauli(const EnsembleBasis& eb, const Vec6& x) {
  PauliForm p(0.0, 0.0, x.head<3>(), x.tail<3>());
  if (eb.regime == MetricRegime::Singular && !eb.pt_restricted) p.h0_im = singular_h0_im(eb.metric, x);
  return p;
}

void finish(EnsembleBasis& eb) {
  eb.basis_matrices.clear();
  for (const Vec6& x : eb.basis) eb.basis_matrices.push_back(to_pauli(eb, x));
  if (eb.regime == MetricRegime::Singular && !eb.pt_restricted) {
    PTConstraint c;
    for (const Vec6& x : eb.basis) c.weights.push_back(x.tail<3>().dot(eb.metric.gR));
    if (eb.source == BasisSource::ClosedForm) {
      c.target = eb.basis.size() - 1;
    } else {
      std::size_t best = 0;
      for (std::size_t i = 1; i < c.weights.size(); ++i)
        if (std::abs(c.weights[i]) > std::abs(c.weights[best])) best = i;
      c.target = best;
    }
    eb.singular_pt_constraint = std::move(c);
  } else {
    eb.singular_pt_constraint.reset();
  }
}

std::vector<Direction> invertible_directions(const HermitianMetric& g) {
  const double a = g.a(), b = g.b(), c = g.c(), d = g.d;
  switch (g.cell) {
    case MetricCell::G1:
      return {{vec6(a / c, b / c, 1, 0, 0, 0), 2},
              {vec6(-d / c, -b * d / (a * c), 0, -b / a, 1, 0), 4},
              {vec6(0, -d / a, 0, -c / a, 0, 1), 5}};
    case MetricCell::G2:
      return {{vec6(0, b / c, 1, 0, 0, 0), 2},
              {vec6(0, d / c, 0, 1, 0, 0), 3},
              {vec6(d / b, 0, 0, 0, -c / b, 1), 5}};
    case MetricCell::G3:
      return {{vec6(a / c, 0, 1, 0, 0, 0), 2},
              {vec6(-d / c, 0, 0, 0, 1, 0), 4},
              {vec6(0, -d / a, 0, -c / a, 0, 1), 5}};
    case MetricCell::G4:
      return {{vec6(a / b, 1, 0, 0, 0, 0), 1},
              {vec6(0, 0, d / a, -b / a, 1, 0), 4},
              {vec6(d / b, 0, 0, 0, 0, 1), 5}};
    case MetricCell::G5:
      return {{vec6(1, 0, 0, 0, 0, 0), 0},
              {vec6(0, 0, d / a, 0, 1, 0), 4},
              {vec6(0, -d / a, 0, 0, 0, 1), 5}};
    case MetricCell::G6:
      return {{vec6(0, 1, 0, 0, 0, 0), 1},
              {vec6(0, 0, -d / b, 1, 0, 0), 3},
              {vec6(d / b, 0, 0, 0, 0, 1), 5}};
    case MetricCell::G7:
      return {{vec6(0, 0, 1, 0, 0, 0), 2},
              {vec6(0, d / c, 0, 1, 0, 0), 3},
              {vec6(-d / c, 0, 0, 0, 1, 0), 4}};
    case MetricCell::ScalarG:
      break;
  }
  return {};
}

std::vector<Direction> singular_directions(const HermitianMetric& g) {
  const double a = g.a(), b = g.b(), c = g.c(), d = g.d;
  switch (g.cell) {
    case MetricCell::G1:
      return {{vec6(a / c, b / c, 1, 0, 0, 0), 2},
              {vec6(a * b / (c * d), (b * b + c * c) / (c * d), 0, 1, 0, 0), 3},
              {vec6(-(a * a + c * c) / (c * d), -a * b / (c * d), 0, 0, 1, 0), 4},
              {vec6(b / d, -a / d, 0, 0, 0, 1), 5}};
    case MetricCell::G2:
      return {{vec6(0, b / c, 1, 0, 0, 0), 2},
              {vec6(0, d / c, 0, 1, 0, 0), 3},
              {vec6(-c / d, 0, 0, 0, 1, 0), 4},
              {vec6(b / d, 0, 0, 0, 0, 1), 5}};
    case MetricCell::G3:
      return {{vec6(a / c, 0, 1, 0, 0, 0), 2},
              {vec6(-d / c, 0, 0, 0, 1, 0), 4},
              {vec6(0, c / d, 0, 1, 0, 0), 3},
              {vec6(0, -a / d, 0, 0, 0, 1), 5}};
    case MetricCell::G4:
      return {{vec6(a / b, 1, 0, 0, 0, 0), 1},
              {vec6(0, 0, -b / d, 1, 0, 0), 3},
              {vec6(d / b, 0, 0, 0, 0, 1), 5},
              {vec6(0, 0, a / d, 0, 1, 0), 4}};
    case MetricCell::G5:
      return {{vec6(1, 0, 0, 0, 0, 0), 0},
              {vec6(0, 0, d / a, 0, 1, 0), 4},
              {vec6(0, -d / a, 0, 0, 0, 1), 5},
              {vec6(0, 0, 0, 1, 0, 0), 3}};
    case MetricCell::G6:
      return {{vec6(0, 1, 0, 0, 0, 0), 1},
              {vec6(0, 0, -d / b, 1, 0, 0), 3},
              {vec6(d / b, 0, 0, 0, 0, 1), 5},
              {vec6(0, 0, 0, 0, 1, 0), 4}};
    case MetricCell::G7:
      return {{vec6(0, 0, 1, 0, 0, 0), 2},
              {vec6(0, d / c, 0, 1, 0, 0), 3},
              {vec6(-d / c, 0, 0, 0, 1, 0), 4},
              {vec6(0, 0, 0, 0, 0, 1), 5}};
    case MetricCell::ScalarG:
      break;
  }
  return {};
}

EnsembleBasis scalar_basis(const HermitianMetric& g) {
  if (g.d == 0.0) throw Error(ErrorKind::InvalidInput, "the zero matrix is not a metric");
  EnsembleBasis eb;
  eb.metric = g;
  eb.regime = MetricRegime::Scalar;
  eb.source = BasisSource::ClosedForm;
  for (int i = 0; i < 3; ++i) {
    Vec6 v = Vec6::Zero();
    v[i] = 1.0;
    eb.basis.push_back(v);
    eb.free_params.push_back("k" + std::to_string(i + 1));
    eb.param_components.push_back(kComponentNames[static_cast<std::size_t>(i)]);
  }
  finish(eb);
  return eb;
}

}  // namespace

std::string_view to_string(MetricRegime regime) {
  switch (regime) {
    case MetricRegime::InvertibleTraced: return "InvertibleTraced";
    case MetricRegime::InvertibleTraceless: return "InvertibleTraceless";
    case MetricRegime::Singular: return "Singular";
    case MetricRegime::Scalar: return "Scalar";
  }
  return "?";
}

std::string_view to_string(BasisSource source) {
  return source == BasisSource::ClosedForm ? "ClosedForm" : "Numeric";
}

ConstraintMatrix build_constraint_matrix(const HermitianMetric& g) {
  if (g.cell == MetricCell::ScalarG)
    throw Error(ErrorKind::ScalarGUnsupported, "M is not used for a scalar metric");
  const double a = g.a(), b = g.b(), c = g.c(), d = g.d;
  Mat3 m1, m2, m4;
  m1 << b * b + c * c, -a * b, -a * c,
        -a * b, a * a + c * c, -b * c,
        -a * c, -b * c, a * a + b * b;
  m2 << 0, c * d, -b * d,
        -c * d, 0, a * d,
        b * d, -a * d, 0;
  m4 << d * d - a * a, -a * b, -a * c,
        -a * b, d * d - b * b, -b * c,
        -a * c, -b * c, d * d - c * c;
  ConstraintMatrix cm;
  cm.M.topLeftCorner<3, 3>() = m1;
  cm.M.topRightCorner<3, 3>() = m2;
  cm.M.bottomLeftCorner<3, 3>() = -m2;
  cm.M.bottomRightCorner<3, 3>() = m4;
  return cm;
}

Eigen::MatrixXd nullspace(const Eigen::MatrixXd& a, double rel_cutoff) {
  const Eigen::Index n = a.cols();
  if (a.rows() == 0) return Eigen::MatrixXd::Identity(n, n);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double smax = s.size() > 0 ? s[0] : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s[i] > rel_cutoff * smax && s[i] > 0.0) ++rank;
  return svd.matrixV().rightCols(n - rank);
}

std::vector<Vec6> nullspace(const ConstraintMatrix& m, double rel_cutoff) {
  const Eigen::MatrixXd ns = nullspace(Eigen::MatrixXd(m.M), rel_cutoff);
  std::vector<Vec6> out;
  for (Eigen::Index j = 0; j < ns.cols(); ++j) out.emplace_back(ns.col(j));
  return out;
}

MetricRegime regime_of(const HermitianMetric& g, const Tolerance& tol) {
  if (g.cell == MetricCell::ScalarG) return MetricRegime::Scalar;
  const MetricClass mc = det_trace_class(g, tol);
  if (mc.det_sign == 0) return MetricRegime::Singular;
  return mc.trace_zero ? MetricRegime::InvertibleTraceless : MetricRegime::InvertibleTraced;
}

EnsembleBasis closed_form_basis(const HermitianMetric& g, const Tolerance& tol) {
  const MetricRegime regime = regime_of(g, tol);
  if (regime == MetricRegime::Scalar) return scalar_basis(g);

  EnsembleBasis eb;
  eb.metric = g;
  eb.regime = regime;
  eb.source = BasisSource::ClosedForm;
  const bool singular = regime == MetricRegime::Singular;
  const std::vector<Direction> dirs = singular ? singular_directions(g) : invertible_directions(g);
  const std::string stem = singular ? "m" : "k";
  eb.trace_param = stem + "0";
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    eb.basis.push_back(dirs[i].v);
    eb.free_params.push_back(stem + std::to_string(i + 1));
    eb.param_components.push_back(kComponentNames[static_cast<std::size_t>(dirs[i].component)]);
  }
  finish(eb);
  return eb;
}

EnsembleBasis closed_form_basis(const HermitianMetric& g, MetricCell requested,
                                const Tolerance& tol) {
  if (g.cell != requested)
    throw Error(ErrorKind::CellMismatch, "metric lies in " + std::string(to_string(g.cell)) +
                                             ", not " + std::string(to_string(requested)));
  return closed_form_basis(g, tol);
}

EnsembleBasis numeric_basis(const HermitianMetric& g, bool pt_only, const Tolerance& tol) {
  const MetricRegime regime = regime_of(g, tol);
  if (regime == MetricRegime::Scalar) {
    EnsembleBasis eb = scalar_basis(g);
    eb.source = BasisSource::Numeric;
    return eb;
  }
  const ConstraintMatrix cm = build_constraint_matrix(g);
  Eigen::MatrixXd system = cm.M;
  const bool restrict_pt = pt_only && regime == MetricRegime::Singular;
  if (restrict_pt) {
    system.conservativeResize(7, 6);
    system.row(6) << 0, 0, 0, g.a(), g.b(), g.c();
  }
  const Eigen::MatrixXd ns = nullspace(system);

  EnsembleBasis eb;
  eb.metric = g;
  eb.regime = regime;
  eb.source = BasisSource::Numeric;
  eb.pt_restricted = restrict_pt;
  eb.trace_param = regime == MetricRegime::Singular ? "m0" : "k0";
  for (Eigen::Index j = 0; j < ns.cols(); ++j) {
    eb.basis.emplace_back(ns.col(j));
    eb.free_params.push_back("n" + std::to_string(j + 1));
  }
  finish(eb);
  return eb;
}

EnsembleBasis pt_restrict(const EnsembleBasis& basis) {
  if (!basis.singular_pt_constraint) return basis;
  const PTConstraint& c = *basis.singular_pt_constraint;
  const double wt = c.weights[c.target];
  if (wt == 0.0) throw Error(ErrorKind::DomainError, "PT constraint does not involve its target");

  EnsembleBasis out = basis;
  out.basis.clear();
  out.free_params.clear();
  out.param_components.clear();
  for (std::size_t i = 0; i < basis.basis.size(); ++i) {
    if (i == c.target) continue;
    out.basis.push_back(basis.basis[i] - (c.weights[i] / wt) * basis.basis[c.target]);
    out.free_params.push_back(basis.free_params[i]);
    if (!basis.param_components.empty()) out.param_components.push_back(basis.param_components[i]);
  }
  out.pt_restricted = true;
  finish(out);
  return out;
}

EnsembleBasis solve_ensemble(const HermitianMetric& g, const EnsembleOptions& options,
                             const Tolerance& tol) {
  bool numeric = options.force_numeric;
  if (!numeric && g.cell != MetricCell::ScalarG) {
    const double gmax = g.gR.cwiseAbs().maxCoeff();
    double gmin = gmax;
    for (int i = 0; i < 3; ++i)
      if (!tol.is_zero(g.gR[i], gmax)) gmin = std::min(gmin, std::abs(g.gR[i]));
    numeric = gmin < options.switchover * gmax;
  }
  if (numeric) return numeric_basis(g, options.pt_only, tol);
  EnsembleBasis eb = closed_form_basis(g, tol);
  return options.pt_only ? pt_restrict(eb) : eb;
}

PauliForm generate_H(const EnsembleBasis& basis, std::span<const double> params) {
  if (params.size() != basis.parameter_count())
    throw Error(ErrorKind::DimensionMismatch,
                "expected " + std::to_string(basis.parameter_count()) + " parameters, got " +
                    std::to_string(params.size()));
  std::size_t offset = 0;
  double h0 = 0.0;
  if (basis.includes_trace_param) h0 = params[offset++];
  Vec6 x = Vec6::Zero();
  for (std::size_t i = 0; i < basis.basis.size(); ++i) x += params[offset + i] * basis.basis[i];

  PauliForm p(h0, 0.0, x.head<3>(), x.tail<3>());
  if (basis.regime == MetricRegime::Singular) {
    const double im = singular_h0_im(basis.metric, x);
    if (basis.pt_restricted) {
      const Tolerance tol;
      if (!tol.is_zero(im, x.cwiseAbs().maxCoeff()))
        throw Error(ErrorKind::DomainError, "PT-restricted member has Im h0 != 0");
    } else {
      p.h0_im = im;
    }
  }
  return p;
}

double basis_residual(const EnsembleBasis& basis) {
  const Complex2x2 G = basis.metric.matrix();
  double worst = 0.0;
  for (const PauliForm& b : basis.basis_matrices) {
    const Complex2x2 B = compose(b);
    worst = std::max(worst, (B.adjoint() * G - G * B).norm());
  }
  return worst;
}

double subspace_distance(const std::vector<Vec6>& lhs, const std::vector<Vec6>& rhs) {
  auto orthonormal = [](const std::vector<Vec6>& vs) {
    Eigen::MatrixXd m(6, static_cast<Eigen::Index>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = vs[i];
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
    return Eigen::MatrixXd(qr.householderQ() * Eigen::MatrixXd::Identity(6, m.cols()));
  };
  if (lhs.size() != rhs.size()) return std::numeric_limits<double>::infinity();
  const Eigen::MatrixXd q1 = orthonormal(lhs);
  const Eigen::MatrixXd q2 = orthonormal(rhs);
  const Eigen::MatrixXd r12 = q2 - q1 * (q1.transpose() * q2);
  const Eigen::MatrixXd r21 = q1 - q2 * (q2.transpose() * q1);
  return std::max(r12.colwise().norm().maxCoeff(), r21.colwise().norm().maxCoeff());
}

bool proportional(const HermitianMetric& g, const HermitianMetric& f, const Tolerance& tol) {
  Eigen::Vector4d u(g.d, g.gR[0], g.gR[1], g.gR[2]);
  Eigen::Vector4d v(f.d, f.gR[0], f.gR[1], f.gR[2]);
  const double nu = u.norm(), nv = v.norm();
  if (nu <= tol.atol || nv <= tol.atol) return true;
  // Gram determinant of (u, v) relative to |u|^2 |v|^2.
  const double dot = u.dot(v) / (nu * nv);
  return 1.0 - dot * dot <= tol.rtol;
}

PauliForm common_pseudo_H(const HermitianMetric& g, const HermitianMetric& f, const Tolerance& tol) {
  if (proportional(g, f, tol))
    throw Error(ErrorKind::ProportionalMetrics, "metrics are proportional");
  const Vec3 w = f.d * g.gR - g.d * f.gR;
  return {0.0, 0.0, w, g.gR.cross(f.gR)};
}

}  // namespace phkit
