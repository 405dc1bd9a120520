#include "phkit/inverse_solver.hpp"

#include <cmath>

#include "phkit/classifier.hpp"
#include "phkit/ensemble_solver.hpp"
#include "phkit/errors.hpp"

namespace phkit {

namespace {

std::array<QuadraticSurface, 6> six_quadrics(const PauliForm& p, double d) {
  const double r1 = p.hR[0], r2 = p.hR[1], r3 = p.hR[2];
  const double i1 = p.hI[0], i2 = p.hI[1], i3 = p.hI[2];
  std::array<QuadraticSurface, 6> q;
  q[0].A << 0, -r2 / 2, -r3 / 2, -r2 / 2, r1, 0, -r3 / 2, 0, r1;
  q[0].b = d * Vec3(0, -i3, i2);
  q[1].A << r2, -r1 / 2, 0, -r1 / 2, 0, -r3 / 2, 0, -r3 / 2, r2;
  q[1].b = d * Vec3(i3, 0, -i1);
  q[2].A << r3, 0, -r1 / 2, 0, r3, -r2 / 2, -r1 / 2, -r2 / 2, 0;
  q[2].b = d * Vec3(-i2, i1, 0);
  q[3].A << -i1, -i2 / 2, -i3 / 2, -i2 / 2, 0, 0, -i3 / 2, 0, 0;
  q[3].b = d * Vec3(0, r3, -r2);
  q[3].c = i1 * d * d;
  q[4].A << 0, -i1 / 2, 0, -i1 / 2, -i2, -i3 / 2, 0, -i3 / 2, 0;
  q[4].b = d * Vec3(-r3, 0, r1);
  q[4].c = i2 * d * d;
  q[5].A << 0, 0, -i1 / 2, 0, 0, -i2 / 2, -i1 / 2, -i2 / 2, -i3;
  q[5].b = d * Vec3(r2, -r1, 0);
  q[5].c = i3 * d * d;
  for (int j = 0; j < 6; ++j) q[static_cast<std::size_t>(j)].index = j + 1;
  return q;
}

void require_pt(const PauliForm& p, const Tolerance& tol) {
  if (!is_pt_symmetric(p, tol)) throw Error(ErrorKind::NotPTSymmetric, "H is not PT-symmetric");
}

Eigen::Matrix<double, 8, 1> real_vec(const Complex2x2& m) {
  Eigen::Matrix<double, 8, 1> v;
  for (int i = 0; i < 4; ++i) {
    v[2 * i] = m(i / 2, i % 2).real();
    v[2 * i + 1] = m(i / 2, i % 2).imag();
  }
  return v;
}

}  // namespace

std::array<QuadraticSurface, 6> build_six_quadrics(const PauliForm& p, double d,
                                                   const Tolerance& tol) {
  require_pt(p, tol);
  return six_quadrics(p, d);
}

Vec3 GSolutionSet::point(std::span<const double> t) const {
  if (t.size() != directions.size())
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(directions.size()) +
                                                  " parameters, got " + std::to_string(t.size()));
  Vec3 g = particular;
  for (std::size_t k = 0; k < t.size(); ++k) g += t[k] * directions[k];
  return g;
}

HermitianMetric GSolutionSet::member(std::span<const double> t, const Tolerance& tol) const {
  return HermitianMetric::make(d, point(t), tol);
}

GSolutionSet solve_metrics(const PauliForm& p, double d, const Tolerance& tol) {
  require_pt(p, tol);
  const Complex2x2 H = compose(p.traceless());
  const Complex2x2 Hd = H.adjoint();

  Eigen::Matrix<double, 8, 3> M;
  for (int k = 0; k < 3; ++k) {
    const Complex2x2& s = pauli_matrix(k + 1);
    M.col(k) = real_vec(Hd * s - s * H);
  }
  const Eigen::Matrix<double, 8, 1> rhs = -d * real_vec(Hd - H);

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(Eigen::MatrixXd(M), Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(kRankCutoff);
  const Vec3 x = svd.solve(Eigen::MatrixXd(rhs));

  GSolutionSet out;
  out.d = d;
  const double scale = std::max(M.cwiseAbs().maxCoeff(), rhs.cwiseAbs().maxCoeff());
  const double resid = (M * x - rhs).cwiseAbs().maxCoeff();
  if (resid > tol.band(scale * std::max(1.0, x.cwiseAbs().maxCoeff()))) return out;

  out.feasible = true;
  out.particular = x;
  const Eigen::MatrixXd ns = nullspace(Eigen::MatrixXd(M));
  for (Eigen::Index j = 0; j < ns.cols(); ++j) out.directions.emplace_back(ns.col(j));
  out.dimension = static_cast<int>(out.directions.size());
  if (d == 0.0 && out.dimension == 0)
    throw Error(ErrorKind::NoSolution, "only G = 0 satisfies H^+ G = G H with d = 0");

  if (out.dimension == 1) {
    const Vec3& u = out.directions[0];
    // |x + t u|^2 = d^2 with |u| = 1.
    const double bq = x.dot(u);
    const double cq = x.squaredNorm() - d * d;
    const double disc = bq * bq - cq;
    std::vector<double> roots;
    if (tol.is_zero(disc, std::max(bq * bq, d * d))) {
      roots.push_back(-bq);
    } else if (disc > 0) {
      const double sq = std::sqrt(disc);
      roots.push_back(-bq - sq);
      roots.push_back(-bq + sq);
    }
    for (double t : roots) {
      const Vec3 g = x + t * u;
      if (d == 0.0 && tol.is_zero(g.norm(), 1.0)) continue;
      out.singular_params.push_back(t);
      out.singular_metrics.push_back(HermitianMetric::make(d, g, tol));
    }
  }
  return out;
}

Vec6 surface_residuals(const PauliForm& p, double d, const HermitianMetric& g) {
  const auto qs = six_quadrics(p, d);
  Vec6 r;
  for (int j = 0; j < 6; ++j) r[j] = qs[static_cast<std::size_t>(j)].evaluate(g.gR);
  return r;
}

}  // namespace phkit
