#pragma once

// Reference computations that avoid the library's own code paths: explicit
// matrix entries, a general eigen-solver, Gaussian elimination and Gram-Schmidt.

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace oracle {

using C = std::complex<double>;
using M2 = Eigen::Matrix2cd;
using V3 = Eigen::Vector3d;
using V6 = Eigen::Matrix<double, 6, 1>;

inline constexpr C I{0.0, 1.0};

// [[h0 + h3, h1 - i h2], [h1 + i h2, h0 - h3]] with h = hR + i hI.
inline M2 matrix(C h0, const V3& hR, const V3& hI) {
  const C h1{hR[0], hI[0]}, h2{hR[1], hI[1]}, h3{hR[2], hI[2]};
  M2 m;
  m << h0 + h3, h1 - I * h2, h1 + I * h2, h0 - h3;
  return m;
}

inline M2 metric(double d, const V3& g) { return matrix(d, g, V3::Zero()); }

inline M2 traceless(const V6& x) { return matrix(0.0, x.head<3>(), x.tail<3>()); }

inline double pair_residual(const M2& h, const M2& g) { return (h.adjoint() * g - g * h).norm(); }

// Eigenvalues from a general complex solver, sorted by (real, imag).
inline std::pair<C, C> eigen(const M2& m) {
  Eigen::ComplexEigenSolver<M2> es(m, false);
  C a = es.eigenvalues()[0], b = es.eigenvalues()[1];
  auto less = [](C x, C y) { return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag()); };
  if (less(b, a)) std::swap(a, b);
  return {a, b};
}

// Roots of E^2 - Tr(M) E + det(M) by the quadratic formula.
inline std::pair<C, C> char_roots(const M2& m) {
  const C t = m.trace();
  const C det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  const C s = std::sqrt(t * t - 4.0 * det);
  return {(t - s) / 2.0, (t + s) / 2.0};
}

inline Eigen::Matrix<double, 8, 1> real_vec(const M2& m) {
  Eigen::Matrix<double, 8, 1> v;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      v[2 * (2 * r + c)] = m(r, c).real();
      v[2 * (2 * r + c) + 1] = m(r, c).imag();
    }
  return v;
}

// The real-linear map X = (hR, hI) -> H(X)^+ G - G H(X), one column per unit vector.
inline Eigen::Matrix<double, 8, 6> linear_map(double d, const V3& g) {
  const M2 G = metric(d, g);
  Eigen::Matrix<double, 8, 6> out;
  for (int j = 0; j < 6; ++j) {
    V6 e = V6::Zero();
    e[j] = 1.0;
    const M2 H = traceless(e);
    out.col(j) = real_vec(H.adjoint() * G - G * H);
  }
  return out;
}

// Same map with a seventh column for Im h0 (H = i sigma_0), which singular
// metrics allow to be nonzero.
inline Eigen::Matrix<double, 8, 7> linear_map_with_trace(double d, const V3& g) {
  const M2 G = metric(d, g);
  const M2 H = I * M2::Identity();
  Eigen::Matrix<double, 8, 7> out;
  out.leftCols<6>() = linear_map(d, g);
  out.col(6) = real_vec(H.adjoint() * G - G * H);
  return out;
}

// Rank by Gaussian elimination with partial pivoting.
inline int rank(Eigen::MatrixXd a, double rel = 1e-10) {
  const double scale = std::max(a.cwiseAbs().maxCoeff(), 1e-300);
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    Eigen::Index p;
    const double best = a.col(c).tail(a.rows() - r).cwiseAbs().maxCoeff(&p);
    if (best <= rel * scale) continue;
    a.row(r).swap(a.row(r + p));
    for (Eigen::Index i = r + 1; i < a.rows(); ++i) a.row(i) -= a(i, c) / a(r, c) * a.row(r);
    ++r;
  }
  return r;
}

// Kernel basis from full-pivot LU, truncated to the first six coordinates.
inline std::vector<V6> kernel(const Eigen::MatrixXd& a, double rel = 1e-10) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  lu.setThreshold(rel);
  const Eigen::MatrixXd k = lu.kernel();
  std::vector<V6> out;
  if (lu.rank() == a.cols()) return out;
  for (Eigen::Index j = 0; j < k.cols(); ++j) out.emplace_back(k.col(j).head<6>());
  return out;
}

// Modified Gram-Schmidt; drops directions below rel of the input norm.
inline std::vector<V6> orthonormalize(const std::vector<V6>& vs, double rel = 1e-12) {
  std::vector<V6> q;
  for (V6 v : vs) {
    const double n0 = v.norm();
    for (int pass = 0; pass < 2; ++pass)
      for (const V6& e : q) v -= e.dot(v) * e;
    if (v.norm() > rel * n0) q.push_back(v / v.norm());
  }
  return q;
}

// Largest distance of a unit vector of either span from the other span.
inline double mutual_projection(const std::vector<V6>& a, const std::vector<V6>& b) {
  const auto qa = orthonormalize(a), qb = orthonormalize(b);
  if (qa.size() != qb.size()) return 1.0;
  auto side = [](const std::vector<V6>& from, const std::vector<V6>& onto) {
    double worst = 0.0;
    for (V6 v : from) {
      for (const V6& e : onto) v -= e.dot(v) * e;
      worst = std::max(worst, v.norm());
    }
    return worst;
  };
  return std::max(side(qa, qb), side(qb, qa));
}

}  // namespace oracle
