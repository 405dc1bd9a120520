#include "phkit/pauli_core.hpp"

#include <array>
#include <cmath>
#include <string>

#include "phkit/errors.hpp"

namespace phkit {

namespace {

const std::array<Complex2x2, 4>& pauli_table() {
  static const std::array<Complex2x2, 4> table = [] {
    const Complex i{0.0, 1.0};
    std::array<Complex2x2, 4> t;
    t[0] << 1.0, 0.0, 0.0, 1.0;
    t[1] << 0.0, 1.0, 1.0, 0.0;
    t[2] << 0.0, -i, i, 0.0;
    t[3] << 1.0, 0.0, 0.0, -1.0;
    return t;
  }();
  return table;
}

}  // namespace

const Complex2x2& pauli_matrix(int index) { return pauli_table().at(static_cast<std::size_t>(index)); }

double PauliForm::scale() const {
  double s = std::max(std::abs(h0_re), std::abs(h0_im));
  s = std::max(s, hR.cwiseAbs().maxCoeff());
  return std::max(s, hI.cwiseAbs().maxCoeff());
}

bool PauliForm::is_finite() const {
  return std::isfinite(h0_re) && std::isfinite(h0_im) && hR.allFinite() && hI.allFinite();
}

PauliForm decompose(const Complex2x2& m) {
  if (!m.allFinite()) throw Error(ErrorKind::InvalidInput, "matrix has a non-finite entry");
  const Complex i{0.0, 1.0};
  const Complex h0 = 0.5 * (m(0, 0) + m(1, 1));
  const Complex h1 = 0.5 * (m(0, 1) + m(1, 0));
  const Complex h2 = 0.5 * i * (m(0, 1) - m(1, 0));
  const Complex h3 = 0.5 * (m(0, 0) - m(1, 1));
  return {h0.real(), h0.imag(), Vec3(h1.real(), h2.real(), h3.real()),
          Vec3(h1.imag(), h2.imag(), h3.imag())};
}

Complex2x2 compose(const PauliForm& p) {
  const Complex i{0.0, 1.0};
  const Complex h0 = p.h0();
  const Complex h1{p.hR[0], p.hI[0]};
  const Complex h2{p.hR[1], p.hI[1]};
  const Complex h3{p.hR[2], p.hI[2]};
  Complex2x2 m;
  m << h0 + h3, h1 - i * h2, h1 + i * h2, h0 - h3;
  return m;
}

EigenPair eigenvalues(const PauliForm& p) {
  const Complex root = std::sqrt(p.h_dot_h());
  return {p.h0() - root, p.h0() + root};
}

bool is_normal(const PauliForm& p, const Tolerance& tol) {
  const double cross = p.hR.cross(p.hI).norm();
  return cross <= tol.band(p.hR.norm() * p.hI.norm());
}

double IdentityReport::max_residual() const {
  return std::max({sum_residual, det_residual, product_residual});
}

IdentityReport su2_identities(const PauliForm& u, const PauliForm& v, const Tolerance& tol) {
  for (const PauliForm* w : {&u, &v}) {
    const double s = w->scale();
    if (w->hR.norm() > tol.band(s) || std::abs(w->h0_im) > tol.band(s))
      throw Error(ErrorKind::DomainError, "su2 identities need hR = 0 and Im h0 = 0");
  }
  const Complex2x2 U = compose(u);
  const Complex2x2 V = compose(v);
  const Complex2x2 id = Complex2x2::Identity();
  const Complex cross_term = 0.5 * U.trace() * V.trace() + 2.0 * u.hI.dot(v.hI);

  IdentityReport r;
  const Complex2x2 left = U * V.adjoint() + V * U.adjoint() - cross_term * id;
  const Complex2x2 right = U.adjoint() * V + V.adjoint() * U - cross_term * id;
  r.sum_residual = std::max(left.norm(), right.norm());

  const Complex2x2 S = U + V;
  r.det_sum = S.determinant();
  r.det_residual = std::abs(r.det_sum - U.determinant() - V.determinant() - cross_term);

  const Complex2x2 p1 = S * S.adjoint() - r.det_sum * id;
  const Complex2x2 p2 = S.adjoint() * S - r.det_sum * id;
  r.product_residual = std::max(p1.norm(), p2.norm());
  return r;
}

}  // namespace phkit
