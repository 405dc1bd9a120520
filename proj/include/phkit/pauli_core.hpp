#pragma once

#include <complex>

#include <Eigen/Dense>

#include "phkit/tolerance.hpp"

namespace phkit {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Complex2x2 = Eigen::Matrix2cd;

/// A 2x2 complex matrix written as sigma_0 h0 + sigma . h with
/// h0 = h0_re + i h0_im and h = hR + i hI.
///
/// This is the canonical representation used by every module; Complex2x2 only
/// appears at I/O boundaries and in independent checks.
struct PauliForm {
  double h0_re = 0.0;
  double h0_im = 0.0;
  Vec3 hR = Vec3::Zero();
  Vec3 hI = Vec3::Zero();

  PauliForm() = default;
  PauliForm(double h0_re_, double h0_im_, const Vec3& hR_, const Vec3& hI_)
      : h0_re(h0_re_), h0_im(h0_im_), hR(hR_), hI(hI_) {}

  Complex h0() const { return {h0_re, h0_im}; }
  Complex trace() const { return 2.0 * h0(); }
  // Complex bilinear h.h = |hR|^2 - |hI|^2 + 2i hR.hI (no conjugation).
  Complex h_dot_h() const { return {hR.squaredNorm() - hI.squaredNorm(), 2.0 * hR.dot(hI)}; }
  Complex det() const { return h0() * h0() - h_dot_h(); }
  // Largest coefficient magnitude; the reference scale for tolerance bands.
  double scale() const;
  bool is_finite() const;

  PauliForm adjoint() const { return {h0_re, -h0_im, hR, -hI}; }
  PauliForm traceless() const { return {0.0, 0.0, hR, hI}; }

  friend PauliForm operator+(const PauliForm& a, const PauliForm& b) {
    return {a.h0_re + b.h0_re, a.h0_im + b.h0_im, a.hR + b.hR, a.hI + b.hI};
  }
  friend PauliForm operator*(double s, const PauliForm& a) {
    return {s * a.h0_re, s * a.h0_im, s * a.hR, s * a.hI};
  }
};

struct EigenPair {
  Complex e1;
  Complex e2;
};

PauliForm decompose(const Complex2x2& m);
Complex2x2 compose(const PauliForm& p);

/// Roots of E^2 - 2 h0 E + h0^2 - h.h, ordered (h0 - sqrt(h.h), h0 + sqrt(h.h))
/// with the principal square root.
EigenPair eigenvalues(const PauliForm& p);

/// Normal iff hR x hI = 0.
bool is_normal(const PauliForm& p, const Tolerance& tol = {});

// Residuals of the three product identities valid on S2 u S3.
struct IdentityReport {
  double sum_residual = 0.0;      // ||U V^+ + V U^+ - sigma0 (TrU TrV / 2 + 2 uI.vI)||, both orders
  double det_residual = 0.0;      // |det(U+V) - detU - detV - TrU TrV / 2 - 2 uI.vI|
  double product_residual = 0.0;  // ||(U+V)(U+V)^+ - sigma0 det(U+V)||, both orders
  Complex det_sum{};              // det(U+V)

  double max_residual() const;
};

/// Throws Error(DomainError) unless both inputs have hR = 0 and h0_im = 0.
IdentityReport su2_identities(const PauliForm& u, const PauliForm& v, const Tolerance& tol = {});

/// The Pauli matrices sigma_0..sigma_3.
const Complex2x2& pauli_matrix(int index);

}  // namespace phkit
