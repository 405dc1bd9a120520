#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "phkit/metric_forms.hpp"
#include "phkit/pauli_core.hpp"

namespace phkit {

enum class CellKind { S1, S2, S3, S4, NotPT };
enum class Symmetry { Unbroken, Broken, NotApplicable };
// General covers non-PT matrices whose eigenvalues are not a conjugate pair.
enum class Spectrum { RealDistinct, RealDegenerate, ComplexConjugate, General };

std::string_view to_string(CellKind kind);
std::string_view to_string(Symmetry symmetry);
std::string_view to_string(Spectrum spectrum);

struct PTCell {
  CellKind cell = CellKind::NotPT;
  Symmetry symmetry = Symmetry::NotApplicable;
  Spectrum spectrum = Spectrum::General;
  bool diagonalizable = true;
};

bool is_pt_symmetric(const PauliForm& p, const Tolerance& tol = {});

/// Assigns p to S1..S4 or NotPT. Near cell boundaries the answer depends on the
/// tolerance band; all tests are relative to p.scale() so scaling p by a
/// nonzero factor does not change the cell.
PTCell classify(const PauliForm& p, const Tolerance& tol = {});

struct PredicateCheck {
  std::string name;
  bool holds = false;
  double residual = 0.0;
};

struct PredicateReport {
  PTCell cell;
  double pair_residual = 0.0;  // ||H^+ G - G H||_F
  std::vector<PredicateCheck> checks;

  bool all_hold() const;
};

/// ||H^+ G - G H||_F computed by direct 2x2 arithmetic.
double pseudo_hermiticity_residual(const PauliForm& h, const HermitianMetric& g);

/// Evaluates the implications that apply to (H, G) given the cell of H.
/// Throws Error(PairNotCompatible) if H^+ G != G H.
PredicateReport check_g_propositions(const PauliForm& p, const HermitianMetric& g,
                                     const Tolerance& tol = {});

}  // namespace phkit
