#include "phkit/classifier.hpp"

#include <cmath>

#include "phkit/errors.hpp"

namespace phkit {

std::string_view to_string(CellKind kind) {
  switch (kind) {
    case CellKind::S1: return "S1";
    case CellKind::S2: return "S2";
    case CellKind::S3: return "S3";
    case CellKind::S4: return "S4";
    case CellKind::NotPT: return "NotPT";
  }
  return "?";
}

std::string_view to_string(Symmetry symmetry) {
  switch (symmetry) {
    case Symmetry::Unbroken: return "Unbroken";
    case Symmetry::Broken: return "Broken";
    case Symmetry::NotApplicable: return "NotApplicable";
  }
  return "?";
}

std::string_view to_string(Spectrum spectrum) {
  switch (spectrum) {
    case Spectrum::RealDistinct: return "RealDistinct";
    case Spectrum::RealDegenerate: return "RealDegenerate";
    case Spectrum::ComplexConjugate: return "ComplexConjugate";
    case Spectrum::General: return "General";
  }
  return "?";
}

bool is_pt_symmetric(const PauliForm& p, const Tolerance& tol) {
  const double s = p.scale();
  if (!tol.is_zero(p.h0_im, s)) return false;
  return std::abs(p.hR.dot(p.hI)) <= tol.band(p.hR.norm() * p.hI.norm());
}

PTCell classify(const PauliForm& p, const Tolerance& tol) {
  const double s = p.scale();
  const double nR = p.hR.norm();
  const double nI = p.hI.norm();
  const bool zR = tol.is_zero(nR, s);
  const bool zI = tol.is_zero(nI, s);

  PTCell out;
  if (!is_pt_symmetric(p, tol)) {
    out.cell = CellKind::NotPT;
    out.symmetry = Symmetry::NotApplicable;
    out.spectrum = Spectrum::General;
    const Complex hh = p.h_dot_h();
    // Jordan form iff h.h = 0 with h != 0.
    out.diagonalizable = std::abs(hh) > tol.band(s * s) || (zR && zI);
    return out;
  }

  if (!zR && zI) {
    out = {CellKind::S1, Symmetry::Unbroken, Spectrum::RealDistinct, true};
  } else if (zR && !zI) {
    out = {CellKind::S2, Symmetry::Broken, Spectrum::ComplexConjugate, true};
  } else if (zR && zI) {
    out = {CellKind::S3, Symmetry::Unbroken, Spectrum::RealDegenerate, true};
  } else {
    out.cell = CellKind::S4;
    const double gap = nR - nI;
    if (tol.is_zero(gap, s)) {
      out.symmetry = Symmetry::Unbroken;
      out.spectrum = Spectrum::RealDegenerate;
      out.diagonalizable = false;
    } else if (gap > 0) {
      out.symmetry = Symmetry::Unbroken;
      out.spectrum = Spectrum::RealDistinct;
    } else {
      out.symmetry = Symmetry::Broken;
      out.spectrum = Spectrum::ComplexConjugate;
    }
  }
  return out;
}

bool PredicateReport::all_hold() const {
  for (const auto& c : checks)
    if (!c.holds) return false;
  return true;
}

double pseudo_hermiticity_residual(const PauliForm& h, const HermitianMetric& g) {
  const Complex2x2 H = compose(h);
  const Complex2x2 G = g.matrix();
  return (H.adjoint() * G - G * H).norm();
}

PredicateReport check_g_propositions(const PauliForm& p, const HermitianMetric& g,
                                     const Tolerance& tol) {
  PredicateReport report;
  report.pair_residual = pseudo_hermiticity_residual(p, g);
  const double pair_scale = compose(p).norm() * g.matrix().norm();
  if (report.pair_residual > tol.band(pair_scale))
    throw Error(ErrorKind::PairNotCompatible, "H^+ G != G H");

  report.cell = classify(p, tol);
  const MetricClass mc = det_trace_class(g, tol);
  const double hs = p.scale();
  const double gs = g.scale();
  const double nR = p.hR.norm();
  const double nI = p.hI.norm();
  const double nG = g.gR.norm();
  const Vec3 hr_x_gr = p.hR.cross(g.gR);
  const double cross_scale = nR * nG;

  auto add = [&](std::string name, bool holds, double residual) {
    report.checks.push_back({std::move(name), holds, residual});
  };

  if (mc.det_sign != 0) {
    add("invertible G => H is PT-symmetric", report.cell.cell != CellKind::NotPT, 0.0);
  }

  switch (report.cell.cell) {
    case CellKind::S1: {
      const double r = hr_x_gr.norm();
      add("S1 => hR x gR = 0", tol.is_zero(r, cross_scale), r);
      break;
    }
    case CellKind::S2: {
      if (mc.det_sign != 0) add("S2 => Tr G = 0", mc.trace_zero, std::abs(2.0 * g.d));
      else add("S2 admits no singular G", nG <= tol.band(gs) && mc.trace_zero, std::abs(g.d));
      break;
    }
    case CellKind::S4: {
      const bool parallel = tol.is_zero(hr_x_gr.norm(), cross_scale);
      if (mc.det_sign != 0) {
        add("S4: hR x gR = 0 <=> Tr G = 0", parallel == mc.trace_zero, hr_x_gr.norm());
        const double hr_dot_gr = p.hR.dot(g.gR);
        if (tol.is_zero(hr_dot_gr, cross_scale) && nG > tol.band(gs)) {
          // Mutually orthogonal hR, hI, gR.
          const bool ok = !mc.trace_zero && report.cell.diagonalizable;
          add("S4 orthogonal triple => Tr G != 0 and diagonalizable", ok, std::abs(hr_dot_gr));
        }
      }
      if (!mc.trace_zero && nG > tol.band(gs) && nR > tol.band(hs)) {
        // |sin theta| = |hI| |d| / (|hR| |gR|), theta the angle between hR and gR.
        const double sin_theta = hr_x_gr.norm() / (nR * nG);
        const double predicted = nI * std::abs(g.d) / (nR * nG);
        const double r = std::abs(sin_theta - predicted);
        add("S4 angle law |sin theta| = |hI||d| / (|hR||gR|)", r <= tol.band(1.0), r);
      }
      if (mc.det_sign == 0 && !mc.trace_zero) {
        add("S4 with singular G => real spectrum", report.cell.symmetry == Symmetry::Unbroken,
            nR - nI);
      }
      break;
    }
    case CellKind::S3:
    case CellKind::NotPT:
      break;
  }
  return report;
}

}  // namespace phkit
