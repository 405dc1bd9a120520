#pragma once

// Seeded random inputs for property tests.

#include <array>
#include <cstdint>
#include <random>

#include "phkit/classifier.hpp"
#include "phkit/metric_forms.hpp"

namespace gen {

using phkit::Vec3;

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng); }
  double sign() { return uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0; }
  // Nonzero component bounded away from 0: +-[0.2, 2].
  double component() { return sign() * uniform(0.2, 2.0); }
  Vec3 vec(double lo = -1.0, double hi = 1.0) { return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)}; }
  Vec3 unit() {
    Vec3 v;
    do v = vec(); while (v.norm() < 0.1 || v.norm() > 1.0);
    return v.normalized();
  }
};

enum class Regime { PositiveDet, NegativeDet, Traceless, Singular };

inline constexpr std::array<phkit::MetricCell, 7> kCells = {
    phkit::MetricCell::G1, phkit::MetricCell::G2, phkit::MetricCell::G3, phkit::MetricCell::G4,
    phkit::MetricCell::G5, phkit::MetricCell::G6, phkit::MetricCell::G7};

inline constexpr std::array<Regime, 4> kRegimes = {Regime::PositiveDet, Regime::NegativeDet,
                                                   Regime::Traceless, Regime::Singular};

inline Vec3 g_in_cell(Rng& r, phkit::MetricCell cell) {
  using phkit::MetricCell;
  const bool za = cell == MetricCell::G2 || cell == MetricCell::G6 || cell == MetricCell::G7;
  const bool zb = cell == MetricCell::G3 || cell == MetricCell::G5 || cell == MetricCell::G7;
  const bool zc = cell == MetricCell::G4 || cell == MetricCell::G5 || cell == MetricCell::G6;
  return {za ? 0.0 : r.component(), zb ? 0.0 : r.component(), zc ? 0.0 : r.component()};
}

inline phkit::HermitianMetric metric(Rng& r, phkit::MetricCell cell, Regime regime) {
  const Vec3 g = g_in_cell(r, cell);
  const double n = g.norm();
  double d = 0.0;
  switch (regime) {
    case Regime::PositiveDet: d = r.sign() * n * r.uniform(1.1, 2.5); break;
    case Regime::NegativeDet: d = r.sign() * n * r.uniform(0.1, 0.9); break;
    case Regime::Traceless: d = 0.0; break;
    case Regime::Singular: d = r.sign() * n; break;
  }
  return phkit::HermitianMetric::make(d, g);
}

// Invertible metric of any cell with det G < 0, sometimes traceless.
inline phkit::HermitianMetric indefinite_metric(Rng& r) {
  const auto cell = kCells[std::uniform_int_distribution<std::size_t>(0, 6)(r.eng)];
  return metric(r, cell, r.uniform(0.0, 1.0) < 0.3 ? Regime::Traceless : Regime::NegativeDet);
}

inline phkit::PauliForm pt_member(Rng& r, phkit::CellKind cell) {
  using phkit::CellKind;
  phkit::PauliForm p;
  p.h0_re = r.uniform(-1.0, 1.0);
  switch (cell) {
    case CellKind::S1: p.hR = r.unit() * r.uniform(0.2, 2.0); break;
    case CellKind::S2: p.hI = r.unit() * r.uniform(0.2, 2.0); break;
    case CellKind::S3: break;
    case CellKind::S4: {
      p.hR = r.unit() * r.uniform(0.2, 2.0);
      Vec3 w = r.unit();
      w -= w.dot(p.hR) / p.hR.squaredNorm() * p.hR;
      while (w.norm() < 0.1) {
        w = r.unit();
        w -= w.dot(p.hR) / p.hR.squaredNorm() * p.hR;
      }
      p.hI = w.normalized() * r.uniform(0.2, 2.0);
      break;
    }
    case CellKind::NotPT:
      p.h0_im = r.component();
      p.hR = r.vec();
      p.hI = r.vec();
      break;
  }
  return p;
}

inline phkit::PauliForm any_form(Rng& r) {
  return {r.uniform(-1, 1), r.uniform(-1, 1), r.vec(), r.vec()};
}

}  // namespace gen
